#include "chambered/geometric.hpp"

#include "chambered/error.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace chambered {

IntMatrix sigma_generator_matrix(const CoxeterSystem& sys, int i) {
    sys.check_generator(i);
    return sys.sigma_generator(i);
}

IntMatrix sigma_star_generator_matrix(const CoxeterSystem& sys, int i) {
    sys.check_generator(i);
    return sys.sigma_star_generator(i);
}

Rational pairing(const Covector& f, const RootVector& v) {
    if (f.size() != v.size())
        throw InputError("pairing dimension mismatch: covector has " + std::to_string(f.size()) +
                         " entries, root has " + std::to_string(v.size()));
    Rational acc = 0;
    for (std::size_t k = 0; k < f.size(); ++k)
        acc += f[k] * v[k];
    return acc;
}

std::vector<Root> real_roots_up_to(const CoxeterSystem& sys, int max_length,
                                   const RootOptions& opts) {
    const Ball ball =
        sys.enumerate_up_to_length(max_length, EnumerateOptions{opts.max_elements, opts.exec});
    std::set<RootVector> found;
    const auto n = static_cast<std::size_t>(sys.rank());
    for (const Element& w : ball.elements)
        for (std::size_t i = 0; i < n; ++i)
            found.insert(w.sigma().column(i));
    std::vector<Root> out;
    out.reserve(found.size());
    for (const RootVector& r : found) {
        const bool has_pos = std::any_of(r.begin(), r.end(), [](const Int& x) { return x > 0; });
        const bool has_neg = std::any_of(r.begin(), r.end(), [](const Int& x) { return x < 0; });
        if (has_pos == has_neg)
            throw Error("root without a sign: positivity dichotomy violated");
        out.push_back({r, has_pos});
    }
    return out;
}

std::vector<RootVector> reflection_hyperplanes(const std::vector<Root>& roots) {
    std::set<RootVector> reps;
    for (const Root& r : roots) {
        if (r.positive) {
            reps.insert(r.coords);
        } else {
            RootVector neg = r.coords;
            for (Int& x : neg)
                x = -x;
            reps.insert(std::move(neg));
        }
    }
    return {reps.begin(), reps.end()};
}

Rational level(const CoxeterSystem& sys, const Covector& f) {
    return pairing(f, sys.null_root());
}

} // namespace chambered
