#include "chambered/fourier_motzkin.hpp"

#include "chambered/error.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace chambered {

namespace {

IntVector primitive(IntVector v) {
    Int g = 0;
    for (const Int& x : v)
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g > 1)
        for (Int& x : v)
            x /= g;
    return v;
}

bool all_zero(const IntVector& v) {
    return std::all_of(v.begin(), v.end(), [](const Int& x) { return sgn(x) == 0; });
}

} // namespace

bool strictly_feasible(std::vector<IntVector> input, std::size_t max_rows) {
    if (input.empty())
        return true;
    const std::size_t n = input.front().size();
    std::set<IntVector> rows;
    for (IntVector& r : input) {
        if (r.size() != n)
            throw InputError("inequality rows have different lengths");
        if (all_zero(r))
            return false;
        rows.insert(primitive(std::move(r)));
    }

    std::vector<bool> eliminated(n, false);
    for (std::size_t step = 0; step < n; ++step) {
        // Eliminate the variable producing the fewest new rows.
        std::size_t best = n;
        std::size_t best_cost = 0;
        for (std::size_t v = 0; v < n; ++v) {
            if (eliminated[v])
                continue;
            std::size_t pos = 0;
            std::size_t neg = 0;
            for (const IntVector& r : rows) {
                const int s = sgn(r[v]);
                pos += s > 0;
                neg += s < 0;
            }
            const std::size_t cost = pos * neg;
            if (best == n || cost < best_cost) {
                best = v;
                best_cost = cost;
            }
        }
        eliminated[best] = true;

        std::vector<const IntVector*> pos;
        std::vector<const IntVector*> neg;
        std::set<IntVector> next;
        for (const IntVector& r : rows) {
            const int s = sgn(r[best]);
            if (s > 0)
                pos.push_back(&r);
            else if (s < 0)
                neg.push_back(&r);
            else
                next.insert(r);
        }
        // A variable appearing with one sign only can absorb those rows.
        for (const IntVector* p : pos)
            for (const IntVector* q : neg) {
                const Int a = (*p)[best];
                const Int b = -(*q)[best];
                IntVector comb(n);
                for (std::size_t k = 0; k < n; ++k)
                    comb[k] = b * (*p)[k] + a * (*q)[k];
                if (all_zero(comb))
                    return false;
                next.insert(primitive(std::move(comb)));
                if (next.size() > max_rows)
                    throw CapExceeded("Fourier-Motzkin row cap (" + std::to_string(max_rows) +
                                      ") exceeded");
            }
        rows = std::move(next);
        if (rows.empty())
            return true;
    }
    return rows.empty();
}

} // namespace chambered
