#include "chambered/fan.hpp"

#include "chambered/error.hpp"
#include "chambered/fourier_motzkin.hpp"
#include "chambered/linalg.hpp"

#include <algorithm>
#include <limits>
#include <random>

namespace chambered {

const char* to_string(Family f) { return f == Family::P ? "P" : "R"; }

Family parse_family(std::string_view text) {
    if (text == "P" || text == "p")
        return Family::P;
    if (text == "R" || text == "r")
        return Family::R;
    throw InputError("family must be P or R, got '" + std::string(text) + "'");
}

GMatrix g_matrix_P(const Element& w) { return {Family::P, w, w.sigma_star()}; }

GMatrix g_matrix_R(const Element& w) { return {Family::R, w, -w.sigma_star()}; }

GMatrix g_matrix(const Element& w, Family family) {
    return family == Family::P ? g_matrix_P(w) : g_matrix_R(w);
}

bool cone_contains(const IntMatrix& g, const Covector& f) {
    if (f.size() != g.rows())
        throw InputError("covector dimension does not match the g-matrix");
    const auto a = solve(to_rational(g), f);
    if (!a)
        throw PreconditionError("cone_contains: g-matrix is singular");
    return std::all_of(a->begin(), a->end(), [](const Rational& x) { return sgn(x) >= 0; });
}

std::size_t locate_iteration_cap(const CoxeterSystem& sys, const Covector& f) {
    // Positive real roots of an affine system are beta + k delta; the walk only
    // crosses walls with <f, beta + k delta> < 0, which bounds k by the
    // coordinate size B of the primitive integer multiple of f.
    const IntVector h = primitive_integer_vector(f);
    Int bound = 0;
    for (const Int& x : h)
        if (abs(x) > bound)
            bound = abs(x);
    const Int n = sys.rank();
    const Int cap = 10 * (n * n * (n * bound + 1) + n * bound);
    if (cap > Int(std::numeric_limits<long>::max()))
        return static_cast<std::size_t>(std::numeric_limits<long>::max());
    return static_cast<std::size_t>(cap.get_si());
}

ChamberResult chamber_locate(const CoxeterSystem& sys, const Covector& f) {
    const int n = sys.rank();
    if (static_cast<int>(f.size()) != n)
        throw InputError("covector has " + std::to_string(f.size()) + " coordinates, expected " +
                         std::to_string(n));
    if (is_zero(f))
        throw PreconditionError("zero covector: no containing chamber");
    const Rational lev = level(sys, f);
    if (sgn(lev) == 0)
        throw CriticalHyperplane("critical hyperplane: no containing chamber (level 0)");

    ChamberResult res;
    res.family = sgn(lev) > 0 ? Family::P : Family::R;
    Covector g = f;
    if (res.family == Family::R)
        for (Rational& x : g)
            x = -x;

    const std::size_t cap = locate_iteration_cap(sys, g);
    for (;;) {
        int i = -1;
        for (int k = 0; k < n; ++k)
            if (sgn(g[k]) < 0) {
                i = k;
                break;
            }
        if (i < 0)
            break;
        if (res.steps >= cap)
            throw CapExceeded("chamber_locate iteration cap (" + std::to_string(cap) +
                              ") exceeded");
        // g <- sigma*_{s_i} g
        const Rational gi = g[i];
        for (int t = 0; t < n; ++t)
            if (t != i && sys.edge_count(t, i) != 0)
                g[t] += sys.edge_count(t, i) * gi;
        g[i] = -gi;
        res.certificate.push_back(i);
        ++res.steps;
    }

    res.element = sys.element(res.certificate);
    res.transformed = g;
    if (res.family == Family::R)
        for (Rational& x : res.transformed)
            x = -x;

    // Recheck: sigma*_w(transformed) == f and the sign condition.
    const RatVector back = to_rational(res.element.sigma_star()).apply(res.transformed);
    const bool signs_ok = std::all_of(res.transformed.begin(), res.transformed.end(),
                                      [&](const Rational& x) {
                                          return res.family == Family::P ? sgn(x) >= 0
                                                                         : sgn(x) <= 0;
                                      });
    if (back != f || !signs_ok || !cone_contains(g_matrix(res.element, res.family), f))
        throw Error("chamber_locate: certificate recheck failed");
    return res;
}

bool interiors_disjoint(const IntMatrix& g1, const IntMatrix& g2) {
    if (g1 == g2)
        throw PreconditionError("interiors_disjoint: the two g-matrices are equal");
    if (g1.rows() != g2.rows() || g1.rows() != g1.cols() || g2.rows() != g2.cols())
        throw InputError("interiors_disjoint: shape mismatch");
    const auto inv1 = inverse(to_rational(g1));
    const auto inv2 = inverse(to_rational(g2));
    if (!inv1 || !inv2)
        throw PreconditionError("interiors_disjoint: singular g-matrix");
    // f is interior to cone(G) iff G^{-1} f > 0 coordinatewise.
    std::vector<IntVector> rows;
    for (const RatMatrix* inv : {&*inv1, &*inv2})
        for (std::size_t r = 0; r < inv->rows(); ++r)
            rows.push_back(primitive_integer_vector(inv->row(r)));
    return !strictly_feasible(std::move(rows));
}

std::size_t column_difference(const IntMatrix& a, const IntMatrix& b) {
    std::size_t diff = 0;
    for (std::size_t c = 0; c < a.cols(); ++c)
        for (std::size_t r = 0; r < a.rows(); ++r)
            if (a(r, c) != b(r, c)) {
                ++diff;
                break;
            }
    return diff;
}

std::vector<MutationNeighbor> mutation_neighbors(const CoxeterSystem& sys, const Element& w,
                                                 Family family) {
    const GMatrix base = g_matrix(w, family);
    std::vector<MutationNeighbor> out;
    for (int i = 0; i < sys.rank(); ++i) {
        MutationNeighbor nb;
        nb.generator = i;
        nb.g = g_matrix(sys.right_multiply(w, i), family);
        nb.changed_column = static_cast<std::size_t>(i);
        for (std::size_t c = 0; c < base.matrix.cols(); ++c) {
            const bool same = base.matrix.column(c) == nb.g.matrix.column(c);
            if (same == (c == nb.changed_column))
                throw Error("mutation_neighbors: neighbour via generator " +
                            std::to_string(i + 1) + " does not differ in exactly column " +
                            std::to_string(i + 1));
        }
        out.push_back(std::move(nb));
    }
    return out;
}

std::vector<Covector> sample_covectors(const CoxeterSystem& sys, const CoverageOptions& opts,
                                       std::size_t* discarded) {
    if (opts.count == 0)
        throw InputError("coverage sample count must be >= 1");
    if (opts.bound < 1)
        throw InputError("coordinate bound must be >= 1");
    const IntVector& delta = sys.null_root();
    std::mt19937_64 rng(opts.seed);
    auto draw = [&]() { return uniform_int(rng, -opts.bound, opts.bound); };
    const auto n = static_cast<std::size_t>(sys.rank());
    std::vector<Covector> out;
    out.reserve(opts.count);
    std::size_t zero_level = 0;
    const std::size_t max_draws = opts.count * 1000 + 1000;
    for (std::size_t d = 0; out.size() < opts.count; ++d) {
        if (d >= max_draws)
            throw CapExceeded("coverage sampler drew " + std::to_string(max_draws) +
                              " covectors without reaching the requested count");
        Covector f(n);
        Int lev = 0;
        for (std::size_t k = 0; k < n; ++k) {
            const long v = draw();
            f[k] = v;
            lev += v * delta[k];
        }
        if (sgn(lev) == 0) {
            ++zero_level;
            continue;
        }
        out.push_back(std::move(f));
    }
    if (discarded)
        *discarded = zero_level;
    return out;
}

CoverageReport coverage_sample(const CoxeterSystem& sys, const CoverageOptions& opts) {
    if (!sys.is_affine())
        throw NotAffineError("coverage sampling requires an affine graph");
    CoverageReport rep;
    rep.requested = opts.count;
    const std::vector<Covector> sample = sample_covectors(sys, opts, &rep.discarded_level_zero);

    struct Outcome {
        bool ok = false;
        int length = 0;
        std::size_t steps = 0;
        std::string error;
    };
    std::vector<Outcome> outcomes(sample.size());
    auto run = [&](std::size_t k) {
        try {
            const ChamberResult r = chamber_locate(sys, sample[k]);
            outcomes[k] = {true, r.element.length(), r.steps, {}};
        } catch (const std::exception& e) {
            outcomes[k] = {false, 0, 0, e.what()};
        }
    };
    if (opts.exec == Exec::parallel) {
        const auto items = static_cast<long long>(sample.size());
#pragma omp parallel for schedule(dynamic, 8) num_threads(worker_count())
        for (long long k = 0; k < items; ++k)
            run(static_cast<std::size_t>(k));
    } else {
        for (std::size_t k = 0; k < sample.size(); ++k)
            run(k);
    }

    for (std::size_t k = 0; k < outcomes.size(); ++k) {
        const Outcome& o = outcomes[k];
        if (o.ok) {
            ++rep.located;
            rep.max_length = std::max(rep.max_length, o.length);
            rep.max_steps = std::max(rep.max_steps, o.steps);
        } else {
            ++rep.failures;
            if (!rep.first_failure) {
                std::string f;
                for (const Rational& x : sample[k])
                    f += (f.empty() ? "" : " ") + to_string(x);
                rep.first_failure = "covector (" + f + "): " + o.error;
            }
        }
    }
    return rep;
}

PairwiseReport check_pairs(const std::vector<GMatrix>& gs,
                           const std::vector<std::pair<std::size_t, std::size_t>>& pairs,
                           bool check_disjoint, Exec exec) {
    // 0 = fine, 1 = equal matrices, 2 = interiors meet
    std::vector<unsigned char> verdict(pairs.size(), 0);
    auto run = [&](std::size_t k) {
        const auto [i, j] = pairs[k];
        if (gs[i].matrix == gs[j].matrix)
            verdict[k] = 1;
        else if (check_disjoint && !interiors_disjoint(gs[i].matrix, gs[j].matrix))
            verdict[k] = 2;
    };
    if (exec == Exec::parallel) {
        const auto items = static_cast<long long>(pairs.size());
#pragma omp parallel for schedule(dynamic, 16) num_threads(worker_count())
        for (long long k = 0; k < items; ++k)
            run(static_cast<std::size_t>(k));
    } else {
        for (std::size_t k = 0; k < pairs.size(); ++k)
            run(k);
    }
    PairwiseReport rep;
    rep.pairs = pairs.size();
    for (std::size_t k = 0; k < pairs.size(); ++k) {
        auto p = pairs[k];
        if (p.first > p.second)
            std::swap(p.first, p.second);
        if (verdict[k] == 1) {
            ++rep.equal_pairs;
            if (!rep.first_equal || p < *rep.first_equal)
                rep.first_equal = p;
        } else if (verdict[k] == 2) {
            ++rep.overlapping_pairs;
            if (!rep.first_overlap || p < *rep.first_overlap)
                rep.first_overlap = p;
        }
    }
    return rep;
}

PairwiseReport check_pairs(const std::vector<GMatrix>& gs, bool check_disjoint, Exec exec) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    pairs.reserve(gs.size() * (gs.size() - (gs.empty() ? 0 : 1)) / 2);
    for (std::size_t i = 0; i < gs.size(); ++i)
        for (std::size_t j = i + 1; j < gs.size(); ++j)
            pairs.emplace_back(i, j);
    return check_pairs(gs, pairs, check_disjoint, exec);
}

std::vector<SliceCell> fan_slice_export(const CoxeterSystem& sys, int max_length) {
    if (!sys.is_affine())
        throw NotAffineError("fan slice export requires an affine graph");
    const IntVector& delta = sys.null_root();
    const Ball ball = sys.enumerate_up_to_length(max_length);
    const auto n = static_cast<std::size_t>(sys.rank());
    std::vector<SliceCell> cells;
    for (Family fam : {Family::P, Family::R}) {
        const int sign = fam == Family::P ? 1 : -1;
        for (const Element& w : ball.elements) {
            SliceCell cell;
            cell.family = fam;
            cell.element = w;
            // The alcove F has vertices alpha_j^* / delta_j; w moves them by sigma*_w.
            for (std::size_t j = 0; j < n; ++j) {
                RatVector v(n);
                for (std::size_t r = 0; r < n; ++r)
                {
                    v[r] = Rational(Int(sign * w.sigma_star()(r, j)), delta[j]);
                    v[r].canonicalize();
                }
                RatVector c(v.begin(), v.end() - 1);
                cell.vertices.push_back(std::move(v));
                cell.chart.push_back(std::move(c));
            }
            for (std::size_t i = 0; i < n; ++i)
                cell.walls.push_back({static_cast<int>(i), w.sigma().column(i)});
            cells.push_back(std::move(cell));
        }
    }
    return cells;
}

} // namespace chambered
