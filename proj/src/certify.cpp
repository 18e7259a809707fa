#include "chambered/certify.hpp"

#include "chambered/error.hpp"
#include "chambered/geometric.hpp"
#include "chambered/trunc.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <random>
#include <set>
#include <sstream>

namespace chambered {

namespace {

std::string word_text(const Word& w) {
    std::string s = "[";
    for (std::size_t k = 0; k < w.size(); ++k)
        s += (k ? " " : "") + std::to_string(w[k] + 1);
    return s + "]";
}

std::string vector_text(std::span<const Int> v) {
    std::string s = "(";
    for (std::size_t k = 0; k < v.size(); ++k)
        s += (k ? ", " : "") + to_string(v[k]);
    return s + ")";
}

template <class F>
CheckResult timed(std::string name, F&& body) {
    CheckResult r;
    r.name = std::move(name);
    const auto start = std::chrono::steady_clock::now();
    try {
        body(r);
        r.passed = r.witness.empty();
    } catch (const std::exception& e) {
        r.passed = false;
        r.witness = std::string("error: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

std::vector<GMatrix> both_families(const Ball& ball) {
    std::vector<GMatrix> gs;
    gs.reserve(2 * ball.elements.size());
    for (const auto& w : ball.elements)
        gs.push_back(g_matrix_P(w));
    for (const auto& w : ball.elements)
        gs.push_back(g_matrix_R(w));
    return gs;
}

std::string gmatrix_text(const GMatrix& g) {
    return std::string(to_string(g.family)) + word_text(g.element.word());
}

IntMatrix power(const IntMatrix& m, int k) {
    IntMatrix p = IntMatrix::identity(m.rows());
    for (int j = 0; j < k; ++j)
        p = p * m;
    return p;
}

} // namespace

bool CertifyReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

CheckResult check_representation(const CoxeterSystem& sys, const Ball& ball, std::uint64_t seed,
                                 std::size_t samples) {
    return timed("representation", [&](CheckResult& r) {
        const int n = sys.rank();
        const IntMatrix id = IntMatrix::identity(n);
        for (int i = 0; i < n && r.witness.empty(); ++i) {
            const IntMatrix& s = sys.sigma_generator(i);
            const IntMatrix& t = sys.sigma_star_generator(i);
            if (!(s * s == id) || !(t * t == id))
                r.witness = "generator " + std::to_string(i + 1) + " is not an involution";
            else if (!(t == s.transpose()))
                r.witness = "generator " + std::to_string(i + 1) + " fails the contragredient identity";
        }
        std::size_t braids = 0;
        for (int i = 0; i < n && r.witness.empty(); ++i)
            for (int j = i + 1; j < n && r.witness.empty(); ++j) {
                const IntMatrix st = sys.sigma_generator(i) * sys.sigma_generator(j);
                const int m = sys.label(i, j);
                const int limit = m == kInfiniteOrder ? 6 : m;
                for (int k = 1; k <= limit; ++k) {
                    const bool is_id = power(st, k) == id;
                    if (is_id != (k == m)) {
                        r.witness = "(s" + std::to_string(i + 1) + " s" + std::to_string(j + 1) +
                                    ")^" + std::to_string(k) +
                                    (is_id ? " is the identity" : " is not the identity");
                        break;
                    }
                }
                ++braids;
            }
        std::mt19937_64 rng(seed);
        std::size_t evaluations = 0;
        for (std::size_t k = 0; k < samples && r.witness.empty(); ++k) {
            IntVector x(n), y(n);
            for (auto& v : x)
                v = uniform_int(rng, -9, 9);
            for (auto& v : y)
                v = uniform_int(rng, -9, 9);
            const Int expected = dot(x, y);
            for (const auto& w : ball.elements) {
                ++evaluations;
                if (dot(w.sigma_star().apply(x), w.sigma().apply(y)) != expected) {
                    r.witness = "pairing not invariant under w = " + word_text(w.word()) +
                                " for x = " + vector_text(x) + ", y = " + vector_text(y);
                    break;
                }
            }
        }
        r.stats = {{"generators", n}, {"generator_pairs", braids},
                   {"pairing_samples", samples}, {"pairing_evaluations", evaluations}};
    });
}

CheckResult check_null_root(const CoxeterSystem& sys, const Ball& ball) {
    return timed("null_root", [&](CheckResult& r) {
        const IntVector& delta = sys.null_root();
        const IntVector image = sys.cartan().apply(delta);
        if (std::any_of(image.begin(), image.end(), [](const Int& x) { return sgn(x) != 0; }))
            r.witness = "Cartan matrix does not kill " + vector_text(delta);
        else if (std::any_of(delta.begin(), delta.end(), [](const Int& x) { return sgn(x) <= 0; }))
            r.witness = "null root " + vector_text(delta) + " is not positive";
        for (const auto& w : ball.elements) {
            if (!r.witness.empty())
                break;
            if (w.sigma().apply(delta) != delta)
                r.witness = "w = " + word_text(w.word()) + " moves the null root";
        }
        r.stats = {{"null_root", io::vector_to_json(delta)}, {"elements", ball.elements.size()}};
    });
}

CheckResult check_distinct(const Ball& ball, Exec exec) {
    return timed("distinct", [&](CheckResult& r) {
        const auto gs = both_families(ball);
        const PairwiseReport rep = check_pairs(gs, false, exec);
        if (rep.first_equal)
            r.witness = gmatrix_text(gs[rep.first_equal->first]) + " and " +
                        gmatrix_text(gs[rep.first_equal->second]) + " have equal g-matrices";
        r.stats = {{"matrices", gs.size()}, {"pairs", rep.pairs}, {"equal_pairs", rep.equal_pairs}};
    });
}

CheckResult check_disjoint(const Ball& ball, const CertifyOptions& opts) {
    return timed("interiors_disjoint", [&](CheckResult& r) {
        const auto gs = both_families(ball);
        const std::size_t half = ball.elements.size();
        // Indices of P and R matrices with length <= full_disjoint_length.
        std::vector<std::size_t> small;
        for (std::size_t k = 0; k < half; ++k)
            if (ball.elements[k].length() <= opts.full_disjoint_length) {
                small.push_back(k);
                small.push_back(k + half);
            }
        std::sort(small.begin(), small.end());
        std::vector<std::pair<std::size_t, std::size_t>> pairs;
        for (std::size_t a = 0; a < small.size(); ++a)
            for (std::size_t b = a + 1; b < small.size(); ++b)
                pairs.emplace_back(small[a], small[b]);
        const std::size_t full = pairs.size();
        std::mt19937_64 rng(opts.seed);
        if (gs.size() >= 2) {
            const long top = static_cast<long>(gs.size()) - 1;
            auto pick = [&](std::mt19937_64& g) {
                return static_cast<std::size_t>(uniform_int(g, 0, top));
            };
            for (std::size_t k = 0; k < opts.sampled_pairs; ++k) {
                std::size_t a = pick(rng), b = pick(rng);
                while (a == b)
                    b = pick(rng);
                pairs.emplace_back(std::min(a, b), std::max(a, b));
            }
        }
        const PairwiseReport rep = check_pairs(gs, pairs, true, opts.exec);
        if (rep.first_equal)
            r.witness = gmatrix_text(gs[rep.first_equal->first]) + " and " +
                        gmatrix_text(gs[rep.first_equal->second]) + " have equal g-matrices";
        else if (rep.first_overlap)
            r.witness = "cones of " + gmatrix_text(gs[rep.first_overlap->first]) + " and " +
                        gmatrix_text(gs[rep.first_overlap->second]) + " share interior points";
        r.stats = {{"full_length", opts.full_disjoint_length}, {"full_pairs", full},
                   {"sampled_pairs", pairs.size() - full},
                   {"overlapping_pairs", rep.overlapping_pairs}};
    });
}

CheckResult check_half_space(const CoxeterSystem& sys, const Ball& ball) {
    return timed("half_space", [&](CheckResult& r) {
        const IntVector& delta = sys.null_root();
        for (const auto& g : both_families(ball)) {
            const int want = g.family == Family::P ? 1 : -1;
            for (std::size_t c = 0; c < g.matrix.cols(); ++c) {
                const Int lv = dot(g.matrix.column(c), delta);
                if (sgn(lv) * want < 0) {
                    r.witness = "column " + std::to_string(c + 1) + " of " + gmatrix_text(g) +
                                " has level " + to_string(lv);
                    return;
                }
            }
        }
        r.stats = {{"matrices", 2 * ball.elements.size()}};
    });
}

CheckResult check_mutation_hasse(const Ball& ball) {
    return timed("mutation_hasse", [&](CheckResult& r) {
        std::vector<IntMatrix> gs;
        gs.reserve(ball.elements.size());
        for (const auto& w : ball.elements)
            gs.push_back(g_matrix_P(w).matrix);
        // Matrices differing exactly in column c agree after zeroing column c.
        std::set<std::pair<std::size_t, std::size_t>> mutation;
        const std::size_t n = gs.empty() ? 0 : gs.front().cols();
        const IntVector zero(n);
        for (std::size_t c = 0; c < n; ++c) {
            std::map<std::vector<Int>, std::vector<std::size_t>> buckets;
            for (std::size_t k = 0; k < gs.size(); ++k) {
                IntMatrix masked = gs[k];
                masked.set_column(c, zero);
                buckets[masked.data()].push_back(k);
            }
            for (const auto& [key, members] : buckets)
                for (std::size_t a = 0; a < members.size(); ++a)
                    for (std::size_t b = a + 1; b < members.size(); ++b)
                        mutation.emplace(members[a], members[b]);
        }
        std::set<std::pair<std::size_t, std::size_t>> hasse;
        for (const auto& e : ball.edges)
            hasse.emplace(std::min(e.from, e.to), std::max(e.from, e.to));
        auto describe = [&](std::pair<std::size_t, std::size_t> p) {
            return word_text(ball.elements[p.first].word()) + " -- " +
                   word_text(ball.elements[p.second].word());
        };
        for (const auto& p : hasse)
            if (!mutation.count(p)) {
                r.witness = "Hasse edge " + describe(p) + " is not a one-column mutation";
                break;
            }
        if (r.witness.empty())
            for (const auto& p : mutation)
                if (!hasse.count(p)) {
                    r.witness = "one-column mutation " + describe(p) + " is not a Hasse edge";
                    break;
                }
        r.stats = {{"elements", gs.size()}, {"hasse_edges", hasse.size()},
                   {"mutation_edges", mutation.size()}};
    });
}

CheckResult check_locate_consistency(const CoxeterSystem& sys, const Ball& ball) {
    return timed("locate_consistency", [&](CheckResult& r) {
        for (const auto& w : ball.elements) {
            const IntMatrix& g = g_matrix_P(w).matrix;
            Covector f(g.rows());
            for (std::size_t row = 0; row < g.rows(); ++row)
                for (std::size_t c = 0; c < g.cols(); ++c)
                    f[row] += g(row, c);
            const ChamberResult p = chamber_locate(sys, f);
            for (auto& x : f)
                x = -x;
            const ChamberResult q = chamber_locate(sys, f);
            if (p.family != Family::P || !(p.element == w)) {
                r.witness = "interior point of P" + word_text(w.word()) + " located in " +
                            to_string(p.family) + word_text(p.element.word());
                return;
            }
            if (q.family != Family::R || !(q.element == w)) {
                r.witness = "interior point of R" + word_text(w.word()) + " located in " +
                            to_string(q.family) + word_text(q.element.word());
                return;
            }
        }
        r.stats = {{"elements", ball.elements.size()}};
    });
}

CheckResult check_coverage(const CoxeterSystem& sys, const CoverageOptions& opts) {
    return timed("coverage", [&](CheckResult& r) {
        const CoverageReport rep = coverage_sample(sys, opts);
        if (rep.failures > 0 || rep.located != rep.requested)
            r.witness = rep.first_failure.value_or("located " + std::to_string(rep.located) +
                                                   " of " + std::to_string(rep.requested));
        r.stats = io::to_json(rep);
        r.stats["seed"] = opts.seed;
        r.stats["bound"] = opts.bound;
    });
}

CheckResult check_oracle(const CoxeterSystem& sys, const Ball& ball, int max_length,
                         int truncation, int margin, Exec exec) {
    return timed("oracle_agreement", [&](CheckResult& r) {
        const int top = std::min({max_length, truncation - margin, ball.max_length});
        const trunc::OracleContext ctx(sys, truncation, margin);
        std::vector<const Element*> elements;
        std::vector<Word> words;
        std::vector<std::size_t> owner;
        for (const auto& w : ball.elements) {
            if (w.length() > top)
                continue;
            elements.push_back(&w);
            for (auto& word : sys.reduced_words(w)) {
                words.push_back(std::move(word));
                owner.push_back(elements.size() - 1);
            }
        }
        const auto results = trunc::oracle_g_matrices(ctx, words, exec);
        for (std::size_t k = 0; k < results.size() && r.witness.empty(); ++k) {
            const auto& res = results[k];
            if (!res.stabilized)
                r.witness = "presentation of I_w for w = " + word_text(res.word) +
                            " changes between N = " + std::to_string(truncation) + " and N = " +
                            std::to_string(truncation + 2);
            else if (!res.injective)
                r.witness = "presentation differential for w = " + word_text(res.word) +
                            " is not injective";
            else if (!(res.g == g_matrix_P(*elements[owner[k]]).matrix))
                r.witness = "oracle g-matrix differs from the formula for w = " +
                            word_text(res.word);
        }
        // The ideal must not depend on the reduced expression.
        std::size_t compared = 0;
        const int degree = truncation - 1;
        for (std::size_t k = 0; k + 1 < words.size() && r.witness.empty(); ++k) {
            if (owner[k] != owner[k + 1])
                continue;
            ++compared;
            if (!equal_up_to(ctx.ideal(words[k]), ctx.ideal(words[k + 1]), degree))
                r.witness = "ideals for " + word_text(words[k]) + " and " +
                            word_text(words[k + 1]) + " differ";
        }
        r.stats = {{"truncation", truncation}, {"max_length", top},
                   {"elements", elements.size()}, {"reduced_words", words.size()},
                   {"expression_pairs", compared}};
    });
}

CertifyReport certify(const CoxeterSystem& sys, const CertifyOptions& opts) {
    if (!sys.is_affine())
        throw NotAffineError("certify requires an affine graph");
    if (opts.length < 0 || opts.truncation < 1 || opts.count < 1 || opts.bound < 1)
        throw InputError("certify bounds must be positive");
    EnumerateOptions eo;
    eo.exec = opts.exec;
    const Ball ball = sys.enumerate_up_to_length(opts.length, eo);
    CoverageOptions co;
    co.seed = opts.seed;
    co.count = opts.count;
    co.bound = opts.bound;
    co.exec = opts.exec;

    CertifyReport rep;
    rep.checks.push_back(check_representation(sys, ball, opts.seed));
    rep.checks.push_back(check_null_root(sys, ball));
    rep.checks.push_back(check_distinct(ball, opts.exec));
    rep.checks.push_back(check_disjoint(ball, opts));
    rep.checks.push_back(check_half_space(sys, ball));
    rep.checks.push_back(check_mutation_hasse(ball));
    rep.checks.push_back(check_locate_consistency(sys, ball));
    rep.checks.push_back(check_coverage(sys, co));
    rep.checks.push_back(
        check_oracle(sys, ball, opts.oracle_length, opts.truncation, opts.margin, opts.exec));
    return rep;
}

io::Json to_json(const CheckResult& c) {
    io::Json out{{"name", c.name}, {"passed", c.passed}};
    out["witness"] = c.witness.empty() ? io::Json(nullptr) : io::Json(c.witness);
    out["stats"] = c.stats;
    return out;
}

io::Json to_json(const CertifyReport& r) {
    io::Json checks = io::Json::array();
    for (const auto& c : r.checks)
        checks.push_back(to_json(c));
    return io::Json{{"passed", r.passed()}, {"checks", checks}};
}

} // namespace chambered
