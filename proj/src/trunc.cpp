#include "chambered/trunc.hpp"

#include "chambered/error.hpp"

#include <algorithm>
#include <exception>
#include <string>

namespace chambered::trunc {

DoubleQuiver::DoubleQuiver(const InputGraph& graph) : n_(graph.vertex_count) {
    relations_.resize(static_cast<std::size_t>(n_));
    for (std::size_t k = 0; k < graph.edges.size(); ++k) {
        const auto [u, v] = graph.edges[k];
        const int a = static_cast<int>(arrows_.size());
        arrows_.push_back({u, v, static_cast<int>(k), false});
        arrows_.push_back({v, u, static_cast<int>(k), true});
        const int astar = a + 1;
        // a a* is a loop at t(a); a* a is a loop at s(a).
        relations_[v].push_back({a, astar, 1});
        relations_[u].push_back({astar, a, -1});
    }
}

TruncatedAlgebra::TruncatedAlgebra(const InputGraph& graph, int truncation,
                                   const AlgebraOptions& opts)
    : quiver_(graph), truncation_(truncation) {
    if (truncation < 2)
        throw InputError("truncation degree must be >= 2, got " + std::to_string(truncation));
    const int n = quiver_.vertex_count();
    const auto arrows = static_cast<std::size_t>(quiver_.arrow_count());
    basis_.resize(static_cast<std::size_t>(truncation));
    left_.resize(static_cast<std::size_t>(truncation));
    for (int i = 0; i < n; ++i)
        basis_[0].push_back({i, i, {}, 0, -1});
    for (int d = 1; d < truncation; ++d)
        build_degree(d, opts);
    // Products landing in degree N vanish.
    left_.back().assign(arrows, std::vector<RatVector>(basis_.back().size()));
}

void TruncatedAlgebra::build_degree(int d, const AlgebraOptions& opts) {
    const auto& prev = basis_[d - 1];
    const auto& arrows = quiver_.arrows();
    constexpr std::size_t none = static_cast<std::size_t>(-1);

    // Degree-d candidates a * b for arrows a and degree-(d-1) basis paths b.
    struct Candidate {
        int arrow;
        std::size_t prev;
    };
    std::vector<Candidate> cands;
    std::vector<std::vector<std::size_t>> cand_of(arrows.size(),
                                                  std::vector<std::size_t>(prev.size(), none));
    for (std::size_t b = 0; b < prev.size(); ++b)
        for (std::size_t a = 0; a < arrows.size(); ++a)
            if (arrows[a].source == prev[b].target) {
                cand_of[a][b] = cands.size();
                cands.push_back({static_cast<int>(a), b});
                if (cands.size() > opts.max_candidates)
                    throw CapExceeded("path cap (max_candidates=" +
                                      std::to_string(opts.max_candidates) +
                                      ") exceeded in degree " + std::to_string(d));
            }

    // Kernel of (arrows (x) Lambda_{d-1}) -> Lambda_d is spanned by rho_v * b'
    // for basis paths b' of degree d-2 ending at v.
    Subspace rel(cands.size());
    if (d >= 2) {
        for (std::size_t b2 = 0; b2 < basis_[d - 2].size(); ++b2) {
            const int v = basis_[d - 2][b2].target;
            RatVector row(cands.size());
            for (const auto& term : quiver_.relation(v)) {
                const RatVector& y = left_[d - 2][term.inner][b2];
                for (std::size_t k = 0; k < y.size(); ++k)
                    if (sgn(y[k]) != 0)
                        row[cand_of[term.outer][k]] += term.coeff * y[k];
            }
            rel.add(std::move(row));
        }
    }

    const std::vector<std::size_t> pivots = rel.pivots();
    const std::vector<RatVector> rows = rel.basis();
    std::vector<std::size_t> pivot_row(cands.size(), none);
    for (std::size_t r = 0; r < pivots.size(); ++r)
        pivot_row[pivots[r]] = r;

    std::vector<std::size_t> basis_index(cands.size(), none);
    auto& cur = basis_[d];
    for (std::size_t c = 0; c < cands.size(); ++c) {
        if (pivot_row[c] != none)
            continue;
        const Path& p = prev[cands[c].prev];
        Path q{p.source, arrows[cands[c].arrow].target, p.arrows, cands[c].prev,
               cands[c].arrow};
        q.arrows.push_back(cands[c].arrow);
        basis_index[c] = cur.size();
        cur.push_back(std::move(q));
    }

    auto& left = left_[d - 1];
    left.assign(arrows.size(), std::vector<RatVector>(prev.size()));
    for (std::size_t a = 0; a < arrows.size(); ++a)
        for (std::size_t b = 0; b < prev.size(); ++b) {
            const std::size_t c = cand_of[a][b];
            if (c == none)
                continue;
            RatVector v(cur.size());
            if (pivot_row[c] == none) {
                v[basis_index[c]] = 1;
            } else {
                const RatVector& row = rows[pivot_row[c]];
                for (std::size_t j = 0; j < cands.size(); ++j)
                    if (basis_index[j] != none && sgn(row[j]) != 0)
                        v[basis_index[j]] = -row[j];
            }
            if (!is_zero(v))
                left[a][b] = std::move(v);
        }
}

std::size_t TruncatedAlgebra::dim(int d) const {
    if (d < 0 || d >= truncation_)
        return 0;
    return basis_[d].size();
}

const RatVector& TruncatedAlgebra::left_arrow_basis(int a, int d, std::size_t b) const {
    return left_.at(d).at(a).at(b);
}

RatVector TruncatedAlgebra::left_arrow(int a, int d, const RatVector& x) const {
    RatVector out(dim(d + 1));
    if (out.empty())
        return out;
    for (std::size_t b = 0; b < x.size(); ++b) {
        if (sgn(x[b]) == 0)
            continue;
        const RatVector& y = left_[d][a][b];
        for (std::size_t k = 0; k < y.size(); ++k)
            if (sgn(y[k]) != 0)
                out[k] += x[b] * y[k];
    }
    return out;
}

RatVector TruncatedAlgebra::project_target(int t, int d, const RatVector& x) const {
    RatVector out = x;
    for (std::size_t b = 0; b < out.size(); ++b)
        if (basis_[d][b].target != t)
            out[b] = 0;
    return out;
}

RatVector TruncatedAlgebra::project_source(int s, int d, const RatVector& x) const {
    RatVector out = x;
    for (std::size_t b = 0; b < out.size(); ++b)
        if (basis_[d][b].source != s)
            out[b] = 0;
    return out;
}

RatVector TruncatedAlgebra::multiply(int dx, const RatVector& x, int dy, const RatVector& y) const {
    RatVector out(dim(dx + dy));
    if (out.empty())
        return out;
    for (std::size_t b = 0; b < x.size(); ++b) {
        if (sgn(x[b]) == 0)
            continue;
        const Path& p = basis_[dx][b];
        RatVector cur = project_target(p.source, dy, y);
        int deg = dy;
        for (int a : p.arrows)
            cur = left_arrow(a, deg++, cur);
        for (std::size_t k = 0; k < cur.size(); ++k)
            if (sgn(cur[k]) != 0)
                out[k] += x[b] * cur[k];
    }
    return out;
}

RatVector TruncatedAlgebra::idempotent(int i) const {
    RatVector e(dim(0));
    e.at(static_cast<std::size_t>(i)) = 1;
    return e;
}

FreeModule::FreeModule(const TruncatedAlgebra& alg, std::vector<FreeGenerator> gens)
    : alg_(&alg), gens_(std::move(gens)) {
    const int top = alg.truncation() - 1;
    coords_.resize(static_cast<std::size_t>(top + 1));
    lookup_.resize(static_cast<std::size_t>(top + 1));
    for (int d = 0; d <= top; ++d) {
        lookup_[d].resize(gens_.size());
        for (std::size_t g = 0; g < gens_.size(); ++g) {
            const int e = d - gens_[g].degree;
            if (e < 0)
                continue;
            const auto& basis = alg.basis(e);
            lookup_[d][g].assign(basis.size(), npos);
            for (std::size_t b = 0; b < basis.size(); ++b)
                if (basis[b].source == gens_[g].vertex) {
                    lookup_[d][g][b] = coords_[d].size();
                    coords_[d].push_back({g, b});
                }
        }
    }
}

std::size_t FreeModule::dim(int d) const {
    if (d < 0 || d > top_degree())
        return 0;
    return coords_[d].size();
}

std::size_t FreeModule::find(int d, std::size_t gen, std::size_t basis) const {
    if (d < 0 || d > top_degree())
        return npos;
    const auto& l = lookup_[d][gen];
    return basis < l.size() ? l[basis] : npos;
}

int FreeModule::target(int d, std::size_t k) const {
    const Coord& c = coords_[d][k];
    return alg_->basis(d - gens_[c.gen].degree)[c.basis].target;
}

RatVector FreeModule::left_arrow(int a, int d, const RatVector& x) const {
    RatVector out(dim(d + 1));
    if (out.empty())
        return out;
    for (std::size_t k = 0; k < x.size(); ++k) {
        if (sgn(x[k]) == 0)
            continue;
        const Coord& c = coords_[d][k];
        const int e = d - gens_[c.gen].degree;
        const RatVector& y = alg_->left_arrow_basis(a, e, c.basis);
        for (std::size_t j = 0; j < y.size(); ++j)
            if (sgn(y[j]) != 0)
                out[lookup_[d + 1][c.gen][j]] += x[k] * y[j];
    }
    return out;
}

RatVector FreeModule::project_target(int t, int d, const RatVector& x) const {
    RatVector out = x;
    for (std::size_t k = 0; k < out.size(); ++k)
        if (sgn(out[k]) != 0 && target(d, k) != t)
            out[k] = 0;
    return out;
}

RatVector FreeModule::generator_vector(std::size_t g) const {
    const int d = gens_.at(g).degree;
    RatVector v(dim(d));
    v.at(find(d, g, static_cast<std::size_t>(gens_[g].vertex))) = 1;
    return v;
}

GradedSubmodule::GradedSubmodule(FreeModulePtr ambient) : ambient_(std::move(ambient)) {
    for (int d = 0; d <= ambient_->top_degree(); ++d)
        parts_.emplace_back(ambient_->dim(d));
}

bool GradedSubmodule::closed_under_arrows() const {
    const int arrows = ambient_->algebra().quiver().arrow_count();
    for (int d = 0; d < top_degree(); ++d)
        for (const RatVector& v : parts_[d].basis())
            for (int a = 0; a < arrows; ++a)
                if (!parts_[d + 1].contains(ambient_->left_arrow(a, d, v)))
                    return false;
    return true;
}

bool equal_up_to(const GradedSubmodule& a, const GradedSubmodule& b, int degree) {
    if (a.top_degree() < degree || b.top_degree() < degree)
        return false;
    for (int d = 0; d <= degree; ++d)
        if (!(a.parts_[d] == b.parts_[d]))
            return false;
    return true;
}

FreeModulePtr regular_module(const TruncatedAlgebra& alg) {
    std::vector<FreeGenerator> gens;
    for (int t = 0; t < alg.vertex_count(); ++t)
        gens.push_back({t, 0});
    return std::make_shared<const FreeModule>(alg, std::move(gens));
}

FreeModulePtr column_module(const TruncatedAlgebra& alg, int i) {
    if (i < 0 || i >= alg.vertex_count())
        throw InputError("vertex " + std::to_string(i + 1) + " out of range");
    return std::make_shared<const FreeModule>(alg, std::vector<FreeGenerator>{{i, 0}});
}

GradedSubmodule whole_module(const FreeModulePtr& ambient) {
    GradedSubmodule m(ambient);
    for (int d = 0; d <= m.top_degree(); ++d) {
        const std::size_t dim = ambient->dim(d);
        for (std::size_t k = 0; k < dim; ++k) {
            RatVector v(dim);
            v[k] = 1;
            m.part(d).add(std::move(v));
        }
    }
    return m;
}

GradedSubmodule ideal_I(const FreeModulePtr& regular, int i) {
    const int n = regular->algebra().vertex_count();
    if (i < 0 || i >= n)
        throw InputError("vertex " + std::to_string(i + 1) + " out of range");
    GradedSubmodule m = whole_module(regular);
    // Every path of positive length passes through a vertex other than i
    // (no loops), so only the degree-0 part differs from Lambda.
    m.part(0) = Subspace(regular->dim(0));
    for (int j = 0; j < n; ++j)
        if (j != i)
            m.part(0).add(regular->generator_vector(static_cast<std::size_t>(j)));
    return m;
}

namespace {

// I_i * J for a two-sided ideal J: (I_i J)_d = sum_{j != i} e_j J_d + arrows * J_{d-1}.
GradedSubmodule multiply_by_I(const GradedSubmodule& j_ideal, int i) {
    const FreeModule& amb = j_ideal.ambient();
    const int n = amb.algebra().vertex_count();
    const int arrows = amb.algebra().quiver().arrow_count();
    GradedSubmodule out(j_ideal.ambient_ptr());
    for (int d = 0; d <= out.top_degree(); ++d) {
        Subspace& part = out.part(d);
        for (const RatVector& v : j_ideal.part(d).basis())
            for (int t = 0; t < n; ++t)
                if (t != i)
                    part.add(amb.project_target(t, d, v));
        if (d >= 1)
            for (const RatVector& v : j_ideal.part(d - 1).basis())
                for (int a = 0; a < arrows; ++a)
                    part.add(amb.left_arrow(a, d - 1, v));
    }
    return out;
}

} // namespace

GradedSubmodule ideal_product(const CoxeterSystem& sys, const FreeModulePtr& regular,
                              const Word& word) {
    for (int i : word)
        sys.check_generator(i);
    if (!sys.is_reduced(word))
        throw InputError("ideal_product requires a reduced word");
    GradedSubmodule j = whole_module(regular);
    for (auto it = word.rbegin(); it != word.rend(); ++it)
        j = multiply_by_I(j, *it);
    return j;
}

GradedSubmodule restrict_to_column(const GradedSubmodule& ideal, const FreeModulePtr& column,
                                   int i) {
    const FreeModule& reg = ideal.ambient();
    GradedSubmodule out(column);
    const auto gi = static_cast<std::size_t>(i);
    for (int d = 0; d <= out.top_degree() && d <= ideal.top_degree(); ++d) {
        const auto& coords = column->coords(d);
        for (const RatVector& v : ideal.part(d).basis()) {
            RatVector u(coords.size());
            for (std::size_t k = 0; k < coords.size(); ++k)
                u[k] = v[reg.find(d, gi, coords[k].basis)];
            out.part(d).add(std::move(u));
        }
    }
    return out;
}

std::vector<GradedGenerator> minimal_generators(const GradedSubmodule& m, int max_degree) {
    const FreeModule& amb = m.ambient();
    const int n = amb.algebra().vertex_count();
    const int arrows = amb.algebra().quiver().arrow_count();
    std::vector<GradedGenerator> gens;
    for (int d = 0; d <= std::min(max_degree, m.top_degree()); ++d) {
        Subspace span(amb.dim(d));
        if (d >= 1)
            for (const RatVector& v : m.part(d - 1).basis())
                for (int a = 0; a < arrows; ++a)
                    span.add(amb.left_arrow(a, d - 1, v));
        const std::vector<RatVector> basis = m.part(d).basis();
        for (int t = 0; t < n; ++t)
            for (const RatVector& v : basis) {
                RatVector u = amb.project_target(t, d, v);
                if (span.add(u))
                    gens.push_back({t, d, std::move(u)});
            }
    }
    return gens;
}

Syzygy syzygy(const GradedSubmodule& m, const std::vector<GradedGenerator>& gens,
              int max_degree) {
    const FreeModule& amb = m.ambient();
    const TruncatedAlgebra& alg = amb.algebra();
    std::vector<FreeGenerator> fg;
    for (const auto& g : gens)
        fg.push_back({g.vertex, g.degree});
    auto cover = std::make_shared<const FreeModule>(alg, std::move(fg));
    GradedSubmodule kernel(cover);

    // images[d][k]: image of cover coordinate k (degree d) in the ambient.
    std::vector<std::vector<RatVector>> images;
    const int top = std::min(max_degree, cover->top_degree());
    for (int d = 0; d <= top; ++d) {
        const auto& coords = cover->coords(d);
        std::vector<RatVector> img(coords.size());
        for (std::size_t k = 0; k < coords.size(); ++k) {
            const auto& c = coords[k];
            const int e = d - gens[c.gen].degree;
            const Path& p = alg.basis(e)[c.basis];
            if (e == 0) {
                img[k] = gens[c.gen].element;
            } else {
                const std::size_t pk = cover->find(d - 1, c.gen, p.prefix);
                img[k] = amb.left_arrow(p.last_arrow, d - 1, images[d - 1][pk]);
            }
        }
        if (!coords.empty()) {
            RatMatrix a(amb.dim(d), coords.size());
            for (std::size_t k = 0; k < coords.size(); ++k)
                a.set_column(k, img[k]);
            for (RatVector& v : nullspace(a))
                kernel.part(d).add(std::move(v));
        }
        images.push_back(std::move(img));
    }
    return {std::move(cover), std::move(kernel)};
}

std::vector<long> Presentation::g_vector() const {
    std::vector<long> g(p0.size());
    for (std::size_t v = 0; v < p0.size(); ++v)
        g[v] = static_cast<long>(p0[v]) - static_cast<long>(p1[v]);
    return g;
}

Presentation minimal_presentation(const GradedSubmodule& m, int margin) {
    const int n = m.ambient().algebra().vertex_count();
    const int counted = m.ambient().algebra().truncation() - margin;
    if (margin < 1 || counted < 0)
        throw InputError("presentation margin must satisfy 1 <= margin <= N");
    Presentation pres;
    pres.counted_degree = counted;
    pres.p0.assign(static_cast<std::size_t>(n), 0);
    pres.p1.assign(static_cast<std::size_t>(n), 0);

    const auto gens0 = minimal_generators(m, counted);
    const Syzygy first = syzygy(m, gens0, counted);
    const auto gens1 = minimal_generators(first.kernel, counted);
    const Syzygy second = syzygy(first.kernel, gens1, counted);

    for (const auto& g : gens0) {
        ++pres.p0[g.vertex];
        pres.p0_generators.push_back({g.vertex, g.degree});
    }
    for (const auto& g : gens1) {
        ++pres.p1[g.vertex];
        pres.p1_generators.push_back({g.vertex, g.degree});
    }
    pres.injective_differential = true;
    for (int d = 0; d <= std::min(counted, second.kernel.top_degree()); ++d)
        if (second.kernel.dim(d) != 0)
            pres.injective_differential = false;
    return pres;
}

OracleContext::OracleContext(const CoxeterSystem& sys, int truncation, int margin,
                             const AlgebraOptions& opts)
    : sys_(&sys),
      truncation_(truncation),
      margin_(margin),
      low_(sys.graph(), truncation, opts),
      high_(sys.graph(), truncation + 2, opts),
      low_regular_(regular_module(low_)),
      high_regular_(regular_module(high_)) {
    if (margin < 1 || margin > truncation)
        throw InputError("presentation margin must satisfy 1 <= margin <= N");
    for (int i = 0; i < sys.rank(); ++i) {
        low_columns_.push_back(column_module(low_, i));
        high_columns_.push_back(column_module(high_, i));
    }
}

GradedSubmodule OracleContext::ideal(const Word& word) const {
    return ideal_product(*sys_, low_regular_, word);
}

OracleResult oracle_g_matrix(const OracleContext& ctx, const Word& word) {
    const CoxeterSystem& sys = *ctx.sys_;
    const int n = sys.rank();
    if (ctx.truncation_ < static_cast<int>(word.size()) + ctx.margin_)
        throw PreconditionError("truncation N=" + std::to_string(ctx.truncation_) +
                                " is below word length + margin");
    OracleResult res;
    res.word = word;
    res.g = IntMatrix(n, n);
    res.stabilized = true;
    res.injective = true;
    const GradedSubmodule low = ideal_product(sys, ctx.low_regular_, word);
    const GradedSubmodule high = ideal_product(sys, ctx.high_regular_, word);
    for (int i = 0; i < n; ++i) {
        Presentation p =
            minimal_presentation(restrict_to_column(low, ctx.low_columns_[i], i), ctx.margin_);
        const Presentation q =
            minimal_presentation(restrict_to_column(high, ctx.high_columns_[i], i), ctx.margin_);
        p.stabilized = p.p0 == q.p0 && p.p1 == q.p1;
        const auto g = p.g_vector();
        for (int r = 0; r < n; ++r)
            res.g(r, i) = g[r];
        res.stabilized = res.stabilized && p.stabilized;
        res.injective = res.injective && p.injective_differential;
        res.columns.push_back(std::move(p));
    }
    return res;
}

std::vector<OracleResult> oracle_g_matrices(const OracleContext& ctx,
                                            const std::vector<Word>& words, Exec exec) {
    std::vector<OracleResult> out(words.size());
    std::vector<std::exception_ptr> errors(words.size());
    auto run = [&](std::size_t k) {
        try {
            out[k] = oracle_g_matrix(ctx, words[k]);
        } catch (...) {
            errors[k] = std::current_exception();
        }
    };
    if (exec == Exec::parallel) {
        const auto items = static_cast<long long>(words.size());
#pragma omp parallel for schedule(dynamic) num_threads(worker_count())
        for (long long k = 0; k < items; ++k)
            run(static_cast<std::size_t>(k));
    } else {
        for (std::size_t k = 0; k < words.size(); ++k)
            run(k);
    }
    for (const auto& e : errors)
        if (e)
            std::rethrow_exception(e);
    return out;
}

} // namespace chambered::trunc
