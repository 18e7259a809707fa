#pragma once

// Finite-dimensional truncations Lambda_N = K Qbar / (rho + paths of length >= N)
// of the preprojective algebra, and the g-vectors of the ideals I_w computed
// from them by graded linear algebra over Q.
//
// Conventions: modules are left modules. A path is stored as its arrows in
// traversal order; the product ab means "first b, then a". Hence
// Lambda e_i is spanned by the paths starting at i and e_t Lambda by the
// paths ending at t.

#include "chambered/coxeter.hpp"
#include "chambered/linalg.hpp"
#include "chambered/parallel.hpp"

#include <cstddef>
#include <memory>
#include <vector>

namespace chambered::trunc {

struct Arrow {
    int source = 0;
    int target = 0;
    int edge = 0;          // index into the graph's edge list
    bool starred = false;  // a* : target(a) -> source(a)
};

class DoubleQuiver {
public:
    explicit DoubleQuiver(const InputGraph& graph);

    int vertex_count() const { return n_; }
    const std::vector<Arrow>& arrows() const { return arrows_; }
    int arrow_count() const { return static_cast<int>(arrows_.size()); }

    // rho_v = sum_{a : t(a)=v} a a* - sum_{a : s(a)=v} a* a, as terms
    // coeff * outer * inner (first inner, then outer).
    struct Term {
        int outer = 0;
        int inner = 0;
        int coeff = 1;
    };
    const std::vector<Term>& relation(int v) const { return relations_.at(v); }

private:
    int n_ = 0;
    std::vector<Arrow> arrows_;
    std::vector<std::vector<Term>> relations_;
};

struct Path {
    int source = 0;
    int target = 0;
    std::vector<int> arrows;    // traversal order
    std::size_t prefix = 0;     // basis index of the path without its last arrow
    int last_arrow = -1;        // -1 for idempotents
};

struct AlgebraOptions {
    std::size_t max_candidates = 500'000;  // per degree
};

class TruncatedAlgebra {
public:
    // Keeps degrees 0 .. truncation-1. Requires truncation >= 2.
    TruncatedAlgebra(const InputGraph& graph, int truncation, const AlgebraOptions& opts = {});

    int truncation() const { return truncation_; }
    const DoubleQuiver& quiver() const { return quiver_; }
    int vertex_count() const { return quiver_.vertex_count(); }

    std::size_t dim(int d) const;
    const std::vector<Path>& basis(int d) const { return basis_.at(d); }

    // a * b for the basis element b of degree d, in degree-(d+1) coordinates.
    // Empty when the product is zero or d+1 is truncated.
    const RatVector& left_arrow_basis(int a, int d, std::size_t b) const;

    RatVector left_arrow(int a, int d, const RatVector& x) const;
    // e_t x
    RatVector project_target(int t, int d, const RatVector& x) const;
    // x e_s
    RatVector project_source(int s, int d, const RatVector& x) const;
    // Product of homogeneous elements; empty vector when dx+dy is truncated.
    RatVector multiply(int dx, const RatVector& x, int dy, const RatVector& y) const;
    RatVector idempotent(int i) const;

private:
    void build_degree(int d, const AlgebraOptions& opts);

    DoubleQuiver quiver_;
    int truncation_ = 0;
    std::vector<std::vector<Path>> basis_;
    // left_[d][a][b]: a * basis_[d][b]
    std::vector<std::vector<std::vector<RatVector>>> left_;
};

struct FreeGenerator {
    int vertex = 0;
    int degree = 0;
};

// Graded free module  sum_g Lambda e_{vertex_g} shifted up by degree_g.
// Degree-d coordinates are pairs (g, b) with b a basis path of degree
// d - degree_g starting at vertex_g.
class FreeModule {
public:
    FreeModule(const TruncatedAlgebra& alg, std::vector<FreeGenerator> gens);

    const TruncatedAlgebra& algebra() const { return *alg_; }
    const std::vector<FreeGenerator>& generators() const { return gens_; }
    // Largest degree with coordinates in the truncation.
    int top_degree() const { return alg_->truncation() - 1; }

    std::size_t dim(int d) const;
    struct Coord {
        std::size_t gen;
        std::size_t basis;  // index into algebra().basis(d - degree_gen)
    };
    const std::vector<Coord>& coords(int d) const { return coords_.at(d); }
    int target(int d, std::size_t k) const;

    RatVector left_arrow(int a, int d, const RatVector& x) const;
    RatVector project_target(int t, int d, const RatVector& x) const;
    // Unit vector of generator g (degree degree_g).
    RatVector generator_vector(std::size_t g) const;

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
    // Coordinate index of (gen, basis) in degree d, or npos.
    std::size_t find(int d, std::size_t gen, std::size_t basis) const;

private:

    const TruncatedAlgebra* alg_;
    std::vector<FreeGenerator> gens_;
    std::vector<std::vector<Coord>> coords_;
    // lookup_[d][g][b] = coordinate index or npos
    std::vector<std::vector<std::vector<std::size_t>>> lookup_;
};

using FreeModulePtr = std::shared_ptr<const FreeModule>;

// Per-degree subspaces (degrees 0 .. top) of a free module.
class GradedSubmodule {
public:
    explicit GradedSubmodule(FreeModulePtr ambient);

    const FreeModule& ambient() const { return *ambient_; }
    const FreeModulePtr& ambient_ptr() const { return ambient_; }
    int top_degree() const { return static_cast<int>(parts_.size()) - 1; }
    const Subspace& part(int d) const { return parts_.at(d); }
    Subspace& part(int d) { return parts_.at(d); }
    std::size_t dim(int d) const { return parts_.at(d).dim(); }

    // Left multiplication by every arrow maps degree d into degree d+1.
    bool closed_under_arrows() const;

    friend bool equal_up_to(const GradedSubmodule& a, const GradedSubmodule& b, int degree);

private:
    FreeModulePtr ambient_;
    std::vector<Subspace> parts_;
};

bool equal_up_to(const GradedSubmodule& a, const GradedSubmodule& b, int degree);

// Lambda = sum_t Lambda e_t as a left module; two-sided ideals live here.
FreeModulePtr regular_module(const TruncatedAlgebra& alg);
// Lambda e_i.
FreeModulePtr column_module(const TruncatedAlgebra& alg, int i);

GradedSubmodule whole_module(const FreeModulePtr& ambient);

// I_i = Lambda (1 - e_i) Lambda inside regular_module(alg).
GradedSubmodule ideal_I(const FreeModulePtr& regular, int i);

// I_{i_1} ( I_{i_2} ( ... ) ) for a reduced word; throws InputError if the
// word is not reduced.
GradedSubmodule ideal_product(const CoxeterSystem& sys, const FreeModulePtr& regular,
                              const Word& word);

// I e_i as a submodule of `column` (which must be column_module(alg, i)).
GradedSubmodule restrict_to_column(const GradedSubmodule& ideal, const FreeModulePtr& column,
                                   int i);

struct GradedGenerator {
    int vertex = 0;
    int degree = 0;
    RatVector element;  // lies in e_vertex M, degree `degree`
};

// Homogeneous basis of M / (arrows * M) in degrees <= max_degree, split by vertex.
std::vector<GradedGenerator> minimal_generators(const GradedSubmodule& m, int max_degree);

struct Syzygy {
    FreeModulePtr cover;
    GradedSubmodule kernel;  // degrees above max_degree are left empty
};

// Projective cover of the given generators and the kernel of the cover map
// through max_degree.
Syzygy syzygy(const GradedSubmodule& m, const std::vector<GradedGenerator>& gens,
              int max_degree);

struct Presentation {
    std::vector<int> p0;                // multiplicity of Lambda e_v in P^0
    std::vector<int> p1;                // multiplicity of Lambda e_v in P^1
    std::vector<FreeGenerator> p0_generators;
    std::vector<FreeGenerator> p1_generators;
    int counted_degree = 0;             // generators counted in degrees <= this
    bool injective_differential = false;
    bool stabilized = false;

    std::vector<long> g_vector() const;
};

// Minimal presentation P^1 -> P^0 -> M through degree N - margin.
// `stabilized` is left false; oracle_g_matrix sets it by recomputing at N+2.
Presentation minimal_presentation(const GradedSubmodule& m, int margin = 2);

struct OracleResult {
    Word word;
    IntMatrix g;  // column i = p0 - p1 of I_w e_i
    std::vector<Presentation> columns;
    bool stabilized = false;
    bool injective = false;
};

class OracleContext;
// Column i of the result is the g-vector of I_w e_i computed at truncation N;
// each column is recomputed at N+2 to set `stabilized`. Requires a reduced
// word and N >= length + margin.
OracleResult oracle_g_matrix(const OracleContext& ctx, const Word& word);

// Reusable pair of truncations N and N+2.
class OracleContext {
public:
    OracleContext(const CoxeterSystem& sys, int truncation, int margin = 2,
                  const AlgebraOptions& opts = {});
    OracleContext(const OracleContext&) = delete;
    OracleContext& operator=(const OracleContext&) = delete;

    const CoxeterSystem& system() const { return *sys_; }
    int truncation() const { return truncation_; }
    int margin() const { return margin_; }
    const TruncatedAlgebra& algebra() const { return low_; }
    const TruncatedAlgebra& check_algebra() const { return high_; }

    GradedSubmodule ideal(const Word& word) const;  // at truncation N

private:
    friend OracleResult oracle_g_matrix(const OracleContext& ctx, const Word& word);
    const CoxeterSystem* sys_;
    int truncation_;
    int margin_;
    TruncatedAlgebra low_;
    TruncatedAlgebra high_;
    FreeModulePtr low_regular_;
    FreeModulePtr high_regular_;
    std::vector<FreeModulePtr> low_columns_;
    std::vector<FreeModulePtr> high_columns_;
};

std::vector<OracleResult> oracle_g_matrices(const OracleContext& ctx,
                                            const std::vector<Word>& words,
                                            Exec exec = Exec::parallel);

} // namespace chambered::trunc
