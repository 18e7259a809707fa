#pragma once

#include "chambered/coxeter.hpp"
#include "chambered/geometric.hpp"
#include "chambered/parallel.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace chambered {

enum class Family { P, R };

const char* to_string(Family f);
Family parse_family(std::string_view text);

// Column i is the g-vector of the i-th indecomposable summand, written in
// the basis [Lambda e_1], ..., [Lambda e_n].
struct GMatrix {
    Family family = Family::P;
    Element element;
    IntMatrix matrix;
};

// sigma*_w. Cone C(P_w) = w C_+.
GMatrix g_matrix_P(const Element& w);
// -sigma*_w by convention. Cone C(R_w) = w C_-.
GMatrix g_matrix_R(const Element& w);
GMatrix g_matrix(const Element& w, Family family);

// Closed cone membership: the unique solution of G a = f has a >= 0.
bool cone_contains(const IntMatrix& g, const Covector& f);
inline bool cone_contains(const GMatrix& g, const Covector& f) {
    return cone_contains(g.matrix, f);
}

struct ChamberResult {
    Family family = Family::P;
    Element element;
    Word certificate;      // generators applied during descent, in order
    Covector transformed;  // sigma*_{w^-1}(f): in C_+ for P, C_- for R
    std::size_t steps = 0;
};

// Descends f (or -f when its level is negative) into C_+ by repeatedly
// reflecting in the least simple wall with negative pairing. The answer is
// rechecked exactly before it is returned.
// Throws CriticalHyperplane on level zero, PreconditionError on f = 0,
// CapExceeded when the iteration cap is hit.
ChamberResult chamber_locate(const CoxeterSystem& sys, const Covector& f);

// Iteration cap used by chamber_locate for a given covector.
std::size_t locate_iteration_cap(const CoxeterSystem& sys, const Covector& f);

// True iff the open cones spanned by the columns of g1 and g2 do not meet.
// Both matrices must be invertible; equal matrices are a precondition
// violation.
bool interiors_disjoint(const IntMatrix& g1, const IntMatrix& g2);
inline bool interiors_disjoint(const GMatrix& a, const GMatrix& b) {
    return interiors_disjoint(a.matrix, b.matrix);
}

// Number of columns in which a and b differ.
std::size_t column_difference(const IntMatrix& a, const IntMatrix& b);

struct MutationNeighbor {
    int generator = 0;
    GMatrix g;
    std::size_t changed_column = 0;
};

// g-matrices of (family, w s_i) for every generator i. Each differs from
// G(family, w) in column i only; violations throw Error.
std::vector<MutationNeighbor> mutation_neighbors(const CoxeterSystem& sys, const Element& w,
                                                 Family family);

struct CoverageOptions {
    std::uint64_t seed = 1;
    std::size_t count = 1000;  // covectors of nonzero level to locate
    int bound = 50;            // coordinates uniform in [-bound, bound]
    Exec exec = Exec::parallel;
};

struct CoverageReport {
    std::size_t requested = 0;
    std::size_t located = 0;
    std::size_t failures = 0;
    std::size_t discarded_level_zero = 0;
    int max_length = 0;
    std::size_t max_steps = 0;
    std::optional<std::string> first_failure;

    friend bool operator==(const CoverageReport&, const CoverageReport&) = default;
};

// Seeded integer covectors; the same seed gives the same sample on every
// platform and for every thread count.
std::vector<Covector> sample_covectors(const CoxeterSystem& sys, const CoverageOptions& opts,
                                       std::size_t* discarded = nullptr);

CoverageReport coverage_sample(const CoxeterSystem& sys, const CoverageOptions& opts);

struct PairwiseReport {
    std::size_t pairs = 0;
    std::size_t equal_pairs = 0;
    std::size_t overlapping_pairs = 0;
    // Lexicographically first offending pair (i, j), i < j.
    std::optional<std::pair<std::size_t, std::size_t>> first_equal;
    std::optional<std::pair<std::size_t, std::size_t>> first_overlap;

    friend bool operator==(const PairwiseReport&, const PairwiseReport&) = default;
};

// All pairs: matrix distinctness and, when check_disjoint, interior
// disjointness of the cones.
PairwiseReport check_pairs(const std::vector<GMatrix>& gs, bool check_disjoint,
                           Exec exec = Exec::parallel);
// Explicit pair list variant used for sampled checks.
PairwiseReport check_pairs(const std::vector<GMatrix>& gs,
                           const std::vector<std::pair<std::size_t, std::size_t>>& pairs,
                           bool check_disjoint, Exec exec = Exec::parallel);

struct SliceWall {
    int generator = 0;
    RootVector root;  // the cell lies in one closed half-space of <f, root> = 0
};

// w C_+ cut by the level-one slice E (w C_- by -E for the R family).
struct SliceCell {
    Family family = Family::P;
    Element element;
    std::vector<RatVector> vertices;  // full coordinates in the alpha^* basis
    std::vector<RatVector> chart;     // vertices with the last coordinate dropped
    std::vector<SliceWall> walls;
};

// Cells for all elements with l(w) <= L: P family first, then R, each in
// (length, canonical word) order. Throws NotAffineError.
std::vector<SliceCell> fan_slice_export(const CoxeterSystem& sys, int max_length);

} // namespace chambered
