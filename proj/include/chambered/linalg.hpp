#pragma once

#include "chambered/arith.hpp"

#include <map>
#include <optional>
#include <vector>

namespace chambered {

// Exact linear algebra over Q.

struct Echelon {
    RatMatrix rref;                   // reduced row echelon form, zero rows dropped
    std::vector<std::size_t> pivots;  // pivot column per row
};

Echelon row_reduce(const RatMatrix& m);
std::size_t rank(const RatMatrix& m);

// Basis of {x : m x = 0}, one vector per free column (unit at that column).
std::vector<RatVector> nullspace(const RatMatrix& m);

// Unique solution of a x = b for square invertible a; nullopt if singular.
std::optional<RatVector> solve(const RatMatrix& a, const RatVector& b);

std::optional<RatMatrix> inverse(const RatMatrix& a);

// Fraction-free (Bareiss) determinant.
Int determinant(const IntMatrix& m);

struct Inertia {
    bool positive_semidefinite = false;
    std::size_t zero_pivots = 0;  // dimension of the kernel when PSD
};

// Symmetric elimination with diagonal pivots; exact PSD test for symmetric m.
Inertia symmetric_inertia(const RatMatrix& m);

// A subspace of Q^ambient kept in reduced row echelon form.
// Equality compares the canonical RREF, so it is basis independent.
class Subspace {
public:
    Subspace() = default;
    explicit Subspace(std::size_t ambient) : ambient_(ambient) {}

    std::size_t ambient() const { return ambient_; }
    std::size_t dim() const { return rows_.size(); }

    // Returns true iff v was not already in the span.
    bool add(RatVector v);
    RatVector reduce(RatVector v) const;
    bool contains(const RatVector& v) const;

    // Rows of the RREF ordered by pivot column.
    std::vector<RatVector> basis() const;
    std::vector<std::size_t> pivots() const;

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.rows_ == b.rows_;
    }

private:
    std::size_t ambient_ = 0;
    std::map<std::size_t, RatVector> rows_;  // pivot -> row with 1 at pivot
};

bool is_zero(const RatVector& v);

} // namespace chambered
