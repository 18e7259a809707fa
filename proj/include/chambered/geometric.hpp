#pragma once

#include "chambered/coxeter.hpp"

#include <vector>

namespace chambered {

// Coordinates in the simple-root basis {alpha_i} of V.
using RootVector = IntVector;
// Coordinates in the dual basis {alpha_i^*} of V^*, identified with
// K_0 classes via alpha_i^* -> [Lambda e_i].
using Covector = RatVector;

// Column j is sigma_{s_i}(alpha_j) = alpha_j + (m_ij - 2 delta_ij) alpha_i.
IntMatrix sigma_generator_matrix(const CoxeterSystem& sys, int i);

// Matrix of sigma*_{s_i}: fixes alpha_j^* for j != i and sends alpha_i^* to
// -alpha_i^* + sum_{t != i} m_ti alpha_t^*.
IntMatrix sigma_star_generator_matrix(const CoxeterSystem& sys, int i);

// Canonical pairing <f, v> = sum f_i v_i; throws InputError on size mismatch.
Rational pairing(const Covector& f, const RootVector& v);

struct Root {
    RootVector coords;
    bool positive = true;
};

struct RootOptions {
    std::size_t max_elements = 2'000'000;
    Exec exec = Exec::parallel;
};

// {sigma_w(alpha_i) : l(w) <= L}, deduplicated, sorted by coordinates.
std::vector<Root> real_roots_up_to(const CoxeterSystem& sys, int max_length,
                                   const RootOptions& opts = {});

// One positive representative per hyperplane H_alpha = H_{-alpha}.
std::vector<RootVector> reflection_hyperplanes(const std::vector<Root>& roots);

// <f, delta>; throws NotAffineError on a non-affine system.
Rational level(const CoxeterSystem& sys, const Covector& f);

} // namespace chambered
