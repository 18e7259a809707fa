#pragma once

#include "chambered/coxeter.hpp"

#include <string_view>

namespace chambered::catalog {

// Affine graphs with 0-based vertices. affine_A(1) is the double edge.
InputGraph affine_A(int n);  // n + 1 vertices, n >= 1
InputGraph affine_D(int n);  // n + 1 vertices, n >= 4
InputGraph affine_E(int n);  // n in {6, 7, 8}; n + 1 vertices
// Path graph A_n (Dynkin), n >= 1.
InputGraph dynkin_A(int n);

// "A~1", "A~2", "D~4", "E~6", ..., "A3" (Dynkin path). Throws InputError.
InputGraph by_name(std::string_view name);

} // namespace chambered::catalog
