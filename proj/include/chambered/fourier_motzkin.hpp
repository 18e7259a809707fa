#pragma once

#include "chambered/arith.hpp"

#include <cstddef>
#include <vector>

namespace chambered {

// Decides whether {x in Q^n : <row_k, x> > 0 for all k} is non-empty by exact
// Fourier-Motzkin elimination. Combinations of strict inequalities stay
// strict, so the system is infeasible iff elimination produces 0 > 0.
// Rows are scaled to primitive integer vectors and deduplicated after every
// elimination step; exceeding max_rows throws CapExceeded.
bool strictly_feasible(std::vector<IntVector> rows, std::size_t max_rows = 200'000);

} // namespace chambered
