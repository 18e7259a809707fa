#pragma once

namespace chambered {

// Kernels that fan out over independent work items come in two flavours.
// Exec::serial is the reference path kept for tests and benchmarks; both
// produce identical results.
enum class Exec { serial, parallel };

// Worker count for Exec::parallel: CHAMBERED_THREADS if set and positive,
// otherwise the OpenMP default.
int worker_count();

// Applies CHAMBERED_THREADS to the OpenMP runtime once.
void configure_threads_from_env();

} // namespace chambered
