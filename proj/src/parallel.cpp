#include "chambered/parallel.hpp"

#include <omp.h>

#include <cstdlib>
#include <string>

namespace chambered {

namespace {

int env_threads() {
    const char* v = std::getenv("CHAMBERED_THREADS");
    if (v == nullptr)
        return 0;
    try {
        const int n = std::stoi(v);
        return n > 0 ? n : 0;
    } catch (...) {
        return 0;
    }
}

} // namespace

int worker_count() {
    const int n = env_threads();
    return n > 0 ? n : omp_get_max_threads();
}

void configure_threads_from_env() {
    const int n = env_threads();
    if (n > 0)
        omp_set_num_threads(n);
}

} // namespace chambered
