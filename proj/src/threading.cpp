// SPDX-License-Identifier: Apache-2.0
#include "fockdyn/threading.hpp"

#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace fockdyn::threading {

namespace {

// -1: unset (library default), 0: serial, k > 0: k threads.
int requested() {
    static const int value = [] {
        const char* env = std::getenv("FOCKDYN_THREADS");
        if (!env || !*env) return -1;
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end == env || *end != '\0' || v < 0) return -1;
        return static_cast<int>(v);
    }();
    return value;
}

}  // namespace

bool parallel_enabled() {
#ifdef _OPENMP
    return requested() != 0;
#else
    return false;
#endif
}

int thread_count() {
#ifdef _OPENMP
    int r = requested();
    if (r > 0) return r;
    return omp_get_max_threads();
#else
    return 1;
#endif
}

}  // namespace fockdyn::threading
