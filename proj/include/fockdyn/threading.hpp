// SPDX-License-Identifier: Apache-2.0
#pragma once

namespace fockdyn::threading {

// FOCKDYN_THREADS: unset -> OpenMP default, 0 -> serial reference kernels,
// k > 0 -> k threads.  Read once per process.
bool parallel_enabled();
int thread_count();

}  // namespace fockdyn::threading
