#pragma once

namespace gridsched {

enum class ExecPolicy { Serial, Parallel };

// Worker count for parallel kernels. GRIDSCHED_THREADS caps the OpenMP
// default when set; set_thread_cap overrides both (test/bench hook, 0 resets).
int effective_threads();
void set_thread_cap(int n);

}  // namespace gridsched
