#pragma once

namespace csimtl {

// Worker-thread count for batched kernels. Every reduction is owned by a
// single thread and runs in a fixed order, so results are bit-identical for
// any thread count; this only affects speed. Default is 1 (strict sequential
// mode).
void set_num_threads(int n);
int num_threads();

// Resolves the effective thread count from a --jobs style flag; the
// CSI_MTL_THREADS environment variable takes precedence when set.
int resolve_jobs(int jobs_flag);

}  // namespace csimtl
