#pragma once

#if defined(__GLIBC__)
#include <malloc.h>
#endif

namespace chsh {

/// Fock operators at the default cutoff are 41 MB each, above glibc's largest
/// dynamic mmap threshold. Keeping them on the heap lets repeated oracle
/// evaluations reuse pages instead of faulting in fresh mappings per matrix.
inline void keep_large_blocks_on_heap() {
#if defined(__GLIBC__)
  mallopt(M_MMAP_THRESHOLD, 256 << 20);
  mallopt(M_TRIM_THRESHOLD, 512 << 20);
#endif
}

}  // namespace chsh
