#pragma once

#ifdef _OPENMP
#include <omp.h>
#else
namespace darr {
inline int omp_get_max_threads() { return 1; }
inline int omp_get_thread_num() { return 0; }
}  // namespace darr
#endif

namespace darr {

inline int max_threads() { return omp_get_max_threads(); }

}  // namespace darr
