#include "apvar/parallel.hpp"

#include <cstdlib>
#include <string>
#include <thread>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "apvar/common.hpp"

namespace apvar {

int resolve_thread_count(std::optional<int> requested) {
  if (requested) {
    if (*requested < 1) throw DomainError("thread count must be >= 1");
    return *requested;
  }
  if (const char* env = std::getenv("APVAR_THREADS"); env != nullptr && *env != '\0') {
    int n = 0;
    try {
      n = std::stoi(env);
    } catch (const std::exception&) {
      throw DomainError(std::string("APVAR_THREADS is not an integer: ") + env);
    }
    if (n < 1) throw DomainError("APVAR_THREADS must be >= 1");
    return n;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

void set_thread_count(int n) {
#ifdef _OPENMP
  omp_set_num_threads(n);
#else
  (void)n;
#endif
}

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace apvar
