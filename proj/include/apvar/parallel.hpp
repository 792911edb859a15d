#pragma once

#include <optional>

namespace apvar {

// Thread count precedence: explicit request, then APVAR_THREADS, then hardware.
int resolve_thread_count(std::optional<int> requested);

// Applies to every OpenMP region started afterwards on this thread.
void set_thread_count(int n);

int max_threads();

}  // namespace apvar
