#pragma once

#include <vector>

#include "apvar/dk_sieve.hpp"

namespace apvar::detail {

std::vector<u64> allocate_values(u64 x, std::size_t buffers);
void check_sieve_args(u64 x, unsigned k);

// Non-parallel per-class sums into out[1..q]; safe inside an outer parallel region.
void accumulate_classes(const DkTable& table, u64 q, u64 X, u128* out);

}  // namespace apvar::detail
