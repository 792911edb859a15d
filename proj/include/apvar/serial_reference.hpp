#pragma once

// Single-threaded reference versions of the OpenMP kernels. Tests and the
// benchmark compare the parallel paths against these.

#include "apvar/dk_sieve.hpp"
#include "apvar/progression.hpp"

namespace apvar::serial {

// In-place convolution: walking d downward, values[d] is still d_{j}(d) when
// it is pushed onto its multiples.
DkTable sieve_dk(u64 x, unsigned k);

// Straight pass n = 1..X accumulating into n mod q.
ResidueClassSums ap_sums(const DkTable& table, u64 q, u64 X);

VarianceReport variance_total(const DkTable& table, u64 x, u64 Q);

}  // namespace apvar::serial
