#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace apvar {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;
using i128 = __int128;

// Bad argument: out-of-range n, k = 0, a > q, and so on.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Allocation or work-budget exhaustion.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr unsigned kMaxFold = 8;

std::string to_string(u128 v);

inline double to_double(u128 v) { return static_cast<double>(v); }

}  // namespace apvar
