#pragma once

// Farey sequences and the mediant dissection of the unit circle R/Z.

#include <compare>
#include <vector>

#include "apvar/common.hpp"

namespace apvar {

inline constexpr u64 kMaxFareyOrder = 10000;

// num/den with den >= 1. Comparison is by value (exact cross-multiplication),
// so unreduced mediants compare equal to their reduced forms.
struct Fraction {
  i64 num = 0;
  i64 den = 1;

  Fraction reduced() const;

  friend std::strong_ordering operator<=>(const Fraction& l, const Fraction& r) {
    return static_cast<i128>(l.num) * r.den <=> static_cast<i128>(r.num) * l.den;
  }
  friend bool operator==(const Fraction& l, const Fraction& r) {
    return static_cast<i128>(l.num) * r.den == static_cast<i128>(r.num) * l.den;
  }
};

inline Fraction mediant(const Fraction& l, const Fraction& r) { return {l.num + r.num, l.den + r.den}; }

// Arc around center = a/q bounded by the mediants with its Farey neighbours.
struct FareyArc {
  Fraction center;
  Fraction left;
  Fraction right;
};

// All reduced a/q in [0,1] with q <= gamma, increasing.
std::vector<Fraction> farey_sequence(u64 gamma);

// One arc per fraction in [0,1). 0/1 and 1/1 are the same point of R/Z and
// share a single arc attached to 0/1, running from -1/(gamma+1) to
// 1/(gamma+1); the period covered is [-1/(gamma+1), gamma/(gamma+1)).
std::vector<FareyArc> dissection(u64 gamma);

struct ContainmentReport {
  u64 gamma = 0;
  std::size_t arcs = 0;
  bool tiles = false;                // consecutive arcs share endpoints and span length 1
  std::vector<Fraction> violations;  // centers failing either inclusion

  bool ok() const { return tiles && violations.empty(); }
};

// (a/q - 1/(2q gamma), a/q + 1/(2q gamma)) within the arc, and the arc within
// (a/q - 1/(q gamma), a/q + 1/(q gamma)), checked exactly for every arc.
ContainmentReport verify_containment(u64 gamma);

bool arc_contains_inner(const FareyArc& arc, u64 gamma);
bool arc_within_outer(const FareyArc& arc, u64 gamma);

// True when arcs are contiguous and right(last) - left(first) == 1.
bool tiles_period(const std::vector<FareyArc>& arcs);

}  // namespace apvar
