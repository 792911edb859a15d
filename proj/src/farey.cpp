#include "apvar/farey.hpp"

#include <numeric>

namespace apvar {

Fraction Fraction::reduced() const {
  const i64 g = std::gcd(num, den);
  return g == 0 ? *this : Fraction{num / g, den / g};
}

namespace {

void check_order(u64 gamma, u64 min) {
  if (gamma < min) throw DomainError("Farey order too small");
  if (gamma > kMaxFareyOrder) throw DomainError("Farey order above 10^4");
}

}  // namespace

std::vector<Fraction> farey_sequence(u64 gamma) {
  check_order(gamma, 1);
  const i64 n = static_cast<i64>(gamma);
  std::vector<Fraction> seq{{0, 1}};
  Fraction prev{0, 1};
  Fraction cur{1, n};
  while (cur.num <= cur.den) {
    seq.push_back(cur);
    if (cur.num == cur.den) break;
    const i64 m = (n + prev.den) / cur.den;
    const Fraction next{m * cur.num - prev.num, m * cur.den - prev.den};
    prev = cur;
    cur = next;
  }
  return seq;
}

std::vector<FareyArc> dissection(u64 gamma) {
  check_order(gamma, 2);
  const auto seq = farey_sequence(gamma);
  const std::size_t n = seq.size();  // seq[n-1] is 1/1, identified with 0/1
  std::vector<FareyArc> arcs;
  arcs.reserve(n - 1);
  // Left neighbour of 0/1 across the wrap is (gamma-1)/gamma - 1 = -1/gamma.
  const Fraction wrap_left{-1, static_cast<i64>(gamma)};
  arcs.push_back({seq[0], mediant(wrap_left, seq[0]), mediant(seq[0], seq[1])});
  for (std::size_t i = 1; i + 1 < n; ++i) arcs.push_back({seq[i], mediant(seq[i - 1], seq[i]), mediant(seq[i], seq[i + 1])});
  return arcs;
}

bool arc_contains_inner(const FareyArc& arc, u64 gamma) {
  const i64 a = arc.center.num, q = arc.center.den, g = static_cast<i64>(gamma);
  const Fraction lo{2 * g * a - 1, 2 * q * g};
  const Fraction hi{2 * g * a + 1, 2 * q * g};
  return arc.left <= lo && hi <= arc.right;
}

bool arc_within_outer(const FareyArc& arc, u64 gamma) {
  const i64 a = arc.center.num, q = arc.center.den, g = static_cast<i64>(gamma);
  const Fraction lo{g * a - 1, q * g};
  const Fraction hi{g * a + 1, q * g};
  return lo <= arc.left && arc.right <= hi;
}

bool tiles_period(const std::vector<FareyArc>& arcs) {
  if (arcs.empty()) return false;
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    if (!(arcs[i].left < arcs[i].center && arcs[i].center < arcs[i].right)) return false;
    if (i > 0 && !(arcs[i - 1].right == arcs[i].left)) return false;
  }
  const Fraction& l = arcs.front().left;
  const Fraction& r = arcs.back().right;
  // r - l == 1  <=>  r.num*l.den - l.num*r.den == l.den*r.den
  return static_cast<i128>(r.num) * l.den - static_cast<i128>(l.num) * r.den == static_cast<i128>(l.den) * r.den;
}

ContainmentReport verify_containment(u64 gamma) {
  const auto arcs = dissection(gamma);
  ContainmentReport rep{gamma, arcs.size(), tiles_period(arcs), {}};
  for (const auto& arc : arcs)
    if (!arc_contains_inner(arc, gamma) || !arc_within_outer(arc, gamma)) rep.violations.push_back(arc.center);
  return rep;
}

}  // namespace apvar
