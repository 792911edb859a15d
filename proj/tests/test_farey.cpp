#include <doctest.h>

#include <boost/multiprecision/cpp_int.hpp>

#include "apvar/arith.hpp"
#include "apvar/farey.hpp"
#include "oracles.hpp"

using namespace apvar;
using boost::multiprecision::cpp_rational;

namespace {

bool same(const Fraction& f, i64 n, i64 d) { return f.num == n && f.den == d; }

cpp_rational as_rational(const Fraction& f) { return cpp_rational(f.num, f.den); }

const FareyArc& arc_at(const std::vector<FareyArc>& arcs, i64 n, i64 d) {
  for (const auto& a : arcs)
    if (same(a.center, n, d)) return a;
  FAIL("center not found");
  return arcs.front();
}

}  // namespace

TEST_CASE("fractions") {
  CHECK(Fraction{2, 4} == Fraction{1, 2});
  CHECK(Fraction{1, 3} < Fraction{3, 8});
  CHECK(Fraction{-1, 5} < Fraction{0, 1});
  const Fraction r = Fraction{-6, 4}.reduced();
  CHECK(same(r, -3, 2));
  CHECK(same(mediant({1, 3}, {1, 2}), 2, 5));
}

TEST_CASE("Farey sequences") {
  const auto f1 = farey_sequence(1);
  REQUIRE(f1.size() == 2);
  CHECK(same(f1[0], 0, 1));
  CHECK(same(f1[1], 1, 1));

  const auto f5 = farey_sequence(5);
  const std::vector<std::pair<i64, i64>> expect{{0, 1}, {1, 5}, {1, 4}, {1, 3}, {2, 5}, {1, 2},
                                                {3, 5}, {2, 3}, {3, 4}, {4, 5}, {1, 1}};
  REQUIRE(f5.size() == expect.size());
  for (std::size_t i = 0; i < expect.size(); ++i) CHECK(same(f5[i], expect[i].first, expect[i].second));

  for (u64 g = 1; g <= 60; ++g) {
    const auto a = farey_sequence(g);
    const auto b = oracle::farey_by_enumeration(g);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) REQUIRE(same(a[i], b[i].num, b[i].den));
  }
  CHECK(farey_sequence(100).size() == 3045);
  CHECK_THROWS_AS(farey_sequence(0), DomainError);
  CHECK_THROWS_AS(farey_sequence(kMaxFareyOrder + 1), DomainError);
}

TEST_CASE("dissection arcs") {
  const auto d5 = dissection(5);
  CHECK(d5.size() == 10);
  const FareyArc& a = arc_at(d5, 2, 5);
  CHECK(a.left == Fraction{3, 8});
  CHECK(a.right == Fraction{3, 7});

  const auto d2 = dissection(2);
  const FareyArc& h = arc_at(d2, 1, 2);
  CHECK(h.left == Fraction{1, 3});
  CHECK(h.right == Fraction{2, 3});
  const FareyArc& z = arc_at(d2, 0, 1);
  CHECK(z.left == Fraction{-1, 3});
  CHECK(z.right == Fraction{1, 3});

  for (const auto& arc : dissection(40)) {
    CHECK(arc.left < arc.center);
    CHECK(arc.center < arc.right);
  }
  CHECK_THROWS_AS(dissection(1), DomainError);
}

TEST_CASE("containment and tiling") {
  const auto d5 = dissection(5);
  CHECK(arc_contains_inner(arc_at(d5, 2, 5), 5));
  CHECK(arc_within_outer(arc_at(d5, 2, 5), 5));
  const auto d2 = dissection(2);
  CHECK(arc_contains_inner(arc_at(d2, 1, 2), 2));
  CHECK(arc_within_outer(arc_at(d2, 1, 2), 2));

  // An arc too narrow or too wide must be caught.
  CHECK_FALSE(arc_contains_inner({{2, 5}, {39, 100}, {3, 7}}, 5));
  CHECK_FALSE(arc_within_outer({{2, 5}, {1, 3}, {3, 7}}, 5));

  for (u64 g = 2; g <= 120; ++g) {
    const ContainmentReport rep = verify_containment(g);
    REQUIRE(rep.ok());
    CHECK(rep.arcs == farey_sequence(g).size() - 1);
  }

  auto broken = dissection(7);
  broken[3].right = Fraction{broken[3].right.num * 2 + 1, broken[3].right.den * 2};
  CHECK_FALSE(tiles_period(broken));
}

TEST_CASE("arc lengths sum to one in rational arithmetic") {
  for (u64 g : {2ull, 3ull, 10ull, 57ull, 200ull}) {
    cpp_rational total = 0;
    for (const auto& arc : dissection(g)) total += as_rational(arc.right) - as_rational(arc.left);
    CHECK(total == 1);
  }
}

TEST_CASE("sequence length matches the totient sum") {
  u64 count = 1;
  for (u64 g = 1; g <= 1000; ++g) {
    count += euler_phi(g);
    if (g % 97 == 0 || g == 1000) CHECK(farey_sequence(g).size() == count);
  }
}
