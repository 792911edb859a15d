#include <doctest.h>

#include <cmath>

#include "apvar/common.hpp"
#include "apvar/laurent.hpp"

using namespace apvar;

TEST_CASE("truncation bookkeeping") {
  const LaurentSeries a(2, {1, 2, 3, 4, 5});  // t^-2 .. t^2
  CHECK(a.pole_order() == 2);
  CHECK(a.order_cap() == 2);
  CHECK(a.coeff(-3) == 0);
  CHECK(a.coeff(-2) == 1);
  CHECK(a.residue() == 2);
  CHECK_THROWS_AS(a.coeff(3), DomainError);

  const LaurentSeries b = LaurentSeries::taylor({1, 1, 1});  // through t^2
  const LaurentSeries p = a * b;
  CHECK(p.pole_order() == 2);
  CHECK(p.order_cap() == 0);  // min(2 - 0, 2 - 2)
  CHECK(p.coeff(-2) == 1);
  CHECK(p.coeff(-1) == 3);
  CHECK(p.coeff(0) == 6);

  const LaurentSeries s = a + b;
  CHECK(s.pole_order() == 2);
  CHECK(s.order_cap() == 2);
  CHECK(s.coeff(0) == 4);
  CHECK((a - a).coeff(1) == 0);
}

TEST_CASE("reciprocal and powers") {
  const LaurentSeries u = LaurentSeries::taylor({2, -1, 0.5, 0.25, -3});
  const LaurentSeries one = u * u.reciprocal();
  CHECK(one.coeff(0) == doctest::Approx(1));
  for (int e = 1; e <= one.order_cap(); ++e) CHECK(one.coeff(e) == doctest::Approx(0).epsilon(1e-14));
  CHECK_THROWS_AS(LaurentSeries(1, {1, 2}).reciprocal(), DomainError);
  CHECK_THROWS_AS(LaurentSeries::taylor({0, 1}).reciprocal(), DomainError);

  const LaurentSeries z(1, {1, 0.5, -0.25, 0.125});
  const LaurentSeries cube = z * z * z;
  const LaurentSeries p = z.pow(3);
  CHECK(p.pole_order() == 3);
  for (int e = -3; e <= p.order_cap(); ++e) CHECK(p.coeff(e) == doctest::Approx(cube.coeff(e)));
  CHECK(z.pow(0).coeff(0) == 1);
}

TEST_CASE("evaluation and truncation") {
  const LaurentSeries g = LaurentSeries::taylor({1, 1, 0.5, 1.0 / 6, 1.0 / 24, 1.0 / 120});
  CHECK(g.evaluate(0.1) == doctest::Approx(std::exp(0.1)).epsilon(1e-9));
  const LaurentSeries h(1, {1, 0});
  CHECK(h.evaluate(0.5) == doctest::Approx(2));
  CHECK(g.truncated(2).order_cap() == 2);
  CHECK_THROWS_AS(g.truncated(9), DomainError);
}
