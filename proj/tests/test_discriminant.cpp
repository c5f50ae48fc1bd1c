#include "doctest.h"
#include "irr/discriminant.hpp"
#include "irr/errors.hpp"
#include "irr/polyalg.hpp"

using namespace irr;

namespace {
const MPoly X = var(Var::x);
const MPoly Y = var(Var::y);
const MPoly S = var(Var::s);
const MPoly T = var(Var::t);
}  // namespace

TEST_CASE("jacobian determinants") {
  CHECK(jacobian(X, Y) == MPoly(1));
  CHECK(jacobian(X, Y + X * Y * Y) == 1 + 2 * X * Y);
  MPoly h = X * X + Y.pow(3);
  CHECK(dependence_test(jacobian(h, h)));
  CHECK(dependence_test(jacobian(X * X, X.pow(3))));
  CHECK_FALSE(dependence_test(jacobian(X, Y + X * Y * Y)));
}

TEST_CASE("fiber characteristic polynomials") {
  MPoly g = Y + X * Y * Y;
  CHECK(fiber_charpoly(X, g, jacobian(X, g), 1) == S + Rational(1, 4));
  CHECK(fiber_charpoly(X, Y, jacobian(X, Y), 17) == MPoly(1));
  CHECK(fiber_charpoly(X, X * Y, jacobian(X, X * Y), 1) == MPoly(1));
}

TEST_CASE("pushforward of the critical curve of y + x y^2") {
  MPoly g = Y + X * Y * Y;
  auto pf = pushforward_polynomial(X, g, jacobian(X, g));
  CHECK(normalize(pf.R) == 4 * S * T + 1);
  CHECK(pf.validation_samples.size() == 3);
  CHECK(delta1_finite_germ(pf.R, Place::at(0)) == 1);
  CHECK(delta1_finite_germ(pf.R, Place::at(1)) == 0);
  auto prof = profile_finite(pf.R);
  REQUIRE(prof.size() == 1);
  CHECK(prof[0].place == Place::at(0));
  CHECK(prof[0].ir == 1);
}

TEST_CASE("empty critical locus gives the unit pushforward") {
  auto pf = pushforward_polynomial(X, Y, jacobian(X, Y));
  CHECK(pf.R == MPoly(1));
  CHECK(profile_finite(pf.R).empty());
  CHECK(delta1_finite_germ(MPoly(1), Place::at(5)) == 0);
}

TEST_CASE("two finite places") {
  MPoly g = Y + X * (X - 1) * Y * Y;
  auto pf = pushforward_polynomial(X, g, jacobian(X, g));
  MPoly lc = leading_t_coefficient(pf.R);
  CHECK(normalize(lc) == S * S - S);
  auto prof = profile_finite(pf.R);
  REQUIRE(prof.size() == 2);
  CHECK(prof[0].place == Place::at(0));
  CHECK(prof[1].place == Place::at(1));
  CHECK(prof[0].ir == 1);
  CHECK(prof[1].ir == 1);
}

TEST_CASE("irrational places come out as minimal polynomials") {
  MPoly g = Y + (X * X - 2) * Y * Y;
  auto pf = pushforward_polynomial(X, g, jacobian(X, g));
  auto prof = profile_finite(pf.R);
  REQUIRE(prof.size() == 1);
  CHECK(prof[0].place.to_string() == "s^2-2");
  CHECK(prof[0].ir == 1);
}
