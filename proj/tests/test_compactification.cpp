#include "doctest.h"
#include "irr/compactification.hpp"
#include "irr/discriminant.hpp"
#include "irr/errors.hpp"
#include "irr/polyalg.hpp"

using namespace irr;

namespace {
const MPoly X = var(Var::x);
const MPoly Y = var(Var::y);
const MPoly S = var(Var::s);
const MPoly T = var(Var::t);
const MPoly TAU = var(Var::tau);

InfinityValue infinity_of(const MPoly& f, const MPoly& g) {
  MPoly jac = jacobian(f, g);
  auto pf = pushforward_polynomial(f, g, jac);
  return irregularity_at_infinity(pf.R, resolve(f, g));
}
}  // namespace

TEST_CASE("germ at infinity of image curves") {
  CHECK(germ_at_infinity(4 * S * T + 1) == 0);
  CHECK(germ_at_infinity(S.pow(3) - T * T) == 3);
  CHECK(germ_at_infinity(S - T) == 1);
}

TEST_CASE("image cycles of parametrized boundary curves") {
  CHECK(*image_cycle(TAU, MPoly(1), TAU * TAU, MPoly(1)) == normalize(T - S * S));
  CHECK(*image_cycle(TAU * TAU, MPoly(1), TAU.pow(4), MPoly(1)) == normalize((T - S * S).pow(2)));
  auto vertical = image_cycle(MPoly(3), MPoly(1), TAU, MPoly(1));
  REQUIRE(vertical.has_value());
  CHECK(t_primitive_part(*vertical) == MPoly(1));
  CHECK_FALSE(image_cycle(MPoly(3), MPoly(1), MPoly(2), MPoly(1)).has_value());
}

TEST_CASE("coordinate pair has no boundary contribution") {
  auto res = resolve(X, Y);
  for (const auto& z : res.components) CHECK_FALSE(z.contributes);
  CHECK(infinity_of(X, Y).ir == 0);
}

TEST_CASE("annulus fibres give zero at infinity") {
  CHECK(infinity_of(X, X * Y).ir == 0);
  CHECK(infinity_of(X, Y + X * Y * Y).ir == 0);
}

TEST_CASE("criticality orders are nonnegative on every component") {
  for (const auto& [f, g] : std::vector<std::pair<MPoly, MPoly>>{
           {X, Y + X * Y * Y}, {X * X + Y, X * Y}, {X, X * X * Y + Y}, {X * Y, X * X * Y * Y + X}}) {
    auto res = resolve(f, g);
    for (const auto& z : res.components) CHECK(z.crit_mult >= 0);
  }
}
