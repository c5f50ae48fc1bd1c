#include "doctest.h"

#include "irr/dependent.hpp"
#include "irr/errors.hpp"
#include "irr/oracle.hpp"
#include "irr/parser.hpp"
#include "irr/polyalg.hpp"

using namespace irr;

namespace {

MPoly P(const char* text) { return parse_poly(text); }
MPoly ST(const char* text) { return parse_poly(text, {Var::s, Var::t}); }

int oracle_at(const char* f, const char* g, const Place& place) {
  auto values = oracle_irregularity(P(f), P(g), {place});
  REQUIRE(values.size() == 1);
  CHECK(values[0].stable);
  return values[0].ir;
}

}  // namespace

TEST_CASE("image curve of a diagonal pair is the diagonal") {
  auto image = image_curve(P("x"), P("x"));
  CHECK(normalize(image.W) == normalize(ST("s-t")));
}

TEST_CASE("image curve of (x^2, x^3) is the cusp") {
  auto image = image_curve(P("x^2"), P("x^3"));
  CHECK(normalize(image.W) == normalize(ST("s^3-t^2")));
}

TEST_CASE("image curve with constant g is a horizontal line") {
  auto image = image_curve(P("x+y^2"), P("5"));
  CHECK(normalize(image.W) == normalize(ST("t-5")));
}

TEST_CASE("generic fibre Euler characteristics") {
  CHECK(chi_generic_fiber(P("x"), P("x")).chi == 1);
  CHECK(chi_generic_fiber(P("x^2"), P("x^3")).chi == 1);
  CHECK(chi_generic_fiber(P("x^2+y^3"), P("x^2+y^3")).chi == -1);
  // fibre of x*y is C^* with chi 0
  CHECK(chi_generic_fiber(P("x*y"), P("x*y")).chi == 0);
}

TEST_CASE("dependent irregularity at infinity") {
  auto f = P("x^2+y^3");
  auto image = image_curve(f, f);
  auto chi = chi_generic_fiber(f, f);
  CHECK(dependent_germ(image.W, Place::infinity()) == 1);
  CHECK(irregularity_dependent(image, chi, Place::infinity()) == 1);
  CHECK(irregularity_dependent(image, chi, Place::at(0)) == 0);
  CHECK(dependent_finite_germs(image.W).empty());
}

TEST_CASE("dependent pair whose image is a parabola") {
  auto image = image_curve(P("x"), P("x^2"));
  CHECK(normalize(image.W) == normalize(ST("t-s^2")));
  CHECK(dependent_finite_germs(image.W).empty());
  CHECK(dependent_germ(image.W, Place::infinity()) == 2);
}

TEST_CASE("oracle on the basic finite-place example") {
  CHECK(oracle_at("x", "y+x*y^2", Place::at(0)) == 1);
  CHECK(oracle_at("x", "y+x*y^2", Place::infinity()) == 0);
  CHECK(oracle_at("x", "y+x*y^2", Place::at(1)) == 0);
}

TEST_CASE("oracle on pairs with no irregularity") {
  CHECK(oracle_at("x", "y", Place::infinity()) == 0);
  CHECK(oracle_at("x", "x*y", Place::infinity()) == 0);
  CHECK(oracle_at("x", "x*y", Place::at(0)) == 0);
}

TEST_CASE("oracle on a dependent pair") {
  CHECK(oracle_at("x^2+y^3", "x^2+y^3", Place::infinity()) == 1);
  CHECK(oracle_at("x^2+y^3", "x^2+y^3", Place::at(0)) == 0);
}

TEST_CASE("fiber data refuses constant g") {
  CHECK_THROWS_AS(fiber_data(P("x"), P("3"), Rational(1000)), IllConditioned);
}

TEST_CASE("oracle separates escaping values that collide at one far level") {
  // at rho near 6.7e6 the cubic escaping value at rho meets the quadratic one at 1000 rho
  CHECK(oracle_at("y+3*y^3-2*x-3*x*y^2-3*x^2", "x", Place::infinity()) == 2);
  CHECK(oracle_at("3*y^2+x^2", "y^2-2*x-3*x^2*y+3*x^3", Place::infinity()) == 8);
}

TEST_CASE("oracle handles critical values beyond double range products") {
  CHECK(oracle_at("-3*y^2+y^3+2*y^4+x*y+2*x*y^2-x^2*y-2*x^3", "-2*x*y+x^2*y", Place::infinity()) == 12);
}

TEST_CASE("oracle tracks growth when branches cross in modulus at both far levels") {
  CHECK(oracle_at("-3*y-3*x^2", "2*y+y^2+x*y+x*y^2-3*x^3", Place::infinity()) == 8);
}

TEST_CASE("oracle at an irrational place") {
  CHECK(oracle_at("x", "y+(x^2-2)*y^2", Place::parse("s^2-2")) == 1);
  CHECK(oracle_at("x", "y+(x^2-2)*y^2", Place::infinity()) == 0);
}
