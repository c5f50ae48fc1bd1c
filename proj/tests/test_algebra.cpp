#include <algorithm>
#include <cmath>
#include <random>

#include "doctest.h"
#include "irr/errors.hpp"
#include "irr/numeric_roots.hpp"
#include "irr/polyalg.hpp"

using namespace irr;

namespace {

const MPoly X = var(Var::x);
const MPoly Y = var(Var::y);

MPoly random_poly(std::mt19937_64& rng, int deg) {
  std::uniform_int_distribution<int> coef(-5, 5);
  MPoly p;
  for (int i = 0; i <= deg; ++i) {
    for (int j = 0; i + j <= deg; ++j) {
      int c = coef(rng);
      if (c != 0) p += MPoly::term(c, {{Var::x, i}, {Var::y, j}});
    }
  }
  return p;
}

}  // namespace

TEST_CASE("gcd of difference of squares") {
  CHECK(gcd_poly(X * X - Y * Y, X - Y) == X - Y);
}

TEST_CASE("gcd of univariate polynomials sharing a root") {
  CHECK(gcd_poly(X * X - 4, X.pow(3) - 8) == X - 2);
}

TEST_CASE("resultant against a linear factor") {
  CHECK(resultant(Y * Y - X, Y, Var::y) == -X);
  CHECK(resultant(Y * Y - X, Y - 1, Var::y) == 1 - X);
}

TEST_CASE("resultant with the derivative of a cubic") {
  MPoly f = X * X + Y.pow(3) - 4;
  MPoly expected = 27 * (X * X - 4).pow(2);
  CHECK(resultant(f, 3 * Y * Y, Var::y) == expected);
}

TEST_CASE("resultant swap sign and multiplicativity") {
  std::mt19937_64 rng(7);
  for (int round = 0; round < 8; ++round) {
    MPoly a = random_poly(rng, 3) + Y.pow(3);
    MPoly b = random_poly(rng, 2) + Y * Y;
    MPoly c = random_poly(rng, 2) + Y;
    int da = a.degree(Var::y);
    int db = b.degree(Var::y);
    MPoly rab = resultant(a, b, Var::y);
    MPoly rba = resultant(b, a, Var::y);
    CHECK(rab == ((da * db) % 2 == 0 ? rba : -rba));
    CHECK(resultant(a, b * c, Var::y) == rab * resultant(a, c, Var::y));
  }
}

TEST_CASE("squarefree decomposition reconstructs the input") {
  MPoly p = (X - 1) * (Y + X).pow(2) * (X * Y - 3).pow(3) * 5;
  auto sq = squarefree(p, Var::y);
  CHECK(sq.expand() == p);
  REQUIRE(sq.factors.size() == 3);
  CHECK(sq.factors[0].multiplicity == 1);
  CHECK(sq.factors[1].multiplicity == 2);
  CHECK(sq.factors[2].multiplicity == 3);

  std::mt19937_64 rng(11);
  for (int round = 0; round < 6; ++round) {
    MPoly a = random_poly(rng, 2);
    MPoly b = random_poly(rng, 1);
    if (a.is_constant() || b.is_constant()) continue;
    MPoly q = a * b * b;
    CHECK(squarefree(q, Var::x).expand() == q);
  }
}

TEST_CASE("squarefree part of a power") {
  CHECK(squarefree_part((X * X - 2).pow(3) * (X + 1), Var::x) == (X * X - 2) * (X + 1));
}

TEST_CASE("rational roots with multiplicity") {
  MPoly p = (2 * X - 1).pow(2) * (X + 3) * (X * X + 1) * (X * X - 2);
  auto roots = rational_roots(p, Var::x);
  REQUIRE(roots.size() == 2);
  CHECK(roots[0].first == -3);
  CHECK(roots[0].second == 1);
  CHECK(roots[1].first == Rational(1, 2));
  CHECK(roots[1].second == 2);
  auto zero_root = rational_roots(X * (X - 1), Var::x);
  REQUIRE(zero_root.size() == 2);
  CHECK(zero_root[0].first == 0);
}

TEST_CASE("exact division and pseudo remainder") {
  MPoly p = (X + Y) * (X - 2 * Y + 1);
  CHECK(divide_exact(p, X + Y) == X - 2 * Y + 1);
  CHECK_THROWS_AS(divide_exact(p, X + 2), InvalidArgument);
  CHECK(pseudo_remainder(X * X + 1, 2 * X + 1, Var::x) == 5);
}

TEST_CASE("long double roots across many orders of magnitude") {
  // roots 1, 1e20 and 1e40: coefficients far beyond double range when squared
  std::vector<ComplexLD> c{-1e60L, 1e60L + 1e40L + 1e20L, -(1e40L + 1e20L + 1.0L), 1.0L};
  auto roots = complex_roots_ld(c);
  REQUIRE(roots.size() == 3);
  std::vector<long double> mags;
  for (const auto& z : roots) mags.push_back(std::abs(z));
  std::sort(mags.begin(), mags.end());
  CHECK(std::abs(mags[0] - 1.0L) < 1e-9L);
  CHECK(std::abs(mags[1] / 1e20L - 1.0L) < 1e-9L);
  CHECK(std::abs(mags[2] / 1e40L - 1.0L) < 1e-9L);
}
