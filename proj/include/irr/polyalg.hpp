#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "irr/mpoly.hpp"

namespace irr {

/// Canonical representative of p up to a rational unit: integer coefficients
/// with gcd 1 and a positive lex-leading coefficient. Zero stays zero.
MPoly normalize(const MPoly& p);

/// The rational unit u with p = u * normalize(p).
Rational normalization_unit(const MPoly& p);

/// Division by a single polynomial in lex order: p = q*quotient + remainder.
/// The remainder is zero exactly when q divides p.
struct DivisionResult {
  MPoly quotient;
  MPoly remainder;
};
DivisionResult divide(const MPoly& p, const MPoly& q);

/// Exact quotient; throws InvalidArgument when q does not divide p.
MPoly divide_exact(const MPoly& p, const MPoly& q);

bool divides(const MPoly& q, const MPoly& p);

/// Pseudo-remainder of p by q as polynomials in v.
MPoly pseudo_remainder(const MPoly& p, const MPoly& q, Var v);

/// gcd with respect to all variables, normalized; gcd(0, 0) = 0.
/// `main_var` selects the variable driving the remainder sequence.
MPoly gcd_poly(const MPoly& p, const MPoly& q, std::optional<Var> main_var = std::nullopt);
MPoly gcd_all(const std::vector<MPoly>& ps);

/// gcd of the coefficients of p viewed as a polynomial in v.
MPoly content(const MPoly& p, Var v);
MPoly primitive_part(const MPoly& p, Var v);

/// Sylvester resultant eliminating v, via the subresultant remainder sequence.
MPoly resultant(const MPoly& p, const MPoly& q, Var v);

/// Discriminant-like helper: Res_v(p, dp/dv).
MPoly resultant_with_derivative(const MPoly& p, Var v);

struct SquarefreeFactor {
  MPoly base;
  int multiplicity;
};

struct SquarefreeDecomposition {
  Rational unit;
  std::vector<SquarefreeFactor> factors;  // sorted by multiplicity

  [[nodiscard]] MPoly expand() const;
};

/// Yun's algorithm in `v`; content with respect to v is decomposed recursively.
SquarefreeDecomposition squarefree(const MPoly& p, Var v);

/// Squarefree part (product of the distinct factors), normalized.
MPoly squarefree_part(const MPoly& p, Var v);

/// Rational roots of a univariate polynomial in v, each with its multiplicity.
std::vector<std::pair<Rational, int>> rational_roots(const MPoly& p, Var v);

/// Polynomial with exactly the given roots (simple), monic.
MPoly linear_factor(Var v, const Rational& root);

}  // namespace irr
