#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "irr/mpoly.hpp"

namespace irr {

/// Monomial x^a y^b in the two affine variables.
struct Mono2 {
  int a = 0;
  int b = 0;
  friend bool operator==(const Mono2&, const Mono2&) = default;
};

/// Graded reverse lexicographic order on (x,y) with x > y.
struct GrevlexGreater {
  bool operator()(const Mono2& l, const Mono2& r) const {
    int dl = l.a + l.b;
    int dr = r.a + r.b;
    if (dl != dr) return dl > dr;
    return l.a > r.a;
  }
};

/// Dense-ish bivariate polynomial kept sorted by grevlex, leading term first.
using Poly2 = std::map<Mono2, Rational, GrevlexGreater>;

Poly2 to_poly2(const MPoly& p);
MPoly from_poly2(const Poly2& p);

struct GroebnerOptions {
  std::size_t pair_budget = 20000;
};

/// Reduced Groebner basis of an ideal of Q[x,y] under grevlex.
/// Generators are monic and inter-reduced. The unit ideal yields {1}.
class GroebnerBasis {
 public:
  static GroebnerBasis compute(const std::vector<MPoly>& gens, const GroebnerOptions& options = {});

  [[nodiscard]] const std::vector<Poly2>& generators() const { return gens_; }
  [[nodiscard]] std::vector<MPoly> generators_mpoly() const;
  [[nodiscard]] bool is_unit() const;

  /// Full normal form modulo the basis.
  [[nodiscard]] Poly2 normal_form(Poly2 p) const;
  [[nodiscard]] bool contains(const MPoly& p) const { return normal_form(to_poly2(p)).empty(); }

 private:
  std::vector<Poly2> gens_;
};

using RationalMatrix = std::vector<std::vector<Rational>>;

/// Q[x,y]/I for zero-dimensional I: staircase basis and multiplication maps.
class QuotientAlgebra {
 public:
  /// Throws NotZeroDimensional when the staircase is infinite.
  explicit QuotientAlgebra(GroebnerBasis gb);

  [[nodiscard]] std::size_t dim() const { return basis_.size(); }
  [[nodiscard]] const std::vector<Mono2>& basis() const { return basis_; }
  [[nodiscard]] const GroebnerBasis& groebner() const { return gb_; }

  /// Matrix of multiplication by p in the staircase basis; column j holds
  /// the coordinates of p * basis[j].
  [[nodiscard]] RationalMatrix multiplication_matrix(const MPoly& p) const;
  [[nodiscard]] const RationalMatrix& mx() const { return mx_; }
  [[nodiscard]] const RationalMatrix& my() const { return my_; }

 private:
  [[nodiscard]] std::vector<Rational> coordinates(const Poly2& nf) const;

  GroebnerBasis gb_;
  std::vector<Mono2> basis_;
  RationalMatrix mx_;
  RationalMatrix my_;
};

/// Characteristic polynomial det(s*I - M) in the variable s, via Berkowitz.
MPoly characteristic_polynomial(const RationalMatrix& m, Var v = Var::s);

/// Characteristic polynomial of multiplication by p on the algebra: the
/// product of (s - p(P))^mult(P) over the points P of the variety.
MPoly charpoly_of(const QuotientAlgebra& algebra, const MPoly& p);

RationalMatrix matmul(const RationalMatrix& a, const RationalMatrix& b);

}  // namespace irr
