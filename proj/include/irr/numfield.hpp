#pragma once

#include <string>
#include <vector>

#include "irr/errors.hpp"
#include "irr/mpoly.hpp"

namespace irr {

/// Raised when a computation over Q[w]/m(w) meets a zero divisor. The
/// modulus factors as `factor` times its cofactor, and the caller redoes the
/// work over each factor separately.
struct Split : Error {
  Split(MPoly modulus_in, MPoly factor_in)
      : Error("zero divisor in the coefficient ring"), modulus(std::move(modulus_in)), factor(std::move(factor_in)) {}
  MPoly modulus;
  MPoly factor;  // monic, proper divisor of modulus
};

/// The coefficient ring Q[w]/m(w) for a monic squarefree m, treated as a
/// field until a zero divisor shows up. m = w encodes Q itself.
class NumberField {
 public:
  NumberField();  // Q
  explicit NumberField(const MPoly& modulus);

  [[nodiscard]] const MPoly& modulus() const { return m_; }
  [[nodiscard]] int degree() const { return m_.degree(Var::w); }
  [[nodiscard]] bool is_rational() const { return degree() == 1; }
  [[nodiscard]] std::string to_string() const;

  /// Remainder modulo m in the variable w; other variables are untouched.
  [[nodiscard]] MPoly reduce(const MPoly& p) const;
  /// Zero test for an element (a polynomial in w only). Throws Split.
  [[nodiscard]] bool is_zero(const MPoly& a) const;
  /// Inverse of a nonzero element. Throws Split.
  [[nodiscard]] MPoly inverse(const MPoly& a) const;
  /// The two fields obtained by splitting along a factor of m.
  [[nodiscard]] std::vector<NumberField> split(const MPoly& factor) const;

 private:
  MPoly m_;
};

/// Univariate polynomial over a NumberField, coefficients low to high.
/// Each coefficient is a reduced polynomial in w.
using KPoly = std::vector<MPoly>;

KPoly kpoly_from(const NumberField& k, const MPoly& p, Var v);
MPoly kpoly_to_mpoly(const KPoly& p, Var v);
/// Drops vanishing leading coefficients (with zero tests that may split).
void kpoly_trim(const NumberField& k, KPoly& p);
int kpoly_degree(const NumberField& k, KPoly p);
KPoly kpoly_derivative(const KPoly& p);
/// Euclidean division over the field; both results are trimmed.
std::pair<KPoly, KPoly> kpoly_divmod(const NumberField& k, const KPoly& a, const KPoly& b);
/// Monic gcd; gcd(0, 0) is the zero polynomial.
KPoly kpoly_gcd(const NumberField& k, KPoly a, KPoly b);
KPoly kpoly_monic(const NumberField& k, const KPoly& p);

/// The field generated over K by the roots of a squarefree monic h in K[v]
/// (degree at least 2), presented by a primitive element. `old_w` expresses
/// the generator of K in the new field and `root` expresses a root of h.
struct Extension {
  NumberField field;
  MPoly old_w;
  MPoly root;
};
Extension adjoin_roots(const NumberField& k, const KPoly& h);

/// Rewrites a polynomial over K as one over the extension field.
MPoly lift_to(const Extension& ext, const MPoly& p);

}  // namespace irr
