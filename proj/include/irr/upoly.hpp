#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "irr/mpoly.hpp"

namespace irr {

/// Dense univariate polynomial over Q, coefficients low to high, no trailing zeros.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<Rational> coeffs);
  QPoly(long c);  // NOLINT
  static QPoly from_mpoly(const MPoly& p, Var v);
  [[nodiscard]] MPoly to_mpoly(Var v) const;

  [[nodiscard]] int degree() const { return static_cast<int>(c_.size()) - 1; }
  [[nodiscard]] bool is_zero() const { return c_.empty(); }
  [[nodiscard]] const std::vector<Rational>& coeffs() const { return c_; }
  [[nodiscard]] Rational operator[](std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
  [[nodiscard]] Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }
  [[nodiscard]] Rational evaluate(const Rational& t) const;

  friend QPoly operator+(const QPoly& a, const QPoly& b);
  friend QPoly operator-(const QPoly& a, const QPoly& b);
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  friend QPoly operator*(const Rational& c, const QPoly& a);
  friend bool operator==(const QPoly& a, const QPoly& b) { return a.c_ == b.c_; }

  /// Euclidean division a = q*b + r.
  static std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b);
  static QPoly gcd(QPoly a, QPoly b);  // monic

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Lagrange interpolant of degree < n through the points (xs[k], ys[k]).
QPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);

/// Rational function a/b with deg a <= num_bound, deg b <= den_bound agreeing with
/// the samples, via the extended Euclidean algorithm (Cauchy interpolation).
/// The denominator is monic. Returns nullopt when no such function fits.
std::optional<std::pair<QPoly, QPoly>> rational_reconstruction(const std::vector<Rational>& xs,
                                                                const std::vector<Rational>& ys,
                                                                int num_bound, int den_bound);

}  // namespace irr
