#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace irr {

using Integer = mpz_class;
using Rational = mpq_class;

/// Symbols available to polynomials. The declaration order is the lex order
/// used for canonical forms: s > t > x > y > tau > u > v > w.
enum class Var : std::uint8_t { s, t, x, y, tau, u, v, w };

inline constexpr int kNumVars = 8;

std::string var_name(Var v);

using Exponents = std::array<std::uint16_t, kNumVars>;

/// Exact sparse multivariate polynomial with rational coefficients.
///
/// Terms are kept in lex-descending order of exponent vectors, so the first
/// term is the lex-leading term. Zero coefficients are never stored.
class MPoly {
 public:
  using TermMap = std::map<Exponents, Rational, std::greater<>>;

  MPoly() = default;
  MPoly(long c);  // NOLINT: constants convert implicitly
  MPoly(const Rational& c);  // NOLINT

  static MPoly variable(Var v);
  static MPoly monomial(const Exponents& e, const Rational& c);
  static MPoly term(const Rational& c, std::initializer_list<std::pair<Var, int>> powers);

  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] bool is_constant() const;
  [[nodiscard]] Rational constant_value() const;  // requires is_constant()
  [[nodiscard]] std::size_t num_terms() const { return terms_.size(); }
  [[nodiscard]] const TermMap& terms() const { return terms_; }

  [[nodiscard]] int degree(Var v) const;  // -1 for the zero polynomial
  [[nodiscard]] int min_degree(Var v) const;
  [[nodiscard]] int total_degree() const;
  [[nodiscard]] bool involves(Var v) const { return degree(v) > 0; }
  [[nodiscard]] std::vector<Var> variables() const;

  /// Lex-leading coefficient (first stored term).
  [[nodiscard]] const Rational& leading_rational() const;
  [[nodiscard]] const Exponents& leading_exponents() const;

  /// Coefficients as polynomials in the other variables: result[k] multiplies v^k.
  [[nodiscard]] std::vector<MPoly> coefficients(Var v) const;
  static MPoly from_coefficients(Var v, const std::vector<MPoly>& coeffs);
  [[nodiscard]] MPoly coefficient(Var v, int k) const;
  [[nodiscard]] MPoly leading_coefficient(Var v) const;

  [[nodiscard]] MPoly derivative(Var v) const;
  [[nodiscard]] MPoly evaluate(Var v, const Rational& value) const;
  [[nodiscard]] MPoly substitute(Var v, const MPoly& q) const;
  /// Simultaneous substitution of several variables.
  [[nodiscard]] MPoly substitute(const std::vector<std::pair<Var, MPoly>>& subs) const;
  [[nodiscard]] MPoly rename(Var from, Var to) const;
  [[nodiscard]] Rational evaluate_all(const std::array<Rational, kNumVars>& point) const;

  [[nodiscard]] MPoly pow(unsigned n) const;
  [[nodiscard]] std::string to_string() const;

  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const MPoly& o);
  MPoly& operator*=(const Rational& c);

  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator*(MPoly a, const Rational& c) { return a *= c; }
  friend MPoly operator*(const Rational& c, MPoly a) { return a *= c; }
  friend MPoly operator*(MPoly a, long c) { return a *= Rational(c); }
  friend MPoly operator*(long c, MPoly a) { return a *= Rational(c); }
  friend MPoly operator-(const MPoly& a);
  friend bool operator==(const MPoly& a, const MPoly& b) { return a.terms_ == b.terms_; }

 private:
  void add_term(const Exponents& e, const Rational& c);

  TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const MPoly& p);

inline MPoly var(Var v) { return MPoly::variable(v); }

}  // namespace irr
