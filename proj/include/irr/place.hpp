#pragma once

#include <string>
#include <string_view>

#include "irr/mpoly.hpp"

namespace irr {

/// A point of the projective line given exactly: a rational number, a Galois
/// orbit of algebraic numbers described by a monic squarefree polynomial in s,
/// or the point at infinity.
struct Place {
  enum class Kind { rational, algebraic, infinity };

  Kind kind = Kind::infinity;
  Rational value;  // for rational places
  MPoly minpoly;   // for algebraic places, monic squarefree in s

  static Place at(const Rational& c);
  static Place algebraic(const MPoly& m);  // degree 1 collapses to a rational place
  static Place infinity();

  /// "p/q", "inf" or a polynomial in s.
  static Place parse(std::string_view text);
  [[nodiscard]] std::string to_string() const;
  /// Number of conjugate points in the orbit (1 for rational and infinity).
  [[nodiscard]] int orbit_size() const;
  [[nodiscard]] bool is_infinity() const { return kind == Kind::infinity; }

  friend bool operator==(const Place& a, const Place& b);
};

/// Vanishing order of a nonzero polynomial in s at a finite place. For an
/// algebraic place this is the common order at each conjugate root.
int order_at_place(const MPoly& a, const Place& place);

}  // namespace irr
