#include "irr/place.hpp"

#include "irr/errors.hpp"
#include "irr/parser.hpp"
#include "irr/polyalg.hpp"

namespace irr {

Place Place::at(const Rational& c) {
  Place p;
  p.kind = Kind::rational;
  p.value = c;
  return p;
}

Place Place::algebraic(const MPoly& m) {
  if (m.is_constant()) throw InvalidArgument("place polynomial must be nonconstant");
  for (Var v : m.variables()) {
    if (v != Var::s) throw InvalidArgument("place polynomial must be in s");
  }
  MPoly monic = m * (Rational(1) / m.leading_rational());
  if (monic.degree(Var::s) == 1) return at(-monic.coefficient(Var::s, 0).constant_value());
  if (!gcd_poly(monic, monic.derivative(Var::s)).is_constant()) {
    throw InvalidArgument("place polynomial must be squarefree");
  }
  Place p;
  p.kind = Kind::algebraic;
  p.minpoly = monic;
  return p;
}

Place Place::infinity() { return {}; }

Place Place::parse(std::string_view text) {
  std::string_view trimmed = text;
  while (!trimmed.empty() && trimmed.front() == ' ') trimmed.remove_prefix(1);
  while (!trimmed.empty() && trimmed.back() == ' ') trimmed.remove_suffix(1);
  if (trimmed == "inf" || trimmed == "infinity" || trimmed == "oo") return infinity();
  MPoly p = parse_poly(trimmed, {Var::s});
  if (p.is_constant()) return at(p.constant_value());
  return algebraic(p);
}

std::string Place::to_string() const {
  switch (kind) {
    case Kind::rational: return value.get_str();
    case Kind::algebraic: return minpoly.to_string();
    case Kind::infinity: return "inf";
  }
  return "?";
}

int Place::orbit_size() const { return kind == Kind::algebraic ? minpoly.degree(Var::s) : 1; }

bool operator==(const Place& a, const Place& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case Place::Kind::rational: return a.value == b.value;
    case Place::Kind::algebraic: return a.minpoly == b.minpoly;
    case Place::Kind::infinity: return true;
  }
  return false;
}

int order_at_place(const MPoly& a, const Place& place) {
  if (a.is_zero()) throw InvalidArgument("order of the zero polynomial");
  switch (place.kind) {
    case Place::Kind::infinity:
      throw InvalidArgument("order at infinity is computed by the caller");
    case Place::Kind::rational: {
      MPoly lin = var(Var::s) - MPoly(place.value);
      MPoly cur = a;
      int k = 0;
      while (cur.degree(Var::s) > 0 && cur.evaluate(Var::s, place.value).is_zero()) {
        cur = divide_exact(cur, lin);
        ++k;
      }
      return k;
    }
    case Place::Kind::algebraic: {
      if (a.degree(Var::s) <= 0) return 0;
      auto sq = squarefree(a, Var::s);
      for (const auto& f : sq.factors) {
        if (divides(place.minpoly, f.base)) return f.multiplicity;
      }
      return 0;
    }
  }
  return 0;
}

}  // namespace irr
