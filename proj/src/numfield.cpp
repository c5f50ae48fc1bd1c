#include "irr/numfield.hpp"

#include "irr/polyalg.hpp"
#include "irr/upoly.hpp"

namespace irr {

namespace {

MPoly monic_in(const MPoly& p, Var v) { return p * (Rational(1) / p.leading_coefficient(v).constant_value()); }

}  // namespace

NumberField::NumberField() : m_(var(Var::w)) {}

NumberField::NumberField(const MPoly& modulus) : m_(monic_in(modulus, Var::w)) {
  for (Var v : m_.variables()) {
    if (v != Var::w) throw InvalidArgument("field modulus must be a polynomial in w");
  }
  if (m_.degree(Var::w) < 1) throw InvalidArgument("field modulus must be nonconstant");
}

std::string NumberField::to_string() const { return is_rational() ? "Q" : "Q[w]/(" + m_.to_string() + ")"; }

MPoly NumberField::reduce(const MPoly& p) const {
  if (p.degree(Var::w) < degree()) return p;
  if (is_rational()) return p.evaluate(Var::w, -m_.coefficient(Var::w, 0).constant_value());
  return divide(p, m_).remainder;
}

bool NumberField::is_zero(const MPoly& a_in) const {
  MPoly a = reduce(a_in);
  if (a.is_zero()) return true;
  if (a.is_constant()) return false;
  MPoly g = gcd_poly(a, m_);
  if (g.is_constant()) return false;
  throw Split(m_, monic_in(g, Var::w));
}

MPoly NumberField::inverse(const MPoly& a_in) const {
  MPoly a = reduce(a_in);
  if (a.is_zero()) throw InvalidArgument("inverse of zero");
  if (a.is_constant()) return MPoly(Rational(1) / a.constant_value());
  // extended Euclid in Q[w]
  QPoly r0 = QPoly::from_mpoly(m_, Var::w);
  QPoly r1 = QPoly::from_mpoly(a, Var::w);
  QPoly s0;
  QPoly s1(1);
  while (r1.degree() > 0) {
    auto [q, r] = QPoly::divmod(r0, r1);
    QPoly s = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r1.is_zero()) {
    MPoly g = r0.to_mpoly(Var::w);
    throw Split(m_, monic_in(g, Var::w));
  }
  return reduce((Rational(1) / r1.leading()) * s1.to_mpoly(Var::w));
}

std::vector<NumberField> NumberField::split(const MPoly& factor) const {
  MPoly f = monic_in(factor, Var::w);
  MPoly co = divide_exact(m_, f);
  return {NumberField(f), NumberField(co)};
}

KPoly kpoly_from(const NumberField& k, const MPoly& p, Var v) {
  KPoly out;
  for (const auto& c : p.coefficients(v)) {
    for (Var u : c.variables()) {
      if (u != Var::w) throw InvalidArgument("expected a univariate polynomial over the field");
    }
    out.push_back(k.reduce(c));
  }
  return out;
}

MPoly kpoly_to_mpoly(const KPoly& p, Var v) { return MPoly::from_coefficients(v, p); }

void kpoly_trim(const NumberField& k, KPoly& p) {
  while (!p.empty() && k.is_zero(p.back())) p.pop_back();
}

int kpoly_degree(const NumberField& k, KPoly p) {
  kpoly_trim(k, p);
  return static_cast<int>(p.size()) - 1;
}

KPoly kpoly_derivative(const KPoly& p) {
  KPoly out;
  for (std::size_t i = 1; i < p.size(); ++i) out.push_back(p[i] * Rational(static_cast<long>(i)));
  return out;
}

KPoly kpoly_monic(const NumberField& k, const KPoly& p_in) {
  KPoly p = p_in;
  kpoly_trim(k, p);
  if (p.empty()) return p;
  MPoly inv = k.inverse(p.back());
  for (auto& c : p) c = k.reduce(c * inv);
  return p;
}

std::pair<KPoly, KPoly> kpoly_divmod(const NumberField& k, const KPoly& a_in, const KPoly& b_in) {
  KPoly b = b_in;
  kpoly_trim(k, b);
  if (b.empty()) throw InvalidArgument("division by zero polynomial over the field");
  KPoly r = a_in;
  kpoly_trim(k, r);
  const std::size_t db = b.size() - 1;
  if (r.size() < b.size()) return {KPoly{}, r};
  MPoly inv = k.inverse(b.back());
  KPoly q(r.size() - db);
  while (!r.empty() && r.size() >= b.size()) {
    std::size_t shift = r.size() - b.size();
    MPoly coef = k.reduce(r.back() * inv);
    q[shift] = coef;
    for (std::size_t j = 0; j <= db; ++j) r[shift + j] = k.reduce(r[shift + j] - coef * b[j]);
    r.pop_back();
    kpoly_trim(k, r);
  }
  kpoly_trim(k, q);
  return {q, r};
}

KPoly kpoly_gcd(const NumberField& k, KPoly a, KPoly b) {
  kpoly_trim(k, a);
  kpoly_trim(k, b);
  while (!b.empty()) {
    KPoly r = kpoly_divmod(k, a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return kpoly_monic(k, a);
}

Extension adjoin_roots(const NumberField& k, const KPoly& h) {
  if (h.size() < 3) throw InvalidArgument("adjoin_roots expects degree at least two");
  // h as a polynomial in (v, w); the primitive element z = v + c*w is carried by s
  MPoly hvw = kpoly_to_mpoly(h, Var::v);
  const MPoly z = var(Var::s);
  for (int attempt = 0; attempt < 40; ++attempt) {
    long c = (attempt % 2 == 0) ? attempt / 2 : -(attempt + 1) / 2;
    if (k.is_rational() && c != 0) break;
    MPoly shifted = hvw.substitute(Var::v, z - c * var(Var::w));
    MPoly big = resultant(k.modulus(), shifted, Var::w);
    if (big.degree(Var::s) != k.degree() * (static_cast<int>(h.size()) - 1)) continue;
    if (!gcd_poly(big, big.derivative(Var::s)).is_constant()) continue;
    NumberField field(big.rename(Var::s, Var::w));
    // in the new field, the old generator is the common root of m(X) and h(z - cX, X), X = tau
    KPoly m_tau = kpoly_from(field, k.modulus().rename(Var::w, Var::tau), Var::tau);
    MPoly sh = shifted.rename(Var::w, Var::tau).rename(Var::s, Var::w);
    KPoly h_tau = kpoly_from(field, sh, Var::tau);
    try {
      KPoly g = kpoly_gcd(field, m_tau, h_tau);
      if (g.size() != 2) continue;
      MPoly old_w = field.reduce(-g[0]);
      MPoly root = field.reduce(var(Var::w) - c * old_w);
      return {field, old_w, root};
    } catch (const Split&) {
      continue;
    }
  }
  throw ResourceLimit("no primitive element found");
}

MPoly lift_to(const Extension& ext, const MPoly& p) {
  if (p.degree(Var::w) <= 0) return p;
  return ext.field.reduce(p.substitute(Var::w, ext.old_w));
}

}  // namespace irr
