#include "irr/polyalg.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "irr/errors.hpp"
#include "irr/numeric_roots.hpp"

namespace irr {

MPoly normalize(const MPoly& p) {
  if (p.is_zero()) return p;
  return p * (1 / normalization_unit(p));
}

Rational normalization_unit(const MPoly& p) {
  if (p.is_zero()) return 0;
  Integer num_gcd = 0;
  Integer den_lcm = 1;
  for (const auto& [e, c] : p.terms()) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  }
  Rational unit(num_gcd, den_lcm);
  unit.canonicalize();
  if (p.leading_rational() < 0) unit = -unit;
  return unit;
}

namespace {

bool exponent_divides(const Exponents& a, const Exponents& b) {
  for (int i = 0; i < kNumVars; ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

Exponents exponent_sub(const Exponents& a, const Exponents& b) {
  Exponents r{};
  for (int i = 0; i < kNumVars; ++i) r[i] = static_cast<std::uint16_t>(a[i] - b[i]);
  return r;
}

std::optional<Var> first_variable(const MPoly& p, const MPoly& q) {
  for (int i = 0; i < kNumVars; ++i) {
    auto v = static_cast<Var>(i);
    if (p.degree(v) > 0 || q.degree(v) > 0) return v;
  }
  return std::nullopt;
}

}  // namespace

DivisionResult divide(const MPoly& p, const MPoly& q) {
  if (q.is_zero()) throw InvalidArgument("division by zero polynomial");
  DivisionResult out;
  const Exponents& lq = q.leading_exponents();
  const Rational& cq = q.leading_rational();
  MPoly r = p;
  while (!r.is_zero()) {
    const Exponents lr = r.leading_exponents();
    const Rational cr = r.leading_rational();
    if (exponent_divides(lq, lr)) {
      MPoly t = MPoly::monomial(exponent_sub(lr, lq), cr / cq);
      out.quotient += t;
      r -= t * q;
    } else {
      MPoly lt = MPoly::monomial(lr, cr);
      out.remainder += lt;
      r -= lt;
    }
  }
  return out;
}

MPoly divide_exact(const MPoly& p, const MPoly& q) {
  auto [quot, rem] = divide(p, q);
  if (!rem.is_zero()) throw InvalidArgument("inexact polynomial division");
  return quot;
}

bool divides(const MPoly& q, const MPoly& p) { return divide(p, q).remainder.is_zero(); }

MPoly pseudo_remainder(const MPoly& p, const MPoly& q, Var v) {
  int dq = q.degree(v);
  if (dq < 0) throw InvalidArgument("pseudo-remainder by zero");
  MPoly lc = q.leading_coefficient(v);
  MPoly r = p;
  int e = std::max(p.degree(v) - dq + 1, 0);
  MPoly xv = var(v);
  while (!r.is_zero() && r.degree(v) >= dq) {
    int dr = r.degree(v);
    MPoly t = r.leading_coefficient(v) * xv.pow(static_cast<unsigned>(dr - dq));
    r = lc * r - t * q;
    --e;
  }
  return lc.pow(static_cast<unsigned>(e)) * r;
}

MPoly content(const MPoly& p, Var v) {
  if (p.is_zero()) return p;
  return gcd_all(p.coefficients(v));
}

MPoly primitive_part(const MPoly& p, Var v) {
  if (p.is_zero()) return p;
  return normalize(divide_exact(p, content(p, v)));
}

MPoly gcd_all(const std::vector<MPoly>& ps) {
  MPoly g;
  for (const auto& p : ps) {
    if (p.is_zero()) continue;
    g = g.is_zero() ? normalize(p) : gcd_poly(g, p);
    if (g.is_constant()) return MPoly(1);
  }
  return g;
}

MPoly gcd_poly(const MPoly& p, const MPoly& q, std::optional<Var> main_var) {
  if (p.is_zero()) return normalize(q);
  if (q.is_zero()) return normalize(p);
  if (p.is_constant() || q.is_constant()) return MPoly(1);
  Var v;
  if (main_var && (p.degree(*main_var) > 0 || q.degree(*main_var) > 0)) {
    v = *main_var;
  } else {
    v = *first_variable(p, q);
  }
  if (p.degree(v) == 0) return gcd_poly(p, content(q, v));
  if (q.degree(v) == 0) return gcd_poly(content(p, v), q);

  MPoly cp = content(p, v);
  MPoly cq = content(q, v);
  MPoly c = gcd_poly(cp, cq);
  MPoly a = normalize(divide_exact(p, cp));
  MPoly b = normalize(divide_exact(q, cq));
  if (a.degree(v) < b.degree(v)) std::swap(a, b);
  // primitive remainder sequence
  while (true) {
    MPoly r = pseudo_remainder(a, b, v);
    if (r.is_zero()) break;
    if (r.degree(v) == 0) {
      b = MPoly(1);
      break;
    }
    a = std::move(b);
    b = primitive_part(r, v);
  }
  if (!b.is_constant()) b = primitive_part(b, v);
  return normalize(c * b);
}

MPoly resultant(const MPoly& p, const MPoly& q, Var v) {
  if (p.is_zero() || q.is_zero()) return MPoly();
  int da = p.degree(v);
  int db = q.degree(v);
  if (da == 0 && db == 0) return MPoly(1);
  if (da == 0) return p.pow(static_cast<unsigned>(db));
  if (db == 0) return q.pow(static_cast<unsigned>(da));

  MPoly a = p;
  MPoly b = q;
  int sign = 1;
  if (da < db) {
    std::swap(a, b);
    if ((da % 2 == 1) && (db % 2 == 1)) sign = -sign;
  }
  MPoly g(1);
  MPoly h(1);
  while (true) {
    int dA = a.degree(v);
    int dB = b.degree(v);
    int delta = dA - dB;
    if ((dA % 2 == 1) && (dB % 2 == 1)) sign = -sign;
    MPoly r = pseudo_remainder(a, b, v);
    if (r.is_zero()) return MPoly();
    a = std::move(b);
    b = divide_exact(r, g * h.pow(static_cast<unsigned>(delta)));
    g = a.leading_coefficient(v);
    if (delta == 1) {
      h = g;
    } else if (delta > 1) {
      h = divide_exact(g.pow(static_cast<unsigned>(delta)), h.pow(static_cast<unsigned>(delta - 1)));
    }
    if (b.degree(v) == 0) {
      int dAfin = a.degree(v);
      MPoly res = divide_exact(b.pow(static_cast<unsigned>(dAfin)), h.pow(static_cast<unsigned>(dAfin - 1)));
      return sign < 0 ? -res : res;
    }
  }
}

MPoly resultant_with_derivative(const MPoly& p, Var v) { return resultant(p, p.derivative(v), v); }

MPoly SquarefreeDecomposition::expand() const {
  MPoly out(unit);
  for (const auto& f : factors) out = out * f.base.pow(static_cast<unsigned>(f.multiplicity));
  return out;
}

namespace {

std::vector<SquarefreeFactor> yun(const MPoly& a, Var v) {
  std::vector<SquarefreeFactor> out;
  MPoly ap = a.derivative(v);
  MPoly a0 = gcd_poly(a, ap, v);
  MPoly b = divide_exact(a, a0);
  MPoly c = divide_exact(ap, a0);
  MPoly d = c - b.derivative(v);
  int i = 1;
  while (b.degree(v) > 0) {
    MPoly g = gcd_poly(b, d, v);
    if (!g.is_constant()) out.push_back({normalize(g), i});
    b = divide_exact(b, g);
    c = divide_exact(d, g);
    d = c - b.derivative(v);
    ++i;
  }
  return out;
}

void merge_factor(std::vector<SquarefreeFactor>& into, const SquarefreeFactor& f) {
  for (auto& g : into) {
    if (g.multiplicity == f.multiplicity) {
      g.base = normalize(g.base * f.base);
      return;
    }
  }
  into.push_back(f);
}

}  // namespace

SquarefreeDecomposition squarefree(const MPoly& p, Var v) {
  if (p.is_zero()) throw InvalidArgument("squarefree decomposition of zero");
  SquarefreeDecomposition out;
  if (p.is_constant()) {
    out.unit = p.constant_value();
    return out;
  }
  if (p.degree(v) <= 0) {
    return squarefree(p, p.variables().front());
  }
  MPoly c = content(p, v);
  MPoly a = normalize(divide_exact(p, c));
  out.factors = yun(a, v);
  if (!c.is_constant()) {
    auto inner = squarefree(c, c.variables().front());
    for (const auto& f : inner.factors) merge_factor(out.factors, f);
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const auto& l, const auto& r) { return l.multiplicity < r.multiplicity; });
  MPoly prod(1);
  for (const auto& f : out.factors) prod = prod * f.base.pow(static_cast<unsigned>(f.multiplicity));
  out.unit = p.leading_rational() / prod.leading_rational();
  return out;
}

MPoly squarefree_part(const MPoly& p, Var v) {
  auto sq = squarefree(p, v);
  MPoly out(1);
  for (const auto& f : sq.factors) out = out * f.base;
  return normalize(out);
}

MPoly linear_factor(Var v, const Rational& root) { return var(v) - MPoly(root); }

namespace {

// Continued-fraction convergents of a real number with denominators up to `max_den`.
std::vector<Rational> convergents(long double value, const Integer& max_den) {
  std::vector<Rational> out;
  Integer h_prev = 1, h_prevprev = 0, k_prev = 0, k_prevprev = 1;
  long double x = value;
  for (int iter = 0; iter < 64; ++iter) {
    long double a_real = std::floor(x);
    if (std::fabs(a_real) > 1e18L) break;
    Integer a(static_cast<long>(a_real));
    Integer h = a * h_prev + h_prevprev;
    Integer k = a * k_prev + k_prevprev;
    if (k > max_den) break;
    out.emplace_back(h, k);
    out.back().canonicalize();
    long double frac = x - a_real;
    if (frac < 1e-15L) break;
    x = 1.0L / frac;
    h_prevprev = h_prev;
    h_prev = h;
    k_prevprev = k_prev;
    k_prev = k;
  }
  return out;
}

}  // namespace

std::vector<std::pair<Rational, int>> rational_roots(const MPoly& p, Var v) {
  std::vector<std::pair<Rational, int>> out;
  if (p.is_zero() || p.degree(v) <= 0) return out;
  auto sq = squarefree(p, v);
  for (const auto& f : sq.factors) {
    MPoly b = f.base;
    if (b.degree(v) <= 0) continue;
    auto coeffs = b.coefficients(v);
    std::vector<Rational> roots_found;
    if (coeffs[0].is_zero()) roots_found.emplace_back(0);
    if (b.degree(v) == 1) {
      Rational r = -coeffs[0].constant_value() / coeffs[1].constant_value();
      roots_found = {r};
    } else {
      std::vector<std::complex<double>> c;
      c.reserve(coeffs.size());
      for (const auto& k : coeffs) c.emplace_back(k.constant_value().get_d(), 0.0);
      Integer lc = abs(coeffs.back().constant_value().get_num());
      for (const auto& z : complex_roots(c)) {
        if (std::fabs(z.imag()) > 1e-6 * (1.0 + std::abs(z))) continue;
        for (const auto& cand : convergents(static_cast<long double>(z.real()), lc)) {
          if (b.evaluate(v, cand).is_zero()) {
            if (std::find(roots_found.begin(), roots_found.end(), cand) == roots_found.end()) {
              roots_found.push_back(cand);
            }
            break;
          }
        }
      }
    }
    for (const auto& r : roots_found) out.emplace_back(r, f.multiplicity);
  }
  std::sort(out.begin(), out.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
  return out;
}

}  // namespace irr
