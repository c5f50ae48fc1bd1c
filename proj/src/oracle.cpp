#include "irr/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <future>
#include <optional>
#include <map>
#include <random>

#include "irr/discriminant.hpp"
#include "irr/errors.hpp"
#include "irr/polyalg.hpp"

namespace irr {

namespace {

constexpr double kBoundedRel = OracleThresholds::bounded_rel;
constexpr double kBigRel = OracleThresholds::big_rel;
constexpr long kRhoRatio = OracleThresholds::far_ratio;
constexpr long kRhoRatioAlt = OracleThresholds::far_ratio_alt;
constexpr double kNudge = OracleThresholds::nudge;
constexpr double kBoundedExponent = OracleThresholds::bounded_exponent;
constexpr double kEscapingExponent = OracleThresholds::escaping_exponent;

Complex ipow(Complex z, int k) {
  Complex r = 1;
  for (int i = 0; i < k; ++i) r *= z;
  return r;
}

Complex eval_c(const MPoly& p, Complex x, Complex y) {
  Complex acc = 0;
  for (const auto& [e, c] : p.terms()) {
    acc += c.get_d() * ipow(x, e[static_cast<int>(Var::x)]) * ipow(y, e[static_cast<int>(Var::y)]);
  }
  return acc;
}

// Exponent-safe conversion: huge numerators and denominators are fine as long
// as the quotient fits in long double.
long double to_long_double(const Rational& q) {
  if (q == 0) return 0.0L;
  long en = 0;
  long ed = 0;
  double mn = mpz_get_d_2exp(&en, q.get_num_mpz_t());
  double md = mpz_get_d_2exp(&ed, q.get_den_mpz_t());
  return std::ldexp(static_cast<long double>(mn) / static_cast<long double>(md), static_cast<int>(en - ed));
}

// Complex roots of a univariate polynomial in v with rational coefficients.
std::vector<Complex> roots_of(const MPoly& p, Var v) {
  std::vector<ComplexLD> coeffs;
  for (const auto& c : p.coefficients(v)) coeffs.emplace_back(to_long_double(c.constant_value()), 0.0L);
  std::vector<Complex> out;
  for (const auto& z : complex_roots_ld(coeffs)) {
    out.emplace_back(static_cast<double>(z.real()), static_cast<double>(z.imag()));
  }
  return out;
}

// Roots in y of p(x0, y).
std::vector<Complex> roots_in_y(const MPoly& p, Complex x0) {
  std::vector<Complex> coeffs;
  for (const auto& c : p.coefficients(Var::y)) coeffs.push_back(eval_c(c, x0, 0.0));
  return complex_roots(coeffs);
}

// Drops the squarefree factors of jac on which f is constant.
MPoly remove_vertical_components(const MPoly& jac, const MPoly& f) {
  if (jac.is_constant()) return jac;
  MPoly jsf = squarefree_part(jac, Var::y);
  if (jsf.degree(Var::y) <= 0) return jac;
  MPoly elim = resultant(jsf, f - var(Var::s), Var::y);
  if (elim.is_zero()) return jac;
  MPoly cont = content(elim, Var::x);
  if (cont.degree(Var::s) <= 0) return jac;
  MPoly h = squarefree_part(cont, Var::s);
  MPoly norm = resultant(h.rename(Var::s, Var::w), f - var(Var::w), Var::w);
  MPoly vert = gcd_poly(jsf, norm);
  if (vert.is_constant()) return jac;
  MPoly rest = jac;
  while (true) {
    MPoly common = gcd_poly(rest, vert);
    if (common.is_constant()) break;
    rest = divide_exact(rest, common);
  }
  return rest;
}

// rho * (1 + kNudge), exactly
Rational nudge(const Rational& rho) {
  static_assert(kNudge == 1e-4);
  return rho + rho / Rational(10000);
}

struct Classified {
  std::vector<bool> bounded;
  double confidence = 1e300;
};

double nearest_rel(Complex v, const std::vector<Complex>& others) {
  double best = 1e300;
  for (const auto& w : others) best = std::min(best, std::abs(v - w));
  return best / (1.0 + std::abs(v));
}

// Local growth exponent d log|v| / d log rho, from the partner of v at the
// nudged level rho * (1 + kNudge). Escaping values grow like rho^a with a at
// least 1 / (number of distinct values); bounded ones have an exponent near
// zero, or negative when they tend to 0.
double growth_exponent(Complex v, const std::vector<Complex>& nudged) {
  double best = 1e300;
  Complex partner = v;
  double second = 1e300;
  for (const auto& w : nudged) {
    double d = std::abs(v - w);
    if (d < best) {
      second = best;
      best = d;
      partner = w;
    } else {
      second = std::min(second, d);
    }
  }
  // the move must be much smaller than the gap to any other value
  if (!(best * 100 < second) && nudged.size() > 1) throw IllConditioned("critical values too close to track");
  return std::log(std::abs(partner) / std::abs(v)) / std::log1p(kNudge);
}

// A value stays bounded when a partner sits next to it at both far levels.
// It escapes when it has no partner at one of them. Values in between, where
// branches of different growth can cross in modulus, fall back to the local
// growth exponent.
Classified classify(const std::vector<Complex>& first, const std::vector<Complex>& far,
                    const std::vector<Complex>& far_alt,
                    const std::function<std::vector<Complex>()>& nudged_values) {
  Classified out;
  std::optional<std::vector<Complex>> nudged;
  const double min_exponent = 1.0 / static_cast<double>(std::max<std::size_t>(first.size(), 1));
  for (const auto& v : first) {
    if (!std::isfinite(std::abs(v))) {
      out.bounded.push_back(false);
      continue;
    }
    double rel = std::max(nearest_rel(v, far), nearest_rel(v, far_alt));
    if (rel < kBoundedRel) {
      out.bounded.push_back(true);
      out.confidence = std::min(out.confidence, rel > 0 ? kBoundedRel / rel : 1e300);
    } else if (rel > kBigRel) {
      out.bounded.push_back(false);
      out.confidence = std::min(out.confidence, rel / kBigRel);
    } else if (std::abs(v) == 0.0) {
      out.bounded.push_back(true);
    } else {
      if (!nudged) nudged = nudged_values();
      double a = growth_exponent(v, *nudged);
      if (a < kBoundedExponent * min_exponent) {
        out.bounded.push_back(true);
      } else if (a > kEscapingExponent * min_exponent) {
        out.bounded.push_back(false);
      } else {
        throw IllConditioned("critical value neither bounded nor escaping");
      }
    }
  }
  return out;
}

// Values of f at the points of {jac_rest = 0, g = rho}, each with its local
// intersection number. The values come from the characteristic polynomial of
// multiplication by f, so no point coordinates are ever evaluated in floating
// point (they can be huge while f stays bounded).
std::vector<CriticalValue> critical_values(const MPoly& f, const MPoly& g, const MPoly& jac_rest, const Rational& rho) {
  std::vector<CriticalValue> out;
  if (jac_rest.is_constant()) return out;
  MPoly cp;
  try {
    cp = fiber_charpoly(f, g, jac_rest, rho);
  } catch (const BadSample&) {
    throw IllConditioned("critical locus meets the level curve in a component");
  }
  if (cp.degree(Var::s) <= 0) return out;
  for (const auto& factor : squarefree(cp, Var::s).factors) {
    if (factor.base.degree(Var::s) <= 0) continue;
    for (const auto& v : roots_of(factor.base, Var::s)) {
      out.push_back({v, factor.multiplicity, true});
    }
  }
  return out;
}

std::vector<Complex> distinct_values(const MPoly& f, const MPoly& level, Complex x0) {
  std::vector<Complex> out;
  for (const auto& y0 : roots_in_y(level, x0)) {
    Complex v = eval_c(f, x0, y0);
    bool seen = false;
    for (const auto& w : out) {
      if (std::abs(v - w) <= 1e-6 * (1.0 + std::abs(v))) seen = true;
    }
    if (!seen) out.push_back(v);
  }
  return out;
}

std::vector<Complex> values_of(const std::vector<CriticalValue>& cv) {
  std::vector<Complex> out;
  for (const auto& c : cv) out.push_back(c.value);
  return out;
}

}  // namespace

Rational draw_rho(const MPoly& f, const MPoly& g, double magnitude, std::uint64_t seed) {
  double maxc = 0;
  for (const MPoly* p : {&f, &g}) {
    for (const auto& [e, c] : p->terms()) maxc = std::max(maxc, std::fabs(c.get_d()));
  }
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::uniform_real_distribution<double> unit(1.0, 2.0);
  double value = magnitude * (1.0 + maxc) * unit(rng);
  if (rng() & 1U) value = -value;
  mpz_class z(std::round(value));
  return Rational(z);
}

FiberTopologyEstimate fiber_data(const MPoly& f, const MPoly& g, const Rational& rho, std::uint64_t seed) {
  if (g.is_constant()) throw IllConditioned("the oracle needs a nonconstant g");
  if (f.is_constant()) throw IllConditioned("the oracle needs a nonconstant f");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(1, 23);

  // shear x -> x + a*y so that every level curve has constant leading y-coefficient
  MPoly fs;
  MPoly gs;
  for (int tries = 0;; ++tries) {
    if (tries > 50) throw IllConditioned("no admissible shear");
    Rational a(pick(rng), 1 + (tries % 3));
    MPoly sub = var(Var::x) + a * var(Var::y);
    gs = g.substitute(Var::x, sub);
    if (gs.degree(Var::y) == g.total_degree() && gs.leading_coefficient(Var::y).is_constant()) {
      fs = f.substitute(Var::x, sub);
      break;
    }
  }
  MPoly level = gs - MPoly(rho);
  MPoly level_far = gs - MPoly(rho * kRhoRatio);
  MPoly level_alt = gs - MPoly(rho * kRhoRatioAlt);

  FiberTopologyEstimate est;
  est.rho = rho;
  MPoly disc = resultant_with_derivative(level, Var::y);
  if (disc.is_zero()) throw IllConditioned("level curve is not reduced");
  est.chi_curve = level.degree(Var::y) - std::max(disc.degree(Var::x), 0);

  MPoly jac = jacobian(fs, gs);
  if (jac.is_zero()) {
    est.dependent = true;
    std::uniform_int_distribution<int> xs(-50, 50);
    Complex x0(xs(rng) / 7.0, 0.0);
    auto near = distinct_values(fs, level, x0);
    auto far = distinct_values(fs, level_far, x0);
    auto alt = distinct_values(fs, level_alt, x0);
    auto cls = classify(near, far, alt, [&] { return distinct_values(fs, gs - MPoly(nudge(rho)), x0); });
    for (std::size_t i = 0; i < near.size(); ++i) est.fiber_values.push_back({near[i], 1, cls.bounded[i]});
    est.confidence = cls.confidence;
    return est;
  }

  MPoly s = var(Var::s);
  MPoly r1 = resultant(fs - s, level, Var::y);
  MPoly r2 = resultant(fs - s, level_far, Var::y);
  MPoly r3 = resultant(fs - s, level_alt, Var::y);
  est.degree_n = r1.degree(Var::x);
  MPoly qall = resultant(jac, level, Var::y);
  if (qall.is_zero()) throw IllConditioned("critical locus meets the level curve in a component");
  est.total_excess = std::max(qall.degree(Var::x), 0);

  // points escaping to infinity over values of f that do not move with rho
  MPoly l1 = r1.leading_coefficient(Var::x);
  MPoly l2 = r2.leading_coefficient(Var::x);
  MPoly h = gcd_poly(gcd_poly(l1, l2), r3.leading_coefficient(Var::x));
  if (h.degree(Var::s) > 0) {
    MPoly cur = squarefree_part(h, Var::s);
    auto cs = r1.coefficients(Var::x);
    for (int k = est.degree_n; k >= 0 && cur.degree(Var::s) > 0; --k) {
      MPoly common = gcd_poly(cur, cs[static_cast<std::size_t>(k)]);
      MPoly part = divide_exact(cur, common);
      est.deficit_bounded += std::max(part.degree(Var::s), 0) * (est.degree_n - k);
      cur = common;
    }
    if (cur.degree(Var::s) > 0) throw IllConditioned("a level of f shares a component with the level curve");
  }

  MPoly jac_rest = remove_vertical_components(jac, fs);
  est.ram_pairs = critical_values(fs, gs, jac_rest, rho);
  auto far = critical_values(fs, gs, jac_rest, rho * kRhoRatio);
  auto alt = critical_values(fs, gs, jac_rest, rho * kRhoRatioAlt);
  auto cls = classify(values_of(est.ram_pairs), values_of(far), values_of(alt),
                      [&] { return values_of(critical_values(fs, gs, jac_rest, nudge(rho))); });
  for (std::size_t i = 0; i < est.ram_pairs.size(); ++i) est.ram_pairs[i].bounded = cls.bounded[i];
  est.confidence = cls.confidence;
  return est;
}

int chi_fiber(const FiberTopologyEstimate& est, const Place& place, double eta) {
  if (est.dependent) {
    const int r = static_cast<int>(est.fiber_values.size());
    if (r == 0 || est.chi_curve % r != 0) throw Instability("level curve does not split into equal fibres");
    const int chi_f = est.chi_curve / r;
    auto count_near = [&](Complex c) {
      int k = 0;
      for (const auto& v : est.fiber_values) {
        if (v.bounded && std::abs(v.value - c) < eta * std::max(1.0, std::abs(c))) ++k;
      }
      return k;
    };
    if (place.is_infinity()) {
      int big = 0;
      for (const auto& v : est.fiber_values) big += v.bounded ? 0 : 1;
      return chi_f * big;
    }
    if (place.kind == Place::Kind::rational) return chi_f * count_near(place.value.get_d());
    std::vector<int> per_root;
    for (const auto& c : roots_of(place.minpoly, Var::s)) per_root.push_back(chi_f * count_near(c));
    if (std::adjacent_find(per_root.begin(), per_root.end(), std::not_equal_to<>()) != per_root.end()) {
      throw IllConditioned("conjugate places disagree");
    }
    return per_root.front();
  }

  auto excess_near = [&](Complex c) {
    int k = 0;
    for (const auto& v : est.ram_pairs) {
      if (v.bounded && std::abs(v.value - c) < eta * std::max(1.0, std::abs(c))) k += v.excess;
    }
    return k;
  };
  if (place.is_infinity()) {
    int big = 0;
    for (const auto& v : est.ram_pairs) big += v.bounded ? 0 : v.excess;
    int ir = big + est.degree_n - est.total_excess - est.chi_curve - est.deficit_bounded;
    return -ir;
  }
  if (place.kind == Place::Kind::rational) return -excess_near(place.value.get_d());
  std::vector<int> per_root;
  for (const auto& c : roots_of(place.minpoly, Var::s)) per_root.push_back(-excess_near(c));
  if (std::adjacent_find(per_root.begin(), per_root.end(), std::not_equal_to<>()) != per_root.end()) {
    throw IllConditioned("conjugate places disagree");
  }
  return per_root.front();
}

std::vector<OracleValue> oracle_irregularity(const MPoly& f, const MPoly& g, const std::vector<Place>& places,
                                             const OracleOptions& options) {
  std::vector<OracleValue> out;
  for (const auto& p : places) out.push_back({p, 0, 0, true, {}});
  // Each sample owns a disjoint range of streams, so the samples run concurrently
  // and the result does not depend on scheduling.
  constexpr int kAttempts = 6;
  auto sample = [&](int i) {
    std::uint64_t base = options.seed * 7919 + 1 + static_cast<std::uint64_t>(i) * kAttempts;
    for (int attempt = 0;; ++attempt) {
      std::uint64_t stream = base + static_cast<std::uint64_t>(attempt) + 1;
      try {
        return fiber_data(f, g, draw_rho(f, g, options.rho_magnitude, stream), stream);
      } catch (const IllConditioned&) {
        if (attempt + 1 == kAttempts) throw;
      }
    }
  };
  std::vector<std::future<FiberTopologyEstimate>> jobs;
  for (int i = 0; i < options.seeds; ++i) jobs.push_back(std::async(std::launch::async, sample, i));
  std::vector<FiberTopologyEstimate> estimates;
  for (auto& job : jobs) estimates.push_back(job.get());
  for (const auto& est : estimates) {
    for (auto& ov : out) ov.per_seed.push_back(-chi_fiber(est, ov.place));
  }
  for (auto& ov : out) {
    std::map<int, int> votes;
    for (int v : ov.per_seed) ++votes[v];
    auto best = std::max_element(votes.begin(), votes.end(),
                                 [](const auto& l, const auto& r) { return l.second < r.second; });
    ov.ir = best->first;
    ov.chi = -ov.ir;
    ov.stable = votes.size() == 1;
  }
  return out;
}

}  // namespace irr
