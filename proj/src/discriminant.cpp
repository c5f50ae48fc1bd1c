#include "irr/discriminant.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <random>

#include "irr/errors.hpp"
#include "irr/groebner.hpp"
#include "irr/polyalg.hpp"
#include "irr/upoly.hpp"

namespace irr {

MPoly jacobian(const MPoly& f, const MPoly& g) {
  return f.derivative(Var::x) * g.derivative(Var::y) - f.derivative(Var::y) * g.derivative(Var::x);
}

MPoly fiber_charpoly(const MPoly& f, const MPoly& g, const MPoly& jac, const Rational& t0) {
  MPoly level = g - MPoly(t0);
  if (jac.is_constant()) {
    if (jac.is_zero()) throw InvalidArgument("fiber charpoly needs a nonzero Jacobian");
    return MPoly(1);
  }
  if (level.is_constant()) {
    if (level.is_zero()) throw BadSample("g is identically equal to the sample value");
    return MPoly(1);
  }
  if (!gcd_poly(jac, level).is_constant()) throw BadSample("critical locus shares a component with the level curve");
  try {
    QuotientAlgebra alg(GroebnerBasis::compute({jac, level}));
    return charpoly_of(alg, f);
  } catch (const NotZeroDimensional&) {
    throw BadSample("level system is not zero-dimensional");
  }
}

bool agrees_with_fiber(const MPoly& R, const MPoly& fiber, const Rational& t0) {
  MPoly at = R.evaluate(Var::t, t0);
  if (at.is_zero()) return false;
  return normalize(at) == normalize(fiber);
}

namespace {

Rational draw_sample(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> dist(1000, 1000000);
  return Rational(dist(rng));
}

struct Sample {
  Rational t0;
  std::vector<Rational> coeffs;  // monic charpoly, low to high
};

std::optional<MPoly> reconstruct(const std::vector<Sample>& samples, int n, int bound) {
  std::vector<Rational> xs;
  xs.reserve(samples.size());
  for (const auto& s : samples) xs.push_back(s.t0);
  std::vector<QPoly> nums;
  std::vector<QPoly> dens;
  QPoly common_den(1);
  for (int i = 0; i < n; ++i) {
    std::vector<Rational> ys;
    ys.reserve(samples.size());
    for (const auto& s : samples) ys.push_back(s.coeffs[static_cast<std::size_t>(i)]);
    auto rf = rational_reconstruction(xs, ys, bound, bound + 1);
    if (!rf) return std::nullopt;
    nums.push_back(rf->first);
    dens.push_back(rf->second);
    // lcm via gcd
    QPoly g = QPoly::gcd(common_den, rf->second);
    common_den = QPoly::divmod(common_den * rf->second, g).first;
  }
  std::vector<MPoly> scoeffs;
  for (int i = 0; i < n; ++i) {
    QPoly scale = QPoly::divmod(common_den, dens[static_cast<std::size_t>(i)]).first;
    scoeffs.push_back((nums[static_cast<std::size_t>(i)] * scale).to_mpoly(Var::t));
  }
  scoeffs.push_back(common_den.to_mpoly(Var::t));
  MPoly R = MPoly::from_coefficients(Var::s, scoeffs);
  // remove horizontal lines (content with respect to s)
  return primitive_part(R, Var::s);
}

}  // namespace

PushforwardPoly pushforward_polynomial(const MPoly& f, const MPoly& g, const MPoly& jac,
                                       const PushforwardOptions& options) {
  if (jac.is_zero()) throw InvalidArgument("pushforward needs independent f and g");
  PushforwardPoly out;
  const int dj = jac.total_degree();
  out.deg_s_bound = dj * g.total_degree();
  out.deg_t_bound = dj * f.total_degree();
  if (jac.is_constant()) {
    out.R = MPoly(1);
    return out;
  }

  std::mt19937_64 rng(options.seed);
  int bad = 0;
  std::vector<Sample> good;
  int n = -1;
  std::vector<Rational> seen;

  auto take_sample = [&]() -> std::optional<Sample> {
    while (true) {
      Rational t0 = draw_sample(rng);
      if (std::find(seen.begin(), seen.end(), t0) != seen.end()) continue;
      seen.push_back(t0);
      try {
        MPoly cp = fiber_charpoly(f, g, jac, t0);
        Sample s{t0, {}};
        for (const auto& c : cp.coefficients(Var::s)) s.coeffs.push_back(c.constant_value());
        return s;
      } catch (const BadSample&) {
        if (++bad > options.max_bad_samples) throw BadSample("too many degenerate samples");
      }
    }
  };

  auto fill_to = [&](std::size_t needed) {
    while (good.size() < needed) {
      auto s = take_sample();
      int d = static_cast<int>(s->coeffs.size()) - 1;
      if (d > n) {
        if (n >= 0) bad += static_cast<int>(good.size());
        if (bad > options.max_bad_samples) throw BadSample("too many degenerate samples");
        good.clear();
        n = d;
      } else if (d < n) {
        if (++bad > options.max_bad_samples) throw BadSample("too many degenerate samples");
        continue;
      }
      good.push_back(std::move(*s));
    }
  };

  int bound = out.deg_t_bound;
  for (int attempt = 0; attempt < 2; ++attempt) {
    fill_to(static_cast<std::size_t>(2 * bound + 2));
    std::optional<MPoly> R;
    if (n == 0) {
      R = MPoly(1);
    } else {
      R = reconstruct(good, n, bound);
    }
    if (R) {
      bool ok = true;
      std::vector<Rational> checks;
      for (int k = 0; k < options.validation_samples && ok; ++k) {
        auto s = take_sample();
        int d = static_cast<int>(s->coeffs.size()) - 1;
        if (d != n) {
          --k;
          if (++bad > options.max_bad_samples) throw BadSample("too many degenerate samples");
          continue;
        }
        MPoly fiber;
        for (std::size_t i = 0; i < s->coeffs.size(); ++i) {
          fiber += MPoly::term(s->coeffs[i], {{Var::s, static_cast<int>(i)}});
        }
        if (n == 0) {
          ok = fiber == MPoly(1);
        } else {
          ok = agrees_with_fiber(*R, fiber, s->t0);
        }
        checks.push_back(s->t0);
      }
      if (ok) {
        out.R = *R;
        out.generic_dim = n;
        for (const auto& s : good) out.samples_used.push_back(s.t0);
        out.validation_samples = checks;
        out.escalated = attempt > 0;
        return out;
      }
    }
    bound *= 2;
    out.deg_t_bound = bound;
    out.deg_s_bound *= 2;
  }
  throw ValidationFailure("pushforward polynomial failed validation after escalation");
}

MPoly t_primitive_part(const MPoly& R) {
  if (R.is_zero()) throw InvalidArgument("t-primitive part of zero");
  if (R.degree(Var::t) <= 0) return MPoly(1);
  return primitive_part(R, Var::t);
}

MPoly leading_t_coefficient(const MPoly& R) { return t_primitive_part(R).leading_coefficient(Var::t); }

int delta1_finite_germ(const MPoly& R, const Place& place) {
  MPoly lc = leading_t_coefficient(R);
  if (lc.degree(Var::s) <= 0) return 0;
  return order_at_place(lc, place);
}

std::vector<PlaceValue> profile_finite(const MPoly& R) {
  std::vector<PlaceValue> out;
  MPoly lc = leading_t_coefficient(R);
  if (lc.degree(Var::s) <= 0) return out;
  auto sq = squarefree(lc, Var::s);
  std::vector<PlaceValue> algebraic;
  for (const auto& f : sq.factors) {
    MPoly rest = f.base;
    for (const auto& [root, mult] : rational_roots(f.base, Var::s)) {
      rest = divide_exact(rest, linear_factor(Var::s, root));
      out.push_back({Place::at(root), f.multiplicity, f.multiplicity, 0});
    }
    if (rest.degree(Var::s) > 0) {
      algebraic.push_back({Place::algebraic(rest), f.multiplicity, f.multiplicity, 0});
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& l, const auto& r) { return l.place.value < r.place.value; });
  out.insert(out.end(), algebraic.begin(), algebraic.end());
  return out;
}

}  // namespace irr
