#include "irr/dependent.hpp"

#include <map>
#include <random>

#include "irr/compactification.hpp"
#include "irr/discriminant.hpp"
#include "irr/errors.hpp"
#include "irr/polyalg.hpp"

namespace irr {

namespace {

// Substitution x -> x + a*y making the y-leading coefficients of all inputs constant.
MPoly shear_for(const std::vector<MPoly>& ps, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(1, 29);
  for (int tries = 0; tries < 60; ++tries) {
    Rational a(pick(rng), 1 + tries % 4);
    MPoly sub = var(Var::x) + a * var(Var::y);
    bool ok = true;
    for (const auto& p : ps) {
      MPoly q = p.substitute(Var::x, sub);
      if (q.degree(Var::y) != p.total_degree() || !q.leading_coefficient(Var::y).is_constant()) ok = false;
    }
    if (ok) return sub;
  }
  throw EliminationFailure("no admissible shear");
}

MPoly swap_xy(const MPoly& p) { return p.substitute({{Var::x, var(Var::y)}, {Var::y, var(Var::x)}}); }

}  // namespace

ImageCurve image_curve(const MPoly& f, const MPoly& g, std::uint64_t seed) {
  if (f.is_constant()) throw InvalidArgument("image curve needs a nonconstant f");
  std::mt19937_64 rng(seed + 101);
  const MPoly s = var(Var::s);
  const MPoly t = var(Var::t);
  MPoly candidate;
  for (int route = 0; route < 2; ++route) {
    MPoly fr = route == 0 ? f : swap_xy(f);
    MPoly gr = route == 0 ? g : swap_xy(g);
    MPoly sub = shear_for({fr, gr}, rng);
    MPoly fs = fr.substitute(Var::x, sub);
    MPoly gs = gr.substitute(Var::x, sub);
    MPoly res = resultant(fs - s, gs - t, Var::y);
    MPoly cont = res.is_zero() ? MPoly() : content(res, Var::x);
    candidate = candidate.is_zero() ? cont : gcd_poly(candidate, cont);
  }
  if (candidate.is_zero() || candidate.is_constant()) throw EliminationFailure("no image equation found");
  MPoly w = normalize(squarefree_part(candidate, Var::t));
  std::uniform_int_distribution<int> coord(-40, 40);
  for (int k = 0; k < 20; ++k) {
    Rational x0(coord(rng), 1 + k % 5);
    Rational y0(coord(rng), 1 + k % 3);
    Rational s0 = f.evaluate(Var::x, x0).evaluate(Var::y, y0).constant_value();
    Rational t0 = g.evaluate(Var::x, x0).evaluate(Var::y, y0).constant_value();
    if (!w.evaluate(Var::s, s0).evaluate(Var::t, t0).is_zero()) {
      throw EliminationFailure("image equation does not vanish on the image");
    }
  }
  return {w};
}

GenericFiberChi chi_generic_fiber(const MPoly& f, const MPoly& g, std::uint64_t seed) {
  std::mt19937_64 rng(seed + 202);
  std::uniform_int_distribution<int> coord(-60, 60);
  GenericFiberChi out;
  std::map<int, std::vector<FiberSample>> by_value;
  for (int k = 0; k < 25; ++k) {
    Rational x0(coord(rng), 1 + k % 7);
    Rational y0(coord(rng), 1 + k % 5);
    Rational s0 = f.evaluate(Var::x, x0).evaluate(Var::y, y0).constant_value();
    Rational t0 = g.evaluate(Var::x, x0).evaluate(Var::y, y0).constant_value();
    MPoly d = gcd_poly(f - MPoly(s0), g - MPoly(t0));
    if (d.is_constant()) continue;
    MPoly sub;
    try {
      sub = shear_for({d}, rng);
    } catch (const EliminationFailure&) {
      continue;
    }
    MPoly ds = d.substitute(Var::x, sub);
    MPoly disc = resultant_with_derivative(ds, Var::y);
    if (disc.is_zero()) continue;
    int chi = ds.degree(Var::y) - std::max(disc.degree(Var::x), 0);
    auto& bucket = by_value[chi];
    bucket.push_back({x0, y0, d, chi});
    if (bucket.size() >= 5) {
      out.chi = chi;
      out.samples = bucket;
      return out;
    }
  }
  throw Instability("generic fibre Euler characteristic is not sample-stable");
}

int dependent_germ(const MPoly& W, const Place& place) {
  if (place.is_infinity()) return germ_at_infinity(t_primitive_part(W));
  return delta1_finite_germ(W, place);
}

int irregularity_dependent(const ImageCurve& image, const GenericFiberChi& chi, const Place& place) {
  return -chi.chi * dependent_germ(image.W, place);
}

std::vector<std::pair<Place, int>> dependent_finite_germs(const MPoly& W) {
  std::vector<std::pair<Place, int>> out;
  for (const auto& pv : profile_finite(W)) out.emplace_back(pv.place, pv.delta1);
  return out;
}

}  // namespace irr
