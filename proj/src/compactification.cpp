#include "irr/compactification.hpp"

#include <algorithm>
#include <map>

#include "irr/discriminant.hpp"
#include "irr/errors.hpp"
#include "irr/polyalg.hpp"

namespace irr {

namespace {

const MPoly U = var(Var::u);
const MPoly V = var(Var::v);

// A polynomial over the field is zero when every coefficient (an element in w) is.
bool poly_is_zero(const NumberField& k, const MPoly& p) {
  if (p.is_zero()) return true;
  std::map<Exponents, MPoly> elems;
  const int wi = static_cast<int>(Var::w);
  for (const auto& [e, c] : p.terms()) {
    Exponents key = e;
    int wdeg = key[wi];
    key[wi] = 0;
    elems[key] += MPoly::term(c, {{Var::w, wdeg}});
  }
  for (const auto& [key, el] : elems) {
    if (!k.is_zero(el)) return false;
  }
  return true;
}

// Order of vanishing along {e = 0}; -1 for the zero polynomial.
int ord_along(const NumberField& k, const MPoly& p, Var e) {
  auto cs = p.coefficients(e);
  for (std::size_t i = 0; i < cs.size(); ++i) {
    if (!poly_is_zero(k, cs[i])) return static_cast<int>(i);
  }
  return -1;
}

MPoly shift_down(const MPoly& p, Var e, int k) {
  if (k <= 0) return p;
  return divide_exact(p, var(e).pow(static_cast<unsigned>(k)));
}

Var other(Var e) { return e == Var::u ? Var::v : Var::u; }

struct Restricted {
  bool infinite = false;
  bool constant = false;
  KPoly num;
  KPoly den;
  int pole = 0;
};

// Restriction to {e = 0} of n/d, where n and d are already stripped of common powers of e.
Restricted restrict_to(const NumberField& k, const MPoly& n, const MPoly& d, int ord_n, int ord_d, Var e) {
  Restricted r;
  Var c = other(e);
  if (ord_n > ord_d) {
    r.constant = true;
    r.den = {MPoly(1)};
    return r;
  }
  if (ord_n < ord_d) {
    r.infinite = true;
    r.pole = ord_d - ord_n;
    return r;
  }
  KPoly kn = kpoly_from(k, n.evaluate(e, 0), c);
  KPoly kd = kpoly_from(k, d.evaluate(e, 0), c);
  kpoly_trim(k, kn);
  kpoly_trim(k, kd);
  KPoly common = kpoly_gcd(k, kn, kd);
  if (common.size() > 1) {
    kn = kpoly_divmod(k, kn, common).first;
    kd = kpoly_divmod(k, kd, common).first;
  }
  // normalize the denominator to be monic
  MPoly inv = k.inverse(kd.back());
  for (auto& x : kn) x = k.reduce(x * inv);
  for (auto& x : kd) x = k.reduce(x * inv);
  r.num = kn;
  r.den = kd;
  r.constant = kn.size() <= 1 && kd.size() == 1;
  return r;
}

// Intersection at (inf, inf) with t = inf of the image of tau -> (F, G), by
// summing the pole orders of G over the points where F and G are both infinite.
int pole_count_germ(const NumberField& k, const Restricted& fr, const Restricted& gr) {
  int total = 0;
  KPoly rest = gr.den;
  while (rest.size() > 1) {
    KPoly common = kpoly_gcd(k, rest, fr.den);
    if (common.size() <= 1) break;
    total += static_cast<int>(common.size()) - 1;
    rest = kpoly_divmod(k, rest, common).first;
  }
  int df = static_cast<int>(fr.num.size()) - static_cast<int>(fr.den.size());
  int dg = static_cast<int>(gr.num.size()) - static_cast<int>(gr.den.size());
  if (df > 0 && dg > 0) total += dg;
  return total;
}

struct State {
  NumberField k;
  MPoly fn, fd, gn, gd;
  MPoly xn, xd, yn, yd;
  int chart = 0;

  [[nodiscard]] State map(const std::function<MPoly(const MPoly&)>& op) const {
    State s = *this;
    for (MPoly* p : {&s.fn, &s.fd, &s.gn, &s.gd, &s.xn, &s.xd, &s.yn, &s.yd}) *p = op(*p);
    return s;
  }
};

std::string point_string(const MPoly& pu, const MPoly& pv) {
  return "(u,v)=(" + pu.to_string() + "," + pv.to_string() + ")";
}

class Resolver {
 public:
  Resolver(const MPoly& f, const MPoly& g, const ResolveOptions& options) : f_(f), g_(g), options_(options) {}

  Resolution run() {
    const int df = f_.total_degree();
    const int dg = g_.total_degree();
    State a;
    State b;
    auto homog = [](const MPoly& p, int d, bool chart_a) {
      MPoly out;
      for (const auto& [e, c] : p.terms()) {
        int i = e[static_cast<int>(Var::x)];
        int j = e[static_cast<int>(Var::y)];
        int rest = d - i - j;
        if (chart_a) {
          out += MPoly::term(c, {{Var::u, j}, {Var::v, rest}});
        } else {
          out += MPoly::term(c, {{Var::u, i}, {Var::v, rest}});
        }
      }
      return out;
    };
    a.fn = homog(f_, df, true);
    a.fd = V.pow(static_cast<unsigned>(df));
    a.gn = homog(g_, dg, true);
    a.gd = V.pow(static_cast<unsigned>(dg));
    a.xn = MPoly(1);
    a.xd = V;
    a.yn = U;
    a.yd = V;
    a.chart = add_chart(-1, "A", a, "x=1/v, y=u/v");
    b.fn = homog(f_, df, false);
    b.fd = a.fd;
    b.gn = homog(g_, dg, false);
    b.gd = a.gd;
    b.xn = U;
    b.xd = V;
    b.yn = MPoly(1);
    b.yd = V;
    b.chart = add_chart(-1, "B", b, "x=u/v, y=1/v");

    int line = component(a, Var::v, -1, 0, "line at infinity");
    // the point [0:1:0] is the origin of chart B
    State bs = strip(b, Var::v);
    if (joint_at_origin(bs)) blow_up(bs, MPoly(0), MPoly(0), line, 1);
    return res_;
  }

 private:
  int add_chart(int parent, const std::string& kind, const State& s, const std::string& step) {
    Chart c;
    c.id = static_cast<int>(res_.charts.size());
    c.parent = parent;
    c.kind = kind;
    c.field = s.k.to_string();
    c.x_num = s.xn;
    c.x_den = s.xd;
    c.y_num = s.yn;
    c.y_den = s.yd;
    if (parent >= 0) c.history = res_.charts[static_cast<std::size_t>(parent)].history;
    c.history.push_back(step);
    res_.charts.push_back(c);
    return c.id;
  }

  // Removes common powers of e from both fractions.
  static State strip(const State& s, Var e) {
    State out = s;
    int a = ord_along(s.k, s.fn, e);
    int b = ord_along(s.k, s.fd, e);
    int m = std::min(a < 0 ? b : a, b);
    out.fn = shift_down(s.fn, e, m);
    out.fd = shift_down(s.fd, e, m);
    a = ord_along(s.k, s.gn, e);
    b = ord_along(s.k, s.gd, e);
    m = std::min(a < 0 ? b : a, b);
    out.gn = shift_down(s.gn, e, m);
    out.gd = shift_down(s.gd, e, m);
    return out;
  }

  static bool joint_at_origin(const State& s) {
    for (const MPoly* p : {&s.fn, &s.fd, &s.gn, &s.gd}) {
      MPoly at = p->evaluate(Var::u, 0).evaluate(Var::v, 0);
      if (!s.k.is_zero(at)) return false;
    }
    return true;
  }

  // Records the component {e = 0} of the chart state (unstripped) and
  // blows up the joint indeterminacy points on it. Returns its index.
  int component(const State& raw, Var e, int parent, int depth, const std::string& center) {
    const NumberField& k = raw.k;
    BoundaryComponent z;
    z.id = static_cast<int>(res_.components.size());
    z.parent = parent;
    z.chart = raw.chart;
    z.depth = depth;
    z.field = k.to_string();
    z.weight = k.degree();
    z.center = center;
    z.crit_mult = criticality_order(k, raw.fn, raw.fd, raw.gn, raw.gd, e);

    int ofn = ord_along(k, raw.fn, e);
    int ofd = ord_along(k, raw.fd, e);
    int ogn = ord_along(k, raw.gn, e);
    int ogd = ord_along(k, raw.gd, e);
    State s = strip(raw, e);
    Restricted fr = restrict_to(k, s.fn, s.fd, ofn < 0 ? ofd + 1 : ofn, ofd, e);
    Restricted gr = restrict_to(k, s.gn, s.gd, ogn < 0 ? ogd + 1 : ogn, ogd, e);
    z.f_infinite = fr.infinite;
    z.g_infinite = gr.infinite;
    z.f_constant = fr.constant;
    z.g_constant = gr.constant;
    z.pole_f = fr.pole;
    z.pole_g = gr.pole;
    Var c = other(e);
    auto to_tau = [&](const KPoly& p) { return kpoly_to_mpoly(p, c).rename(c, Var::tau); };
    if (!fr.infinite) {
      z.f_num = to_tau(fr.num);
      z.f_den = to_tau(fr.den);
    }
    if (!gr.infinite) {
      z.g_num = to_tau(gr.num);
      z.g_den = to_tau(gr.den);
    }
    if (fr.infinite || gr.infinite) {
      z.note = fr.infinite ? "maps into s=inf" : "maps into t=inf";
    } else if (fr.constant && gr.constant) {
      z.note = "maps to a point";
    } else if (fr.constant) {
      z.note = "maps onto a vertical line";
    } else if (gr.constant) {
      z.note = "maps onto a horizontal line";
    } else {
      z.germ = pole_count_germ(k, fr, gr);
      z.contributes = z.germ > 0;
      z.note = "maps onto a curve";
    }
    if (k.is_rational() && !fr.infinite && !gr.infinite && !(fr.constant && gr.constant)) {
      z.image = image_cycle(z.f_num, z.f_den, z.g_num, z.g_den);
      if (!fr.constant && !gr.constant && z.image && germ_at_infinity(t_primitive_part(*z.image)) != z.germ) {
        throw ValidationFailure("boundary germ disagrees with the implicit image");
      }
    }
    res_.components.push_back(z);
    const int id = z.id;

    // joint indeterminacy points of F and G on this component
    KPoly h;
    for (const MPoly* p : {&s.fn, &s.fd, &s.gn, &s.gd}) {
      KPoly kp = kpoly_from(k, p->evaluate(e, 0), c);
      h = kpoly_gcd(k, h, kp);
    }
    if (h.size() <= 1) return id;
    KPoly dh = kpoly_derivative(h);
    KPoly rep = kpoly_gcd(k, h, dh);
    if (rep.size() > 1) h = kpoly_monic(k, kpoly_divmod(k, h, rep).first);

    auto center_at = [&](const State& st, const MPoly& root) {
      MPoly pu = e == Var::u ? MPoly(0) : root;
      MPoly pv = e == Var::u ? root : MPoly(0);
      blow_up(st, pu, pv, id, depth + 1);
    };
    if (k.is_rational()) {
      MPoly hq = kpoly_to_mpoly(h, c);
      MPoly rest = hq;
      for (const auto& [root, mult] : rational_roots(hq, c)) {
        rest = divide_exact(rest, linear_factor(c, root));
        center_at(s, MPoly(root));
      }
      if (rest.degree(c) >= 1) {
        h = kpoly_from(k, rest * (Rational(1) / rest.leading_rational()), c);
      } else {
        return id;
      }
    }
    if (h.size() == 2) {
      center_at(s, k.reduce(-h[0]));
    } else {
      Extension ext = adjoin_roots(k, h);
      State lifted = s.map([&](const MPoly& p) { return lift_to(ext, p); });
      lifted.k = ext.field;
      center_at(lifted, ext.root);
    }
    return id;
  }

  void blow_up(const State& st, const MPoly& pu, const MPoly& pv, int parent, int depth) {
    const int saved_blowups = res_.blowups;
    const std::size_t saved_components = res_.components.size();
    const std::size_t saved_charts = res_.charts.size();
    try {
      if (++res_.blowups > options_.blowup_budget) throw DepthExceeded("blow-up budget exhausted");
      const std::string where = "blow up chart " + std::to_string(st.chart) + " at " + point_string(pu, pv);
      State c1 = st.map([&](const MPoly& p) {
        return st.k.reduce(p.substitute({{Var::u, pu + U}, {Var::v, pv + U * V}}));
      });
      c1.chart = add_chart(st.chart, "E1", c1, where + ", u->a+u, v->b+u*v");
      int id = component(c1, Var::u, parent, depth, "chart " + std::to_string(st.chart) + " " + point_string(pu, pv));
      State c2 = st.map([&](const MPoly& p) {
        return st.k.reduce(p.substitute({{Var::u, pu + U * V}, {Var::v, pv + V}}));
      });
      c2.chart = add_chart(st.chart, "E2", c2, where + ", u->a+u*v, v->b+v");
      State c2s = strip(c2, Var::v);
      if (joint_at_origin(c2s)) blow_up(c2s, MPoly(0), MPoly(0), id, depth + 1);
    } catch (const Split& sp) {
      if (!(sp.modulus == st.k.modulus())) throw;
      res_.blowups = saved_blowups;
      res_.components.resize(saved_components);
      res_.charts.resize(saved_charts);
      for (const NumberField& part : st.k.split(sp.factor)) {
        State sub = st.map([&](const MPoly& p) { return part.reduce(p); });
        sub.k = part;
        blow_up(sub, part.reduce(pu), part.reduce(pv), parent, depth);
      }
    }
  }

  MPoly f_;
  MPoly g_;
  ResolveOptions options_;
  Resolution res_;
};

}  // namespace

int criticality_order(const NumberField& k, const MPoly& fn, const MPoly& fd, const MPoly& gn, const MPoly& gd, Var e) {
  auto d = [](const MPoly& p, Var v) { return p.derivative(v); };
  MPoly fu = d(fn, Var::u) * fd - fn * d(fd, Var::u);
  MPoly fv = d(fn, Var::v) * fd - fn * d(fd, Var::v);
  MPoly gu = d(gn, Var::u) * gd - gn * d(gd, Var::u);
  MPoly gv = d(gn, Var::v) * gd - gn * d(gd, Var::v);
  MPoly num = k.reduce(fu * gv - fv * gu);
  int on = ord_along(k, num, e);
  if (on < 0) throw InvalidArgument("criticality order of a dependent pair");
  int ofn = ord_along(k, fn, e);
  int ofd = ord_along(k, fd, e);
  int ogn = ord_along(k, gn, e);
  int ogd = ord_along(k, gd, e);
  int pole_f = ofn < 0 ? 0 : std::max(0, ofd - ofn);
  int pole_g = ogn < 0 ? 0 : std::max(0, ogd - ogn);
  return on - 2 * ofd - 2 * ogd + 2 * pole_f + 2 * pole_g;
}

std::optional<MPoly> image_cycle(const MPoly& p1, const MPoly& q1, const MPoly& p2, const MPoly& q2) {
  if (q1.is_zero() || q2.is_zero()) throw DegenerateParametrization("zero denominator in a boundary parametrization");
  const MPoly s = var(Var::s);
  const MPoly t = var(Var::t);
  bool c1 = p1.degree(Var::tau) <= 0 && q1.degree(Var::tau) <= 0;
  bool c2 = p2.degree(Var::tau) <= 0 && q2.degree(Var::tau) <= 0;
  if (c1 && c2) return std::nullopt;
  MPoly a = p1 - s * q1;
  MPoly b = p2 - t * q2;
  MPoly w;
  if (c1) {
    // vertical line s = F, raised to the degree of G
    w = a.pow(static_cast<unsigned>(std::max(p2.degree(Var::tau), q2.degree(Var::tau))));
  } else if (c2) {
    w = b.pow(static_cast<unsigned>(std::max(p1.degree(Var::tau), q1.degree(Var::tau))));
  } else {
    w = resultant(a, b, Var::tau);
  }
  if (w.is_zero()) throw DegenerateParametrization("image cycle vanishes identically");
  return normalize(w);
}

int germ_at_infinity(const MPoly& w) {
  if (w.is_zero()) throw InvalidArgument("germ of the zero polynomial");
  if (w.degree(Var::t) <= 0) return 0;
  return w.degree(Var::s) - w.leading_coefficient(Var::t).degree(Var::s);
}

Resolution resolve(const MPoly& f, const MPoly& g, const ResolveOptions& options) {
  if (f.is_constant() || g.is_constant()) throw InvalidArgument("resolution needs nonconstant f and g");
  return Resolver(f, g, options).run();
}

InfinityValue irregularity_at_infinity(const MPoly& R, const Resolution& resolution) {
  InfinityValue out;
  out.delta1_affine = germ_at_infinity(t_primitive_part(R));
  for (const auto& z : resolution.components) {
    if (!z.contributes) continue;
    out.delta1_boundary += z.weight * z.crit_mult * z.germ;
    out.delta2 += z.weight * z.germ;
  }
  out.ir = out.delta1_affine + out.delta1_boundary + out.delta2;
  return out;
}

}  // namespace irr
