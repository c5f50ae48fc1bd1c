// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "irr/dependent.hpp"
#include "irr/discriminant.hpp"
#include "irr/errors.hpp"
#include "irr/groebner.hpp"
#include "irr/oracle.hpp"
#include "irr/parser.hpp"
#include "irr/polyalg.hpp"
#include "irr/report.hpp"
#include "irr/upoly.hpp"

using namespace irr;

namespace {

// Collects failed expectations for one criterion.
struct Checker {
  std::vector<std::string> failures;
  int checks = 0;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok) failures.push_back(what);
  }
  template <typename A, typename B>
  void equal(const A& actual, const B& expected, const std::string& what) {
    std::ostringstream os;
    os << what << ": got " << actual << ", expected " << expected;
    expect(actual == expected, os.str());
  }
};

MPoly P(const std::string& text) { return parse_poly(text); }

const MPoly X = var(Var::x);
const MPoly Y = var(Var::y);
const MPoly S = var(Var::s);

Report analyze_text(const std::string& f, const std::string& g, bool oracle = false) {
  AnalyzeOptions o;
  o.oracle = oracle;
  return analyze(P(f), P(g), o);
}

std::string profile_string(const Report& r) {
  std::ostringstream os;
  os << "{";
  for (const auto& pv : r.finite_places) os << pv.place.to_string() << ":" << pv.ir << " ";
  os << "inf:" << r.infinity.ir << "}";
  return os.str();
}

MPoly random_poly(std::mt19937_64& rng, int max_degree, double density) {
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<int> deg(1, max_degree);
  while (true) {
    int d = deg(rng);
    MPoly p;
    for (int i = 0; i <= d; ++i) {
      for (int j = 0; i + j <= d; ++j) {
        if (i + j == 0 || unit(rng) > density) continue;
        int c = coeff(rng);
        if (c != 0) p += MPoly::term(c, {{Var::x, i}, {Var::y, j}});
      }
    }
    if (!p.is_constant()) return p;
  }
}

// Ten independent pairs of degree at most 3, fixed by the seed.
std::vector<std::pair<MPoly, MPoly>> random_independent_pairs() {
  std::mt19937_64 rng(20240601);
  std::vector<std::pair<MPoly, MPoly>> out;
  while (out.size() < 10) {
    MPoly f = random_poly(rng, 3, 0.5);
    MPoly g = random_poly(rng, 3, 0.5);
    if (dependence_test(jacobian(f, g))) continue;
    out.emplace_back(f, g);
  }
  return out;
}

struct CorpusPair {
  std::string name;
  MPoly f;
  MPoly g;
};

std::vector<CorpusPair> load_corpus(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open corpus " + path);
  std::vector<CorpusPair> out;
  for (std::string line; std::getline(in, line);) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto j = nlohmann::json::parse(line);
    out.push_back({j.value("name", ""), P(j["f"].get<std::string>()), P(j["g"].get<std::string>())});
  }
  return out;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// ---------------------------------------------------------------- criteria

void trivial_pair(Checker& c) {
  auto start = std::chrono::steady_clock::now();
  AnalyzeOptions o;
  o.at = {Place::at(0), Place::at(1), Place::at(-1), Place::at(Rational(1, 2))};
  Report r = analyze(P("x"), P("y"), o);
  c.expect(r.finite_places.empty(), "finite profile not empty: " + profile_string(r));
  c.equal(r.infinity.ir, 0, "IR at inf");
  for (const auto& pv : r.at) c.equal(pv.ir, 0, "IR at " + pv.place.to_string());
  c.expect(seconds_since(start) < 1.0, "runtime over 1 s");
}

void finite_distance(Checker& c) {
  auto start = std::chrono::steady_clock::now();
  AnalyzeOptions o;
  o.at = {Place::at(0), Place::at(1), Place::at(-1), Place::at(Rational(1, 2)), Place::infinity()};
  o.oracle = true;
  Report r = analyze(P("x"), P("y+x*y^2"), o);
  c.equal(r.ir_at(Place::at(0)), 1, "IR_0");
  c.equal(r.ir_at(Place::at(1)), 0, "IR_1");
  c.equal(r.ir_at(Place::at(-1)), 0, "IR_-1");
  c.equal(r.ir_at(Place::at(Rational(1, 2))), 0, "IR_1/2");
  c.equal(r.ir_at(Place::infinity()), 0, "IR_inf");
  c.equal(normalize(r.pushforward->R), parse_poly("4*s*t+1", {Var::s, Var::t}), "critical image");
  // the oracle's Euler characteristics: -1 near 0, 0 at infinity
  for (const auto& row : *r.oracle) {
    if (row.place == Place::at(0)) c.equal(row.chi, -1, "oracle chi near 0");
    if (row.place.is_infinity()) c.equal(row.chi, 0, "oracle chi at inf");
  }
  c.expect(r.oracle_agrees(), "oracle disagrees");
  c.expect(seconds_since(start) < 5.0, "runtime over 5 s");
}

void two_point_profile(Checker& c) {
  Report r = analyze_text("x", "y+x*(x-1)*y^2", true);
  c.equal(profile_string(r), std::string("{0:1 1:1 inf:0}"), "profile");
  c.equal(normalize(leading_t_coefficient(r.pushforward->R)), normalize(S * (S - 1)), "leading t-coefficient");
  c.expect(r.oracle_agrees(), "oracle disagrees");
}

void dependent_cusp(Checker& c) {
  Report r = analyze_text("x^2+y^3", "x^2+y^3", true);
  c.expect(r.dependent, "not detected as dependent");
  c.expect(r.chi_f && *r.chi_f == -1, "chi of the generic fibre is not -1");
  c.equal(r.infinity.ir, 1, "IR_inf");
  c.expect(r.finite_places.empty(), "finite profile not empty: " + profile_string(r));
  c.expect(r.oracle_agrees(), "oracle disagrees");
}

void dependent_slope(Checker& c) {
  Report r = analyze_text("x^2", "x^3", true);
  c.expect(r.dependent, "not detected as dependent");
  c.equal(normalize(*r.image_curve), parse_poly("s^3-t^2", {Var::s, Var::t}), "image curve");
  c.expect(r.chi_f && *r.chi_f == 1, "chi of the generic fibre is not 1");
  c.equal(r.infinity.ir, -3, "IR_inf");
  c.expect(r.finite_places.empty(), "finite profile not empty: " + profile_string(r));
  c.expect(r.oracle_agrees(), "oracle disagrees");
}

void dependent_diagonal(Checker& c) {
  Report r = analyze_text("x", "x", true);
  c.expect(r.dependent, "not detected as dependent");
  c.equal(r.infinity.ir, -1, "IR_inf");
  c.expect(r.finite_places.empty(), "finite profile not empty: " + profile_string(r));
  c.expect(r.oracle_agrees(), "oracle disagrees");
}

void untwisted(Checker& c) {
  std::mt19937_64 rng(777);
  for (int k = 0; k < 5; ++k) {
    MPoly f = random_poly(rng, 4, 0.5);
    AnalyzeOptions o;
    o.at = {Place::at(0), Place::at(1), Place::infinity()};
    Report r = analyze(f, MPoly(0), o);
    c.expect(r.finite_places.empty(), "f = " + f.to_string() + ": finite profile " + profile_string(r));
    c.equal(r.infinity.ir, 0, "f = " + f.to_string() + ": IR_inf");
    for (const auto& pv : r.at) c.equal(pv.ir, 0, "f = " + f.to_string() + ": IR at " + pv.place.to_string());
  }
}

void positivity(Checker& c) {
  for (const auto& [f, g] : random_independent_pairs()) {
    Report r = analyze(f, g);
    std::string tag = "(" + f.to_string() + ", " + g.to_string() + ")";
    for (const auto& pv : r.finite_places) c.expect(pv.ir >= 0, tag + " negative at " + pv.place.to_string());
    c.expect(r.infinity.ir >= 0, tag + " negative at inf");
  }
}

void oracle_concordance(Checker& c, const std::string& corpus_path) {
  auto start = std::chrono::steady_clock::now();
  std::vector<std::pair<MPoly, MPoly>> pairs;
  for (const auto& e : load_corpus(corpus_path)) pairs.emplace_back(e.f, e.g);
  for (const auto& p : random_independent_pairs()) pairs.push_back(p);
  for (const auto& [f, g] : pairs) {
    if (g.is_constant()) continue;  // the oracle needs a nonconstant g
    Report r = analyze(f, g, {.oracle = true});
    std::string tag = "(" + f.to_string() + ", " + g.to_string() + ")";
    c.expect(r.oracle_error.empty(), tag + ": " + r.oracle_error);
    for (const auto& row : *r.oracle) {
      c.expect(row.stable, tag + " oracle unstable at " + row.place.to_string());
      c.expect(row.ir == row.symbolic, tag + " at " + row.place.to_string() + ": oracle " + std::to_string(row.ir) +
                                           ", symbolic " + std::to_string(row.symbolic));
    }
  }
  c.expect(seconds_since(start) < 120.0, "runtime over 2 min");
}

void coordinate_invariance(Checker& c) {
  std::mt19937_64 rng(31337);
  std::uniform_int_distribution<int> small(-3, 3);
  for (const auto& [fs, gs] : {std::pair{"x", "y+x*y^2"}, std::pair{"x", "y+x*(x-1)*y^2"}}) {
    MPoly f = P(fs);
    MPoly g = P(gs);
    std::string reference = profile_string(analyze(f, g));
    for (int k = 0; k < 5; ++k) {
      // product of two shears and a translation: determinant 1
      int b = small(rng);
      int m = small(rng);
      if (b == 0 && m == 0) m = 1;
      MPoly nx = X + b * Y;
      MPoly ny = m * X + (1 + m * b) * Y;
      nx += MPoly(small(rng));
      ny += MPoly(small(rng));
      MPoly f2 = f.substitute({{Var::x, nx}, {Var::y, ny}});
      MPoly g2 = g.substitute({{Var::x, nx}, {Var::y, ny}});
      c.equal(profile_string(analyze(f2, g2)), reference,
              "profile after x -> " + nx.to_string() + ", y -> " + ny.to_string());
    }
  }
}

void interpolation_soundness(Checker& c, const std::string& corpus_path) {
  std::mt19937_64 rng(4242);
  std::uniform_int_distribution<long> fresh(20000000, 40000000);
  for (const auto& e : load_corpus(corpus_path)) {
    MPoly jac = jacobian(e.f, e.g);
    if (dependence_test(jac)) continue;
    PushforwardPoly push = pushforward_polynomial(e.f, e.g, jac);
    int matched = 0;
    for (int tries = 0; matched < 3 && tries < 20; ++tries) {
      Rational t0(fresh(rng));
      MPoly fiber;
      try {
        fiber = fiber_charpoly(e.f, e.g, jac, t0);
      } catch (const BadSample&) {
        continue;
      }
      c.expect(agrees_with_fiber(push.R, fiber, t0), e.name + ": R does not match the fibre at t = " + t0.get_str());
      // Bezout bound on the fibre algebra
      c.expect(fiber.degree(Var::s) <= jac.total_degree() * e.g.total_degree(), e.name + ": fibre algebra too large");
      ++matched;
    }
    c.equal(matched, 3, e.name + ": fresh samples checked");
    int total = 0;
    for (const auto& pv : profile_finite(push.R)) total += pv.ir * pv.place.orbit_size();
    c.equal(total, std::max(leading_t_coefficient(push.R).degree(Var::s), 0), e.name + ": sum rule");
  }
}

void algebra_core(Checker& c) {
  std::mt19937_64 rng(12);
  std::uniform_int_distribution<int> pick(-5, 5);
  // resultant multiplicativity in the second variable
  for (int k = 0; k < 30; ++k) {
    MPoly f = random_poly(rng, 3, 0.6);
    MPoly g = random_poly(rng, 2, 0.6);
    MPoly h = random_poly(rng, 3, 0.6);
    c.expect(resultant(f * g, h, Var::y) == resultant(f, h, Var::y) * resultant(g, h, Var::y),
             "Res(fg, h) != Res(f, h) Res(g, h) for " + f.to_string() + ", " + g.to_string() + ", " + h.to_string());
  }
  // Yun reconstruction
  for (int k = 0; k < 30; ++k) {
    MPoly a = random_poly(rng, 2, 0.6);
    MPoly b = random_poly(rng, 2, 0.6);
    MPoly p = MPoly(pick(rng) == 0 ? 1 : 3) * a * b.pow(2) * (X - pick(rng)).pow(3);
    c.expect(squarefree(p, Var::x).expand() == p, "squarefree decomposition does not expand back to " + p.to_string());
  }
  // Stickelberger on split systems with distinct x-coordinates
  for (int k = 0; k < 20; ++k) {
    int n = 1 + k % 5;
    std::vector<Rational> xs;
    std::vector<Rational> ys;
    while (static_cast<int>(xs.size()) < n) {
      Rational a(pick(rng), 1 + std::abs(pick(rng)));
      a.canonicalize();
      if (std::find(xs.begin(), xs.end(), a) != xs.end()) continue;
      xs.push_back(a);
      ys.emplace_back(pick(rng));
    }
    MPoly px(1);
    MPoly cx(1);
    MPoly cy(1);
    for (int i = 0; i < n; ++i) {
      px = px * (X - xs[static_cast<std::size_t>(i)]);
      cx = cx * (S - xs[static_cast<std::size_t>(i)]);
      cy = cy * (S - ys[static_cast<std::size_t>(i)]);
    }
    MPoly lagrange = interpolate(xs, ys).to_mpoly(Var::x);
    QuotientAlgebra alg(GroebnerBasis::compute({px, Y - lagrange}));
    c.equal(alg.dim(), static_cast<std::size_t>(n), "quotient dimension");
    c.expect(charpoly_of(alg, X) == cx, "charpoly of x on split system");
    c.expect(charpoly_of(alg, Y) == cy, "charpoly of y on split system");
  }
  // commuting multiplication matrices
  for (int k = 0; k < 20; ++k) {
    MPoly p = X * X + pick(rng) * X * Y + pick(rng) * Y + pick(rng);
    MPoly q = Y * Y * Y + pick(rng) * X * Y + pick(rng) * X + pick(rng) * Y + 1;
    QuotientAlgebra alg(GroebnerBasis::compute({p, q}));
    c.expect(matmul(alg.mx(), alg.my()) == matmul(alg.my(), alg.mx()), "M_x M_y != M_y M_x");
  }
}

}  // namespace

int main(int argc, char** argv) {
  std::string corpus = argc > 1 ? argv[1] : "corpus/bundled.jsonl";
  std::vector<std::pair<std::string, std::function<void(Checker&)>>> criteria = {
      {"trivial pair has a zero profile", trivial_pair},
      {"irregularity at finite distance", finite_distance},
      {"two-point profile", two_point_profile},
      {"dependent pair with chi -1", dependent_cusp},
      {"dependent pair with slope", dependent_slope},
      {"dependent pair with chi 1", dependent_diagonal},
      {"untwisted direct image is regular", untwisted},
      {"positivity on random independent pairs", positivity},
      {"oracle concordance", [&](Checker& c) { oracle_concordance(c, corpus); }},
      {"coordinate invariance", coordinate_invariance},
      {"interpolation soundness and sum rule", [&](Checker& c) { interpolation_soundness(c, corpus); }},
      {"algebra core properties", algebra_core},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Checker checker;
    auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].second(checker);
    } catch (const std::exception& e) {
      checker.failures.push_back(std::string("exception: ") + e.what());
    }
    double elapsed = seconds_since(start);
    bool ok = checker.failures.empty();
    failed += ok ? 0 : 1;
    std::cout << "criterion " << std::setw(2) << (i + 1) << ": " << (ok ? "PASS" : "FAIL") << "  " << std::fixed
              << std::setprecision(2) << elapsed << " s  " << criteria[i].first << " (" << checker.checks
              << " checks)\n";
    for (const auto& f : checker.failures) std::cout << "    " << f << "\n";
  }
  return failed == 0 ? 0 : 1;
}
