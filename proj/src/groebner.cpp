#include "irr/groebner.hpp"

#include <algorithm>
#include <set>

#include "irr/errors.hpp"

namespace irr {

Poly2 to_poly2(const MPoly& p) {
  Poly2 out;
  for (const auto& [e, c] : p.terms()) {
    for (int i = 0; i < kNumVars; ++i) {
      if (i != static_cast<int>(Var::x) && i != static_cast<int>(Var::y) && e[i] != 0) {
        throw InvalidArgument("Groebner input must involve only x and y");
      }
    }
    out.emplace(Mono2{e[static_cast<int>(Var::x)], e[static_cast<int>(Var::y)]}, c);
  }
  return out;
}

MPoly from_poly2(const Poly2& p) {
  MPoly out;
  for (const auto& [m, c] : p) out += MPoly::term(c, {{Var::x, m.a}, {Var::y, m.b}});
  return out;
}

namespace {

bool mono_divides(const Mono2& d, const Mono2& m) { return d.a <= m.a && d.b <= m.b; }

Mono2 mono_lcm(const Mono2& l, const Mono2& r) { return {std::max(l.a, r.a), std::max(l.b, r.b)}; }

// p -= c * m * q
void sub_scaled(Poly2& p, const Rational& c, const Mono2& m, const Poly2& q) {
  for (const auto& [mq, cq] : q) {
    Mono2 key{mq.a + m.a, mq.b + m.b};
    auto [it, inserted] = p.try_emplace(key, -c * cq);
    if (!inserted) {
      it->second -= c * cq;
      if (it->second == 0) p.erase(it);
    }
  }
}

void make_monic(Poly2& p) {
  if (p.empty()) return;
  Rational lc = p.begin()->second;
  if (lc == 1) return;
  for (auto& [m, c] : p) c /= lc;
}

Poly2 reduce_full(Poly2 p, const std::vector<Poly2>& basis) {
  Poly2 rem;
  while (!p.empty()) {
    auto it = p.begin();
    const Mono2 m = it->first;
    const Rational c = it->second;
    bool reduced = false;
    for (const auto& g : basis) {
      if (g.empty()) continue;
      const Mono2& lm = g.begin()->first;
      if (mono_divides(lm, m)) {
        sub_scaled(p, c / g.begin()->second, Mono2{m.a - lm.a, m.b - lm.b}, g);
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      rem.emplace(m, c);
      p.erase(p.begin());
    }
  }
  return rem;
}

Poly2 s_polynomial(const Poly2& f, const Poly2& g) {
  const Mono2& lf = f.begin()->first;
  const Mono2& lg = g.begin()->first;
  Mono2 l = mono_lcm(lf, lg);
  Poly2 out;
  sub_scaled(out, Rational(-1) / f.begin()->second, Mono2{l.a - lf.a, l.b - lf.b}, f);
  sub_scaled(out, Rational(1) / g.begin()->second, Mono2{l.a - lg.a, l.b - lg.b}, g);
  return out;
}

struct Pair {
  Mono2 lcm;
  std::size_t i;
  std::size_t j;
};

}  // namespace

GroebnerBasis GroebnerBasis::compute(const std::vector<MPoly>& gens, const GroebnerOptions& options) {
  std::vector<Poly2> basis;
  for (const auto& g : gens) {
    Poly2 p = reduce_full(to_poly2(g), basis);
    if (p.empty()) continue;
    make_monic(p);
    basis.push_back(std::move(p));
  }
  if (basis.empty()) throw InvalidArgument("Groebner basis of the zero ideal");

  std::vector<Pair> pairs;
  auto add_pairs_for = [&](std::size_t k) {
    for (std::size_t i = 0; i < k; ++i) {
      if (basis[i].empty()) continue;
      pairs.push_back({mono_lcm(basis[i].begin()->first, basis[k].begin()->first), i, k});
    }
  };
  for (std::size_t k = 1; k < basis.size(); ++k) add_pairs_for(k);

  std::size_t processed = 0;
  GrevlexGreater greater;
  while (!pairs.empty()) {
    if (++processed > options.pair_budget) throw ResourceLimit("Groebner pair budget exhausted");
    // normal selection strategy: smallest lcm first
    auto best = std::min_element(pairs.begin(), pairs.end(),
                                 [&](const Pair& l, const Pair& r) { return greater(r.lcm, l.lcm); });
    Pair pr = *best;
    pairs.erase(best);
    const Poly2& f = basis[pr.i];
    const Poly2& g = basis[pr.j];
    if (f.empty() || g.empty()) continue;
    const Mono2& lf = f.begin()->first;
    const Mono2& lg = g.begin()->first;
    // coprime leading monomials: the S-polynomial reduces to zero
    if ((lf.a == 0 || lg.a == 0) && (lf.b == 0 || lg.b == 0)) continue;
    Poly2 h = reduce_full(s_polynomial(f, g), basis);
    if (h.empty()) continue;
    make_monic(h);
    if (h.begin()->first == Mono2{0, 0}) {
      basis.assign(1, Poly2{{Mono2{0, 0}, Rational(1)}});
      pairs.clear();
      break;
    }
    basis.push_back(std::move(h));
    add_pairs_for(basis.size() - 1);
  }

  // minimalize: drop generators whose leading monomial is divisible by another's
  std::vector<Poly2> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (basis[i].empty()) continue;
    const Mono2& li = basis[i].begin()->first;
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (j == i || basis[j].empty()) continue;
      const Mono2& lj = basis[j].begin()->first;
      if (mono_divides(lj, li) && (!(lj == li) || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(basis[i]);
  }
  // inter-reduce tails
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Poly2> others;
    for (std::size_t j = 0; j < minimal.size(); ++j) {
      if (j != i) others.push_back(minimal[j]);
    }
    Poly2 head{*minimal[i].begin()};
    Poly2 tail = minimal[i];
    tail.erase(tail.begin());
    Poly2 red = reduce_full(tail, others);
    for (auto& [m, c] : red) head.emplace(m, c);
    minimal[i] = std::move(head);
  }
  std::sort(minimal.begin(), minimal.end(),
            [&](const Poly2& l, const Poly2& r) { return greater(l.begin()->first, r.begin()->first); });

  GroebnerBasis out;
  out.gens_ = std::move(minimal);
  for (const auto& g : gens) {
    if (!out.normal_form(to_poly2(g)).empty()) {
      throw ValidationFailure("Groebner basis does not contain an input generator");
    }
  }
  return out;
}

std::vector<MPoly> GroebnerBasis::generators_mpoly() const {
  std::vector<MPoly> out;
  out.reserve(gens_.size());
  for (const auto& g : gens_) out.push_back(from_poly2(g));
  return out;
}

bool GroebnerBasis::is_unit() const {
  return gens_.size() == 1 && gens_[0].begin()->first == Mono2{0, 0};
}

Poly2 GroebnerBasis::normal_form(Poly2 p) const { return reduce_full(std::move(p), gens_); }

QuotientAlgebra::QuotientAlgebra(GroebnerBasis gb) : gb_(std::move(gb)) {
  if (!gb_.is_unit()) {
    int max_a = -1;
    int max_b = -1;
    for (const auto& g : gb_.generators()) {
      const Mono2& lm = g.begin()->first;
      if (lm.b == 0 && (max_a < 0 || lm.a < max_a)) max_a = lm.a;
      if (lm.a == 0 && (max_b < 0 || lm.b < max_b)) max_b = lm.b;
    }
    if (max_a < 0 || max_b < 0) throw NotZeroDimensional("ideal is not zero-dimensional");
    for (int a = 0; a < max_a; ++a) {
      for (int b = 0; b < max_b; ++b) {
        Mono2 m{a, b};
        bool in_staircase = true;
        for (const auto& g : gb_.generators()) {
          if (mono_divides(g.begin()->first, m)) {
            in_staircase = false;
            break;
          }
        }
        if (in_staircase) basis_.push_back(m);
      }
    }
    std::sort(basis_.begin(), basis_.end(), [](const Mono2& l, const Mono2& r) { return GrevlexGreater{}(r, l); });
  }
  mx_ = multiplication_matrix(var(Var::x));
  my_ = multiplication_matrix(var(Var::y));
}

std::vector<Rational> QuotientAlgebra::coordinates(const Poly2& nf) const {
  std::vector<Rational> out(basis_.size());
  for (const auto& [m, c] : nf) {
    auto it = std::find(basis_.begin(), basis_.end(), m);
    if (it == basis_.end()) throw ValidationFailure("normal form outside the staircase");
    out[static_cast<std::size_t>(it - basis_.begin())] = c;
  }
  return out;
}

RationalMatrix QuotientAlgebra::multiplication_matrix(const MPoly& p) const {
  const std::size_t n = basis_.size();
  RationalMatrix m(n, std::vector<Rational>(n));
  Poly2 pp = to_poly2(p);
  for (std::size_t j = 0; j < n; ++j) {
    Poly2 prod;
    sub_scaled(prod, Rational(-1), basis_[j], pp);
    auto col = coordinates(gb_.normal_form(std::move(prod)));
    for (std::size_t i = 0; i < n; ++i) m[i][j] = col[i];
  }
  return m;
}

RationalMatrix matmul(const RationalMatrix& a, const RationalMatrix& b) {
  const std::size_t n = a.size();
  const std::size_t k = b.size();
  const std::size_t m = k == 0 ? 0 : b[0].size();
  RationalMatrix out(n, std::vector<Rational>(m));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t l = 0; l < k; ++l) {
      if (a[i][l] == 0) continue;
      for (std::size_t j = 0; j < m; ++j) out[i][j] += a[i][l] * b[l][j];
    }
  }
  return out;
}

MPoly characteristic_polynomial(const RationalMatrix& a, Var v) {
  const std::size_t n = a.size();
  if (n == 0) return MPoly(1);
  // Berkowitz: coefficients high to low, extended one leading minor at a time
  std::vector<Rational> vect{Rational(1), -a[0][0]};
  for (std::size_t r = 1; r < n; ++r) {
    // column of the Toeplitz matrix: 1, -a_rr, -R C, -R A C, ..., -R A^{r-1} C
    std::vector<Rational> q(r + 2);
    q[0] = 1;
    q[1] = -a[r][r];
    std::vector<Rational> col(r);
    for (std::size_t i = 0; i < r; ++i) col[i] = a[i][r];
    for (std::size_t k = 2; k < r + 2; ++k) {
      Rational dot = 0;
      for (std::size_t i = 0; i < r; ++i) dot += a[r][i] * col[i];
      q[k] = -dot;
      if (k + 1 < r + 2) {
        std::vector<Rational> next(r);
        for (std::size_t i = 0; i < r; ++i) {
          Rational acc = 0;
          for (std::size_t j = 0; j < r; ++j) acc += a[i][j] * col[j];
          next[i] = acc;
        }
        col = std::move(next);
      }
    }
    std::vector<Rational> next(r + 2);
    for (std::size_t i = 0; i < r + 2; ++i) {
      Rational acc = 0;
      for (std::size_t j = 0; j <= std::min(i, r); ++j) acc += q[i - j] * vect[j];
      next[i] = acc;
    }
    vect = std::move(next);
  }
  MPoly out;
  for (std::size_t i = 0; i <= n; ++i) {
    out += MPoly::term(vect[i], {{v, static_cast<int>(n - i)}});
  }
  return out;
}

MPoly charpoly_of(const QuotientAlgebra& algebra, const MPoly& p) {
  return characteristic_polynomial(algebra.multiplication_matrix(p));
}

}  // namespace irr
