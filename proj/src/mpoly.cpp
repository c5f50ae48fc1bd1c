#include "irr/mpoly.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "irr/errors.hpp"

namespace irr {

std::string var_name(Var v) {
  switch (v) {
    case Var::s: return "s";
    case Var::t: return "t";
    case Var::x: return "x";
    case Var::y: return "y";
    case Var::tau: return "tau";
    case Var::u: return "u";
    case Var::v: return "v";
    case Var::w: return "w";
  }
  return "?";
}

namespace {

constexpr int idx(Var v) { return static_cast<int>(v); }

Exponents add_exponents(const Exponents& a, const Exponents& b) {
  Exponents r{};
  for (int i = 0; i < kNumVars; ++i) r[i] = static_cast<std::uint16_t>(a[i] + b[i]);
  return r;
}

}  // namespace

MPoly::MPoly(long c) {
  if (c != 0) terms_.emplace(Exponents{}, Rational(c));
}

MPoly::MPoly(const Rational& c) {
  if (c != 0) {
    Rational k = c;
    k.canonicalize();
    terms_.emplace(Exponents{}, k);
  }
}

MPoly MPoly::variable(Var v) {
  Exponents e{};
  e[idx(v)] = 1;
  return monomial(e, 1);
}

MPoly MPoly::monomial(const Exponents& e, const Rational& c) {
  MPoly p;
  if (c != 0) {
    Rational k = c;
    k.canonicalize();
    p.terms_.emplace(e, k);
  }
  return p;
}

MPoly MPoly::term(const Rational& c, std::initializer_list<std::pair<Var, int>> powers) {
  Exponents e{};
  for (auto [v, k] : powers) e[idx(v)] = static_cast<std::uint16_t>(e[idx(v)] + k);
  return monomial(e, c);
}

bool MPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponents{});
}

Rational MPoly::constant_value() const {
  if (terms_.empty()) return 0;
  if (!is_constant()) throw InvalidArgument("constant_value of non-constant polynomial");
  return terms_.begin()->second;
}

int MPoly::degree(Var v) const {
  if (terms_.empty()) return -1;
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e[idx(v)]));
  return d;
}

int MPoly::min_degree(Var v) const {
  if (terms_.empty()) return -1;
  int d = 1 << 30;
  for (const auto& [e, c] : terms_) d = std::min(d, static_cast<int>(e[idx(v)]));
  return d;
}

int MPoly::total_degree() const {
  if (terms_.empty()) return -1;
  int d = 0;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (auto k : e) s += k;
    d = std::max(d, s);
  }
  return d;
}

std::vector<Var> MPoly::variables() const {
  std::vector<Var> out;
  for (int i = 0; i < kNumVars; ++i) {
    auto v = static_cast<Var>(i);
    if (degree(v) > 0) out.push_back(v);
  }
  return out;
}

const Rational& MPoly::leading_rational() const {
  if (terms_.empty()) throw InvalidArgument("leading coefficient of zero polynomial");
  return terms_.begin()->second;
}

const Exponents& MPoly::leading_exponents() const {
  if (terms_.empty()) throw InvalidArgument("leading term of zero polynomial");
  return terms_.begin()->first;
}

std::vector<MPoly> MPoly::coefficients(Var v) const {
  std::vector<MPoly> out(static_cast<std::size_t>(std::max(degree(v), 0)) + (terms_.empty() ? 0 : 1));
  for (const auto& [e, c] : terms_) {
    Exponents r = e;
    int k = r[idx(v)];
    r[idx(v)] = 0;
    out[static_cast<std::size_t>(k)].terms_.emplace(r, c);
  }
  return out;
}

MPoly MPoly::from_coefficients(Var v, const std::vector<MPoly>& coeffs) {
  MPoly out;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    for (const auto& [e, c] : coeffs[k].terms_) {
      Exponents r = e;
      r[idx(v)] = static_cast<std::uint16_t>(r[idx(v)] + k);
      out.add_term(r, c);
    }
  }
  return out;
}

MPoly MPoly::coefficient(Var v, int k) const {
  MPoly out;
  for (const auto& [e, c] : terms_) {
    if (e[idx(v)] != k) continue;
    Exponents r = e;
    r[idx(v)] = 0;
    out.terms_.emplace(r, c);
  }
  return out;
}

MPoly MPoly::leading_coefficient(Var v) const { return coefficient(v, degree(v)); }

MPoly MPoly::derivative(Var v) const {
  MPoly out;
  for (const auto& [e, c] : terms_) {
    int k = e[idx(v)];
    if (k == 0) continue;
    Exponents r = e;
    r[idx(v)] = static_cast<std::uint16_t>(k - 1);
    out.add_term(r, c * k);
  }
  return out;
}

MPoly MPoly::evaluate(Var v, const Rational& value) const {
  MPoly out;
  std::vector<Rational> powers{Rational(1)};
  for (const auto& [e, c] : terms_) {
    int k = e[idx(v)];
    while (static_cast<int>(powers.size()) <= k) powers.push_back(powers.back() * value);
    Exponents r = e;
    r[idx(v)] = 0;
    out.add_term(r, c * powers[static_cast<std::size_t>(k)]);
  }
  return out;
}

MPoly MPoly::substitute(Var v, const MPoly& q) const { return substitute({{v, q}}); }

MPoly MPoly::substitute(const std::vector<std::pair<Var, MPoly>>& subs) const {
  std::vector<std::vector<MPoly>> powers(subs.size(), std::vector<MPoly>{MPoly(1)});
  MPoly out;
  for (const auto& [e, c] : terms_) {
    Exponents r = e;
    MPoly piece = MPoly::monomial(Exponents{}, c);
    for (std::size_t i = 0; i < subs.size(); ++i) {
      int vi = idx(subs[i].first);
      int k = r[vi];
      r[vi] = 0;
      auto& pw = powers[i];
      while (static_cast<int>(pw.size()) <= k) pw.push_back(pw.back() * subs[i].second);
      if (k > 0) piece = piece * pw[static_cast<std::size_t>(k)];
    }
    piece = piece * MPoly::monomial(r, 1);
    out += piece;
  }
  return out;
}

MPoly MPoly::rename(Var from, Var to) const {
  if (from == to) return *this;
  MPoly out;
  for (const auto& [e, c] : terms_) {
    Exponents r = e;
    r[idx(to)] = static_cast<std::uint16_t>(r[idx(to)] + r[idx(from)]);
    r[idx(from)] = 0;
    out.add_term(r, c);
  }
  return out;
}

Rational MPoly::evaluate_all(const std::array<Rational, kNumVars>& point) const {
  Rational sum = 0;
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (int i = 0; i < kNumVars; ++i) {
      for (int k = 0; k < e[i]; ++k) term *= point[i];
    }
    sum += term;
  }
  return sum;
}

MPoly MPoly::pow(unsigned n) const {
  MPoly result(1);
  MPoly base = *this;
  while (n > 0) {
    if (n & 1U) result = result * base;
    n >>= 1U;
    if (n > 0) base = base * base;
  }
  return result;
}

void MPoly::add_term(const Exponents& e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MPoly& MPoly::operator+=(const MPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MPoly& MPoly::operator*=(const MPoly& o) {
  *this = *this * o;
  return *this;
}

MPoly& MPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, coef] : terms_) coef *= c;
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  MPoly out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) out.add_term(add_exponents(ea, eb), ca * cb);
  }
  return out;
}

MPoly operator-(const MPoly& a) {
  MPoly out = a;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

std::string MPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    bool is_const = (e == Exponents{});
    Rational mag = abs(c);
    if (c < 0) {
      os << "-";
    } else if (!first) {
      os << "+";
    }
    first = false;
    bool need_star = false;
    if (mag != 1 || is_const) {
      os << mag.get_str();
      need_star = true;
    }
    for (int i = 0; i < kNumVars; ++i) {
      if (e[i] == 0) continue;
      if (need_star) os << "*";
      os << var_name(static_cast<Var>(i));
      if (e[i] > 1) os << "^" << e[i];
      need_star = true;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const MPoly& p) { return os << p.to_string(); }

}  // namespace irr
