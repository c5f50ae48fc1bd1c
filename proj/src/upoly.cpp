#include "irr/upoly.hpp"

#include <algorithm>

#include "irr/errors.hpp"

namespace irr {

QPoly::QPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

QPoly::QPoly(long c) {
  if (c != 0) c_.emplace_back(c);
}

void QPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

QPoly QPoly::from_mpoly(const MPoly& p, Var v) {
  std::vector<Rational> c;
  for (const auto& k : p.coefficients(v)) {
    if (!k.is_constant()) throw InvalidArgument("expected a univariate polynomial");
    c.push_back(k.constant_value());
  }
  return QPoly(std::move(c));
}

MPoly QPoly::to_mpoly(Var v) const {
  MPoly out;
  for (std::size_t k = 0; k < c_.size(); ++k) out += MPoly::term(c_[k], {{v, static_cast<int>(k)}});
  return out;
}

Rational QPoly::evaluate(const Rational& t) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

QPoly operator+(const QPoly& a, const QPoly& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a[i] + b[i];
  return QPoly(std::move(c));
}

QPoly operator-(const QPoly& a, const QPoly& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a[i] - b[i];
  return QPoly(std::move(c));
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  return QPoly(std::move(c));
}

QPoly operator*(const Rational& k, const QPoly& a) {
  std::vector<Rational> c = a.c_;
  for (auto& x : c) x *= k;
  return QPoly(std::move(c));
}

std::pair<QPoly, QPoly> QPoly::divmod(const QPoly& a, const QPoly& b) {
  if (b.is_zero()) throw InvalidArgument("division by the zero polynomial");
  std::vector<Rational> r = a.c_;
  const int db = b.degree();
  if (a.degree() < db) return {QPoly(), a};
  std::vector<Rational> q(static_cast<std::size_t>(a.degree() - db + 1));
  const Rational lb = b.leading();
  for (int k = a.degree(); k >= db; --k) {
    Rational coef = r[static_cast<std::size_t>(k)] / lb;
    q[static_cast<std::size_t>(k - db)] = coef;
    if (coef == 0) continue;
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(k - db + j)] -= coef * b.c_[static_cast<std::size_t>(j)];
  }
  return {QPoly(std::move(q)), QPoly(std::move(r))};
}

QPoly QPoly::gcd(QPoly a, QPoly b) {
  while (!b.is_zero()) {
    QPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return (Rational(1) / a.leading()) * a;
}

QPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  // Newton divided differences
  const std::size_t n = xs.size();
  std::vector<Rational> dd = ys;
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t i = n - 1; i >= level; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level]);
      if (i == level) break;
    }
  }
  QPoly out;
  for (std::size_t k = n; k-- > 0;) {
    out = out * QPoly(std::vector<Rational>{-xs[k], Rational(1)}) + QPoly(std::vector<Rational>{dd[k]});
  }
  return out;
}

std::optional<std::pair<QPoly, QPoly>> rational_reconstruction(const std::vector<Rational>& xs,
                                                                const std::vector<Rational>& ys,
                                                                int num_bound, int den_bound) {
  QPoly modulus(1);
  for (const auto& x : xs) modulus = modulus * QPoly(std::vector<Rational>{-x, Rational(1)});
  QPoly interp = interpolate(xs, ys);
  // invariant: r_i = v_i * interp mod modulus
  QPoly r0 = modulus;
  QPoly r1 = interp;
  QPoly v0;
  QPoly v1(1);
  while (!r1.is_zero() && r1.degree() > num_bound) {
    auto [q, r] = QPoly::divmod(r0, r1);
    QPoly v = v0 - q * v1;
    r0 = std::move(r1);
    r1 = std::move(r);
    v0 = std::move(v1);
    v1 = std::move(v);
  }
  if (v1.is_zero() || v1.degree() > den_bound) return std::nullopt;
  for (const auto& x : xs) {
    if (v1.evaluate(x) == 0) return std::nullopt;
  }
  QPoly common = QPoly::gcd(r1, v1);
  if (!common.is_zero() && common.degree() > 0) {
    r1 = QPoly::divmod(r1, common).first;
    v1 = QPoly::divmod(v1, common).first;
  }
  Rational lc = v1.leading();
  QPoly num = (Rational(1) / lc) * r1;
  QPoly den = (Rational(1) / lc) * v1;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    if (num.evaluate(xs[k]) != ys[k] * den.evaluate(xs[k])) return std::nullopt;
  }
  return std::make_pair(num, den);
}

}  // namespace irr
