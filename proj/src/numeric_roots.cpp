#include "irr/numeric_roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "irr/errors.hpp"

namespace irr {

namespace {

template <typename T>
std::complex<T> horner_t(const std::vector<std::complex<T>>& coeffs, std::complex<T> z) {
  std::complex<T> acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + *it;
  return acc;
}

// Starting points on circles whose radii come from the upper convex hull of
// (k, log|c_k|): one circle per hull edge, as many points as the edge is long.
// This keeps Aberth fast when root magnitudes differ by many orders.
template <typename T>
std::vector<std::complex<T>> newton_polygon_start(const std::vector<std::complex<T>>& c) {
  const std::size_t n = c.size() - 1;
  std::vector<std::size_t> hull;
  auto logabs = [&](std::size_t k) { return std::log(std::abs(c[k])); };
  for (std::size_t k = 0; k <= n; ++k) {
    if (std::abs(c[k]) == T(0)) continue;
    while (hull.size() >= 2) {
      std::size_t a = hull[hull.size() - 2];
      std::size_t b = hull.back();
      // drop b when it lies on or below the segment from a to k
      T cross = (logabs(b) - logabs(a)) * static_cast<T>(k - a) - (logabs(k) - logabs(a)) * static_cast<T>(b - a);
      if (cross <= 0) {
        hull.pop_back();
      } else {
        break;
      }
    }
    hull.push_back(k);
  }
  std::vector<std::complex<T>> z;
  z.reserve(n);
  for (std::size_t h = 0; h + 1 < hull.size(); ++h) {
    std::size_t a = hull[h];
    std::size_t b = hull[h + 1];
    T radius = std::exp((logabs(a) - logabs(b)) / static_cast<T>(b - a));
    for (std::size_t j = 0; j < b - a; ++j) {
      T angle = 2 * std::numbers::pi_v<T> * static_cast<T>(j) / static_cast<T>(b - a) +
                static_cast<T>(0.4) + static_cast<T>(h) * static_cast<T>(0.7);
      z.push_back(std::polar(radius, angle));
    }
  }
  return z;
}

template <typename T>
std::vector<std::complex<T>> aberth(std::vector<std::complex<T>> c, int max_iterations) {
  while (!c.empty() && std::abs(c.back()) == T(0)) c.pop_back();
  if (c.size() < 2) return {};
  std::vector<std::complex<T>> roots;
  // zero roots split off exactly
  std::size_t zeros = 0;
  while (zeros < c.size() && std::abs(c[zeros]) == T(0)) ++zeros;
  roots.assign(zeros, std::complex<T>(0, 0));
  c.erase(c.begin(), c.begin() + static_cast<long>(zeros));
  const std::size_t n = c.size() - 1;
  if (n == 0) return roots;

  const std::complex<T> lead = c.back();
  for (auto& k : c) k /= lead;
  if (n == 1) {
    roots.push_back(-c[0]);
    return roots;
  }

  std::vector<std::complex<T>> deriv(n);
  for (std::size_t k = 1; k <= n; ++k) deriv[k - 1] = c[k] * static_cast<T>(k);

  std::vector<std::complex<T>> z = newton_polygon_start(c);
  const T eps = std::numeric_limits<T>::epsilon();

  std::vector<bool> done(n, false);
  for (int iter = 0; iter < max_iterations; ++iter) {
    bool all_done = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i]) continue;
      std::complex<T> p = horner_t(c, z[i]);
      if (std::abs(p) == T(0)) {
        done[i] = true;
        continue;
      }
      std::complex<T> ratio = p / horner_t(deriv, z[i]);
      std::complex<T> sum = 0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j != i) sum += T(1) / (z[i] - z[j]);
      }
      std::complex<T> step = ratio / (T(1) - ratio * sum);
      if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) step = ratio;
      z[i] -= step;
      if (std::abs(step) <= 10 * eps * std::abs(z[i])) {
        done[i] = true;
      } else {
        all_done = false;
      }
    }
    if (all_done) {
      roots.insert(roots.end(), z.begin(), z.end());
      return roots;
    }
  }
  // Clustered roots converge slowly; accept if the componentwise backward error is small.
  for (const auto& zi : z) {
    T scale = 0;
    T az = std::abs(zi);
    T power = 1;
    for (std::size_t k = 0; k <= n; ++k) {
      scale += std::abs(c[k]) * power;
      power *= az;
    }
    if (std::abs(horner_t(c, zi)) > std::sqrt(eps) * scale) throw NonConvergence("Aberth iteration did not converge");
  }
  roots.insert(roots.end(), z.begin(), z.end());
  return roots;
}

}  // namespace

Complex horner(std::span<const Complex> coeffs, Complex z) {
  Complex acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + *it;
  return acc;
}

std::vector<Complex> complex_roots(std::span<const Complex> coeffs, int max_iterations) {
  return aberth(std::vector<Complex>(coeffs.begin(), coeffs.end()), max_iterations);
}

std::vector<ComplexLD> complex_roots_ld(std::span<const ComplexLD> coeffs, int max_iterations) {
  return aberth(std::vector<ComplexLD>(coeffs.begin(), coeffs.end()), max_iterations);
}

}  // namespace irr
