#pragma once

#include <complex>
#include <span>
#include <vector>

namespace irr {

using Complex = std::complex<double>;
using ComplexLD = std::complex<long double>;

/// All complex roots of sum_k coeffs[k] z^k (Aberth-Ehrlich iteration with
/// deterministic starting points on the circles given by the Newton polygon
/// of the coefficient magnitudes).
/// Leading zero coefficients are dropped. Throws NonConvergence after the
/// iteration cap.
std::vector<Complex> complex_roots(std::span<const Complex> coeffs, int max_iterations = 2000);

/// Same in long double, for coefficients beyond the range of double.
std::vector<ComplexLD> complex_roots_ld(std::span<const ComplexLD> coeffs, int max_iterations = 2000);

/// Horner evaluation, coefficients low to high.
Complex horner(std::span<const Complex> coeffs, Complex z);

}  // namespace irr
