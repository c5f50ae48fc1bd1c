#pragma once

#include <cstdint>
#include <vector>

#include "irr/mpoly.hpp"
#include "irr/numeric_roots.hpp"
#include "irr/place.hpp"

namespace irr {

/// Value of f at an affine critical point on the level curve g = rho, with
/// the local intersection number of the critical divisor and the level curve.
struct CriticalValue {
  Complex value;
  int excess = 1;
  bool bounded = true;  // stays bounded when rho grows
};

/// Topological data of f restricted to the affine curve g = rho.
struct FiberTopologyEstimate {
  Rational rho;
  bool dependent = false;
  int degree_n = 0;       // generic number of points of {f = s0, g = rho}
  int total_excess = 0;   // sum of all excesses, vertical components included
  int chi_curve = 0;      // Euler characteristic of {g = rho}
  int deficit_bounded = 0;  // points lost to infinity over bounded values of f
  std::vector<CriticalValue> ram_pairs;
  // dependent pairs: the distinct values of f on the curve
  std::vector<CriticalValue> fiber_values;
  double confidence = 0.0;  // worst ratio between a classification margin and its threshold
};

/// Classification thresholds of the oracle. They are heuristics, not
/// certified bounds, and the report echoes them next to the oracle values.
struct OracleThresholds {
  static constexpr double bounded_rel = 0.05;  // below: the critical value stays bounded
  static constexpr double big_rel = 0.2;       // above: the critical value escapes
  static constexpr double eta = 1e-2;          // disk radius factor, radius eta * max(1, |c|)
  // Two far levels with different scale and sign, so that a big value at rho
  // cannot sit next to a different big value at both of them.
  static constexpr long far_ratio = 1000;
  static constexpr long far_ratio_alt = -1500;
  // Fallback between bounded_rel and big_rel: the growth exponent of a value,
  // measured at rho * (1 + nudge), in units of 1 / (number of distinct values).
  static constexpr double nudge = 1e-4;
  static constexpr double bounded_exponent = 0.3;
  static constexpr double escaping_exponent = 0.6;
};

struct OracleOptions {
  std::uint64_t seed = 0;
  double rho_magnitude = 1e6;
  int seeds = 3;
};

/// Numeric estimate of the topology of f on g = rho. Throws IllConditioned
/// when the data cannot be separated reliably (resample rho), including the
/// case of constant g.
FiberTopologyEstimate fiber_data(const MPoly& f, const MPoly& g, const Rational& rho, std::uint64_t seed = 0);

/// Euler characteristic of the part of g = rho lying over a small punctured
/// disk around the place. The oracle irregularity is its negative.
int chi_fiber(const FiberTopologyEstimate& estimate, const Place& place, double eta = OracleThresholds::eta);

/// A rho of the configured magnitude drawn from the seed.
Rational draw_rho(const MPoly& f, const MPoly& g, double magnitude, std::uint64_t seed);

struct OracleValue {
  Place place;
  int chi = 0;
  int ir = 0;
  bool stable = true;  // the independent rho samples agreed
  std::vector<int> per_seed;
};

/// Oracle irregularity at each place, from several independent rho samples.
std::vector<OracleValue> oracle_irregularity(const MPoly& f, const MPoly& g, const std::vector<Place>& places,
                                             const OracleOptions& options = {});

}  // namespace irr
