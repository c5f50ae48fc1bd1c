#pragma once

#include <cstdint>
#include <vector>

#include "irr/mpoly.hpp"
#include "irr/place.hpp"

namespace irr {

/// J = f_x g_y - f_y g_x.
MPoly jacobian(const MPoly& f, const MPoly& g);

/// True when f and g are algebraically dependent, i.e. J vanishes identically.
inline bool dependence_test(const MPoly& jac) { return jac.is_zero(); }

/// Product of (s - f(P))^mult(P) over the points of {J = 0, g = t0}, computed
/// as the characteristic polynomial of multiplication by f on Q[x,y]/(J, g - t0).
/// Throws BadSample when the system is not zero-dimensional.
MPoly fiber_charpoly(const MPoly& f, const MPoly& g, const MPoly& jac, const Rational& t0);

struct PushforwardOptions {
  std::uint64_t seed = 0;
  int max_bad_samples = 20;
  int validation_samples = 3;
};

/// Defining polynomial in (s,t) of the image of the critical divisor under
/// (f,g), with horizontal line components removed. Vertical lines {s = c}
/// remain as content with respect to t.
struct PushforwardPoly {
  MPoly R;
  int deg_s_bound = 0;
  int deg_t_bound = 0;
  int generic_dim = 0;  // degree of R in s
  std::vector<Rational> samples_used;
  std::vector<Rational> validation_samples;
  bool escalated = false;
};

/// Reconstructs R by sampling fiber_charpoly at pseudo-random t0 and
/// interpolating each coefficient as a rational function of t. Validated at
/// fresh samples. Throws ValidationFailure when the check still fails after
/// one doubling of the degree bounds.
PushforwardPoly pushforward_polynomial(const MPoly& f, const MPoly& g, const MPoly& jac,
                                       const PushforwardOptions& options = {});

/// True when R(s,t0) and the fiber characteristic polynomial agree up to a
/// rational unit.
bool agrees_with_fiber(const MPoly& R, const MPoly& fiber, const Rational& t0);

/// Primitive part with respect to t: removes the vertical line components.
MPoly t_primitive_part(const MPoly& R);

/// Leading coefficient in t of the t-primitive part, a polynomial in s.
MPoly leading_t_coefficient(const MPoly& R);

/// Intersection number at (c, inf) of the curve R = 0 with the line t = inf.
int delta1_finite_germ(const MPoly& R, const Place& place);

struct PlaceValue {
  Place place;
  int ir = 0;
  int delta1 = 0;
  int delta2 = 0;
};

/// All finite places where the germ of R is nonzero, read off from the
/// squarefree decomposition of the leading t-coefficient. Rational roots are
/// split off as separate places.
std::vector<PlaceValue> profile_finite(const MPoly& R);

}  // namespace irr
