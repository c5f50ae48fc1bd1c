#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "irr/mpoly.hpp"
#include "irr/place.hpp"

namespace irr {

/// Reduced equation of the image curve of a dependent pair (f, g).
struct ImageCurve {
  MPoly W;  // primitive, squarefree, in (s, t)
};

/// Eliminates (x, y) from (f - s, g - t) along two projections and keeps the
/// common squarefree part. Verified by exact vanishing at random points.
/// Throws EliminationFailure when verification fails.
ImageCurve image_curve(const MPoly& f, const MPoly& g, std::uint64_t seed = 0);

struct FiberSample {
  Rational x0;
  Rational y0;
  MPoly fiber;  // gcd(f - s0, g - t0)
  int chi = 0;
};

struct GenericFiberChi {
  int chi = 0;
  std::vector<FiberSample> samples;
};

/// Euler characteristic of the generic fibre of (f, g), from smooth sample
/// fibres: deg_y d - deg_x Res_y(d, d_y) after a shear making lc_y(d)
/// constant. Needs 5 concordant samples out of at most 25, else Instability.
GenericFiberChi chi_generic_fiber(const MPoly& f, const MPoly& g, std::uint64_t seed = 0);

/// Intersection number at (c, inf) of the image curve with t = inf.
int dependent_germ(const MPoly& W, const Place& place);

/// IR at the place for a dependent pair: -chi * germ.
int irregularity_dependent(const ImageCurve& image, const GenericFiberChi& chi, const Place& place);

/// Finite places where the image curve meets t = inf.
std::vector<std::pair<Place, int>> dependent_finite_germs(const MPoly& W);

}  // namespace irr
