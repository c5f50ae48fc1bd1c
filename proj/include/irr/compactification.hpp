#pragma once

#include <optional>
#include <string>
#include <vector>

#include "irr/mpoly.hpp"
#include "irr/numfield.hpp"

namespace irr {

/// One affine chart of the blown-up plane. Coordinates are (u, v); the
/// coefficients live in `field`, whose generator is w.
struct Chart {
  int id = 0;
  int parent = -1;
  std::string kind;  // "A", "B" over the line at infinity, "E1"/"E2" after a blow-up
  std::string field;
  /// x and y as fractions of polynomials in (u, v, w).
  MPoly x_num, x_den, y_num, y_den;
  std::vector<std::string> history;
};

/// A component of the boundary divisor together with the restriction of the
/// map (F, G) to it. Restrictions are fractions in tau, or flagged infinite.
struct BoundaryComponent {
  int id = 0;
  int parent = -1;  // component containing the blown-up centre, -1 for the line at infinity
  int chart = 0;
  int depth = 0;
  std::string field;
  int weight = 1;  // number of conjugate components described by this record
  std::string center;

  bool f_infinite = false;
  bool g_infinite = false;
  bool f_constant = false;
  bool g_constant = false;
  MPoly f_num, f_den, g_num, g_den;  // in tau, over the field
  int pole_f = 0;
  int pole_g = 0;
  int crit_mult = 0;
  int germ = 0;  // intersection at (inf, inf) of the image with t = inf
  bool contributes = false;
  std::string note;
  std::optional<MPoly> image;  // defining polynomial of the image cycle, rational fields only
};

struct ResolveOptions {
  int blowup_budget = 64;
};

struct Resolution {
  std::vector<Chart> charts;
  std::vector<BoundaryComponent> components;
  int blowups = 0;
};

/// Blows up the plane at the points where both F and G are indeterminate,
/// recursively, and records every boundary component met along the way.
/// Throws DepthExceeded past the budget.
Resolution resolve(const MPoly& f, const MPoly& g, const ResolveOptions& options = {});

/// Order of vanishing along {e = 0} of dF ^ dG measured in coordinates
/// adapted to the target (1/F or 1/G where those have poles). The inputs are
/// numerator/denominator pairs in (u, v) over the field.
int criticality_order(const NumberField& k, const MPoly& fn, const MPoly& fd, const MPoly& gn, const MPoly& gd, Var e);

/// Image cycle of a parametrized curve tau -> (p1/q1, p2/q2): the primitive
/// part of Res_tau(p1 - s q1, p2 - t q2), or nullopt when the image is a point.
std::optional<MPoly> image_cycle(const MPoly& p1, const MPoly& q1, const MPoly& p2, const MPoly& q2);

/// Intersection number at (inf, inf) of the curve W = 0 with t = inf:
/// deg_s W - deg_s lc_t W.
int germ_at_infinity(const MPoly& w);

struct InfinityValue {
  int ir = 0;
  int delta1_affine = 0;
  int delta1_boundary = 0;
  int delta2 = 0;
};

/// Irregularity at infinity from the pushforward polynomial R of the affine
/// critical divisor and a resolution of (f, g).
InfinityValue irregularity_at_infinity(const MPoly& R, const Resolution& resolution);

}  // namespace irr
