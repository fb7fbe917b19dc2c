#ifndef MIDDLECURVES_APPROX_HPP
#define MIDDLECURVES_APPROX_HPP

#include <cstddef>

#include "middlecurves/errors.hpp"
#include "middlecurves/geometry.hpp"
#include "middlecurves/middle.hpp"

namespace middlecurves {

/// A (1, ell)-center curve together with its realized radius
/// max_P d_DF(center, P). The radius is always recomputed from the center,
/// never taken from the search that produced it.
struct CenterResult {
  Curve center;
  double radius = 0.0;
  double radius_sq = 0.0;
};

struct ApproxParams {
  std::size_t ell = 1;
  double eps = 0.5;
};

struct MiddleApproxResult {
  ProvenancedCurve middle;
  CenterResult center;
  /// max_P d_DF(middle, P); guaranteed <= 2 * center.radius.
  double realized_radius = 0.0;
  double realized_radius_sq = 0.0;
};

/// Snaps a center curve onto input vertices: for every center vertex, picks
/// the input vertex nearest to it among those within c.radius (ties broken
/// by curve order, then vertex index), and strings the picks together in
/// center order. The result M satisfies max_P d_DF(M, P) <= 2 * c.radius.
/// Throws std::invalid_argument naming the offending center vertex if some
/// ball contains no input vertex, which signals an understated radius.
ProvenancedCurve build_middle_from_center(const CenterResult& c,
                                          const CurveSet& ps);

/// Grid-search (1+eps)-approximation of the (1, ell)-center under the
/// discrete Fréchet distance, intended for desk scale (small ell, d <= 2,
/// small vertex counts). Trial radii are the pairwise vertex distances and
/// their halves, multiplicatively refined so consecutive trials differ by
/// at most a factor (1 + eps/2); for each trial r, candidate center
/// vertices form a regular grid of spacing eps*r/sqrt(d) covering balls of
/// radius (1+eps)*r around the input vertices, and a tuple is accepted when
/// max_P d_DF <= (1+eps)*r. Returns the accepted center at the smallest
/// feasible trial found by bisection over the trial list.
CenterResult center_grid_approx(const CurveSet& ps, std::size_t ell, double eps,
                                const enumeration_limits& limits = {});

/// Composition of center_grid_approx (run at eps/2) and
/// build_middle_from_center: max_P d_DF(result, P) <= (2 + eps) * OPT,
/// where OPT is the optimal radius over middle curves of complexity <= ell.
MiddleApproxResult middle_approx(const CurveSet& ps, const ApproxParams& params,
                                 const enumeration_limits& limits = {});

}  // namespace middlecurves

#endif  // MIDDLECURVES_APPROX_HPP
