#ifndef MIDDLECURVES_FRECHET_HPP
#define MIDDLECURVES_FRECHET_HPP

#include <cstddef>
#include <limits>
#include <vector>

#include "middlecurves/geometry.hpp"

namespace middlecurves {

/// One matched vertex pair of a traversal. Indices are 1-based.
struct IndexPair {
  std::size_t i = 0;
  std::size_t j = 0;
  friend bool operator==(const IndexPair&, const IndexPair&) = default;
};

/// A monotone walk through the index grid of two curves: starts at (1,1),
/// ends at (m', m''), and each step advances i, j, or both by one.
struct Traversal {
  std::vector<IndexPair> pairs;
};

struct FrechetResult {
  double value = 0.0;
  double value_sq = 0.0;
  Traversal witness;
};

/// Discrete Fréchet distance with a witness traversal realizing it.
/// Ties during backtracking are broken preferring the diagonal step, then
/// advancing i, then advancing j, so witnesses are reproducible.
FrechetResult discrete_frechet(const Curve& p, const Curve& q);

/// True iff some traversal keeps every matched pair within delta. Computed
/// as boolean reachability over the grid of allowed cells, so boundary
/// cases on integral inputs are decided exactly.
bool discrete_frechet_decision(const Curve& p, const Curve& q, double delta);

/// Continuous Fréchet decision via free-space reachability. Interval
/// endpoint comparisons carry a small absolute tolerance (default 1e-9);
/// no exactness is claimed for the continuous case.
bool continuous_frechet_decision(const Curve& p, const Curve& q, double delta,
                                 double endpoint_eps = 1e-9);

/// Sentinel for "no cap" entries in constrained_discrete_decision.
inline constexpr std::size_t kNoCap = std::numeric_limits<std::size_t>::max();

/// Decision for traversals of p and q subject to side constraints:
///   - every matched pair is within delta,
///   - every pair in `forced` (1-based, strictly increasing i) lies on the
///     traversal,
///   - every pair (i, j) on the traversal satisfies j < column_caps[i-1]
///     (entries may be kNoCap; an empty vector means no caps at all).
/// Returns false immediately if the forced pairs are not non-decreasing in
/// j. Malformed forced pairs or caps raise std::invalid_argument.
///
/// This is the verification engine behind the ordered and restricted
/// middle-curve checks.
bool constrained_discrete_decision(const Curve& p, const Curve& q, double delta,
                                   const std::vector<IndexPair>& forced,
                                   const std::vector<std::size_t>& column_caps);

namespace detail {

/// Squared-threshold twins of the decisions above. The solvers search over
/// squared critical values, and squaring a square root can round below the
/// value it came from; these entry points avoid that round trip.
bool discrete_frechet_decision_sq(const Curve& p, const Curve& q,
                                  double delta_sq);
bool constrained_discrete_decision_sq(const Curve& p, const Curve& q,
                                      double delta_sq,
                                      const std::vector<IndexPair>& forced,
                                      const std::vector<std::size_t>& column_caps);

}  // namespace detail

}  // namespace middlecurves

#endif  // MIDDLECURVES_FRECHET_HPP
