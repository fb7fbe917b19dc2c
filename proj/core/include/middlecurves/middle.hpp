#ifndef MIDDLECURVES_MIDDLE_HPP
#define MIDDLECURVES_MIDDLE_HPP

#include <optional>
#include <string>
#include <vector>

#include "middlecurves/errors.hpp"
#include "middlecurves/geometry.hpp"

namespace middlecurves {

/// Provenance of one middle-curve vertex: which input vertex it is a copy
/// of. Indices are 1-based.
struct VertexRef {
  std::string curve_id;
  std::size_t index = 0;
  friend bool operator==(const VertexRef&, const VertexRef&) = default;
};

/// The three middle-curve flavours, ordered from weakest to strongest:
/// every restricted middle curve is ordered, every ordered one is a middle
/// curve.
enum class Variant { kUnordered, kOrdered, kRestricted };

std::string to_string(Variant v);
std::optional<Variant> variant_from_string(const std::string& name);

/// A candidate middle curve: provenance references plus the geometric curve
/// they resolve to. Construct via resolve().
class ProvenancedCurve {
 public:
  /// Resolves refs against ps; throws std::invalid_argument on a dangling
  /// reference or an empty ref list.
  static ProvenancedCurve resolve(std::vector<VertexRef> refs,
                                  const CurveSet& ps,
                                  std::string id = "middle");

  const std::vector<VertexRef>& refs() const noexcept { return refs_; }
  const Curve& curve() const noexcept { return curve_; }
  std::size_t size() const noexcept { return refs_.size(); }

 private:
  ProvenancedCurve(std::vector<VertexRef> refs, Curve curve)
      : refs_(std::move(refs)), curve_(std::move(curve)) {}

  std::vector<VertexRef> refs_;
  Curve curve_;
};

struct SolveOutcome {
  bool feasible = false;
  std::optional<ProvenancedCurve> witness;
  /// Smallest delta at which the witness verifies under the requested
  /// variant (for the unordered variant this is max_P d_DF(witness, P)).
  std::optional<double> radius;
};

/// Checks whether m is a middle curve of ps at distance delta under the
/// given variant.
///
///   - Unordered: a plain discrete Fréchet decision against every curve.
///   - Ordered: per curve P_j, a constrained decision where matching m_i to
///     vertex k of P_j is allowed only if k is smaller than every later
///     provenance index of m into P_j.
///   - Restricted: the ordered caps plus, per curve P_j, forced self-match
///     cells for every vertex of m drawn from P_j.
bool verify(const ProvenancedCurve& m, const CurveSet& ps, double delta,
            Variant variant);

/// Exhaustive decision solver: enumerates candidate ref-tuples of length
/// 1..ell over the provenance-tagged vertex universe in (length, curve
/// order, vertex index) order and returns the first verifying candidate.
/// For the unordered variant the universe is first deduplicated by
/// geometric location. Candidates with equal consecutive refs are skipped;
/// they never help. Worst-case cost is O((mn)^ell * verification); a
/// frontier-based pruning of dead prefixes keeps structured instances far
/// below that, and `limits` caps the number of visited prefixes.
SolveOutcome brute_force_solve(const CurveSet& ps, double delta,
                               std::size_t ell, Variant variant,
                               const enumeration_limits& limits = {});

/// Exhaustive optimization: over all candidates of length <= ell, minimizes
/// the smallest delta at which the candidate verifies (searched over the
/// finite set of pairwise vertex distances). Ties are broken by enumeration
/// order.
SolveOutcome brute_force_optimize(const CurveSet& ps, std::size_t ell,
                                  Variant variant,
                                  const enumeration_limits& limits = {});

}  // namespace middlecurves

#endif  // MIDDLECURVES_MIDDLE_HPP
