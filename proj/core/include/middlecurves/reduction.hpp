#ifndef MIDDLECURVES_REDUCTION_HPP
#define MIDDLECURVES_REDUCTION_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "middlecurves/errors.hpp"
#include "middlecurves/geometry.hpp"
#include "middlecurves/middle.hpp"

namespace middlecurves {

/// A shortest-common-supersequence question: does a supersequence of all
/// `sequences` (over the alphabet {A, B}) of length at most t exist?
struct ScsInstance {
  std::vector<std::string> sequences;
  std::size_t t = 0;
};

struct ScsResult {
  bool feasible = false;
  std::size_t scs_length = 0;
  /// A shortest common supersequence, lexicographically smallest among the
  /// shortest. Present regardless of feasibility.
  std::string witness;
};

/// The seven fixed 1-D gadget coordinates.
namespace gadget {
inline constexpr double kPm3 = -3.0;
inline constexpr double kP3 = 3.0;
inline constexpr double kPm1 = -1.0;
inline constexpr double kP1 = 1.0;
inline constexpr double kP0 = 0.0;
inline constexpr double kP2 = 2.0;
inline constexpr double kPm2 = -2.0;
/// Vertices per encoded character: p0, t alternation pairs, the three
/// letter-gadget vertices, t alternation pairs, p0.
inline constexpr std::size_t block_length(std::size_t t) { return 4 * t + 5; }
}  // namespace gadget

/// One middle-curve instance produced by the reduction for a particular
/// split t = a + b: the encoded sequence curves G, the guard curves A^a and
/// B^b, and the fixed distance bound 1.
struct ReductionInstance {
  std::vector<std::string> sequences;
  std::size_t t = 0;
  std::size_t a = 0;
  std::size_t b = 0;
  CurveSet gadget_curves;  // eta(S_1), ..., eta(S_n)
  Curve a_curve;
  Curve b_curve;
  double delta = 1.0;

  /// G followed by A^a and B^b, the set the solvers run on.
  CurveSet all_curves() const;
};

/// Maps a sequence over {A, B} to its 1-D gadget curve:
///   A -> p0 (p-1 p1)^t  p-2 p-3 p-2  (p1 p-1)^t p0
///   B -> p0 (p1 p-1)^t  p2 p3 p2     (p-1 p1)^t p0
/// concatenated per character verbatim, duplicate p0 junctions kept.
Curve encode_sequence(const std::string& s, std::size_t t,
                      const std::string& id = "eta");

/// Guard curves A^a = p1 (p-3 p1)^a and B^b = p-1 (p3 p-1)^b.
std::pair<Curve, Curve> build_guard_curves(std::size_t a, std::size_t b);

/// All splits (a, b) with a + b = t, in order of increasing a.
std::vector<std::pair<std::size_t, std::size_t>> enumerate_it(std::size_t t);

ReductionInstance make_reduction_instance(const std::vector<std::string>& sequences,
                                          std::size_t t, std::size_t a,
                                          std::size_t b);

/// Builds the canonical middle curve for a supersequence s*: p0 at odd
/// positions, p-2 / p2 at even positions per the letters of s*, with
/// provenance drawn from the gadget curves so that, whenever per-curve
/// embeddings of the sequences into s* can jointly consume every letter,
/// the result verifies as a restricted middle curve at delta = 1. Letters
/// no embedding consumes are given a deterministic fallback provenance.
/// Throws std::invalid_argument if the letter counts of s* do not match
/// (a, b) of the instance.
ProvenancedCurve supersequence_to_middle(const std::string& sstar,
                                         const ReductionInstance& instance);

/// Recovers the encoded sequence from a middle curve: partitions the
/// vertices of m by the guard vertices they are matched to in witness
/// matchings against A^a and B^b, checks the letter partitions are
/// disjoint, and emits one letter per partition in order along m.
/// Preconditions d_DF(m, A^a) <= 1 and d_DF(m, B^b) <= 1 are checked.
std::string decode_middle_to_sequence(const Curve& m, std::size_t a,
                                      std::size_t b);

/// Exact SCS decision via breadth-first search over per-sequence position
/// vectors.
ScsResult scs_brute_force(const ScsInstance& inst);

struct EquivalenceResult {
  bool scs_answer = false;
  bool middle_answer = false;
};

/// Runs both sides of the reduction: the SCS oracle, and the disjunction
/// over (a, b) in I_t of middle-curve feasibility at delta = 1 with
/// ell = 2t + 1 under the requested variant. t = 0 with non-empty
/// sequences is treated as trivially infeasible on the middle side.
EquivalenceResult reduction_equivalence(const ScsInstance& inst, Variant variant,
                                        const enumeration_limits& limits = {});

}  // namespace middlecurves

#endif  // MIDDLECURVES_REDUCTION_HPP
