#include "middlecurves/middle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>

#include "middlecurves/frechet.hpp"

namespace middlecurves {

std::string to_string(Variant v) {
  switch (v) {
    case Variant::kUnordered: return "unordered";
    case Variant::kOrdered: return "ordered";
    case Variant::kRestricted: return "restricted";
  }
  return "unordered";
}

std::optional<Variant> variant_from_string(const std::string& name) {
  if (name == "unordered") return Variant::kUnordered;
  if (name == "ordered") return Variant::kOrdered;
  if (name == "restricted") return Variant::kRestricted;
  return std::nullopt;
}

ProvenancedCurve ProvenancedCurve::resolve(std::vector<VertexRef> refs,
                                           const CurveSet& ps,
                                           std::string id) {
  if (refs.empty()) {
    throw std::invalid_argument("a middle curve needs at least one vertex");
  }
  std::vector<Point> vertices;
  vertices.reserve(refs.size());
  for (const VertexRef& r : refs) {
    const std::size_t c = ps.index_of(r.curve_id);
    if (c == ps.size()) {
      throw std::invalid_argument("reference to unknown curve '" + r.curve_id + "'");
    }
    if (r.index < 1 || r.index > ps[c].size()) {
      throw std::invalid_argument("reference to vertex " + std::to_string(r.index) +
                                  " of curve '" + r.curve_id + "' is out of range");
    }
    vertices.push_back(ps[c].vertex(r.index));
  }
  return ProvenancedCurve(std::move(refs), Curve(std::move(id), std::move(vertices)));
}

namespace {

// Per-curve constraints induced by a candidate's provenance.
struct CurveConstraints {
  std::vector<IndexPair> forced;         // self-match cells, i strictly increasing
  std::vector<std::size_t> column_caps;  // strict upper bounds, kNoCap = none
};

std::vector<CurveConstraints> provenance_constraints(
    const std::vector<VertexRef>& refs, const CurveSet& ps, Variant variant) {
  const std::size_t n = ps.size();
  const std::size_t len = refs.size();
  std::vector<std::size_t> owner(len);
  for (std::size_t i = 0; i < len; ++i) {
    owner[i] = ps.index_of(refs[i].curve_id);
  }

  std::vector<CurveConstraints> out(n);
  if (variant == Variant::kUnordered) return out;

  for (std::size_t j = 0; j < n; ++j) {
    // caps[i] = smallest provenance index into curve j after position i.
    std::vector<std::size_t> caps(len, kNoCap);
    std::size_t running = kNoCap;
    for (std::size_t i = len; i-- > 0;) {
      caps[i] = running;
      if (owner[i] == j) running = std::min(running, refs[i].index);
    }
    out[j].column_caps = std::move(caps);
    if (variant == Variant::kRestricted) {
      for (std::size_t i = 0; i < len; ++i) {
        if (owner[i] == j) out[j].forced.push_back({i + 1, refs[i].index});
      }
    }
  }
  return out;
}

bool verify_sq(const ProvenancedCurve& m, const CurveSet& ps, double delta_sq,
               Variant variant) {
  if (variant == Variant::kUnordered) {
    for (const Curve& p : ps.curves()) {
      if (!detail::discrete_frechet_decision_sq(m.curve(), p, delta_sq)) {
        return false;
      }
    }
    return true;
  }
  const auto constraints = provenance_constraints(m.refs(), ps, variant);
  for (std::size_t j = 0; j < ps.size(); ++j) {
    if (!detail::constrained_discrete_decision_sq(m.curve(), ps[j], delta_sq,
                                                  constraints[j].forced,
                                                  constraints[j].column_caps)) {
      return false;
    }
  }
  return true;
}

// Smallest delta at which the candidate verifies, searched over the finite
// set of candidate-to-input squared vertex distances. Returns nullopt when
// no delta works (possible for ordered/restricted provenance conflicts).
std::optional<double> candidate_radius(const ProvenancedCurve& m,
                                       const CurveSet& ps, Variant variant) {
  std::vector<double> crit;
  for (const Point& v : m.curve().vertices()) {
    for (const Curve& p : ps.curves()) {
      for (const Point& w : p.vertices()) {
        crit.push_back(squared_distance(v, w));
      }
    }
  }
  std::sort(crit.begin(), crit.end());
  crit.erase(std::unique(crit.begin(), crit.end()), crit.end());

  if (!verify_sq(m, ps, crit.back(), variant)) return std::nullopt;
  std::size_t lo = 0;
  std::size_t hi = crit.size() - 1;
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (verify_sq(m, ps, crit[mid], variant)) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  double radius = std::sqrt(crit[lo]);
  // sqrt then re-square may round just below the critical value; nudge up.
  while (radius * radius < crit[lo]) {
    radius = std::nextafter(radius, std::numeric_limits<double>::infinity());
  }
  return radius;
}

// -------------------------------------------------------------------------
// Candidate enumeration.
//
// Candidates are enumerated in (length, curve order, vertex index) order by
// iterative deepening. A prefix m[1..k] is extended only while, for every
// input curve, some monotone partial traversal matches the prefix within
// delta under the variant's constraints known so far; constraints induced
// by later refs can only shrink those sets, so pruning never discards a
// completable candidate.
// -------------------------------------------------------------------------

struct UniverseRef {
  std::size_t curve = 0;  // index into the CurveSet
  std::size_t index = 0;  // 1-based vertex index
  Point point;
};

class PrefixSearch {
 public:
  PrefixSearch(const CurveSet& ps, double delta_sq, Variant variant,
               std::vector<UniverseRef> universe,
               const enumeration_limits& limits)
      : ps_(ps),
        delta_sq_(delta_sq),
        variant_(variant),
        universe_(std::move(universe)),
        limits_(limits) {
    compat_.resize(universe_.size());
    for (std::size_t u = 0; u < universe_.size(); ++u) {
      compat_[u].resize(ps_.size());
      for (std::size_t j = 0; j < ps_.size(); ++j) {
        const Curve& c = ps_[j];
        compat_[u][j].resize(c.size());
        for (std::size_t k = 0; k < c.size(); ++k) {
          compat_[u][j][k] = within_sq(universe_[u].point, c[k], delta_sq_);
        }
      }
    }
  }

  /// Necessary conditions checked before any enumeration: every universe
  /// vertex must be near every curve, and every input vertex must be near
  /// some universe vertex.
  bool prefilter() {
    std::vector<UniverseRef> kept;
    std::vector<std::vector<std::vector<std::uint8_t>>> kept_compat;
    for (std::size_t u = 0; u < universe_.size(); ++u) {
      bool ok = true;
      for (std::size_t j = 0; ok && j < ps_.size(); ++j) {
        bool near = false;
        for (std::uint8_t b : compat_[u][j]) near = near || b;
        ok = near;
      }
      if (ok) {
        kept.push_back(universe_[u]);
        kept_compat.push_back(std::move(compat_[u]));
      }
    }
    universe_ = std::move(kept);
    compat_ = std::move(kept_compat);
    if (universe_.empty()) return false;

    for (std::size_t j = 0; j < ps_.size(); ++j) {
      for (std::size_t k = 0; k < ps_[j].size(); ++k) {
        bool covered = false;
        for (std::size_t u = 0; !covered && u < universe_.size(); ++u) {
          covered = compat_[u][j][k];
        }
        if (!covered) return false;
      }
    }
    return true;
  }

  /// First verifying candidate of length exactly `length`, if any.
  std::optional<std::vector<std::size_t>> search(std::size_t length) {
    chosen_.clear();
    frontiers_.assign(1, {});
    std::optional<std::vector<std::size_t>> found;
    dfs(length, found);
    return found;
  }

  const std::vector<UniverseRef>& universe() const { return universe_; }
  std::uint64_t nodes_visited() const { return nodes_; }

 private:
  using Frontier = std::vector<std::vector<std::uint8_t>>;  // per curve

  // Whether a completion exists from a prefix depends only on the number of
  // rows still to append and the per-curve frontier sets, so fully explored
  // fruitless states are remembered and skipped on re-entry. Only barren
  // subtrees are cut, which keeps the first accepted candidate the first in
  // enumeration order.
  static std::string state_key(std::size_t remaining, const Frontier& f) {
    std::string key;
    for (int shift = 0; shift < 32; shift += 8) {
      key.push_back(static_cast<char>((remaining >> shift) & 0xff));
    }
    for (const auto& row : f) {
      key.append(reinterpret_cast<const char*>(row.data()), row.size());
      key.push_back('\xff');
    }
    return key;
  }

  void dfs(std::size_t target, std::optional<std::vector<std::size_t>>& found) {
    if (found) return;
    const std::size_t depth = chosen_.size();
    if (depth == target) {
      for (std::size_t j = 0; j < ps_.size(); ++j) {
        if (!frontiers_.back()[j][ps_[j].size() - 1]) return;
      }
      found = chosen_;
      return;
    }
    for (std::size_t u = 0; u < universe_.size(); ++u) {
      if (depth > 0 && chosen_.back() == u) continue;  // repeats never help
      if (++nodes_ > limits_.max_candidates) {
        throw resource_limit_error(limits_.max_candidates,
                                   "middle-curve candidate enumeration");
      }
      Frontier next(ps_.size());
      bool alive = true;
      for (std::size_t j = 0; j < ps_.size(); ++j) {
        next[j] = advance_curve(j, u, depth);
        bool any = false;
        for (std::uint8_t b : next[j]) any = any || b;
        if (!any) {
          alive = false;
          break;
        }
      }
      if (!alive) continue;
      std::string key;
      if (depth + 1 < target) {
        key = state_key(target - depth - 1, next);
        if (barren_.count(key)) continue;
      }
      chosen_.push_back(u);
      frontiers_.push_back(std::move(next));
      dfs(target, found);
      frontiers_.pop_back();
      chosen_.pop_back();
      if (found) return;
      if (!key.empty() && barren_.size() < kBarrenCap) {
        barren_.insert(std::move(key));
      }
    }
  }

  static constexpr std::size_t kBarrenCap = 1u << 22;

  // Reachable end positions (0-based) of partial traversals against curve j
  // after appending universe vertex u at row `depth`.
  std::vector<std::uint8_t> advance_curve(std::size_t j, std::size_t u,
                                          std::size_t depth) {
    const std::vector<std::uint8_t>& compat = compat_[u][j];
    const std::size_t mj = compat.size();
    std::vector<std::uint8_t> reach(mj, 0);

    const bool constrain = variant_ != Variant::kUnordered &&
                           universe_[u].curve == j;
    const std::size_t forced_pos = constrain ? universe_[u].index - 1 : 0;

    if (depth == 0) {
      // Row 1 starts at cell (1,1) and walks right through compatible cells.
      if (constrain && variant_ == Variant::kRestricted) {
        bool prefix_ok = true;
        for (std::size_t k = 0; k <= forced_pos; ++k) {
          prefix_ok = prefix_ok && compat[k];
        }
        if (prefix_ok) {
          for (std::size_t k = forced_pos; k < mj && compat[k]; ++k) reach[k] = 1;
        }
      } else {
        for (std::size_t k = 0; k < mj && compat[k]; ++k) reach[k] = 1;
      }
      return reach;
    }

    const std::vector<std::uint8_t>& prev = frontiers_.back()[j];
    // Ordered/restricted: every cell matched at earlier rows must have a
    // column strictly below this vertex's own provenance index. The columns
    // of earlier rows are bounded by the exit column of the previous row.
    const auto exit_allowed = [&](std::size_t e) {
      return prev[e] && (!constrain || e < forced_pos);
    };

    if (constrain && variant_ == Variant::kRestricted) {
      // The new row must visit the forced cell.
      if (!compat[forced_pos]) return reach;
      std::size_t lo = forced_pos;
      while (lo > 0 && compat[lo - 1]) --lo;
      bool entry_found = false;
      for (std::size_t e = 0; !entry_found && e < mj; ++e) {
        if (!exit_allowed(e)) continue;
        // Entry column is e (advance row only) or e+1 (diagonal step).
        if (e >= lo && e <= forced_pos) entry_found = true;
        if (e + 1 >= lo && e + 1 <= forced_pos && compat[e + 1]) entry_found = true;
      }
      if (!entry_found) return reach;
      for (std::size_t k = forced_pos; k < mj && compat[k]; ++k) reach[k] = 1;
      return reach;
    }

    for (std::size_t k = 0; k < mj; ++k) {
      if (!compat[k]) continue;
      const bool entered = (exit_allowed(k)) ||
                           (k > 0 && exit_allowed(k - 1)) ||
                           (k > 0 && reach[k - 1]);
      reach[k] = entered;
    }
    return reach;
  }

  const CurveSet& ps_;
  double delta_sq_;
  Variant variant_;
  std::vector<UniverseRef> universe_;
  enumeration_limits limits_;
  std::vector<std::vector<std::vector<std::uint8_t>>> compat_;
  std::vector<std::size_t> chosen_;
  std::vector<Frontier> frontiers_;  // frontiers_[d] = state after d rows
  std::set<std::string> barren_;
  std::uint64_t nodes_ = 0;
};

std::vector<UniverseRef> build_universe(const CurveSet& ps, Variant variant) {
  std::vector<UniverseRef> universe;
  for (std::size_t j = 0; j < ps.size(); ++j) {
    for (std::size_t k = 1; k <= ps[j].size(); ++k) {
      UniverseRef ref{j, k, ps[j].vertex(k)};
      if (variant == Variant::kUnordered) {
        // The unordered check ignores provenance, so vertices at the same
        // location are interchangeable; keep the first.
        bool duplicate = false;
        for (const UniverseRef& seen : universe) {
          if (seen.point == ref.point) {
            duplicate = true;
            break;
          }
        }
        if (duplicate) continue;
      }
      universe.push_back(std::move(ref));
    }
  }
  return universe;
}

std::vector<VertexRef> to_refs(const std::vector<std::size_t>& chosen,
                               const std::vector<UniverseRef>& universe,
                               const CurveSet& ps) {
  std::vector<VertexRef> refs;
  refs.reserve(chosen.size());
  for (std::size_t u : chosen) {
    refs.push_back({ps[universe[u].curve].id(), universe[u].index});
  }
  return refs;
}

}  // namespace

bool verify(const ProvenancedCurve& m, const CurveSet& ps, double delta,
            Variant variant) {
  if (delta < 0.0) {
    throw std::invalid_argument("delta must be non-negative");
  }
  for (const VertexRef& r : m.refs()) {
    const std::size_t c = ps.index_of(r.curve_id);
    if (c == ps.size() || r.index < 1 || r.index > ps[c].size()) {
      throw std::invalid_argument(
          "middle curve reference does not resolve against the instance");
    }
  }
  return verify_sq(m, ps, delta * delta, variant);
}

SolveOutcome brute_force_solve(const CurveSet& ps, double delta,
                               std::size_t ell, Variant variant,
                               const enumeration_limits& limits) {
  if (ell < 1) {
    throw std::invalid_argument("ell must be at least 1");
  }
  if (delta < 0.0) {
    throw std::invalid_argument("delta must be non-negative");
  }
  PrefixSearch search(ps, delta * delta, variant, build_universe(ps, variant),
                      limits);
  SolveOutcome outcome;
  if (!search.prefilter()) return outcome;

  for (std::size_t length = 1; length <= ell; ++length) {
    if (auto chosen = search.search(length)) {
      auto witness = ProvenancedCurve::resolve(
          to_refs(*chosen, search.universe(), ps), ps);
      outcome.feasible = true;
      outcome.radius = candidate_radius(witness, ps, variant);
      outcome.witness = std::move(witness);
      return outcome;
    }
  }
  return outcome;
}

SolveOutcome brute_force_optimize(const CurveSet& ps, std::size_t ell,
                                  Variant variant,
                                  const enumeration_limits& limits) {
  if (ell < 1) {
    throw std::invalid_argument("ell must be at least 1");
  }
  const std::vector<UniverseRef> universe = build_universe(ps, variant);

  SolveOutcome best;
  std::uint64_t nodes = 0;
  std::vector<std::size_t> chosen;

  const auto consider = [&]() {
    auto candidate =
        ProvenancedCurve::resolve(to_refs(chosen, universe, ps), ps);
    const auto radius = candidate_radius(candidate, ps, variant);
    if (!radius) return;
    if (!best.feasible || *radius < *best.radius) {
      best.feasible = true;
      best.radius = *radius;
      best.witness = std::move(candidate);
    }
  };

  const auto enumerate = [&](auto&& self, std::size_t target) -> void {
    if (chosen.size() == target) {
      consider();
      return;
    }
    for (std::size_t u = 0; u < universe.size(); ++u) {
      if (!chosen.empty() && chosen.back() == u) continue;
      if (++nodes > limits.max_candidates) {
        throw resource_limit_error(limits.max_candidates,
                                   "middle-curve candidate enumeration");
      }
      chosen.push_back(u);
      self(self, target);
      chosen.pop_back();
    }
  };

  for (std::size_t length = 1; length <= ell; ++length) {
    enumerate(enumerate, length);
  }
  return best;
}

}  // namespace middlecurves
