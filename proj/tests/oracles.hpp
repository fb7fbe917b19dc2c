// Independent reference implementations the tests check the library
// against. Everything here is deliberately naive: explicit enumeration of
// all traversals, all candidate tuples, and all center positions, with no
// shared code paths into the library's solvers.
#ifndef MIDDLECURVES_TEST_ORACLES_HPP
#define MIDDLECURVES_TEST_ORACLES_HPP

#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "middlecurves/frechet.hpp"
#include "middlecurves/geometry.hpp"
#include "middlecurves/middle.hpp"

namespace oracles {

using middlecurves::Curve;
using middlecurves::CurveSet;
using middlecurves::Point;
using middlecurves::ProvenancedCurve;
using middlecurves::Variant;
using middlecurves::VertexRef;

using TraversalPairs = std::vector<std::pair<std::size_t, std::size_t>>;  // 0-based

inline void enumerate_traversals(std::size_t m, std::size_t n,
                                 const std::function<void(const TraversalPairs&)>& visit) {
  TraversalPairs current{{0, 0}};
  const auto recurse = [&](auto&& self) -> void {
    const auto [i, j] = current.back();
    if (i == m - 1 && j == n - 1) {
      visit(current);
      return;
    }
    if (i + 1 < m) {
      current.push_back({i + 1, j});
      self(self);
      current.pop_back();
    }
    if (j + 1 < n) {
      current.push_back({i, j + 1});
      self(self);
      current.pop_back();
    }
    if (i + 1 < m && j + 1 < n) {
      current.push_back({i + 1, j + 1});
      self(self);
      current.pop_back();
    }
  };
  recurse(recurse);
}

/// min over all traversals of the max squared pair distance.
inline double frechet_sq_by_enumeration(const Curve& p, const Curve& q) {
  double best = std::numeric_limits<double>::infinity();
  enumerate_traversals(p.size(), q.size(), [&](const TraversalPairs& t) {
    double worst = 0.0;
    for (const auto& [i, j] : t) {
      worst = std::max(worst, middlecurves::squared_distance(p[i], q[j]));
    }
    best = std::min(best, worst);
  });
  return best;
}

/// Literal transcription of the ordered / restricted conditions, decided by
/// enumerating the traversals of m against one input curve.
///   owner[i]  = index of the curve position i of m is drawn from
///   prov[i]   = 1-based vertex index of that provenance
inline bool curve_admits_matching(const Curve& m, const Curve& p,
                                  std::size_t curve_index,
                                  const std::vector<std::size_t>& owner,
                                  const std::vector<std::size_t>& prov,
                                  double delta, Variant variant) {
  const double delta_sq = delta * delta;
  bool found = false;
  enumerate_traversals(m.size(), p.size(), [&](const TraversalPairs& t) {
    if (found) return;
    for (const auto& [i, j] : t) {
      if (middlecurves::squared_distance(m[i], p[j]) > delta_sq) return;
    }
    if (variant != Variant::kUnordered) {
      // Ordered: a vertex matched to p_k forbids later vertices drawn from
      // this curve with provenance index <= k.
      for (const auto& [i, k] : t) {
        for (std::size_t later = i + 1; later < m.size(); ++later) {
          if (owner[later] == curve_index && prov[later] <= k + 1) return;
        }
      }
    }
    if (variant == Variant::kRestricted) {
      // Every vertex drawn from this curve is matched to itself.
      for (std::size_t i = 0; i < m.size(); ++i) {
        if (owner[i] != curve_index) continue;
        const bool hit = std::find(t.begin(), t.end(),
                                   std::make_pair(i, prov[i] - 1)) != t.end();
        if (!hit) return;
      }
    }
    found = true;
  });
  return found;
}

inline bool verify_by_enumeration(const ProvenancedCurve& m, const CurveSet& ps,
                                  double delta, Variant variant) {
  std::vector<std::size_t> owner;
  std::vector<std::size_t> prov;
  for (const VertexRef& r : m.refs()) {
    owner.push_back(ps.index_of(r.curve_id));
    prov.push_back(r.index);
  }
  for (std::size_t j = 0; j < ps.size(); ++j) {
    if (!curve_admits_matching(m.curve(), ps[j], j, owner, prov, delta, variant)) {
      return false;
    }
  }
  return true;
}

/// Feasibility by plain enumeration of every ref tuple of length 1..ell
/// (no deduplication, no pruning, repeats allowed).
inline bool solve_by_enumeration(const CurveSet& ps, double delta,
                                 std::size_t ell, Variant variant) {
  std::vector<VertexRef> universe;
  for (const Curve& c : ps.curves()) {
    for (std::size_t k = 1; k <= c.size(); ++k) universe.push_back({c.id(), k});
  }
  std::vector<VertexRef> current;
  bool found = false;
  const auto recurse = [&](auto&& self, std::size_t target) -> void {
    if (found) return;
    if (current.size() == target) {
      auto candidate = ProvenancedCurve::resolve(current, ps);
      if (verify_by_enumeration(candidate, ps, delta, variant)) found = true;
      return;
    }
    for (const VertexRef& r : universe) {
      current.push_back(r);
      self(self, target);
      current.pop_back();
      if (found) return;
    }
  };
  for (std::size_t len = 1; len <= ell && !found; ++len) recurse(recurse, len);
  return found;
}

/// Optimal radius by enumeration: min over tuples of the smallest delta (a
/// pairwise vertex distance) at which the tuple verifies.
inline std::optional<double> optimize_by_enumeration(const CurveSet& ps,
                                                     std::size_t ell,
                                                     Variant variant) {
  std::vector<double> criticals;
  std::vector<VertexRef> universe;
  for (const Curve& c : ps.curves()) {
    for (std::size_t k = 1; k <= c.size(); ++k) universe.push_back({c.id(), k});
  }
  for (const Curve& c1 : ps.curves()) {
    for (const Point& v : c1.vertices()) {
      for (const Curve& c2 : ps.curves()) {
        for (const Point& w : c2.vertices()) {
          criticals.push_back(std::sqrt(middlecurves::squared_distance(v, w)));
        }
      }
    }
  }
  std::sort(criticals.begin(), criticals.end());

  std::optional<double> best;
  std::vector<VertexRef> current;
  const auto consider = [&]() {
    auto candidate = ProvenancedCurve::resolve(current, ps);
    for (double delta : criticals) {
      if (best && *best <= delta) break;
      if (verify_by_enumeration(candidate, ps, delta, variant)) {
        best = delta;
        break;
      }
    }
  };
  const auto recurse = [&](auto&& self, std::size_t target) -> void {
    if (current.size() == target) {
      consider();
      return;
    }
    for (const VertexRef& r : universe) {
      current.push_back(r);
      self(self, target);
      current.pop_back();
    }
  };
  for (std::size_t len = 1; len <= ell; ++len) recurse(recurse, len);
  return best;
}

/// Exact optimal (1, ell)-center radius for 1-D instances: some optimal
/// center has every vertex at an input vertex or a midpoint of two, so the
/// search over that finite coordinate set is exhaustive.
inline double center_optimum_1d(const CurveSet& ps, std::size_t ell) {
  std::vector<double> coords;
  for (const Curve& c : ps.curves()) {
    for (const Point& v : c.vertices()) coords.push_back(v[0]);
  }
  std::vector<double> candidates = coords;
  for (std::size_t a = 0; a < coords.size(); ++a) {
    for (std::size_t b = a + 1; b < coords.size(); ++b) {
      candidates.push_back((coords[a] + coords[b]) / 2.0);
    }
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()),
                   candidates.end());

  double best = std::numeric_limits<double>::infinity();
  std::vector<Point> current;
  const auto evaluate = [&]() {
    const Curve center("center", current);
    double worst = 0.0;
    for (const Curve& p : ps.curves()) {
      worst = std::max(worst,
                       middlecurves::discrete_frechet(center, p).value_sq);
    }
    best = std::min(best, worst);
  };
  const auto recurse = [&](auto&& self, std::size_t target) -> void {
    if (current.size() == target) {
      evaluate();
      return;
    }
    for (double c : candidates) {
      current.push_back(Point{c});
      self(self, target);
      current.pop_back();
    }
  };
  for (std::size_t len = 1; len <= ell; ++len) recurse(recurse, len);
  return std::sqrt(best);
}

// ---------------------------------------------------------------------------
// Deterministic random instances.
// ---------------------------------------------------------------------------

inline Curve random_curve(std::mt19937& rng, const std::string& id,
                          std::size_t dimension, std::size_t max_vertices,
                          bool integral, double scale = 5.0) {
  std::uniform_int_distribution<std::size_t> len(1, max_vertices);
  std::uniform_real_distribution<double> coord(-scale, scale);
  std::uniform_int_distribution<int> icoord(-static_cast<int>(scale),
                                            static_cast<int>(scale));
  std::vector<Point> vertices;
  const std::size_t count = len(rng);
  for (std::size_t k = 0; k < count; ++k) {
    std::vector<double> c(dimension);
    for (std::size_t d = 0; d < dimension; ++d) {
      c[d] = integral ? static_cast<double>(icoord(rng)) : coord(rng);
    }
    vertices.emplace_back(std::move(c));
  }
  return Curve(id, std::move(vertices));
}

inline CurveSet random_curve_set(std::mt19937& rng, std::size_t n,
                                 std::size_t dimension, std::size_t max_vertices,
                                 bool integral, double scale = 5.0) {
  std::vector<Curve> curves;
  for (std::size_t i = 0; i < n; ++i) {
    curves.push_back(random_curve(rng, "c" + std::to_string(i + 1), dimension,
                                  max_vertices, integral, scale));
  }
  return CurveSet(std::move(curves));
}

}  // namespace oracles

#endif  // MIDDLECURVES_TEST_ORACLES_HPP
