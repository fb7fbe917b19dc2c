#include "middlecurves/approx.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <set>
#include <stdexcept>

#include "middlecurves/frechet.hpp"

namespace middlecurves {

namespace {

double max_frechet_sq(const Curve& center, const CurveSet& ps) {
  double worst = 0.0;
  for (const Curve& p : ps.curves()) {
    worst = std::max(worst, discrete_frechet(center, p).value_sq);
  }
  return worst;
}

}  // namespace

ProvenancedCurve build_middle_from_center(const CenterResult& c,
                                          const CurveSet& ps) {
  std::vector<VertexRef> refs;
  refs.reserve(c.center.size());
  for (std::size_t i = 0; i < c.center.size(); ++i) {
    const Point& ball_center = c.center[i];
    bool found = false;
    double best_sq = 0.0;
    VertexRef best_ref;
    for (std::size_t j = 0; j < ps.size(); ++j) {
      for (std::size_t k = 1; k <= ps[j].size(); ++k) {
        const double d_sq = squared_distance(ball_center, ps[j].vertex(k));
        if (d_sq > c.radius_sq) continue;
        if (!found || d_sq < best_sq) {
          found = true;
          best_sq = d_sq;
          best_ref = {ps[j].id(), k};
        }
      }
    }
    if (!found) {
      throw std::invalid_argument(
          "ball around center vertex " + std::to_string(i + 1) +
          " contains no input vertex; the center radius is understated");
    }
    refs.push_back(std::move(best_ref));
  }

  auto middle = ProvenancedCurve::resolve(std::move(refs), ps);
  if (max_frechet_sq(middle.curve(), ps) > 4.0 * c.radius_sq) {
    throw std::invalid_argument(
        "snapped middle curve exceeds twice the center radius; the center "
        "radius is understated");
  }
  return middle;
}

namespace {

// Reachable end positions of monotone partial matchings against one curve,
// advanced by one candidate row. Entry is by a vertical or diagonal step
// from a previous end position, then rightward within the row.
std::vector<std::uint8_t> advance_row(const std::vector<std::uint8_t>& prev,
                                      const std::vector<std::uint8_t>& compat) {
  const std::size_t m = compat.size();
  std::vector<std::uint8_t> reach(m, 0);
  for (std::size_t k = 0; k < m; ++k) {
    if (!compat[k]) continue;
    reach[k] = prev[k] || (k > 0 && (prev[k - 1] || reach[k - 1]));
  }
  return reach;
}

std::vector<std::uint8_t> first_row(const std::vector<std::uint8_t>& compat) {
  std::vector<std::uint8_t> reach(compat.size(), 0);
  for (std::size_t k = 0; k < compat.size() && compat[k]; ++k) reach[k] = 1;
  return reach;
}

// Candidate center locations for one trial radius: a regular grid of the
// given spacing restricted to balls of radius `cover` around the input
// vertices, deduplicated and ordered by lattice coordinates.
std::vector<Point> grid_candidates(const CurveSet& ps, double spacing,
                                   double cover) {
  const std::size_t d = ps.dimension();
  std::set<std::vector<std::int64_t>> cells;
  const double cover_sq = cover * cover;
  for (const Curve& c : ps.curves()) {
    for (const Point& v : c.vertices()) {
      std::vector<std::int64_t> lo(d), hi(d);
      for (std::size_t k = 0; k < d; ++k) {
        lo[k] = static_cast<std::int64_t>(std::ceil((v[k] - cover) / spacing));
        hi[k] = static_cast<std::int64_t>(std::floor((v[k] + cover) / spacing));
      }
      std::vector<std::int64_t> cell(lo);
      while (true) {
        std::vector<double> coords(d);
        for (std::size_t k = 0; k < d; ++k) coords[k] = cell[k] * spacing;
        if (within_sq(Point(coords), v, cover_sq)) {
          cells.insert(cell);
        }
        std::size_t k = 0;
        while (k < d && ++cell[k] > hi[k]) {
          cell[k] = lo[k];
          ++k;
        }
        if (k == d) break;
      }
    }
  }
  std::vector<Point> out;
  out.reserve(cells.size());
  for (const auto& cell : cells) {
    std::vector<double> coords(cell.size());
    for (std::size_t k = 0; k < cell.size(); ++k) coords[k] = cell[k] * spacing;
    out.emplace_back(std::move(coords));
  }
  return out;
}

std::vector<Point> dedup_vertices(const CurveSet& ps) {
  std::vector<Point> out;
  for (const Curve& c : ps.curves()) {
    for (const Point& v : c.vertices()) {
      if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
    }
  }
  return out;
}

// Searches for the first tuple of candidates (length-major, lexicographic)
// whose max discrete Fréchet distance to every curve is within accept, with
// dead prefixes pruned per curve. Returns the tuple's点 sequence.
class CenterTupleSearch {
 public:
  CenterTupleSearch(const CurveSet& ps, std::vector<Point> candidates,
                    double accept_sq, std::uint64_t* nodes,
                    const enumeration_limits& limits)
      : ps_(ps), candidates_(std::move(candidates)), nodes_(nodes),
        limits_(limits) {
    compat_.resize(candidates_.size());
    std::vector<std::uint8_t> keep(candidates_.size(), 1);
    for (std::size_t u = 0; u < candidates_.size(); ++u) {
      compat_[u].resize(ps_.size());
      for (std::size_t j = 0; j < ps_.size(); ++j) {
        const Curve& c = ps_[j];
        compat_[u][j].resize(c.size());
        bool near = false;
        for (std::size_t k = 0; k < c.size(); ++k) {
          compat_[u][j][k] = within_sq(candidates_[u], c[k], accept_sq);
          near = near || compat_[u][j][k];
        }
        if (!near) keep[u] = 0;
      }
    }
    // A center vertex in an accepted tuple is matched to something in every
    // curve, so candidates far from any one curve can be dropped.
    std::vector<Point> kept_candidates;
    std::vector<std::vector<std::vector<std::uint8_t>>> kept_compat;
    for (std::size_t u = 0; u < candidates_.size(); ++u) {
      if (!keep[u]) continue;
      kept_candidates.push_back(std::move(candidates_[u]));
      kept_compat.push_back(std::move(compat_[u]));
    }
    candidates_ = std::move(kept_candidates);
    compat_ = std::move(kept_compat);
  }

  bool coverage_possible() const {
    for (std::size_t j = 0; j < ps_.size(); ++j) {
      for (std::size_t k = 0; k < ps_[j].size(); ++k) {
        bool covered = false;
        for (std::size_t u = 0; !covered && u < compat_.size(); ++u) {
          covered = compat_[u][j][k];
        }
        if (!covered) return false;
      }
    }
    return true;
  }

  std::optional<std::vector<Point>> search(std::size_t max_len) {
    if (candidates_.empty() || !coverage_possible()) return std::nullopt;
    for (std::size_t length = 1; length <= max_len; ++length) {
      chosen_.clear();
      frontiers_.assign(1, {});
      std::optional<std::vector<Point>> found;
      dfs(length, found);
      if (found) return found;
    }
    return std::nullopt;
  }

 private:
  void dfs(std::size_t target, std::optional<std::vector<Point>>& found) {
    if (found) return;
    if (chosen_.size() == target) {
      for (std::size_t j = 0; j < ps_.size(); ++j) {
        if (!frontiers_.back()[j][ps_[j].size() - 1]) return;
      }
      std::vector<Point> tuple;
      for (std::size_t u : chosen_) tuple.push_back(candidates_[u]);
      found = std::move(tuple);
      return;
    }
    for (std::size_t u = 0; u < candidates_.size(); ++u) {
      if (!chosen_.empty() && chosen_.back() == u) continue;
      if (++*nodes_ > limits_.max_candidates) {
        throw resource_limit_error(
            limits_.max_candidates,
            "center grid enumeration; retry with a larger eps or smaller ell");
      }
      std::vector<std::vector<std::uint8_t>> next(ps_.size());
      bool alive = true;
      for (std::size_t j = 0; j < ps_.size(); ++j) {
        next[j] = chosen_.empty() ? first_row(compat_[u][j])
                                  : advance_row(frontiers_.back()[j], compat_[u][j]);
        bool any = false;
        for (std::uint8_t b : next[j]) any = any || b;
        if (!any) {
          alive = false;
          break;
        }
      }
      if (!alive) continue;
      chosen_.push_back(u);
      frontiers_.push_back(std::move(next));
      dfs(target, found);
      frontiers_.pop_back();
      chosen_.pop_back();
      if (found) return;
    }
  }

  const CurveSet& ps_;
  std::vector<Point> candidates_;
  std::uint64_t* nodes_;
  enumeration_limits limits_;
  std::vector<std::vector<std::vector<std::uint8_t>>> compat_;
  std::vector<std::size_t> chosen_;
  std::vector<std::vector<std::vector<std::uint8_t>>> frontiers_;
};

std::vector<double> trial_radii(const CurveSet& ps, double eps) {
  std::vector<Point> vertices;
  for (const Curve& c : ps.curves()) {
    for (const Point& v : c.vertices()) vertices.push_back(v);
  }
  std::vector<double> radii{0.0};
  for (std::size_t a = 0; a < vertices.size(); ++a) {
    for (std::size_t b = a + 1; b < vertices.size(); ++b) {
      const double dist = std::sqrt(squared_distance(vertices[a], vertices[b]));
      radii.push_back(dist);
      radii.push_back(dist / 2.0);
    }
  }
  std::sort(radii.begin(), radii.end());
  radii.erase(std::unique(radii.begin(), radii.end()), radii.end());

  // Refine so consecutive positive trials differ by at most rho; the
  // optimal radius then has a trial within a factor rho below it.
  const double rho = 1.0 + eps / 2.0;
  std::vector<double> refined;
  for (std::size_t i = 0; i < radii.size(); ++i) {
    refined.push_back(radii[i]);
    if (i + 1 < radii.size() && radii[i] > 0.0) {
      double v = radii[i] * rho;
      while (v < radii[i + 1]) {
        refined.push_back(v);
        v *= rho;
      }
    }
  }
  std::sort(refined.begin(), refined.end());
  return refined;
}

}  // namespace

CenterResult center_grid_approx(const CurveSet& ps, std::size_t ell, double eps,
                                const enumeration_limits& limits) {
  if (ell < 1) {
    throw std::invalid_argument("ell must be at least 1");
  }
  if (!(eps > 0.0)) {
    throw std::invalid_argument("eps must be positive");
  }
  const double d = static_cast<double>(ps.dimension());
  const std::vector<double> trials = trial_radii(ps, eps);
  std::uint64_t nodes = 0;

  const auto try_radius = [&](double r) -> std::optional<std::vector<Point>> {
    std::vector<Point> candidates;
    if (r == 0.0) {
      candidates = dedup_vertices(ps);
    } else {
      candidates = grid_candidates(ps, eps * r / std::sqrt(d), (1.0 + eps) * r);
    }
    const double accept = (1.0 + eps) * r;
    CenterTupleSearch search(ps, std::move(candidates), accept * accept, &nodes,
                             limits);
    return search.search(ell);
  };

  // The predicate is guaranteed true for every trial at or above the optimal
  // radius, so bisection lands at or below the first trial above it.
  std::optional<std::vector<Point>> accepted;
  std::size_t lo = 0;
  std::size_t hi = trials.size() - 1;
  accepted = try_radius(trials[hi]);
  if (!accepted) {
    throw internal_inconsistency_error(
        "no feasible trial radius; the largest pairwise distance must accept");
  }
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (auto tuple = try_radius(trials[mid])) {
      accepted = std::move(tuple);
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }

  CenterResult result{Curve("center", std::move(*accepted)), 0.0, 0.0};
  result.radius_sq = max_frechet_sq(result.center, ps);
  result.radius = std::sqrt(result.radius_sq);
  while (result.radius * result.radius < result.radius_sq) {
    result.radius =
        std::nextafter(result.radius, std::numeric_limits<double>::infinity());
  }
  return result;
}

MiddleApproxResult middle_approx(const CurveSet& ps, const ApproxParams& params,
                                 const enumeration_limits& limits) {
  if (!(params.eps > 0.0)) {
    throw std::invalid_argument("eps must be positive");
  }
  CenterResult center = center_grid_approx(ps, params.ell, params.eps / 2.0, limits);
  ProvenancedCurve middle = build_middle_from_center(center, ps);
  const double realized_sq = max_frechet_sq(middle.curve(), ps);
  double realized = std::sqrt(realized_sq);
  while (realized * realized < realized_sq) {
    realized = std::nextafter(realized, std::numeric_limits<double>::infinity());
  }
  return MiddleApproxResult{std::move(middle), std::move(center), realized,
                            realized_sq};
}

}  // namespace middlecurves
