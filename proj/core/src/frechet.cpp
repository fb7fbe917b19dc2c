#include "middlecurves/frechet.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace middlecurves {

namespace {

void require_same_dimension(const Curve& p, const Curve& q) {
  if (p.dimension() != q.dimension()) {
    throw std::invalid_argument("curves '" + p.id() + "' and '" + q.id() +
                                "' have different dimensions");
  }
}

}  // namespace

FrechetResult discrete_frechet(const Curve& p, const Curve& q) {
  require_same_dimension(p, q);
  const std::size_t m = p.size();
  const std::size_t n = q.size();
  constexpr double kInf = std::numeric_limits<double>::infinity();

  // dp[i][j] = min over traversals of p[1..i+1], q[1..j+1] of the max
  // squared pair distance.
  std::vector<std::vector<double>> dp(m, std::vector<double>(n, kInf));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double d = squared_distance(p[i], q[j]);
      double best;
      if (i == 0 && j == 0) {
        best = 0.0;
      } else {
        best = kInf;
        if (i > 0 && j > 0) best = std::min(best, dp[i - 1][j - 1]);
        if (i > 0) best = std::min(best, dp[i - 1][j]);
        if (j > 0) best = std::min(best, dp[i][j - 1]);
      }
      dp[i][j] = std::max(d, best);
    }
  }

  FrechetResult result;
  result.value_sq = dp[m - 1][n - 1];
  result.value = std::sqrt(result.value_sq);
  // Report the smallest double whose square is not below value_sq, so that
  // decision(p, q, value) is always true.
  while (result.value * result.value < result.value_sq) {
    result.value =
        std::nextafter(result.value, std::numeric_limits<double>::infinity());
  }

  // Backtrack preferring diagonal, then i-advance, then j-advance.
  std::vector<IndexPair> rev;
  std::size_t i = m - 1;
  std::size_t j = n - 1;
  rev.push_back({i + 1, j + 1});
  while (i > 0 || j > 0) {
    double best = kInf;
    if (i > 0 && j > 0) best = std::min(best, dp[i - 1][j - 1]);
    if (i > 0) best = std::min(best, dp[i - 1][j]);
    if (j > 0) best = std::min(best, dp[i][j - 1]);
    if (i > 0 && j > 0 && dp[i - 1][j - 1] == best) {
      --i;
      --j;
    } else if (i > 0 && dp[i - 1][j] == best) {
      --i;
    } else {
      --j;
    }
    rev.push_back({i + 1, j + 1});
  }
  std::reverse(rev.begin(), rev.end());
  result.witness.pairs = std::move(rev);
  return result;
}

bool discrete_frechet_decision(const Curve& p, const Curve& q, double delta) {
  if (delta < 0.0) {
    throw std::invalid_argument("delta must be non-negative");
  }
  return detail::discrete_frechet_decision_sq(p, q, delta * delta);
}

bool detail::discrete_frechet_decision_sq(const Curve& p, const Curve& q,
                                          double delta_sq) {
  require_same_dimension(p, q);
  const std::size_t m = p.size();
  const std::size_t n = q.size();

  std::vector<std::uint8_t> prev(n, 0);
  std::vector<std::uint8_t> curr(n, 0);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      bool reachable;
      if (i == 0 && j == 0) {
        reachable = true;
      } else {
        reachable = (i > 0 && prev[j]) || (j > 0 && curr[j - 1]) ||
                    (i > 0 && j > 0 && prev[j - 1]);
      }
      curr[j] = reachable && within_sq(p[i], q[j], delta_sq);
    }
    std::swap(prev, curr);
  }
  return prev[n - 1] != 0;
}

namespace {

struct Interval {
  double lo = 1.0;
  double hi = 0.0;
  bool empty() const { return lo > hi; }
};

// Parameter interval of segment a->b whose points lie within delta of c,
// clamped to [0, 1]. Roots within eps outside the parameter range are
// snapped to it, so tangencies at segment endpoints are not lost to
// rounding. Empty when the segment misses the ball.
Interval ball_segment_intersection(const Point& a, const Point& b,
                                   const Point& c, double delta_sq,
                                   double eps) {
  double qa = 0.0;  // |b - a|^2
  double qb = 0.0;  // 2 <b - a, a - c>
  double qc = -delta_sq;
  for (std::size_t k = 0; k < a.dimension(); ++k) {
    const double u = b[k] - a[k];
    const double v = a[k] - c[k];
    qa += u * u;
    qb += 2.0 * u * v;
    qc += v * v;
  }
  Interval out;
  if (qa == 0.0) {
    if (qc <= 0.0) {
      out.lo = 0.0;
      out.hi = 1.0;
    }
    return out;
  }
  const double disc = qb * qb - 4.0 * qa * qc;
  if (disc < 0.0) return out;
  const double root = std::sqrt(disc);
  const double r1 = (-qb - root) / (2.0 * qa);
  const double r2 = (-qb + root) / (2.0 * qa);
  if (r2 < -eps || r1 > 1.0 + eps) return out;
  out.lo = std::min(std::max(r1, 0.0), 1.0);
  out.hi = std::max(std::min(r2, 1.0), 0.0);
  return out;
}

}  // namespace

bool continuous_frechet_decision(const Curve& p, const Curve& q, double delta,
                                 double endpoint_eps) {
  require_same_dimension(p, q);
  if (delta < 0.0) {
    throw std::invalid_argument("delta must be non-negative");
  }
  const double delta_sq = delta * delta;

  // A 1-vertex curve is a point under the constant reparameterization; the
  // distance to a polyline is then its maximum over the vertices, because
  // point-to-point distance along a segment is maximized at an endpoint.
  if (p.size() == 1 || q.size() == 1) {
    const Curve& point_curve = p.size() == 1 ? p : q;
    const Curve& other = p.size() == 1 ? q : p;
    const Point& single = point_curve[0];
    for (const Point& v : other.vertices()) {
      if (!within_sq(single, v, delta_sq)) return false;
    }
    return true;
  }

  if (!within_sq(p[0], q[0], delta_sq) ||
      !within_sq(p[p.size() - 1], q[q.size() - 1], delta_sq)) {
    return false;
  }

  const std::size_t rows = p.size() - 1;  // segments of p
  const std::size_t cols = q.size() - 1;  // segments of q
  const double eps = endpoint_eps;

  // reach_v[i][j]: reachable part of the vertical edge at p-vertex i+... the
  // edge between cell columns, i.e. the fixed vertex p[i] against segment j
  // of q. reach_h[i][j]: fixed vertex q[j] against segment i of p.
  // Sizes: vertical edges exist for i in [0, rows], j in [0, cols-1];
  // horizontal edges for i in [0, rows-1], j in [0, cols].
  std::vector<std::vector<Interval>> reach_v(rows + 1,
                                             std::vector<Interval>(cols));
  std::vector<std::vector<Interval>> reach_h(rows,
                                             std::vector<Interval>(cols + 1));

  // Bottom-left corner is free; seed the outer boundary chains.
  for (std::size_t j = 0; j < cols; ++j) {
    Interval free = ball_segment_intersection(q[j], q[j + 1], p[0], delta_sq, eps);
    if (j == 0 || (!reach_v[0][j - 1].empty() &&
                   reach_v[0][j - 1].hi >= 1.0 - eps)) {
      if (!free.empty() && free.lo <= eps) {
        reach_v[0][j] = Interval{0.0, free.hi};
      }
    }
  }
  for (std::size_t i = 0; i < rows; ++i) {
    Interval free = ball_segment_intersection(p[i], p[i + 1], q[0], delta_sq, eps);
    if (i == 0 || (!reach_h[i - 1][0].empty() &&
                   reach_h[i - 1][0].hi >= 1.0 - eps)) {
      if (!free.empty() && free.lo <= eps) {
        reach_h[i][0] = Interval{0.0, free.hi};
      }
    }
  }

  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      const Interval& left = reach_v[i][j];
      const Interval& bottom = reach_h[i][j];
      if (left.empty() && bottom.empty()) continue;

      // Right edge of cell (i, j): vertex p[i+1] against segment j of q.
      Interval right_free =
          ball_segment_intersection(q[j], q[j + 1], p[i + 1], delta_sq, eps);
      if (!right_free.empty()) {
        Interval r = right_free;
        if (bottom.empty()) {
          // Entry only via the left edge: cannot move down within the cell.
          r.lo = std::max(r.lo, left.lo);
        }
        if (r.lo <= r.hi + eps) {
          r.lo = std::min(r.lo, r.hi);
          reach_v[i + 1][j] = r;
        }
      }

      // Top edge of cell (i, j): vertex q[j+1] against segment i of p.
      Interval top_free =
          ball_segment_intersection(p[i], p[i + 1], q[j + 1], delta_sq, eps);
      if (!top_free.empty()) {
        Interval t = top_free;
        if (left.empty()) {
          t.lo = std::max(t.lo, bottom.lo);
        }
        if (t.lo <= t.hi + eps) {
          t.lo = std::min(t.lo, t.hi);
          reach_h[i][j + 1] = t;
        }
      }
    }
  }

  const Interval& last_v = reach_v[rows][cols - 1];
  const Interval& last_h = reach_h[rows - 1][cols];
  return (!last_v.empty() && last_v.hi >= 1.0 - eps) ||
         (!last_h.empty() && last_h.hi >= 1.0 - eps);
}

namespace {

// Monotone reachability from cell (si, sj) to cell (ti, tj), inclusive,
// through cells allowed by `allowed`. Indices are 0-based here.
template <typename AllowedFn>
bool rectangle_reachable(std::size_t si, std::size_t sj, std::size_t ti,
                         std::size_t tj, const AllowedFn& allowed) {
  const std::size_t width = tj - sj + 1;
  std::vector<std::uint8_t> prev(width, 0);
  std::vector<std::uint8_t> curr(width, 0);
  for (std::size_t i = si; i <= ti; ++i) {
    for (std::size_t j = sj; j <= tj; ++j) {
      const std::size_t jj = j - sj;
      bool reachable;
      if (i == si && j == sj) {
        reachable = true;
      } else {
        reachable = (i > si && prev[jj]) || (j > sj && curr[jj - 1]) ||
                    (i > si && j > sj && prev[jj - 1]);
      }
      curr[jj] = reachable && allowed(i, j);
    }
    std::swap(prev, curr);
  }
  return prev[width - 1] != 0;
}

}  // namespace

bool constrained_discrete_decision(const Curve& p, const Curve& q, double delta,
                                   const std::vector<IndexPair>& forced,
                                   const std::vector<std::size_t>& column_caps) {
  if (delta < 0.0) {
    throw std::invalid_argument("delta must be non-negative");
  }
  return detail::constrained_discrete_decision_sq(p, q, delta * delta, forced,
                                                  column_caps);
}

bool detail::constrained_discrete_decision_sq(
    const Curve& p, const Curve& q, double delta_sq,
    const std::vector<IndexPair>& forced,
    const std::vector<std::size_t>& column_caps) {
  require_same_dimension(p, q);
  const std::size_t m = p.size();
  const std::size_t n = q.size();

  if (!column_caps.empty() && column_caps.size() != m) {
    throw std::invalid_argument("column_caps must be empty or have one entry per vertex of p");
  }
  for (std::size_t cap : column_caps) {
    if (cap != kNoCap && (cap < 1 || cap > n)) {
      throw std::invalid_argument("column cap out of range");
    }
  }
  for (std::size_t f = 0; f < forced.size(); ++f) {
    const IndexPair& pair = forced[f];
    if (pair.i < 1 || pair.i > m || pair.j < 1 || pair.j > n) {
      throw std::invalid_argument("forced pair out of range");
    }
    if (f > 0 && forced[f - 1].i >= pair.i) {
      throw std::invalid_argument("forced pairs must strictly increase in i");
    }
  }
  // Non-monotone forced columns cannot lie on any traversal.
  for (std::size_t f = 1; f < forced.size(); ++f) {
    if (forced[f].j < forced[f - 1].j) return false;
  }

  const auto allowed = [&](std::size_t i, std::size_t j) {
    if (!column_caps.empty()) {
      const std::size_t cap = column_caps[i];
      if (cap != kNoCap && j + 1 >= cap) return false;
    }
    return within_sq(p[i], q[j], delta_sq);
  };

  // Staircase reachability segmented at the forced cells.
  std::vector<IndexPair> waypoints;
  waypoints.push_back({1, 1});
  for (const IndexPair& f : forced) {
    if (f.i == waypoints.back().i && f.j == waypoints.back().j) continue;
    waypoints.push_back(f);
  }
  if (waypoints.back().i != m || waypoints.back().j != n) {
    waypoints.push_back({m, n});
  }
  for (const IndexPair& w : waypoints) {
    if (!allowed(w.i - 1, w.j - 1)) return false;
  }
  for (std::size_t w = 0; w + 1 < waypoints.size(); ++w) {
    const IndexPair& s = waypoints[w];
    const IndexPair& t = waypoints[w + 1];
    if (s.i > t.i || s.j > t.j) return false;
    if (!rectangle_reachable(s.i - 1, s.j - 1, t.i - 1, t.j - 1, allowed)) {
      return false;
    }
  }
  return true;
}

}  // namespace middlecurves
