#include "middlecurves/geometry.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <unordered_set>

namespace middlecurves {

namespace {

// Largest magnitude for which sums of squared integer differences stay
// exactly representable both as int64 and as double, so the integer and
// floating point comparison routes can never disagree.
constexpr double kIntegralLimit = 1e6;

bool value_is_integral(double x) {
  return std::floor(x) == x && std::abs(x) <= kIntegralLimit;
}

void require_same_dimension(const Point& a, const Point& b) {
  if (a.dimension() != b.dimension()) {
    throw std::invalid_argument("dimension mismatch: " +
                                std::to_string(a.dimension()) + " vs " +
                                std::to_string(b.dimension()));
  }
}

}  // namespace

Point::Point(std::vector<double> coords) : coords_(std::move(coords)) {
  if (coords_.empty()) {
    throw std::invalid_argument("point must have dimension >= 1");
  }
}

Point::Point(std::initializer_list<double> coords)
    : Point(std::vector<double>(coords)) {}

bool Point::is_integral() const noexcept {
  for (double c : coords_) {
    if (!value_is_integral(c)) return false;
  }
  return true;
}

Curve::Curve(std::string id, std::vector<Point> vertices)
    : id_(std::move(id)), vertices_(std::move(vertices)) {
  if (vertices_.empty()) {
    throw std::invalid_argument("curve '" + id_ + "' must have complexity >= 1");
  }
  const std::size_t d = vertices_.front().dimension();
  for (const Point& p : vertices_) {
    if (p.dimension() != d) {
      throw std::invalid_argument("curve '" + id_ + "' mixes dimensions");
    }
  }
}

bool Curve::is_integral() const noexcept {
  for (const Point& p : vertices_) {
    if (!p.is_integral()) return false;
  }
  return true;
}

CurveSet::CurveSet(std::vector<Curve> curves) : curves_(std::move(curves)) {
  if (curves_.empty()) {
    throw std::invalid_argument("curve set must be non-empty");
  }
  const std::size_t d = curves_.front().dimension();
  std::unordered_set<std::string> ids;
  for (const Curve& c : curves_) {
    if (c.dimension() != d) {
      throw std::invalid_argument("curve set mixes dimensions");
    }
    if (!ids.insert(c.id()).second) {
      throw std::invalid_argument("duplicate curve id '" + c.id() + "'");
    }
  }
}

std::size_t CurveSet::index_of(const std::string& id) const noexcept {
  for (std::size_t i = 0; i < curves_.size(); ++i) {
    if (curves_[i].id() == id) return i;
  }
  return curves_.size();
}

bool CurveSet::is_integral() const noexcept {
  for (const Curve& c : curves_) {
    if (!c.is_integral()) return false;
  }
  return true;
}

double squared_distance(const Point& a, const Point& b) {
  require_same_dimension(a, b);
  double sum = 0.0;
  for (std::size_t i = 0; i < a.dimension(); ++i) {
    const double diff = a[i] - b[i];
    sum += diff * diff;
  }
  return sum;
}

bool within(const Point& a, const Point& b, double delta) {
  require_same_dimension(a, b);
  if (delta < 0.0) {
    throw std::invalid_argument("delta must be non-negative");
  }
  if (value_is_integral(delta) && a.is_integral() && b.is_integral()) {
    std::int64_t sum = 0;
    for (std::size_t i = 0; i < a.dimension(); ++i) {
      const auto diff =
          static_cast<std::int64_t>(a[i]) - static_cast<std::int64_t>(b[i]);
      sum += diff * diff;
    }
    const auto d = static_cast<std::int64_t>(delta);
    return sum <= d * d;
  }
  return squared_distance(a, b) <= delta * delta;
}

bool within_sq(const Point& a, const Point& b, double delta_sq) {
  return squared_distance(a, b) <= delta_sq;
}

}  // namespace middlecurves
