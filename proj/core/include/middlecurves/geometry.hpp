#ifndef MIDDLECURVES_GEOMETRY_HPP
#define MIDDLECURVES_GEOMETRY_HPP

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace middlecurves {

/// A point in R^d, d >= 1. All curves of one instance share the same d.
class Point {
 public:
  Point() = default;
  explicit Point(std::vector<double> coords);
  Point(std::initializer_list<double> coords);

  std::size_t dimension() const noexcept { return coords_.size(); }
  double operator[](std::size_t i) const { return coords_[i]; }
  const std::vector<double>& coords() const noexcept { return coords_; }

  /// True iff every coordinate is an integer small enough that squared
  /// distances stay exact in 64-bit integer arithmetic.
  bool is_integral() const noexcept;

  friend bool operator==(const Point&, const Point&) = default;

 private:
  std::vector<double> coords_;
};

/// A polygonal curve: a non-empty vertex sequence. Consecutive duplicate
/// vertices are kept verbatim; they do not affect Fréchet distances.
class Curve {
 public:
  Curve(std::string id, std::vector<Point> vertices);

  const std::string& id() const noexcept { return id_; }
  std::size_t size() const noexcept { return vertices_.size(); }
  std::size_t dimension() const noexcept { return vertices_.front().dimension(); }
  /// 1-based vertex access, matching the index convention of traversals
  /// and provenance references.
  const Point& vertex(std::size_t index_1based) const { return vertices_[index_1based - 1]; }
  const Point& operator[](std::size_t i) const { return vertices_[i]; }
  const std::vector<Point>& vertices() const noexcept { return vertices_; }
  bool is_integral() const noexcept;

 private:
  std::string id_;
  std::vector<Point> vertices_;
};

/// An ordered set of curves with unique ids and uniform dimension.
class CurveSet {
 public:
  explicit CurveSet(std::vector<Curve> curves);

  std::size_t size() const noexcept { return curves_.size(); }
  std::size_t dimension() const noexcept { return curves_.front().dimension(); }
  const Curve& operator[](std::size_t i) const { return curves_[i]; }
  const std::vector<Curve>& curves() const noexcept { return curves_; }
  /// Index of the curve with the given id, or size() if absent.
  std::size_t index_of(const std::string& id) const noexcept;
  bool contains(const std::string& id) const noexcept { return index_of(id) < size(); }
  bool is_integral() const noexcept;

 private:
  std::vector<Curve> curves_;
};

/// Squared Euclidean distance. Threshold comparisons throughout the library
/// are made between squared values, never between square roots.
double squared_distance(const Point& a, const Point& b);

/// True iff |a - b| <= delta. When a, b, and delta are all integral the
/// comparison is routed through 64-bit integer arithmetic and is exact at
/// the boundary; otherwise it is a plain floating point comparison with no
/// added tolerance.
bool within(const Point& a, const Point& b, double delta);

/// Squared-threshold variant used by the inner loops: |a - b|^2 <= delta_sq.
bool within_sq(const Point& a, const Point& b, double delta_sq);

}  // namespace middlecurves

#endif  // MIDDLECURVES_GEOMETRY_HPP
