#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "middlecurves/approx.hpp"
#include "middlecurves/frechet.hpp"
#include "oracles.hpp"

using namespace middlecurves;

namespace {

Curve c1d(const std::string& id, std::initializer_list<double> xs) {
  std::vector<Point> v;
  for (double x : xs) v.push_back(Point{x});
  return Curve(id, std::move(v));
}

double realized_radius(const Curve& center, const CurveSet& ps) {
  double worst = 0.0;
  for (const Curve& p : ps.curves()) {
    worst = std::max(worst, discrete_frechet(center, p).value);
  }
  return worst;
}

CenterResult make_center(Curve c, double radius) {
  return CenterResult{std::move(c), radius, radius * radius};
}

}  // namespace

TEST_CASE("snapping a center onto input vertices") {
  {
    const CurveSet ps({c1d("p", {0, 3, 1})});
    const CenterResult c = make_center(ps[0], 0.0);
    const ProvenancedCurve m = build_middle_from_center(c, ps);
    CHECK(m.curve().vertices() == ps[0].vertices());
    CHECK(m.size() == c.center.size());
  }
  {
    const CurveSet ps({c1d("p", {0}), c1d("q", {2})});
    const CenterResult c = make_center(c1d("center", {1}), 1.0);
    const ProvenancedCurve m = build_middle_from_center(c, ps);
    // Tie between 0 and 2 goes to the earlier curve.
    CHECK(m.refs() == std::vector<VertexRef>{{"p", 1}});
    CHECK(realized_radius(m.curve(), ps) == 2.0);  // exactly 2 * radius
  }
  {
    const CurveSet ps({c1d("p", {0, 4}), c1d("q", {2, 6})});
    const CenterResult c = make_center(c1d("center", {1, 5}), 1.0);
    const ProvenancedCurve m = build_middle_from_center(c, ps);
    CHECK(m.curve().vertex(1)[0] == 0.0);
    CHECK(m.curve().vertex(2)[0] == 4.0);
    CHECK(realized_radius(m.curve(), ps) <= 2.0);
    // All four selections from the two balls stay within 2 * radius.
    for (double first : {0.0, 2.0}) {
      for (double second : {4.0, 6.0}) {
        const Curve pick("pick", {Point{first}, Point{second}});
        CHECK(realized_radius(pick, ps) <= 2.0);
      }
    }
  }
}

TEST_CASE("empty balls are reported with the offending vertex") {
  const CurveSet ps({c1d("p", {0})});
  const CenterResult c = make_center(c1d("center", {0, 10}), 1.0);
  CHECK_THROWS_WITH_AS(build_middle_from_center(c, ps),
                       doctest::Contains("center vertex 2"),
                       std::invalid_argument);
}

TEST_CASE("center grid approximation pinned examples") {
  {
    const CurveSet ps({c1d("p", {0, 3, 1})});
    const CenterResult c = center_grid_approx(ps, 3, 0.5);
    CHECK(c.radius == 0.0);
    CHECK(c.center.vertices() == ps[0].vertices());
  }
  {
    const CurveSet ps({c1d("p", {0}), c1d("q", {2})});
    const CenterResult c = center_grid_approx(ps, 1, 0.1);
    CHECK(c.radius <= 1.1);
    CHECK(c.radius >= 1.0);  // the optimum is 1 at the midpoint
  }
  {
    const CurveSet ps({c1d("p", {0, 4}), c1d("q", {0, 8})});
    const CenterResult c = center_grid_approx(ps, 2, 0.25);
    CHECK(c.radius <= 2.5);
    CHECK(c.radius >= 2.0);  // the optimum is 2, e.g. center <0, 6>
  }
}

TEST_CASE("center radius brackets the 1-D optimum") {
  std::mt19937 rng(20240631);
  for (int it = 0; it < 60; ++it) {
    const std::size_t n = 1 + it % 3;
    const std::size_t ell = 1 + it % 2;
    const double eps = it % 2 ? 0.5 : 0.25;
    const CurveSet ps = oracles::random_curve_set(rng, n, 1, 3, it % 3 == 0, 4.0);
    const double optimum = oracles::center_optimum_1d(ps, ell);
    const CenterResult c = center_grid_approx(ps, ell, eps);
    CHECK(c.radius >= optimum * (1.0 - 1e-12));
    CHECK(c.radius <= (1.0 + eps) * optimum + 1e-12);
    CHECK(c.center.size() <= ell);
  }
}

TEST_CASE("middle approximation composition and guarantee") {
  {
    const CurveSet ps({c1d("p", {0, 3, 1})});
    const MiddleApproxResult r = middle_approx(ps, {3, 0.5});
    CHECK(r.realized_radius == 0.0);
  }
  {
    const CurveSet ps({c1d("p", {0}), c1d("q", {2})});
    const MiddleApproxResult r = middle_approx(ps, {1, 0.5});
    CHECK(r.realized_radius == 2.0);
    const SolveOutcome opt = brute_force_optimize(ps, 1, Variant::kUnordered);
    CHECK(r.realized_radius <= (2.0 + 0.5) * *opt.radius);
  }
}

TEST_CASE("approximation ratio against the exact optimum") {
  std::mt19937 rng(20240632);
  const double eps_values[] = {0.25, 0.5, 1.0};
  for (int it = 0; it < 48; ++it) {
    const std::size_t n = 1 + it % 3;
    const std::size_t dim = it % 2 ? 2 : 1;
    const std::size_t ell = 1 + it % 2;
    const double eps = eps_values[it % 3];
    const CurveSet ps =
        oracles::random_curve_set(rng, n, dim, 4, it % 4 == 0, 3.0);
    const SolveOutcome opt = brute_force_optimize(ps, ell, Variant::kUnordered);
    REQUIRE(opt.feasible);
    const MiddleApproxResult r = middle_approx(ps, {ell, eps});
    CHECK(r.middle.size() == r.center.center.size());
    CHECK(r.realized_radius_sq <= 4.0 * r.center.radius_sq);
    CHECK(r.realized_radius <= (2.0 + eps) * *opt.radius);
  }
}

TEST_CASE("parameter validation and the candidate budget") {
  const CurveSet ps({c1d("p", {0}), c1d("q", {2})});
  CHECK_THROWS_AS(center_grid_approx(ps, 0, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(center_grid_approx(ps, 1, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(middle_approx(ps, {1, -1.0}), std::invalid_argument);

  enumeration_limits limits;
  limits.max_candidates = 2;
  CHECK_THROWS_AS(center_grid_approx(ps, 2, 0.25, limits), resource_limit_error);
}
