#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "middlecurves/io.hpp"
#include "middlecurves/reduction.hpp"
#include "middlecurves/svg.hpp"
#include "oracles.hpp"

using namespace middlecurves;

namespace {

bool sets_equal(const CurveSet& a, const CurveSet& b) {
  if (a.size() != b.size() || a.dimension() != b.dimension()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].id() != b[i].id()) return false;
    if (a[i].vertices() != b[i].vertices()) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("curve files round-trip") {
  std::mt19937 rng(20240641);
  for (int it = 0; it < 40; ++it) {
    const CurveSet ps = oracles::random_curve_set(rng, 1 + it % 3, 1 + it % 2,
                                                  5, it % 2 == 0);
    const std::string text = write_curve_file(ps);
    CHECK(sets_equal(read_curve_file(text), ps));
    // Serialization is deterministic.
    CHECK(write_curve_file(read_curve_file(text)) == text);
  }
}

TEST_CASE("integral coordinates are written as integers") {
  const CurveSet ps({Curve("p", {Point{-3.0}, Point{2.0}})});
  const std::string text = write_curve_file(ps);
  CHECK(text.find("-3.0") == std::string::npos);
  CHECK(text.find("-3") != std::string::npos);
  const CurveSet back = read_curve_file(text);
  CHECK(back[0].is_integral());
}

TEST_CASE("curve file validation") {
  CHECK_THROWS_AS(read_curve_file("not json"), std::invalid_argument);
  CHECK_THROWS_AS(read_curve_file("{}"), std::invalid_argument);
  CHECK_THROWS_AS(read_curve_file(R"({"dimension": 2, "curves":
      [{"id": "p", "points": [[1]]}]})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(read_curve_file(R"({"dimension": 1, "curves":
      [{"id": "p", "points": [[1]]}, {"id": "p", "points": [[2]]}]})"),
                  std::invalid_argument);
}

TEST_CASE("middle files round-trip") {
  const MiddleFile middle{{{"eta1", 3}, {"A^1", 1}}, 1.0, Variant::kRestricted};
  const std::string text = write_middle_file(middle);
  const MiddleFile back = read_middle_file(text);
  CHECK(back.refs == middle.refs);
  CHECK(back.delta == middle.delta);
  CHECK(back.variant == middle.variant);
  CHECK_THROWS_AS(read_middle_file(R"({"refs": [], "delta": 1,
      "variant": "sideways"})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(read_middle_file(R"({"refs": [{"curve": "p", "index": 0}],
      "delta": 1, "variant": "ordered"})"),
                  std::invalid_argument);
}

TEST_CASE("scs files round-trip") {
  const ScsInstance inst{{"AB", "BB"}, 3};
  const ScsInstance back = read_scs_file(write_scs_file(inst));
  CHECK(back.sequences == inst.sequences);
  CHECK(back.t == inst.t);
  CHECK_THROWS_AS(read_scs_file(R"({"sequences": ["AX"], "t": 1})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(read_scs_file(R"({"sequences": ["A"], "t": -1})"),
                  std::invalid_argument);
}

TEST_CASE("csv import groups by curve id in order of first mention") {
  const std::string csv =
      "id,x,y\n"
      "b,0,1\n"
      "a,2,3\n"
      "b,4,5\n";
  const CurveSet ps = read_curve_csv(csv);
  CHECK(ps.size() == 2);
  CHECK(ps[0].id() == "b");
  CHECK(ps[0].size() == 2);
  CHECK(ps[0].vertex(2) == Point{4.0, 5.0});
  CHECK(ps[1].id() == "a");
  CHECK_THROWS_AS(read_curve_csv("a,1\nb,oops\n"), std::invalid_argument);
  CHECK_THROWS_AS(read_curve_csv("justone\n"), std::invalid_argument);
}

TEST_CASE("svg of a reduction instance has one polyline per curve") {
  const auto instance = middlecurves::make_reduction_instance({"AB", "BB"}, 3, 1, 2);
  const std::string svg = render_svg(instance.all_curves());
  std::size_t polylines = 0;
  for (std::size_t pos = svg.find("<polyline"); pos != std::string::npos;
       pos = svg.find("<polyline", pos + 1)) {
    ++polylines;
  }
  CHECK(polylines == 4);
}

TEST_CASE("svg rendering is deterministic and validates input") {
  const CurveSet one_d({Curve("p", {Point{0.0}, Point{2.0}}),
                        Curve("q", {Point{1.0}})});
  const std::string svg = render_svg(one_d);
  CHECK(svg == render_svg(one_d));
  CHECK(svg.find("<polyline") != std::string::npos);
  CHECK(svg.find("</svg>") != std::string::npos);

  const CurveSet two_d({Curve("p", {Point{0.0, 1.0}, Point{2.0, 0.5}})});
  CHECK(render_svg(two_d).find("<polyline") != std::string::npos);

  CHECK_THROWS_AS(render_svg(one_d, {"nope"}), std::invalid_argument);
  const CurveSet three_d({Curve("p", {Point{0.0, 1.0, 2.0}})});
  CHECK_THROWS_AS(render_svg(three_d), std::invalid_argument);
}
