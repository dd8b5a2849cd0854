#include "doctest.h"

#include <string>

#include "flutes/config.hpp"
#include "flutes/render.hpp"
#include "flutes/selftest.hpp"
#include "flutes/sweep.hpp"

using namespace flutes;

namespace {

const std::string kMinimal = R"({"surface": {"kind": "flute", "cuffs": {"type": "slice", "a": 4, "b": 1}}})";

std::string field_of(const std::string& text) {
  try {
    load_config(text);
  } catch (const ValidationError& e) {
    return e.field();
  }
  return "<accepted>";
}

}  // namespace

TEST_CASE("config defaults") {
  const RunConfig cfg = load_config(kMinimal);
  CHECK(cfg.surface.kind == SurfaceKind::flute);
  CHECK(cfg.surface.twists.mode == TwistMode::half);
  CHECK(std::get<SliceParams>(cfg.surface.cuffs).count == 1000);
  CHECK(cfg.path.s1 == 0.0);
  CHECK(cfg.path.terms == 1000);
  CHECK(cfg.classify.n_terms == 100000);
  CHECK(cfg.classify.tolerance == 0.1);
  CHECK(cfg.render.model == RenderModel::disk);
  CHECK(cfg.render.samples_per_arc == 48);
}

TEST_CASE("config round trip") {
  RunConfig cfg = load_config(kMinimal);
  CHECK(load_config(emit_config(cfg)) == cfg);
  cfg.surface = SurfaceSpec{SurfaceKind::end_surface, ExplicitLengths{{1.5, 2.0, 2.25}},
                            Twists::explicit_values({0.5, -0.125, 0.1}), 0.75, 1.0 / 3.0};
  cfg.path = {-0.7, 12};
  cfg.render.model = RenderModel::halfplane;
  CHECK(load_config(emit_config(cfg)) == cfg);
  CHECK(emit_config(load_config(emit_config(cfg))) == emit_config(cfg));
}

TEST_CASE("config errors name the field") {
  CHECK(field_of("{") == "");
  CHECK(field_of(R"({"surface": {"kind": "torus", "cuffs": {"type": "constant", "value": 1}}})") == "surface.kind");
  CHECK(field_of(R"({"surface": {"kind": "flute", "cuffs": {"type": "constant", "value": -1}}})") ==
        "surface.cuffs.value");
  CHECK(field_of(R"({"surface": {"kind": "flute", "cuffs": {"type": "constant", "value": 1}, "twists": [0, 0.7]}})") ==
        "surface.twists[1]");
  CHECK(field_of(R"({"surface": {"kind": "flute", "cuffs": {"type": "constant", "value": 1}}, "extra": 1})") ==
        "extra");
  CHECK(field_of(R"({"surface": {"kind": "flute", "cuffs": {"type": "constant", "value": 1}},
                     "render": {"model": "klein"}})") == "render.model");
  CHECK(field_of(R"({"surface": {"kind": "end_surface", "cuffs": {"type": "constant", "value": 1}}})") ==
        "surface.beta_length");
}

TEST_CASE("sweep CSV round trip") {
  SweepGrid grid{1.0, 3.0, 1.0, 3.0, 1.0};
  const SliceSweepResult result = sweep_slice(grid, 2000, 0.1, 2);
  REQUIRE(result.rows.size() == 9);
  CHECK(result.rows.front().a == 1.0);
  CHECK(result.rows.back().b == 3.0);
  const std::string csv = to_csv(result);
  CHECK(csv.rfind(kSweepHeader, 0) == 0);
  CHECK(parse_csv(csv) == result);
  CHECK(sweep_slice(grid, 2000, 0.1, 1) == result);
  CHECK_THROWS_AS(parse_csv("a,b\n1,2\n"), ValidationError);
}

TEST_CASE("SVG output is deterministic and geometrically sound") {
  RunConfig cfg = load_config(kMinimal);
  cfg.path.terms = 60;
  const RenderResult first = render_fan_svg(cfg);
  const RenderResult second = render_fan_svg(cfg);
  CHECK(first.svg == second.svg);
  CHECK(first.geodesics == 61);
  CHECK(first.arcs == 60);
  const auto check = selftest::svg_geometry("svg", first.svg);
  CHECK_MESSAGE(check.passed, check.detail);
  CHECK(first.svg.find("<circle") != std::string::npos);

  cfg.render.model = RenderModel::halfplane;
  const RenderResult plane = render_fan_svg(cfg);
  CHECK(plane.svg != first.svg);
  CHECK(plane.svg == render_fan_svg(cfg).svg);
}

TEST_CASE("truncated fans are reported") {
  RunConfig cfg = load_config(R"({"surface": {"kind": "flute", "cuffs": {"type": "slice", "a": 3, "b": 3}},
                                   "path": {"terms": 3000}})");
  const RenderResult r = render_fan_svg(cfg);
  REQUIRE(r.truncated_at.has_value());
  CHECK(r.svg.find("resolution exhausted at shear index " + std::to_string(*r.truncated_at)) != std::string::npos);
  CHECK(r.arcs + 1 == r.geodesics);
  const auto check = selftest::svg_geometry("svg", r.svg);
  CHECK_MESSAGE(check.passed, check.detail);
}

TEST_CASE("fast oracle suites") {
  for (const auto& r : {selftest::even_shear_oracle(50), selftest::odd_shear_oracle(50), selftest::pentagon_bounds(20),
                        selftest::proof_inequalities(1000)}) {
    const std::string what = r.name + ": " + r.detail;
    CHECK_MESSAGE(r.passed, what);
  }
}
