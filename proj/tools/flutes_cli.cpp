#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "flutes/classifier.hpp"
#include "flutes/config.hpp"
#include "flutes/render.hpp"
#include "flutes/report.hpp"
#include "flutes/selftest.hpp"
#include "flutes/sweep.hpp"

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitTruncated = 3;

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw flutes::ValidationError("output", "cannot write " + path);
  out << text;
}

int run_classify(const std::string& config_path, bool json) {
  const flutes::RunConfig cfg = flutes::load_config_file(config_path);
  flutes::ClassifyOptions opt;
  opt.n_terms = cfg.classify.n_terms;
  opt.tol = cfg.classify.tolerance;
  const flutes::ClassificationReport report = flutes::classify(cfg.surface, opt);
  std::cout << (json ? flutes::dump_json(flutes::to_json(report)) : flutes::report_text(report));
  return 0;
}

int run_fan(const std::string& config_path, std::size_t terms, const std::string& model, const std::string& svg,
            bool strict) {
  flutes::RunConfig cfg = flutes::load_config_file(config_path);
  if (terms > 0) cfg.path.terms = terms;
  if (!model.empty()) cfg.render.model = flutes::parse_render_model(model);
  const flutes::RenderResult result = flutes::render_fan_svg(cfg);
  if (svg.empty() || svg == "-") {
    std::cout << result.svg;
  } else {
    write_file(svg, result.svg);
  }
  std::cerr << "geodesics " << result.geodesics << ", arcs " << result.arcs << "\n";
  if (result.truncated_at) {
    std::cerr << "warning: resolution exhausted at shear index " << *result.truncated_at << "\n";
    if (strict) return kExitTruncated;
  }
  return 0;
}

int run_slice(const flutes::SweepGrid& grid, std::size_t n_terms, double tol, const std::string& out) {
  const flutes::SliceSweepResult result = flutes::sweep_slice(grid, n_terms, tol);
  const std::string csv = flutes::to_csv(result);
  if (out.empty() || out == "-") {
    std::cout << csv;
  } else {
    write_file(out, csv);
  }
  return 0;
}

int run_selftest() {
  int failed = 0;
  for (const auto& r : flutes::selftest::quick_suite()) {
    std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.detail << "\n";
    if (!r.passed) ++failed;
  }
  return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Invariants and type classification of flute and end surfaces"};
  app.require_subcommand(1);

  auto* classify = app.add_subcommand("classify", "classify the surface described by a config file");
  std::string classify_config;
  bool classify_json = false;
  classify->add_option("--config", classify_config, "config file")->required();
  classify->add_flag("--json", classify_json, "emit JSON");

  auto* slice = app.add_subcommand("slice", "sweep the two-parameter slice and compare with the closed form");
  flutes::SweepGrid grid;
  std::size_t slice_terms = 100000;
  double slice_tol = 0.1;
  std::string slice_out;
  slice->add_option("--a0", grid.a0, "first a")->capture_default_str();
  slice->add_option("--a1", grid.a1, "last a")->capture_default_str();
  slice->add_option("--b0", grid.b0, "first b")->capture_default_str();
  slice->add_option("--b1", grid.b1, "last b")->capture_default_str();
  slice->add_option("--step", grid.step, "grid step")->capture_default_str();
  slice->add_option("--n-terms", slice_terms, "series terms per point")->capture_default_str();
  slice->add_option("--tolerance", slice_tol, "exponent tolerance")->capture_default_str();
  slice->add_option("--out", slice_out, "CSV output path (default stdout)");

  auto* fan = app.add_subcommand("fan", "render the fan and its horocyclic path as SVG");
  std::string fan_config;
  std::size_t fan_terms = 0;
  std::string fan_model;
  std::string fan_svg;
  bool strict = false;
  fan->add_option("--config", fan_config, "config file")->required();
  fan->add_option("--terms", fan_terms, "number of horocyclic arcs (default from config)");
  fan->add_option("--model", fan_model, "disk or halfplane")->check(CLI::IsMember({"disk", "halfplane"}));
  fan->add_option("--svg", fan_svg, "SVG output path (default stdout)");
  fan->add_flag("--strict", strict, "exit with status 3 when the fan is truncated");

  auto* selftest = app.add_subcommand("selftest", "run the oracle-equivalence suites");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitValidation;
  }

  try {
    if (*classify) return run_classify(classify_config, classify_json);
    if (*slice) return run_slice(grid, slice_terms, slice_tol, slice_out);
    if (*fan) return run_fan(fan_config, fan_terms, fan_model, fan_svg, strict);
    if (*selftest) return run_selftest();
  } catch (const flutes::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
