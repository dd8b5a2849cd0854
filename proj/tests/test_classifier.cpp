#include "doctest.h"

#include <cmath>
#include <vector>

#include "flutes/classifier.hpp"
#include "flutes/report.hpp"

using namespace flutes;

namespace {

Eigen::ArrayXd power_log_terms(double p, Eigen::Index n) {
  return -p * Eigen::ArrayXd::LinSpaced(n, 1.0, static_cast<double>(n)).log();
}

SurfaceSpec slice_flute(double a, double b) {
  return {SurfaceKind::flute, SliceParams{a, b, 1000}, Twists::half()};
}

}  // namespace

TEST_CASE("series verdicts on power laws") {
  const SeriesVerdict harmonic = series_verdict_log(power_log_terms(1.0, 100000), 0.1);
  CHECK(harmonic.status == SeriesStatus::divergent);
  CHECK(harmonic.exponent_estimate == doctest::Approx(1.0).epsilon(1e-3));
  CHECK(harmonic.decade_growth > 0.1);
  CHECK(series_verdict_log(power_log_terms(2.0, 100000), 0.1).status == SeriesStatus::convergent);
  CHECK(series_verdict_log(power_log_terms(1.5, 100000), 0.1).status == SeriesStatus::convergent);
  CHECK(series_verdict_log(power_log_terms(0.5, 100000), 0.1).status == SeriesStatus::divergent);
  CHECK(series_verdict_log(power_log_terms(2.0, 100000), 0.1).exponent_estimate ==
        doctest::Approx(2.0).epsilon(1e-3));
  const SeriesVerdict linear = series_verdict(Eigen::ArrayXd::Constant(1000, 0.5), 0.1);
  CHECK(linear.status == SeriesStatus::divergent);
  CHECK(linear.partial_sum == doctest::Approx(500.0));
  CHECK_THROWS_WITH(series_verdict_log(power_log_terms(1.0, 99), 0.1), "terms: insufficient terms");
}

TEST_CASE("slice closed form") {
  CHECK(classify_slice(4.0, 1.0).parabolic_verdict == Parabolicity::parabolic);
  CHECK(classify_slice(2.0, 5.0).parabolic_verdict == Parabolicity::parabolic);
  CHECK(classify_slice(3.0, 3.0).parabolic_verdict == Parabolicity::not_parabolic);
  CHECK(classify_slice(3.0, 3.0).theorem_used == "Cor 1.4");
}

TEST_CASE("half-twist flutes on the slice") {
  ClassifyOptions opt;
  opt.fan_check = false;
  const ClassificationReport p = classify(slice_flute(4.0, 1.0), opt);
  CHECK(p.theorem_used == "Thm 5.1");
  CHECK(p.parabolic_verdict == Parabolicity::parabolic);
  CHECK(p.kind_verdict == Kind::first_kind);
  const ClassificationReport q = classify(slice_flute(3.0, 3.0), opt);
  CHECK(q.parabolic_verdict == Parabolicity::not_parabolic);
  CHECK(q.kind_verdict == Kind::second_kind);
  bool has_sigma = false;
  for (const auto& s : q.series) has_sigma = has_sigma || s.label == "sum exp(-sigma_n/2)";
  CHECK(has_sigma);
  CHECK_FALSE(q.caveats.empty());
}

TEST_CASE("zero-twist flute") {
  SurfaceSpec spec{SurfaceKind::flute, LogarithmicLengths{2.0, 1.0, 1000}, Twists::zero()};
  const ClassificationReport r = classify(spec);
  CHECK(r.theorem_used == "Thm 2.2");
  CHECK(r.parabolic_verdict == Parabolicity::parabolic);
  spec.cuffs = LogarithmicLengths{4.0, 1.0, 1000};
  CHECK(classify(spec).parabolic_verdict == Parabolicity::not_parabolic);
}

TEST_CASE("generic twists give only the sufficient condition") {
  ClassifyOptions opt;
  opt.n_terms = 20000;
  std::vector<double> twists(opt.n_terms);
  for (std::size_t i = 0; i < twists.size(); ++i) twists[i] = i % 2 == 0 ? 0.2 : -0.3;
  SurfaceSpec spec{SurfaceKind::flute, ConstantLengths{3.0, 1000}, Twists::explicit_values(twists)};
  const ClassificationReport r = classify(spec, opt);
  CHECK(r.theorem_used == "Thm 2.1 sufficient only");
  CHECK(r.parabolic_verdict == Parabolicity::parabolic);
  spec.cuffs = LogarithmicLengths{6.0, 1.0, 1000};
  const ClassificationReport u = classify(spec, opt);
  CHECK(u.parabolic_verdict == Parabolicity::indeterminate);
}

TEST_CASE("end surfaces") {
  SurfaceSpec spec{SurfaceKind::end_surface, SliceParams{0.5, 6.2, 1000}, Twists::half(), 1.0, 1.0};
  const ClassificationReport r = classify(spec);
  CHECK(r.theorem_used == "Thm 5.4");
  CHECK(r.parabolic_verdict == Parabolicity::parabolic);
  spec.twists = Twists::zero();
  CHECK(classify(spec).theorem_used == "Thm 5.5");
  spec.beta_length = 1e-9;
  CHECK_THROWS_AS(classify(spec), ValidationError);
}

TEST_CASE("report serialization") {
  CHECK(format_double(0.1) == "0.10000000000000001");
  CHECK(format_double(std::numeric_limits<double>::infinity()) == "inf");
  const nlohmann::json j = to_json(classify_slice(3.0, 3.0));
  CHECK(j.at("parabolic_verdict") == "NOT_PARABOLIC");
  CHECK(j.at("theorem_used") == "Cor 1.4");
  CHECK(dump_json(j) == dump_json(to_json(classify_slice(3.0, 3.0))));
  CHECK(report_text(classify_slice(1.0, 1.0)).find("PARABOLIC") != std::string::npos);
}
