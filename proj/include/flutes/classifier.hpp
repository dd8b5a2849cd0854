#pragma once

// Numeric series verdicts and the dispatch from a surface description to
// first/second kind and parabolic/non-parabolic verdicts.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "flutes/fenchel_nielsen.hpp"
#include "flutes/shear_fan.hpp"

namespace flutes {

enum class SeriesStatus { divergent, convergent, indeterminate };
enum class Kind { first_kind, second_kind, indeterminate };
enum class Parabolicity { parabolic, not_parabolic, indeterminate };

std::string to_string(SeriesStatus s);
std::string to_string(Kind k);
std::string to_string(Parabolicity p);

struct SeriesVerdict {
  SeriesStatus status = SeriesStatus::indeterminate;
  double exponent_estimate = 0.0;  // p in t_n ~ c n^{-p}
  double log_partial_sum = 0.0;
  double partial_sum = 0.0;        // exp(log_partial_sum), may be inf
  double decade_growth = 0.0;      // (S_N - S_{N/10}) / S_{N/10}
  std::size_t n_terms_used = 0;
};

// The exponent is a least-squares slope of log block means against log index
// over ten geometric blocks covering the last decade of indices. Exponents
// within tol of 1 are DIVERGENT only if the partial sums grew by more than tol
// (relative) over that decade.
SeriesVerdict series_verdict_log(const Eigen::ArrayXd& log_terms, double tol);
SeriesVerdict series_verdict(const Eigen::ArrayXd& terms, double tol);

struct NamedSeries {
  std::string label;
  SeriesVerdict verdict;
};

struct ClassificationReport {
  Kind kind_verdict = Kind::indeterminate;
  Parabolicity parabolic_verdict = Parabolicity::indeterminate;
  std::string theorem_used;
  std::vector<NamedSeries> series;
  std::optional<AccumulationVerdict> accumulation;
  std::vector<std::string> caveats;
};

struct ClassifyOptions {
  std::size_t n_terms = 100000;
  double tol = 0.1;
  bool fan_check = true;
  double min_handle_length = 1e-6;
  double max_handle_length = 1e6;
  AccumulationOptions accumulation;
};

ClassificationReport classify_flute(const SurfaceSpec& spec, const ClassifyOptions& opt = {});
ClassificationReport classify_end_surface(const SurfaceSpec& spec, const ClassifyOptions& opt = {});
ClassificationReport classify(const SurfaceSpec& spec, const ClassifyOptions& opt = {});

// Closed form on the slice: parabolic iff min(a, b) <= 2.
ClassificationReport classify_slice(double a, double b);

}  // namespace flutes
