#pragma once

// Grid sweeps over the two-parameter slice, comparing the numeric verdict with
// the closed form.

#include <cstddef>
#include <string>
#include <vector>

#include "flutes/classifier.hpp"

namespace flutes {

struct SweepGrid {
  double a0 = 0.5;
  double a1 = 6.0;
  double b0 = 0.5;
  double b1 = 6.0;
  double step = 0.25;

  std::vector<double> a_values() const;
  std::vector<double> b_values() const;
};

struct SweepRow {
  double a = 0.0;
  double b = 0.0;
  double min_ab = 0.0;
  double exponent_estimate = 0.0;
  Parabolicity numeric_verdict = Parabolicity::indeterminate;
  Parabolicity closed_form_verdict = Parabolicity::indeterminate;
  bool agree = false;

  bool operator==(const SweepRow&) const = default;
};

struct SliceSweepResult {
  std::vector<SweepRow> rows;  // a outer, b inner, both ascending

  bool operator==(const SliceSweepResult&) const = default;
};

inline const char* kSweepHeader = "a,b,min_ab,exponent_estimate,numeric_verdict,closed_form_verdict,agree";

// Rows are computed on `threads` workers (0: hardware concurrency).
SliceSweepResult sweep_slice(const SweepGrid& grid, std::size_t n_terms, double tol = 0.1,
                             std::size_t threads = 0);

std::string to_csv(const SliceSweepResult& result);
SliceSweepResult parse_csv(const std::string& text);

Parabolicity parse_parabolicity(const std::string& text);

}  // namespace flutes
