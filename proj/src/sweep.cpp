#include "flutes/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

#include "flutes/report.hpp"

namespace flutes {

namespace {

std::vector<double> axis(double lo, double hi, double step, const std::string& field) {
  if (!(lo > 0.0) || !(hi > 0.0)) throw ValidationError(field, "range must be positive");
  if (!(step > 0.0)) throw ValidationError("step", "step must be positive");
  std::vector<double> out;
  for (std::size_t i = 0;; ++i) {
    const double x = lo + static_cast<double>(i) * step;
    if (x > hi + 1e-9 * step) break;
    out.push_back(x);
  }
  if (out.empty()) throw ValidationError(field, "empty grid");
  return out;
}

}  // namespace

std::vector<double> SweepGrid::a_values() const { return axis(a0, a1, step, "a"); }
std::vector<double> SweepGrid::b_values() const { return axis(b0, b1, step, "b"); }

SliceSweepResult sweep_slice(const SweepGrid& grid, std::size_t n_terms, double tol, std::size_t threads) {
  const auto as = grid.a_values();
  const auto bs = grid.b_values();
  SliceSweepResult result;
  result.rows.resize(as.size() * bs.size());
  for (std::size_t i = 0; i < as.size(); ++i) {
    for (std::size_t j = 0; j < bs.size(); ++j) {
      auto& row = result.rows[i * bs.size() + j];
      row.a = as[i];
      row.b = bs[j];
      row.min_ab = std::min(row.a, row.b);
    }
  }

  ClassifyOptions opt;
  opt.n_terms = n_terms;
  opt.tol = tol;

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    for (std::size_t k = next++; k < result.rows.size(); k = next++) {
      auto& row = result.rows[k];
      try {
        const SurfaceSpec spec{SurfaceKind::flute, SliceParams{row.a, row.b, n_terms}, Twists::half()};
        const ClassificationReport numeric = classify_flute(spec, opt);
        row.numeric_verdict = numeric.parabolic_verdict;
        for (const auto& s : numeric.series) {
          if (s.label == "sum exp(-sigma_n/2)") row.exponent_estimate = s.verdict.exponent_estimate;
        }
        row.closed_form_verdict = classify_slice(row.a, row.b).parabolic_verdict;
        row.agree = row.numeric_verdict == row.closed_form_verdict ||
                    row.numeric_verdict == Parabolicity::indeterminate;
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, result.rows.size());
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return result;
}

std::string to_csv(const SliceSweepResult& result) {
  std::ostringstream out;
  out << kSweepHeader << "\n";
  for (const auto& r : result.rows) {
    out << format_double(r.a) << ',' << format_double(r.b) << ',' << format_double(r.min_ab) << ','
        << format_double(r.exponent_estimate) << ',' << to_string(r.numeric_verdict) << ','
        << to_string(r.closed_form_verdict) << ',' << (r.agree ? "true" : "false") << "\n";
  }
  return out.str();
}

Parabolicity parse_parabolicity(const std::string& text) {
  if (text == "PARABOLIC") return Parabolicity::parabolic;
  if (text == "NOT_PARABOLIC") return Parabolicity::not_parabolic;
  if (text == "INDETERMINATE") return Parabolicity::indeterminate;
  throw ValidationError("verdict", "unknown verdict \"" + text + "\"");
}

SliceSweepResult parse_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != kSweepHeader) throw ValidationError("csv", "unexpected header");
  SliceSweepResult result;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::istringstream row_in(line);
    std::string cell;
    while (std::getline(row_in, cell, ',')) cells.push_back(cell);
    if (cells.size() != 7) throw ValidationError("csv line " + std::to_string(line_no), "expected 7 fields");
    SweepRow r;
    r.a = std::stod(cells[0]);
    r.b = std::stod(cells[1]);
    r.min_ab = std::stod(cells[2]);
    r.exponent_estimate = std::stod(cells[3]);
    r.numeric_verdict = parse_parabolicity(cells[4]);
    r.closed_form_verdict = parse_parabolicity(cells[5]);
    if (cells[6] != "true" && cells[6] != "false") {
      throw ValidationError("csv line " + std::to_string(line_no), "agree must be true or false");
    }
    r.agree = cells[6] == "true";
    result.rows.push_back(r);
  }
  return result;
}

}  // namespace flutes
