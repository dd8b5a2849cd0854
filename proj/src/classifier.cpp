#include "flutes/classifier.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/QR>

namespace flutes {

std::string to_string(SeriesStatus s) {
  switch (s) {
    case SeriesStatus::divergent:
      return "DIVERGENT";
    case SeriesStatus::convergent:
      return "CONVERGENT";
    case SeriesStatus::indeterminate:
      return "INDETERMINATE";
  }
  return "INDETERMINATE";
}

std::string to_string(Kind k) {
  switch (k) {
    case Kind::first_kind:
      return "FIRST_KIND";
    case Kind::second_kind:
      return "SECOND_KIND";
    case Kind::indeterminate:
      return "INDETERMINATE";
  }
  return "INDETERMINATE";
}

std::string to_string(Parabolicity p) {
  switch (p) {
    case Parabolicity::parabolic:
      return "PARABOLIC";
    case Parabolicity::not_parabolic:
      return "NOT_PARABOLIC";
    case Parabolicity::indeterminate:
      return "INDETERMINATE";
  }
  return "INDETERMINATE";
}

namespace {

constexpr int kBlocks = 10;
constexpr std::size_t kMinTerms = 100;

double log_partial(const Eigen::ArrayXd& log_terms, Eigen::Index count) {
  return log_sum_exp(log_terms.head(count));
}

}  // namespace

SeriesVerdict series_verdict_log(const Eigen::ArrayXd& log_terms, double tol) {
  const auto n = static_cast<std::size_t>(log_terms.size());
  if (n < kMinTerms) throw ValidationError("terms", "insufficient terms");
  if (!log_terms.allFinite()) throw ValidationError("terms", "terms must be positive and finite");

  SeriesVerdict v;
  v.n_terms_used = n;

  // Blocks [e_j, e_{j+1}) of 1-based indices with e_j = (N/10) * 10^{j/10}.
  const double lo = static_cast<double>(n) / 10.0;
  std::vector<Eigen::Index> edges;
  for (int j = 0; j <= kBlocks; ++j) {
    const auto e = static_cast<Eigen::Index>(std::llround(lo * std::pow(10.0, j / static_cast<double>(kBlocks))));
    if (edges.empty() || e > edges.back()) edges.push_back(e);
  }
  edges.back() = static_cast<Eigen::Index>(n) + 1;

  const auto rows = static_cast<Eigen::Index>(edges.size() - 1);
  Eigen::MatrixXd design(rows, 2);
  Eigen::VectorXd rhs(rows);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const Eigen::Index first = edges[r];
    const Eigen::Index count = edges[r + 1] - first;
    const auto block = log_terms.segment(first - 1, count);
    double mean_log_index = 0.0;
    for (Eigen::Index k = first; k < first + count; ++k) mean_log_index += std::log(static_cast<double>(k));
    design(r, 0) = 1.0;
    design(r, 1) = mean_log_index / static_cast<double>(count);
    rhs(r) = log_sum_exp(block) - std::log(static_cast<double>(count));
  }
  const Eigen::Vector2d fit = design.colPivHouseholderQr().solve(rhs);
  v.exponent_estimate = -fit(1);

  v.log_partial_sum = log_partial(log_terms, log_terms.size());
  v.partial_sum = std::exp(v.log_partial_sum);
  const double log_head = log_partial(log_terms, edges.front() - 1);
  v.decade_growth = std::expm1(v.log_partial_sum - log_head);

  if (v.exponent_estimate < 1.0 - tol) {
    v.status = SeriesStatus::divergent;
  } else if (v.exponent_estimate > 1.0 + tol) {
    v.status = SeriesStatus::convergent;
  } else {
    v.status = v.decade_growth > tol ? SeriesStatus::divergent : SeriesStatus::indeterminate;
  }
  return v;
}

SeriesVerdict series_verdict(const Eigen::ArrayXd& terms, double tol) {
  if ((terms <= 0.0).any()) throw ValidationError("terms", "terms must be positive");
  return series_verdict_log(terms.log(), tol);
}

namespace {

Parabolicity parabolicity_of(SeriesStatus s) {
  switch (s) {
    case SeriesStatus::divergent:
      return Parabolicity::parabolic;
    case SeriesStatus::convergent:
      return Parabolicity::not_parabolic;
    case SeriesStatus::indeterminate:
      return Parabolicity::indeterminate;
  }
  return Parabolicity::indeterminate;
}

Kind kind_of(Parabolicity p) {
  switch (p) {
    case Parabolicity::parabolic:
      return Kind::first_kind;
    case Parabolicity::not_parabolic:
      return Kind::second_kind;
    case Parabolicity::indeterminate:
      return Kind::indeterminate;
  }
  return Kind::indeterminate;
}

void set_iff(ClassificationReport& r, SeriesStatus s) {
  r.parabolic_verdict = parabolicity_of(s);
  r.kind_verdict = kind_of(r.parabolic_verdict);
}

Eigen::ArrayXd twist_array(const Twists& twists, std::size_t n) {
  Eigen::ArrayXd t(static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i) t(static_cast<Eigen::Index>(i)) = twist_at(twists, i + 1);
  return t;
}

bool twists_in_zero_half(const Eigen::ArrayXd& t) {
  return ((t == 0.0) || (t.abs() == 0.5)).all();
}

void add_slice_caveat(const SurfaceSpec& spec, ClassificationReport& r) {
  if (std::holds_alternative<SliceParams>(spec.cuffs)) {
    r.caveats.push_back("slice lengths start at the second term of the two-parameter family and are reindexed from 1");
  }
}

AccumulationVerdict fan_evidence(const LengthSequences& seq, const ClassifyOptions& opt) {
  const ShearSequence sh = assemble_shears(seq);
  const HorocyclicPath path = horocyclic_lengths(sh, sh.last_index());
  const auto fan = realize_fan<double>(sh, sh.last_index() + 1);
  return accumulation_verdict(fan, path, opt.accumulation);
}

}  // namespace

ClassificationReport classify_flute(const SurfaceSpec& spec, const ClassifyOptions& opt) {
  if (spec.kind != SurfaceKind::flute) throw ValidationError("surface.kind", "expected a flute surface");
  const LengthSequences seq = derive_sequences(spec, opt.n_terms);
  const Eigen::ArrayXd t = twist_array(spec.twists, opt.n_terms);

  ClassificationReport r;
  add_slice_caveat(spec, r);

  const SeriesVerdict plain = series_verdict_log(-seq.ell / 2.0, opt.tol);
  const SeriesVerdict twisted = series_verdict_log(-(1.0 - t.abs()) * seq.ell / 2.0, opt.tol);
  r.series.push_back({"sum exp(-l_n/2)", plain});
  r.series.push_back({"sum exp(-(1-|t_n|) l_n/2)", twisted});
  const bool forced = plain.status == SeriesStatus::divergent || twisted.status == SeriesStatus::divergent;

  const bool zero = (t == 0.0).all();
  const bool half = (t.abs() == 0.5).all();

  if (zero) {
    r.theorem_used = "Thm 2.2";
    set_iff(r, plain.status);
  } else if (half && is_nondecreasing(seq.ell)) {
    r.theorem_used = "Thm 5.1";
    const SeriesVerdict sigma = series_verdict_log(-seq.sigma / 2.0, opt.tol);
    r.series.push_back({"sum exp(-sigma_n/2)", sigma});
    set_iff(r, sigma.status);
    if (opt.fan_check) {
      r.accumulation = fan_evidence(seq, opt);
      const auto a = r.accumulation->outcome;
      if ((a == Accumulation::single_point && r.parabolic_verdict == Parabolicity::not_parabolic) ||
          (a == Accumulation::geodesic_limit && r.parabolic_verdict == Parabolicity::parabolic)) {
        r.caveats.push_back("fan accumulation test disagrees with the series verdict");
      }
    }
  } else {
    r.theorem_used = "Thm 2.1 sufficient only";
    if (half) r.caveats.push_back("cuff lengths are not nondecreasing; the sigma criterion does not apply");
    if (forced) {
      r.parabolic_verdict = Parabolicity::parabolic;
      r.kind_verdict = twists_in_zero_half(t) ? Kind::first_kind : Kind::indeterminate;
    }
    if (!twists_in_zero_half(t)) {
      r.caveats.push_back("twists outside {0, 1/2}: only the sufficient condition for parabolicity is available");
    }
    return r;
  }

  if (forced && r.parabolic_verdict != Parabolicity::parabolic) {
    r.caveats.push_back("a sufficient series diverges; parabolicity forced");
    r.parabolic_verdict = Parabolicity::parabolic;
    r.kind_verdict = Kind::first_kind;
  }
  return r;
}

ClassificationReport classify_end_surface(const SurfaceSpec& spec, const ClassifyOptions& opt) {
  if (spec.kind != SurfaceKind::end_surface) throw ValidationError("surface.kind", "expected an end surface");
  spec.validate();
  const auto in_bounds = [&](double x) { return x >= opt.min_handle_length && x <= opt.max_handle_length; };
  if (!in_bounds(*spec.beta_length)) throw ValidationError("surface.beta_length", "outside the allowed bounds");
  if (!in_bounds(*spec.gamma_length)) throw ValidationError("surface.gamma_length", "outside the allowed bounds");

  const LengthSequences seq = derive_sequences(spec, opt.n_terms);
  const Eigen::ArrayXd t = twist_array(spec.twists, opt.n_terms);
  ClassificationReport r;
  add_slice_caveat(spec, r);

  if ((t == 0.0).all()) {
    r.theorem_used = "Thm 5.5";
    const SeriesVerdict plain = series_verdict_log(-seq.ell / 2.0, opt.tol);
    r.series.push_back({"sum exp(-l_n/2)", plain});
    r.series.push_back({"sum l(eta_n)", series_verdict(seq.eta, opt.tol)});
    set_iff(r, plain.status);
  } else if ((t.abs() == 0.5).all()) {
    r.theorem_used = "Thm 5.4";
    if (!is_nondecreasing(seq.ell)) {
      r.caveats.push_back("cuff lengths are not nondecreasing; the sigma criterion does not apply");
      return r;
    }
    const SeriesVerdict sigma = series_verdict_log(-seq.sigma / 2.0, opt.tol);
    r.series.push_back({"sum exp(-sigma_n/2)", sigma});
    const EscapeEstimate escape = escape_path_estimate(seq);
    r.series.push_back({"summit estimate", series_verdict(escape.terms, opt.tol)});
    set_iff(r, sigma.status);
  } else {
    r.theorem_used = "none";
    r.caveats.push_back("end-surface criteria cover only all-zero or all-half twists");
  }
  return r;
}

ClassificationReport classify(const SurfaceSpec& spec, const ClassifyOptions& opt) {
  return spec.kind == SurfaceKind::flute ? classify_flute(spec, opt) : classify_end_surface(spec, opt);
}

ClassificationReport classify_slice(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0)) throw DomainError("slice parameters must be positive");
  ClassificationReport r;
  r.theorem_used = "Cor 1.4";
  if (std::min(a, b) <= 2.0) {
    r.parabolic_verdict = Parabolicity::parabolic;
    r.kind_verdict = Kind::first_kind;
  } else {
    r.parabolic_verdict = Parabolicity::not_parabolic;
    r.kind_verdict = Kind::second_kind;
  }
  return r;
}

}  // namespace flutes
