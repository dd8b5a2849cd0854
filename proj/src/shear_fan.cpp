#include "flutes/shear_fan.hpp"

#include <cmath>
#include <limits>

namespace flutes {

std::string to_string(JunctionType t) {
  return t == JunctionType::left_open ? "left-open" : "left-closed";
}

std::string to_string(Accumulation a) {
  switch (a) {
    case Accumulation::single_point:
      return "SINGLE_POINT";
    case Accumulation::geodesic_limit:
      return "GEODESIC_LIMIT";
    case Accumulation::indeterminate:
      return "INDETERMINATE";
  }
  return "INDETERMINATE";
}

double ShearSequence::at(std::size_t n) const {
  if (n < first_index() || n > last_index()) throw ValidationError("n", "shear index out of range");
  return s(static_cast<Eigen::Index>(n - 2));
}

double HorocyclicPath::cumulative_length() const {
  if (log_cumulative.size() == 0) return 0.0;
  return std::exp(log_cumulative(log_cumulative.size() - 1));
}

double shear_even(double eta) {
  if (!(eta > 0.0)) throw DomainError("shear_even requires eta > 0");
  return 2.0 * log_sinh(eta / 2.0);
}

double shear_odd(double eta_prev, double eta_next, double ell, int residue) {
  if (residue != 1 && residue != 3) throw DomainError("shear_odd residue must be 1 or 3");
  const double half = ell / 2.0;
  const double legs = lambert_side(eta_prev) + lambert_side(eta_next);
  return residue == 1 ? legs - half : legs + half;
}

ShearSequence assemble_shears(const LengthSequences& seq, double s1) {
  const Eigen::Index cuffs = seq.ell.size();
  if (cuffs < 2 || seq.eta.size() != cuffs - 1) {
    throw ValidationError("sequences", "eta must have one entry fewer than ell");
  }
  ShearSequence sh;
  sh.s1 = s1;
  sh.s.resize(2 * cuffs - 3);  // indices 2 .. 2N - 2
  for (Eigen::Index n = 1; n < cuffs; ++n) {
    sh.s(2 * n - 2) = shear_even(seq.eta(n - 1));
  }
  for (Eigen::Index m = 2; m < cuffs; ++m) {
    const int residue = m % 2 == 1 ? 1 : 3;
    sh.s(2 * m - 3) = shear_odd(seq.eta(m - 2), seq.eta(m - 1), seq.ell(m - 1), residue);
  }
  return sh;
}

HorocyclicPath path_from_log_lengths(Eigen::ArrayXd log_lengths) {
  HorocyclicPath path;
  path.log_cumulative.resize(log_lengths.size());
  double acc = -std::numeric_limits<double>::infinity();
  const double ceiling = std::log(std::numeric_limits<double>::max());
  for (Eigen::Index i = 0; i < log_lengths.size(); ++i) {
    acc = log_add_exp(acc, log_lengths(i));
    path.log_cumulative(i) = acc;
    if (acc > ceiling) path.saturated = true;
  }
  path.log_lengths = std::move(log_lengths);
  return path;
}

HorocyclicPath horocyclic_lengths(const ShearSequence& sh, std::size_t n_terms) {
  if (n_terms < 1) throw ValidationError("terms", "need at least one arc");
  if (n_terms > sh.last_index()) throw ValidationError("terms", "insufficient shears for path");
  Eigen::ArrayXd log_lengths(static_cast<Eigen::Index>(n_terms));
  double partial = sh.s1;
  log_lengths(0) = -partial;
  for (std::size_t n = 2; n <= n_terms; ++n) {
    partial += sh.at(n);
    log_lengths(static_cast<Eigen::Index>(n - 1)) = n % 2 == 0 ? partial : -partial;
  }
  return path_from_log_lengths(std::move(log_lengths));
}

EscapeEstimate escape_path_estimate(const LengthSequences& seq) {
  const Eigen::Index n = seq.sigma.size();
  EscapeEstimate est;
  if (n < 3) throw ValidationError("sequences", "need at least 3 cuffs");
  est.terms = (-seq.sigma.head(n - 2) / 2.0).exp() + (-seq.sigma.tail(n - 2) / 2.0).exp();
  est.partial.resize(est.terms.size());
  double acc = 0.0;
  for (Eigen::Index i = 0; i < est.terms.size(); ++i) {
    acc += est.terms(i);
    est.partial(i) = acc;
  }
  return est;
}

AccumulationVerdict accumulation_verdict(double endpoint_gap, double midpoint_gap, std::size_t fan_size,
                                         const HorocyclicPath& path, const AccumulationOptions& opt) {
  AccumulationVerdict v;
  v.endpoint_gap = endpoint_gap;
  v.midpoint_gap = midpoint_gap;
  v.fan_size = fan_size;
  if (path.size() == 0) return v;

  const Eigen::Index window = std::min<Eigen::Index>(static_cast<Eigen::Index>(opt.cauchy_window), path.size());
  v.last_increment = std::exp(log_sum_exp(path.log_lengths.tail(window)));
  const double total = path.cumulative_length();
  v.diverging = path.saturated || total > opt.divergence_floor;
  v.path_length_estimate = v.diverging ? std::numeric_limits<double>::infinity() : total;

  const bool stable = endpoint_gap >= opt.stable_fraction * midpoint_gap;
  if (endpoint_gap < opt.gap_tol && v.diverging) {
    v.outcome = Accumulation::single_point;
  } else if (endpoint_gap > opt.gap_tol && stable && !v.diverging && v.last_increment < opt.increment_tol) {
    v.outcome = Accumulation::geodesic_limit;
  }
  return v;
}

}  // namespace flutes
