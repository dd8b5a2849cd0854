#pragma once

// Shears of the nested geodesic fan g_1, g_2, ... attached to a flute or end
// surface, the horocyclic path crossing its wedges, an explicit realization of
// the fan in H, and the accumulation test on the result.

#include <algorithm>
#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "flutes/fenchel_nielsen.hpp"
#include "flutes/hyperbolic.hpp"

namespace flutes {

enum class JunctionType { left_open, left_closed };

// Junction n joins the wedges on either side of g_n.
inline JunctionType junction_type(std::size_t n) {
  return n % 2 == 0 ? JunctionType::left_open : JunctionType::left_closed;
}

std::string to_string(JunctionType t);

struct ShearSequence {
  Eigen::ArrayXd s;  // s(g_2), s(g_3), ...; s(g_n) is s[n - 2]
  double s1 = 0.0;

  std::size_t first_index() const { return 2; }
  std::size_t last_index() const { return static_cast<std::size_t>(s.size()) + 1; }
  double at(std::size_t n) const;
};

struct HorocyclicPath {
  Eigen::ArrayXd log_lengths;     // log l(h_1), log l(h_2), ...
  Eigen::ArrayXd log_cumulative;  // log of the running sums of l(h_n)
  bool saturated = false;         // some running sum exceeds the double range

  Eigen::Index size() const { return log_lengths.size(); }
  double cumulative_length() const;
};

struct EscapeEstimate {
  Eigen::ArrayXd terms;     // exp(-sigma_{n-1}/2) + exp(-sigma_{n+1}/2), n = 2 .. N-1
  Eigen::ArrayXd partial;   // running sums of terms
};

enum class Accumulation { single_point, geodesic_limit, indeterminate };

std::string to_string(Accumulation a);

struct AccumulationOptions {
  double gap_tol = 1e-6;
  double increment_tol = 1e-6;
  double divergence_floor = 1e3;
  std::size_t cauchy_window = 4;
  double stable_fraction = 0.75;
};

struct AccumulationVerdict {
  Accumulation outcome = Accumulation::indeterminate;
  double endpoint_gap = 0.0;
  double midpoint_gap = 0.0;
  std::size_t fan_size = 0;
  double path_length_estimate = 0.0;  // +inf when the path is diverging
  double last_increment = 0.0;
  bool diverging = false;
};

// 2 log sinh(eta/2).
double shear_even(double eta);

// lambert_side(eta_prev) + lambert_side(eta_next) - ell/2 for residue 1 mod 4,
// + ell/2 for residue 3 mod 4.
double shear_odd(double eta_prev, double eta_next, double ell, int residue);

// Shears s(g_2) .. s(g_{2N-2}) for N cuffs: s(g_{2n}) from eta_n, and
// s(g_{2m-1}) from eta_{m-1}, eta_m and l_m for m = 2 .. N-1.
ShearSequence assemble_shears(const LengthSequences& seq, double s1 = 0.0);

// Closed form: log l(h_1) = -s_1, log l(h_n) = -(s_1 + ... + s_n) for n odd
// and +(s_1 + ... + s_n) for n even.
HorocyclicPath horocyclic_lengths(const ShearSequence& sh, std::size_t n_terms);

// Running sums of exp(log_lengths) in log form.
HorocyclicPath path_from_log_lengths(Eigen::ArrayXd log_lengths);

EscapeEstimate escape_path_estimate(const LengthSequences& seq);

template <typename Scalar = double>
struct GeodesicFan {
  std::vector<Geodesic<Scalar>> geodesics;  // g_1, g_2, ...
  std::vector<JunctionType> junctions;      // junction n at index n - 2, n = 2 .. size - 1
  std::optional<std::size_t> truncated_at;  // shear index whose endpoint could not be resolved

  std::size_t size() const { return geodesics.size(); }
  bool truncated() const { return truncated_at.has_value(); }
};

namespace detail {

template <typename Scalar>
bool unresolved(const Scalar& x, const Scalar& y) {
  using std::abs;
  const Scalar scale = std::max(Scalar(abs(x)), Scalar(abs(y)));
  const Scalar diff = abs(x - y);
  return diff <= Scalar(16) * std::numeric_limits<Scalar>::epsilon() * scale ||
         diff <= std::numeric_limits<Scalar>::min();
}

template <typename Scalar>
bool unresolved(const BoundaryPoint<Scalar>& x, const BoundaryPoint<Scalar>& y) {
  if (x.is_infinite() || y.is_infinite()) return x.is_infinite() && y.is_infinite();
  return unresolved(x.value(), y.value());
}

template <typename Scalar>
const BoundaryPoint<Scalar>& other_endpoint(const Geodesic<Scalar>& g, const BoundaryPoint<Scalar>& v) {
  return g.initial() == v ? g.terminal() : g.initial();
}

template <typename Scalar>
BoundaryPoint<Scalar> shared_endpoint(const Geodesic<Scalar>& g, const Geodesic<Scalar>& h) {
  if (h.has_endpoint(g.initial())) return g.initial();
  if (h.has_endpoint(g.terminal())) return g.terminal();
  throw GeometryError("consecutive fan geodesics share no endpoint");
}

}  // namespace detail

// Builds g_1 .. g_{n_terms} from s(g_2) .. s(g_{n_terms - 1}).
//
// g_1 = (0, inf), g_2 = (inf, -1). The frame M_n sends g_n to (0, inf) and the
// free endpoint of g_{n-1} to -1, taking the initial point of g_n to 0. The
// free endpoint of g_{n+1} is M_n^{-1}(e^{s_n}), and g_{n+1} shares with g_n
// its terminal point at even n and its initial point at odd n.
template <typename Scalar = double>
GeodesicFan<Scalar> realize_fan(const ShearSequence& sh, std::size_t n_terms) {
  using std::exp;
  using Matrix = Eigen::Matrix<Scalar, 2, 2>;
  if (n_terms < 2) throw ValidationError("terms", "a fan needs at least 2 geodesics");
  if (n_terms > sh.last_index() + 1) throw ValidationError("terms", "insufficient shears for fan");

  GeodesicFan<Scalar> fan;
  fan.geodesics.reserve(std::min<std::size_t>(n_terms, 1u << 16));
  fan.geodesics.emplace_back(BoundaryPoint<Scalar>(Scalar(0)), BoundaryPoint<Scalar>(infinity));
  fan.geodesics.emplace_back(BoundaryPoint<Scalar>(infinity), BoundaryPoint<Scalar>(Scalar(-1)));

  Matrix frame_inv;
  frame_inv << Scalar(1), Scalar(1), Scalar(-1), Scalar(0);
  const Scalar zero(0);
  const Scalar one(1);

  for (std::size_t n = 2; fan.geodesics.size() < n_terms; ++n) {
    const Scalar es = exp(Scalar(sh.at(n)));
    const bool even = n % 2 == 0;
    const auto fresh = detail::act(frame_inv, BoundaryPoint<Scalar>(es));
    const auto& current = fan.geodesics.back();
    const auto vertex = even ? current.terminal() : current.initial();
    const auto far = even ? current.initial() : current.terminal();
    if (fresh.is_infinite() || detail::unresolved(fresh, vertex) || detail::unresolved(fresh, far)) {
      fan.truncated_at = n;
      break;
    }
    if (even) {
      fan.geodesics.emplace_back(fresh, vertex);
    } else {
      fan.geodesics.emplace_back(vertex, fresh);
    }
    fan.junctions.push_back(junction_type(n));

    Matrix step_inv;
    if (even) {
      step_inv << es, es, zero, one;
    } else {
      step_inv << es, zero, one, one;
    }
    frame_inv = frame_inv * step_inv;
    frame_inv /= frame_inv.cwiseAbs().maxCoeff();
  }
  return fan;
}

// Independent measurement of the horocyclic path on a realized fan. In wedge n,
// between g_n and g_{n+1}, a map sends the common vertex to inf, the far end of
// g_n to 0 and the far end of g_{n+1} to +-1; the horocycle through the entry
// point iy is then the segment to +-1 + iy, of length 1/y. The path starts on
// g_1 at height e^{s_1}.
template <typename Scalar = double>
HorocyclicPath measure_path(const GeodesicFan<Scalar>& fan, double s1 = 0.0) {
  using std::exp;
  using std::log;
  if (fan.size() < 2) throw ValidationError("fan", "a path needs at least 2 geodesics");
  const std::size_t wedges = fan.size() - 1;
  Eigen::ArrayXd log_lengths(static_cast<Eigen::Index>(wedges));
  PlanePoint<Scalar> entry;
  for (std::size_t k = 0; k < wedges; ++k) {
    const auto& g = fan.geodesics[k];
    const auto& h = fan.geodesics[k + 1];
    const auto vertex = detail::shared_endpoint(g, h);
    Eigen::Matrix<Scalar, 2, 2> m =
        detail::cross_ratio_matrix(detail::other_endpoint(g, vertex), vertex, detail::other_endpoint(h, vertex));
    Scalar side(1);
    if (m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0) < Scalar(0)) {
      m.row(0) *= Scalar(-1);
      side = Scalar(-1);
    }
    const MobiusMap<Scalar> normal(m);
    Scalar y;
    if (k == 0) {
      y = exp(Scalar(s1));
      entry = mobius_apply(mobius_invert(normal), PlanePoint<Scalar>(Scalar(0), y));
    } else {
      y = mobius_apply(normal, entry)(1);
    }
    log_lengths(static_cast<Eigen::Index>(k)) = static_cast<double>(Scalar(-log(y)));
    entry = mobius_apply(mobius_invert(normal), PlanePoint<Scalar>(side, y));
  }
  return path_from_log_lengths(std::move(log_lengths));
}

// Sample points of the horocyclic arcs, in H, `samples` per arc. Arc k ends
// exactly where arc k + 1 starts.
template <typename Scalar = double>
std::vector<std::vector<PlanePoint<Scalar>>> trace_path(const GeodesicFan<Scalar>& fan, double s1,
                                                        std::size_t samples) {
  using std::exp;
  if (samples < 2) throw ValidationError("render.samples_per_arc", "need at least 2 samples per arc");
  std::vector<std::vector<PlanePoint<Scalar>>> arcs;
  if (fan.size() < 2) return arcs;
  arcs.reserve(fan.size() - 1);
  PlanePoint<Scalar> entry;
  for (std::size_t k = 0; k + 1 < fan.size(); ++k) {
    const auto& g = fan.geodesics[k];
    const auto& h = fan.geodesics[k + 1];
    const auto vertex = detail::shared_endpoint(g, h);
    Eigen::Matrix<Scalar, 2, 2> m =
        detail::cross_ratio_matrix(detail::other_endpoint(g, vertex), vertex, detail::other_endpoint(h, vertex));
    Scalar side(1);
    if (m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0) < Scalar(0)) {
      m.row(0) *= Scalar(-1);
      side = Scalar(-1);
    }
    const MobiusMap<Scalar> normal(m);
    const MobiusMap<Scalar> back = mobius_invert(normal);
    Scalar y;
    if (k == 0) {
      y = exp(Scalar(s1));
      entry = mobius_apply(back, PlanePoint<Scalar>(Scalar(0), y));
    } else {
      y = mobius_apply(normal, entry)(1);
    }
    std::vector<PlanePoint<Scalar>> arc;
    arc.reserve(samples);
    arc.push_back(entry);
    for (std::size_t j = 1; j < samples; ++j) {
      const Scalar x = side * Scalar(j) / Scalar(samples - 1);
      arc.push_back(mobius_apply(back, PlanePoint<Scalar>(x, y)));
    }
    entry = arc.back();
    arcs.push_back(std::move(arc));
  }
  return arcs;
}

// Shear of the quadrilateral formed by g_{n-1}, g_n, g_{n+1} along g_n,
// read back from the realized fan.
template <typename Scalar = double>
Scalar fan_junction_shear(const GeodesicFan<Scalar>& fan, std::size_t n) {
  if (n < 2 || n + 1 > fan.size()) throw ValidationError("n", "junction outside fan");
  const auto& prev = fan.geodesics[n - 2];
  const auto& g = fan.geodesics[n - 1];
  const auto& next = fan.geodesics[n];
  const auto p = detail::other_endpoint(prev, detail::shared_endpoint(prev, g));
  const auto q = detail::other_endpoint(next, detail::shared_endpoint(g, next));
  return shear_of_diagonal(IdealQuadrilateral<Scalar>::around(g, p, q));
}

// Disk-model angular gap between the endpoints of geodesic g_n (1-based).
template <typename Scalar = double>
Scalar fan_gap(const GeodesicFan<Scalar>& fan, std::size_t n) {
  const auto d = cayley_to_disk(fan.geodesics.at(n - 1));
  return angular_gap(d[0], d[1]);
}

AccumulationVerdict accumulation_verdict(double endpoint_gap, double midpoint_gap, std::size_t fan_size,
                                         const HorocyclicPath& path, const AccumulationOptions& opt);

// The path may run beyond the fan: the gap is read at the last realized
// geodesic, the length evidence over the whole path.
template <typename Scalar = double>
AccumulationVerdict accumulation_verdict(const GeodesicFan<Scalar>& fan, const HorocyclicPath& path,
                                         const AccumulationOptions& opt = {}) {
  if (fan.size() < 2) throw ValidationError("fan", "a verdict needs at least 2 geodesics");
  const double end_gap = static_cast<double>(fan_gap(fan, fan.size()));
  const double mid_gap = static_cast<double>(fan_gap(fan, (fan.size() + 1) / 2));
  return accumulation_verdict(end_gap, mid_gap, fan.size(), path, opt);
}

}  // namespace flutes
