#pragma once

// Surface descriptions by Fenchel-Nielsen data and the length sequences derived
// from them: cuff lengths l_n, orthogeodesic lengths eta_n between consecutive
// lifted cuffs, and the alternating sums sigma_n.

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <Eigen/Core>

#include "flutes/errors.hpp"
#include "flutes/numerics.hpp"

namespace flutes {

enum class SurfaceKind { flute, end_surface };

// Two-parameter slice: l_{2n} = a ln(n+1) + b ln n, l_{2n+1} = (a+b) ln(n+1),
// emitted from the first positive term onward and reindexed from 1.
struct SliceParams {
  double a = 0.0;
  double b = 0.0;
  std::size_t count = 0;

  void validate() const;
  bool operator==(const SliceParams&) const = default;
};

// l_n = coefficient * ln(n + shift).
struct LogarithmicLengths {
  double coefficient = 0.0;
  double shift = 1.0;
  std::size_t count = 0;

  bool operator==(const LogarithmicLengths&) const = default;
};

struct ConstantLengths {
  double value = 0.0;
  std::size_t count = 0;

  bool operator==(const ConstantLengths&) const = default;
};

struct ExplicitLengths {
  std::vector<double> values;

  bool operator==(const ExplicitLengths&) const = default;
};

using CuffLengths = std::variant<SliceParams, LogarithmicLengths, ConstantLengths, ExplicitLengths>;

enum class TwistMode { half, zero, explicit_values };

struct Twists {
  TwistMode mode = TwistMode::half;
  std::vector<double> values;  // only for explicit_values; each in [-1/2, 1/2]

  static Twists half() { return {TwistMode::half, {}}; }
  static Twists zero() { return {TwistMode::zero, {}}; }
  static Twists explicit_values(std::vector<double> v) { return {TwistMode::explicit_values, std::move(v)}; }

  bool operator==(const Twists&) const = default;
};

struct SurfaceSpec {
  SurfaceKind kind = SurfaceKind::flute;
  CuffLengths cuffs;
  Twists twists;
  std::optional<double> beta_length;   // end surfaces: length of each handle-cutting curve
  std::optional<double> gamma_length;  // end surfaces: recorded, enters no formula

  void validate() const;
  bool operator==(const SurfaceSpec&) const = default;
};

struct LengthSequences {
  Eigen::ArrayXd ell;    // l_1 .. l_N
  Eigen::ArrayXd eta;    // eta_1 .. eta_{N-1}
  Eigen::ArrayXd sigma;  // sigma_1 .. sigma_N
};

Eigen::ArrayXd slice_lengths(const SliceParams& p);

// sigma_1 = l_1, sigma_n = l_n - sigma_{n-1}.
Eigen::ArrayXd sigma_sequence(const Eigen::ArrayXd& ell);

// Orthogeodesic between consecutive cuff lifts of a flute, from the pentagon
// with four right angles and one ideal vertex:
//   artanh(sech(l1/2)) + artanh(sech(l2/2)).
// Each term is evaluated as -log tanh(l/4).
template <typename Scalar>
Scalar eta_pentagon(const Scalar& l1, const Scalar& l2) {
  using std::exp;
  using std::log;
  using std::log1p;
  using std::tanh;
  if (!(l1 > Scalar(0)) || !(l2 > Scalar(0))) {
    throw DomainError("eta_pentagon requires positive cuff lengths");
  }
  auto half_side = [](const Scalar& l) -> Scalar {
    const Scalar x = l / Scalar(4);
    if (x < Scalar(1)) return -log(tanh(x));
    return -log1p(Scalar(-2) / (exp(Scalar(2) * x) + Scalar(1)));
  };
  return half_side(l1) + half_side(l2);
}

// Orthogeodesic of the right-angled hexagon with sides l1/2 and l2/2 adjacent
// to it and beta/2 opposite:
//   cosh(eta) = (cosh(beta/2) + cosh(l1/2) cosh(l2/2)) / (sinh(l1/2) sinh(l2/2)).
// Evaluated through cosh(eta) - 1 = (cosh(beta/2) + cosh((l1-l2)/2)) / (sinh(l1/2) sinh(l2/2))
// in log form, which keeps full relative accuracy as eta -> 0.
template <typename Scalar>
Scalar eta_hexagon(const Scalar& l1, const Scalar& l2, const Scalar& beta) {
  using std::isnan;
  if (!(l1 > Scalar(0)) || !(l2 > Scalar(0)) || !(beta > Scalar(0))) {
    throw DomainError("eta_hexagon requires positive lengths");
  }
  const Scalar u1 = l1 / Scalar(2);
  const Scalar u2 = l2 / Scalar(2);
  const Scalar log_excess = log_add_exp(log_cosh(Scalar(beta / Scalar(2))), log_cosh(Scalar(u1 - u2))) -
                            log_sinh(u1) - log_sinh(u2);
  if (isnan(log_excess)) throw GeometryError("inconsistent hexagon");
  return acosh_one_plus_exp(log_excess);
}

// Dispatches on the surface kind: pentagons for flutes, hexagons for end
// surfaces. Explicit data shorter than n_terms is an error.
LengthSequences derive_sequences(const SurfaceSpec& spec, std::size_t n_terms);

// The first n cuff lengths of a spec, generated or copied.
Eigen::ArrayXd cuff_lengths(const CuffLengths& cuffs, std::size_t n);

// Twist of cuff n (1-based) under the spec's twist mode.
double twist_at(const Twists& twists, std::size_t n);

bool is_nondecreasing(const Eigen::ArrayXd& x);

std::string to_string(SurfaceKind kind);

}  // namespace flutes
