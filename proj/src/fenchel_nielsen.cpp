#include "flutes/fenchel_nielsen.hpp"

#include <cmath>

namespace flutes {

void SliceParams::validate() const {
  if (!(a > 0.0) || !std::isfinite(a)) throw ValidationError("a", "slice parameter must be positive");
  if (!(b > 0.0) || !std::isfinite(b)) throw ValidationError("b", "slice parameter must be positive");
  if (count < 2) throw ValidationError("count", "slice needs at least 2 cuffs");
}

Eigen::ArrayXd slice_lengths(const SliceParams& p) {
  p.validate();
  Eigen::ArrayXd out(static_cast<Eigen::Index>(p.count));
  for (Eigen::Index k = 0; k < out.size(); ++k) {
    // Emitted index k+1 is the slice's index m = k + 2.
    const Eigen::Index m = k + 2;
    if (m % 2 == 0) {
      const double n = static_cast<double>(m / 2);
      out(k) = p.a * std::log(n + 1.0) + p.b * std::log(n);
    } else {
      const double n = static_cast<double>((m - 1) / 2);
      out(k) = (p.a + p.b) * std::log(n + 1.0);
    }
  }
  return out;
}

Eigen::ArrayXd sigma_sequence(const Eigen::ArrayXd& ell) {
  Eigen::ArrayXd sigma(ell.size());
  double prev = 0.0;
  for (Eigen::Index n = 0; n < ell.size(); ++n) {
    prev = ell(n) - prev;
    sigma(n) = prev;
  }
  return sigma;
}

Eigen::ArrayXd cuff_lengths(const CuffLengths& cuffs, std::size_t n) {
  const auto size = static_cast<Eigen::Index>(n);
  return std::visit(
      [&](const auto& c) -> Eigen::ArrayXd {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, SliceParams>) {
          return slice_lengths(SliceParams{c.a, c.b, n});
        } else if constexpr (std::is_same_v<T, LogarithmicLengths>) {
          Eigen::ArrayXd idx = Eigen::ArrayXd::LinSpaced(size, 1.0, static_cast<double>(n));
          return c.coefficient * (idx + c.shift).log();
        } else if constexpr (std::is_same_v<T, ConstantLengths>) {
          return Eigen::ArrayXd::Constant(size, c.value);
        } else {
          if (c.values.size() < n) throw ValidationError("surface.cuffs", "insufficient data");
          return Eigen::Map<const Eigen::ArrayXd>(c.values.data(), size);
        }
      },
      cuffs);
}

double twist_at(const Twists& twists, std::size_t n) {
  switch (twists.mode) {
    case TwistMode::half:
      return 0.5;
    case TwistMode::zero:
      return 0.0;
    case TwistMode::explicit_values:
      if (n == 0 || n > twists.values.size()) throw ValidationError("surface.twists", "insufficient data");
      return twists.values[n - 1];
  }
  return 0.0;
}

void SurfaceSpec::validate() const {
  std::visit(
      [](const auto& c) {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, SliceParams>) {
          if (!(c.a > 0.0)) throw ValidationError("surface.cuffs.a", "slice parameter must be positive");
          if (!(c.b > 0.0)) throw ValidationError("surface.cuffs.b", "slice parameter must be positive");
        } else if constexpr (std::is_same_v<T, LogarithmicLengths>) {
          if (!(c.coefficient > 0.0)) {
            throw ValidationError("surface.cuffs.coefficient", "length coefficient must be positive");
          }
          if (!(std::log(1.0 + c.shift) > 0.0)) {
            throw ValidationError("surface.cuffs.shift", "first generated length must be positive");
          }
        } else if constexpr (std::is_same_v<T, ConstantLengths>) {
          if (!(c.value > 0.0)) throw ValidationError("surface.cuffs.value", "nonpositive length");
        } else {
          for (std::size_t i = 0; i < c.values.size(); ++i) {
            if (!(c.values[i] > 0.0) || !std::isfinite(c.values[i])) {
              throw ValidationError("surface.cuffs.values[" + std::to_string(i) + "]", "nonpositive length");
            }
          }
        }
      },
      cuffs);
  if (twists.mode == TwistMode::explicit_values) {
    for (std::size_t i = 0; i < twists.values.size(); ++i) {
      const double t = twists.values[i];
      if (!(t >= -0.5 && t <= 0.5)) {
        throw ValidationError("surface.twists[" + std::to_string(i) + "]", "twist out of range");
      }
    }
  }
  if (kind == SurfaceKind::end_surface) {
    if (!beta_length) throw ValidationError("surface.beta_length", "end surface requires beta_length");
    if (!gamma_length) throw ValidationError("surface.gamma_length", "end surface requires gamma_length");
  }
  if (beta_length && !(*beta_length > 0.0)) throw ValidationError("surface.beta_length", "nonpositive length");
  if (gamma_length && !(*gamma_length > 0.0)) throw ValidationError("surface.gamma_length", "nonpositive length");
}

LengthSequences derive_sequences(const SurfaceSpec& spec, std::size_t n_terms) {
  if (n_terms < 2) throw ValidationError("n_terms", "need at least 2 cuffs");
  spec.validate();
  LengthSequences seq;
  seq.ell = cuff_lengths(spec.cuffs, n_terms);
  const Eigen::Index m = seq.ell.size() - 1;
  seq.eta.resize(m);
  if (spec.kind == SurfaceKind::flute) {
    for (Eigen::Index i = 0; i < m; ++i) seq.eta(i) = eta_pentagon(seq.ell(i), seq.ell(i + 1));
  } else {
    const double beta = *spec.beta_length;
    for (Eigen::Index i = 0; i < m; ++i) seq.eta(i) = eta_hexagon(seq.ell(i), seq.ell(i + 1), beta);
  }
  seq.sigma = sigma_sequence(seq.ell);
  return seq;
}

bool is_nondecreasing(const Eigen::ArrayXd& x) {
  for (Eigen::Index i = 1; i < x.size(); ++i) {
    if (x(i) < x(i - 1)) return false;
  }
  return true;
}

std::string to_string(SurfaceKind kind) {
  return kind == SurfaceKind::flute ? "flute" : "end_surface";
}

}  // namespace flutes
