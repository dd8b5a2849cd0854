#pragma once

// Log-domain helpers. Cuff lengths grow without bound, so sinh/cosh of half
// lengths overflow long before the geometry stops being meaningful.

#include <cmath>
#include <limits>

#include <Eigen/Core>

namespace flutes {

template <typename Scalar>
Scalar pi() {
  using std::acos;
  return acos(Scalar(-1));
}

template <typename Scalar>
Scalar log_two() {
  using std::log;
  return log(Scalar(2));
}

// log(sinh(x)) for x > 0.
template <typename Scalar>
Scalar log_sinh(const Scalar& x) {
  using std::exp;
  using std::expm1;
  using std::log;
  return x - log_two<Scalar>() + log(-expm1(Scalar(-2) * x));
}

// log(cosh(x)) for any real x.
template <typename Scalar>
Scalar log_cosh(const Scalar& x) {
  using std::abs;
  using std::exp;
  using std::log1p;
  const Scalar a = abs(x);
  return a - log_two<Scalar>() + log1p(exp(Scalar(-2) * a));
}

// log(exp(a) + exp(b)); -inf is the additive identity.
template <typename Scalar>
Scalar log_add_exp(const Scalar& a, const Scalar& b) {
  using std::exp;
  using std::isinf;
  using std::log1p;
  if (isinf(a) && a < 0) return b;
  if (isinf(b) && b < 0) return a;
  return a > b ? a + log1p(exp(b - a)) : b + log1p(exp(a - b));
}

// asinh(exp(t)), finite for every finite t.
template <typename Scalar>
Scalar asinh_exp(const Scalar& t) {
  using std::asinh;
  using std::exp;
  using std::log;
  using std::sqrt;
  if (t <= Scalar(0)) return asinh(exp(t));
  return t + log(Scalar(1) + sqrt(Scalar(1) + exp(Scalar(-2) * t)));
}

// acosh(1 + exp(t)). Accurate both when the argument is barely above 1 and when
// it would overflow.
template <typename Scalar>
Scalar acosh_one_plus_exp(const Scalar& t) {
  using std::exp;
  using std::log;
  using std::log1p;
  using std::sqrt;
  if (t > Scalar(30)) {
    // acosh(y) = log(2y) - 1/(4y^2) - ..., with y = 1 + e^t
    return log1p(exp(-t)) + t + log_two<Scalar>();
  }
  const Scalar delta = exp(t);
  return log1p(delta + sqrt(delta * (Scalar(2) + delta)));
}

// Stable log(sum(exp(x))) over an Eigen array expression.
template <typename Derived>
typename Derived::Scalar log_sum_exp(const Eigen::ArrayBase<Derived>& x) {
  using Scalar = typename Derived::Scalar;
  if (x.size() == 0) return -std::numeric_limits<Scalar>::infinity();
  const Scalar peak = x.maxCoeff();
  if (!std::isfinite(peak)) return peak;
  return peak + std::log((x - peak).exp().sum());
}

}  // namespace flutes
