#pragma once

// Exact-formula layer on the upper half-plane H: ideal boundary points,
// oriented geodesics, real Mobius maps, ideal quadrilaterals and their shears,
// and the Cayley transform to the unit disk.
//
// Everything is templated on the scalar so the same code runs in double and in
// boost::multiprecision types.

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <variant>

#include <Eigen/Core>

#include "flutes/errors.hpp"
#include "flutes/numerics.hpp"

namespace flutes {

struct Infinity {
  friend constexpr bool operator==(Infinity, Infinity) noexcept { return true; }
};
inline constexpr Infinity infinity{};

// A point of R u {inf}, the boundary of H. Infinity is its own alternative,
// never a floating sentinel.
template <typename Scalar = double>
class BoundaryPoint {
 public:
  BoundaryPoint(Infinity) : value_(Infinity{}) {}
  BoundaryPoint(Scalar x) : value_(std::move(x)) {
    using std::isfinite;
    if (!isfinite(std::get<Scalar>(value_))) {
      throw DomainError("boundary point must be finite or the explicit infinity");
    }
  }

  bool is_infinite() const noexcept { return std::holds_alternative<Infinity>(value_); }
  bool is_finite() const noexcept { return !is_infinite(); }

  const Scalar& value() const {
    if (is_infinite()) throw DomainError("infinite boundary point has no finite value");
    return std::get<Scalar>(value_);
  }

  friend bool operator==(const BoundaryPoint& a, const BoundaryPoint& b) {
    if (a.is_infinite() || b.is_infinite()) return a.is_infinite() == b.is_infinite();
    return a.value() == b.value();
  }

 private:
  std::variant<Scalar, Infinity> value_;
};

// Point of the unit circle given by its angle in [0, 2pi).
template <typename Scalar = double>
class DiskPoint {
 public:
  explicit DiskPoint(Scalar angle) : angle_(wrap(std::move(angle))) {}

  const Scalar& angle() const noexcept { return angle_; }

  Eigen::Matrix<Scalar, 2, 1> position() const {
    using std::cos;
    using std::sin;
    return {cos(angle_), sin(angle_)};
  }

 private:
  static Scalar wrap(Scalar a) {
    using std::floor;
    const Scalar two_pi = Scalar(2) * pi<Scalar>();
    a -= two_pi * floor(a / two_pi);
    if (a >= two_pi) a -= two_pi;
    return a;
  }

  Scalar angle_;
};

// Interior point x + iy of H (y > 0), or of the disk, as a plain 2-vector.
template <typename Scalar = double>
using PlanePoint = Eigen::Matrix<Scalar, 2, 1>;

// Oriented geodesic from `initial` to `terminal`.
template <typename Scalar = double>
class Geodesic {
 public:
  Geodesic(BoundaryPoint<Scalar> initial, BoundaryPoint<Scalar> terminal)
      : initial_(std::move(initial)), terminal_(std::move(terminal)) {
    if (initial_ == terminal_) throw GeometryError("geodesic endpoints must be distinct");
  }

  const BoundaryPoint<Scalar>& initial() const noexcept { return initial_; }
  const BoundaryPoint<Scalar>& terminal() const noexcept { return terminal_; }

  Geodesic reversed() const { return Geodesic(terminal_, initial_); }

  bool has_endpoint(const BoundaryPoint<Scalar>& p) const { return p == initial_ || p == terminal_; }

 private:
  BoundaryPoint<Scalar> initial_;
  BoundaryPoint<Scalar> terminal_;
};

// z -> (az + b) / (cz + d) with ad - bc > 0. Coefficients are kept as given;
// two maps are equal when their coefficients are proportional.
template <typename Scalar = double>
class MobiusMap {
 public:
  using Coefficients = Eigen::Matrix<Scalar, 2, 2>;

  MobiusMap() : m_(Coefficients::Identity()) {}

  MobiusMap(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& d) {
    m_ << a, b, c, d;
    check();
  }

  explicit MobiusMap(const Coefficients& m) : m_(m) { check(); }

  static MobiusMap identity() { return MobiusMap(); }

  const Coefficients& coefficients() const noexcept { return m_; }
  const Scalar& a() const noexcept { return m_(0, 0); }
  const Scalar& b() const noexcept { return m_(0, 1); }
  const Scalar& c() const noexcept { return m_(1, 0); }
  const Scalar& d() const noexcept { return m_(1, 1); }
  Scalar determinant() const { return m_(0, 0) * m_(1, 1) - m_(0, 1) * m_(1, 0); }

  // Proportionality test: every 2x2 minor of the stacked coefficient pair
  // vanishes, relative to the coefficient magnitudes.
  bool approx_equal(const MobiusMap& other, const Scalar& rel_tol = Scalar(1e-12)) const {
    using std::abs;
    const std::array<Scalar, 4> x{m_(0, 0), m_(0, 1), m_(1, 0), m_(1, 1)};
    const std::array<Scalar, 4> y{other.m_(0, 0), other.m_(0, 1), other.m_(1, 0), other.m_(1, 1)};
    Scalar nx(0), ny(0);
    for (std::size_t i = 0; i < 4; ++i) {
      nx = std::max(nx, Scalar(abs(x[i])));
      ny = std::max(ny, Scalar(abs(y[i])));
    }
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = i + 1; j < 4; ++j) {
        if (abs(x[i] * y[j] - x[j] * y[i]) > rel_tol * nx * ny) return false;
      }
    }
    return true;
  }

  friend bool operator==(const MobiusMap& p, const MobiusMap& q) { return p.approx_equal(q); }

 private:
  void check() const {
    using std::isfinite;
    const Scalar det = determinant();
    if (!isfinite(det) || !(det > Scalar(0))) {
      throw GeometryError("Mobius map must have positive determinant");
    }
  }

  Coefficients m_;
};

namespace detail {

// Action of a real 2x2 matrix on R u {inf}. Works for either sign of the
// determinant; callers that need an isometry of H check it themselves.
template <typename Scalar>
BoundaryPoint<Scalar> act(const Eigen::Matrix<Scalar, 2, 2>& m, const BoundaryPoint<Scalar>& p) {
  if (p.is_infinite()) {
    if (m(1, 0) == Scalar(0)) return infinity;
    return BoundaryPoint<Scalar>(Scalar(m(0, 0) / m(1, 0)));
  }
  const Scalar& x = p.value();
  const Scalar den = m(1, 0) * x + m(1, 1);
  if (den == Scalar(0)) return infinity;
  return BoundaryPoint<Scalar>(Scalar((m(0, 0) * x + m(0, 1)) / den));
}

// Matrix of the cross-ratio map sending zero -> 0, pole -> inf, unit -> 1.
// The three points must be distinct.
template <typename Scalar>
Eigen::Matrix<Scalar, 2, 2> cross_ratio_matrix(const BoundaryPoint<Scalar>& zero,
                                               const BoundaryPoint<Scalar>& pole,
                                               const BoundaryPoint<Scalar>& unit) {
  Eigen::Matrix<Scalar, 2, 2> m;
  if (zero.is_infinite()) {
    m << Scalar(0), unit.value() - pole.value(), Scalar(1), -pole.value();
  } else if (pole.is_infinite()) {
    m << Scalar(1), -zero.value(), Scalar(0), unit.value() - zero.value();
  } else if (unit.is_infinite()) {
    m << Scalar(1), -zero.value(), Scalar(1), -pole.value();
  } else {
    const Scalar up = unit.value() - pole.value();
    const Scalar uz = unit.value() - zero.value();
    m << up, -zero.value() * up, uz, -pole.value() * uz;
  }
  return m;
}

template <typename Scalar>
bool pairwise_distinct(std::initializer_list<const BoundaryPoint<Scalar>*> pts) {
  for (auto i = pts.begin(); i != pts.end(); ++i) {
    for (auto j = std::next(i); j != pts.end(); ++j) {
      if (**i == **j) return false;
    }
  }
  return true;
}

}  // namespace detail

template <typename Scalar>
BoundaryPoint<Scalar> mobius_apply(const MobiusMap<Scalar>& m, const BoundaryPoint<Scalar>& p) {
  return detail::act(m.coefficients(), p);
}

template <typename Scalar>
Geodesic<Scalar> mobius_apply(const MobiusMap<Scalar>& m, const Geodesic<Scalar>& g) {
  return Geodesic<Scalar>(mobius_apply(m, g.initial()), mobius_apply(m, g.terminal()));
}

// Action on an interior point of H; the imaginary part stays positive because
// the determinant does.
template <typename Scalar>
PlanePoint<Scalar> mobius_apply(const MobiusMap<Scalar>& m, const PlanePoint<Scalar>& z) {
  const Scalar& x = z(0);
  const Scalar& y = z(1);
  const Scalar cx_d = m.c() * x + m.d();
  const Scalar cy = m.c() * y;
  const Scalar den = cx_d * cx_d + cy * cy;
  const Scalar re = ((m.a() * x + m.b()) * cx_d + m.a() * m.c() * y * y) / den;
  const Scalar im = m.determinant() * y / den;
  return {re, im};
}

// m1 o m2.
template <typename Scalar>
MobiusMap<Scalar> mobius_compose(const MobiusMap<Scalar>& m1, const MobiusMap<Scalar>& m2) {
  return MobiusMap<Scalar>(typename MobiusMap<Scalar>::Coefficients(m1.coefficients() * m2.coefficients()));
}

template <typename Scalar>
MobiusMap<Scalar> mobius_invert(const MobiusMap<Scalar>& m) {
  return MobiusMap<Scalar>(m.d(), -m.b(), -m.c(), m.a());
}

// Four ideal points A, B, C, D in positive circular order with diagonal (B, D).
// The shear is measured along the diagonal between the feet of the
// perpendiculars from A and from C.
template <typename Scalar = double>
class IdealQuadrilateral {
 public:
  IdealQuadrilateral(BoundaryPoint<Scalar> a, BoundaryPoint<Scalar> b, BoundaryPoint<Scalar> c,
                     BoundaryPoint<Scalar> d)
      : v_{std::move(a), std::move(b), std::move(c), std::move(d)} {
    if (!detail::pairwise_distinct<Scalar>({&v_[0], &v_[1], &v_[2], &v_[3]})) {
      throw GeometryError("degenerate quadrilateral");
    }
  }

  // Labels the quadrilateral spanned by `diagonal` and the two opposite
  // vertices so that the labels run in positive circular order. The shear does
  // not depend on which of the two valid labellings is chosen.
  static IdealQuadrilateral around(const Geodesic<Scalar>& diagonal, const BoundaryPoint<Scalar>& p,
                                   const BoundaryPoint<Scalar>& q) {
    IdealQuadrilateral first(p, diagonal.initial(), q, diagonal.terminal());
    const auto m = detail::cross_ratio_matrix(first.b(), first.d(), first.a());
    if (-(m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0)) > Scalar(0)) return first;
    return IdealQuadrilateral(q, diagonal.initial(), p, diagonal.terminal());
  }

  const BoundaryPoint<Scalar>& a() const noexcept { return v_[0]; }
  const BoundaryPoint<Scalar>& b() const noexcept { return v_[1]; }
  const BoundaryPoint<Scalar>& c() const noexcept { return v_[2]; }
  const BoundaryPoint<Scalar>& d() const noexcept { return v_[3]; }
  Geodesic<Scalar> diagonal() const { return Geodesic<Scalar>(v_[1], v_[3]); }

 private:
  std::array<BoundaryPoint<Scalar>, 4> v_;
};

// The map with B -> 0, D -> inf, A -> -1.
template <typename Scalar>
MobiusMap<Scalar> normalizing_map(const IdealQuadrilateral<Scalar>& q) {
  Eigen::Matrix<Scalar, 2, 2> m = detail::cross_ratio_matrix(q.b(), q.d(), q.a());
  m.row(0) *= Scalar(-1);
  const Scalar det = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  if (det == Scalar(0)) throw GeometryError("degenerate quadrilateral");
  if (det < Scalar(0)) throw GeometryError("vertices not in circular order");
  return MobiusMap<Scalar>(m);
}

// Signed shear along the diagonal, in hyperbolic length units.
template <typename Scalar>
Scalar shear_of_diagonal(const IdealQuadrilateral<Scalar>& q) {
  using std::log;
  const auto image = mobius_apply(normalizing_map(q), q.c());
  if (image.is_infinite() || !(image.value() > Scalar(0))) {
    throw GeometryError("vertices not in circular order");
  }
  return log(image.value());
}

// Length of the common perpendicular of two geodesics with disjoint closures.
// g1 is sent to (0, inf); g2 then lands on (p, q) with p, q of one sign, and a
// further map centred on sqrt(pq) makes the pair concentric: (-1, 1) and
// (-x, x) with x = (sqrt q - sqrt p) / (sqrt q + sqrt p).
template <typename Scalar>
Scalar ortho_distance(const Geodesic<Scalar>& g1, const Geodesic<Scalar>& g2) {
  using std::abs;
  using std::log;
  using std::sqrt;
  if (g1.has_endpoint(g2.initial()) || g1.has_endpoint(g2.terminal())) {
    throw GeometryError("not disjoint");
  }
  Eigen::Matrix<Scalar, 2, 2> to_axis;
  const auto& z0 = g1.initial();
  const auto& zi = g1.terminal();
  if (z0.is_infinite()) {
    to_axis << Scalar(0), Scalar(1), Scalar(1), -zi.value();
  } else if (zi.is_infinite()) {
    to_axis << Scalar(1), -z0.value(), Scalar(0), Scalar(1);
  } else {
    to_axis << Scalar(1), -z0.value(), Scalar(1), -zi.value();
  }
  const auto p = detail::act(to_axis, g2.initial());
  const auto q = detail::act(to_axis, g2.terminal());
  // Endpoints shared with g1 were excluded above, so p and q are finite and nonzero.
  const Scalar pv = p.value();
  const Scalar qv = q.value();
  if (!(pv * qv > Scalar(0))) throw GeometryError("not disjoint");
  const Scalar lo = std::min(Scalar(abs(pv)), Scalar(abs(qv)));
  const Scalar hi = std::max(Scalar(abs(pv)), Scalar(abs(qv)));
  const Scalar sum = sqrt(hi) + sqrt(lo);
  return log(sum * sum / abs(pv - qv));
}

// Leg of the Lambert quadrilateral opposite a side of length eta:
// asinh(1 / sinh(eta)). Strictly decreasing, and an involution on (0, inf).
template <typename Scalar>
Scalar lambert_side(const Scalar& eta) {
  if (!(eta > Scalar(0))) throw DomainError("lambert_side requires eta > 0");
  using std::isinf;
  if (isinf(eta)) return Scalar(0);
  return asinh_exp(Scalar(-log_sinh(eta)));
}

// Summit of the Saccheri quadrilateral with the given base and equal legs.
template <typename Scalar>
Scalar saccheri_summit(const Scalar& base, const Scalar& leg) {
  if (!(base > Scalar(0))) throw DomainError("saccheri_summit requires base > 0");
  if (!(leg >= Scalar(0))) throw DomainError("saccheri_summit requires leg >= 0");
  return Scalar(2) * asinh_exp(Scalar(log_cosh(leg) + log_sinh(Scalar(base / 2))));
}

// Cayley transform z -> (z - i) / (z + i). On the boundary x maps to angle
// 2*atan2(1, -x): infinity -> 0, 0 -> pi, negative reals -> (0, pi).
template <typename Scalar>
DiskPoint<Scalar> cayley_to_disk(const BoundaryPoint<Scalar>& p) {
  using std::atan2;
  if (p.is_infinite()) return DiskPoint<Scalar>(Scalar(0));
  return DiskPoint<Scalar>(Scalar(2) * atan2(Scalar(1), Scalar(-p.value())));
}

template <typename Scalar>
std::array<DiskPoint<Scalar>, 2> cayley_to_disk(const Geodesic<Scalar>& g) {
  return {cayley_to_disk(g.initial()), cayley_to_disk(g.terminal())};
}

template <typename Scalar>
PlanePoint<Scalar> cayley_to_disk(const PlanePoint<Scalar>& z) {
  const Scalar& x = z(0);
  const Scalar& y = z(1);
  const Scalar den = x * x + (y + Scalar(1)) * (y + Scalar(1));
  return {(x * x + y * y - Scalar(1)) / den, Scalar(-2) * x / den};
}

// Inverse boundary transform: angle t -> -cot(t/2), angle 0 -> infinity.
template <typename Scalar>
BoundaryPoint<Scalar> disk_to_half_plane(const DiskPoint<Scalar>& p) {
  using std::cos;
  using std::sin;
  const Scalar half = p.angle() / Scalar(2);
  const Scalar s = sin(half);
  if (s == Scalar(0)) return infinity;
  return BoundaryPoint<Scalar>(Scalar(-cos(half) / s));
}

template <typename Scalar>
Geodesic<Scalar> disk_to_half_plane(const std::array<DiskPoint<Scalar>, 2>& g) {
  return Geodesic<Scalar>(disk_to_half_plane(g[0]), disk_to_half_plane(g[1]));
}

// Circular distance between two boundary angles, in [0, pi].
template <typename Scalar>
Scalar angular_gap(const DiskPoint<Scalar>& p, const DiskPoint<Scalar>& q) {
  using std::abs;
  const Scalar two_pi = Scalar(2) * pi<Scalar>();
  const Scalar d = abs(p.angle() - q.angle());
  return std::min(d, Scalar(two_pi - d));
}

}  // namespace flutes
