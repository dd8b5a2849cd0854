#include "doctest.h"

#include <cmath>
#include <random>

#include "flutes/hyperbolic.hpp"
#include "flutes/multiprecision.hpp"

using namespace flutes;
using BP = BoundaryPoint<double>;
using Map = MobiusMap<double>;
using Quad = IdealQuadrilateral<double>;

namespace {

Map random_map(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (;;) {
    const double a = u(rng), b = u(rng), c = u(rng), d = u(rng);
    const double det = a * d - b * c;
    if (det > 0.1) return Map(a, b, c, d);
    if (det < -0.1) return Map(-a, -b, c, d);
  }
}

double value(const BP& p) { return p.value(); }

}  // namespace

TEST_CASE("boundary points keep infinity apart from finite values") {
  CHECK(BP(infinity).is_infinite());
  CHECK_FALSE(BP(1e308) == BP(infinity));
  CHECK_THROWS_AS(BP(std::numeric_limits<double>::infinity()), DomainError);
  CHECK_THROWS_AS(BP(std::nan("")), DomainError);
  CHECK(DiskPoint<double>(-0.5).angle() == doctest::Approx(2 * M_PI - 0.5));
  CHECK(DiskPoint<double>(7.0).angle() < 2 * M_PI);
}

TEST_CASE("mobius_apply on the extended reals") {
  CHECK(value(mobius_apply(Map::identity(), BP(3.5))) == 3.5);
  CHECK(value(mobius_apply(Map(0, -1, 1, 0), BP(2.0))) == -0.5);
  CHECK(mobius_apply(Map(1, 1, 0, 1), BP(infinity)).is_infinite());
  CHECK(mobius_apply(Map(0, -1, 1, 0), BP(0.0)).is_infinite());
  CHECK(value(mobius_apply(Map(2, 1, 1, 1), BP(infinity))) == 2.0);
  CHECK_THROWS_AS(Map(1, 0, 0, -1), GeometryError);
}

TEST_CASE("compose and invert") {
  const Map m(2, 1, 1, 3);
  CHECK(mobius_compose(Map::identity(), m) == m);
  CHECK(mobius_invert(Map(0, -1, 1, 0)) == Map(0, -1, 1, 0));
  CHECK(mobius_compose(Map(1, 1, 0, 1), Map(1, -1, 0, 1)) == Map::identity());
  CHECK(Map(2, 4, 6, 14) == Map(1, 2, 3, 7));
  std::mt19937_64 rng(3);
  for (int i = 0; i < 100; ++i) {
    const Map p = random_map(rng);
    const Map q = random_map(rng);
    CHECK(mobius_compose(p, mobius_invert(p)) == Map::identity());
    const BP x(0.37 * i - 10.0);
    const BP chained = mobius_apply(p, mobius_apply(q, x));
    const BP direct = mobius_apply(mobius_compose(p, q), x);
    if (chained.is_finite() && direct.is_finite()) {
      CHECK(value(direct) == doctest::Approx(value(chained)).epsilon(1e-9));
    }
  }
}

TEST_CASE("normalizing map") {
  CHECK(normalizing_map(Quad(-1.0, 0.0, 5.0, infinity)) == Map::identity());
  CHECK(normalizing_map(Quad(-2.0, 0.0, 10.0, infinity)) == Map(1, 0, 0, 2));
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-20.0, 20.0);
  for (int i = 0; i < 200; ++i) {
    std::array<double, 4> v{u(rng), u(rng), u(rng), u(rng)};
    std::sort(v.begin(), v.end());
    const Quad q(v[0], v[1], v[2], v[3]);
    const Map n = normalizing_map(q);
    CHECK(value(mobius_apply(n, q.a())) == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(std::abs(value(mobius_apply(n, q.b()))) < 1e-12);
    const BP d = mobius_apply(n, q.d());
    CHECK((d.is_infinite() || std::abs(value(d)) > 1e12));
  }
  CHECK_THROWS_WITH(Quad(1.0, 2.0, 1.0, 3.0), "degenerate quadrilateral");
  CHECK_THROWS_WITH(normalizing_map(Quad(0.0, -1.0, 5.0, infinity)), "vertices not in circular order");
}

TEST_CASE("shear of a diagonal") {
  for (double s : {-4.0, -0.3, 0.0, 1.7, 6.0}) {
    CHECK(shear_of_diagonal(Quad(-1.0, 0.0, std::exp(s), infinity)) == doctest::Approx(s).epsilon(1e-14));
  }
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(-20.0, 20.0);
  for (int i = 0; i < 300; ++i) {
    std::array<double, 4> v{u(rng), u(rng), u(rng), u(rng)};
    std::sort(v.begin(), v.end());
    const Quad q(v[0], v[1], v[2], v[3]);
    const Map m = random_map(rng);
    const Quad moved(mobius_apply(m, q.a()), mobius_apply(m, q.b()), mobius_apply(m, q.c()), mobius_apply(m, q.d()));
    CHECK(std::abs(shear_of_diagonal(moved) - shear_of_diagonal(q)) < 1e-9);
  }
}

TEST_CASE("symmetric quadrilateral shear matches 2 log sinh(eta/2)") {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> u(0.0, 10.0);
  for (int i = 0; i < 200; ++i) {
    double x = u(rng), y = u(rng);
    if (x > y) std::swap(x, y);
    if (y - x < 1e-6 || x <= 0.0) continue;
    const double eta = std::log(y / x);
    const Quad q = Quad::around(Geodesic<double>(x, -y), -x, y);
    CHECK(std::abs(shear_of_diagonal(q) - 2.0 * std::log(std::sinh(eta / 2.0))) < 1e-9);
  }
}

TEST_CASE("ortho distance") {
  using G = Geodesic<double>;
  CHECK(ortho_distance(G(-1.0, 1.0), G(-M_E, M_E)) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK_THROWS_WITH(ortho_distance(G(-1.0, 1.0), G(-1.0, 1.0)), "not disjoint");
  CHECK_THROWS_WITH(ortho_distance(G(-1.0, 1.0), G(0.0, 2.0)), "not disjoint");
  CHECK_THROWS_WITH(ortho_distance(G(0.0, 1.0), G(1.0, 2.0)), "not disjoint");
  // High-precision minimisation of the point-to-point distance.
  CHECK(ortho_distance(G(0.0, infinity), G(1.0, 2.0)) == doctest::Approx(1.762747174039086050).epsilon(1e-14));
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(-10.0, 10.0);
  for (int i = 0; i < 100; ++i) {
    std::array<double, 4> v{u(rng), u(rng), u(rng), u(rng)};
    std::sort(v.begin(), v.end());
    const G g1(v[0], v[3]);
    const G g2(v[1], v[2]);
    CHECK(std::abs(ortho_distance(g1, g2) - ortho_distance(g2, g1)) < 1e-12);
  }
}

TEST_CASE("lambert side") {
  CHECK(lambert_side(std::asinh(1.0)) == doctest::Approx(std::asinh(1.0)).epsilon(1e-15));
  CHECK(lambert_side(0.1) == doctest::Approx(2.996565121117661703749596).epsilon(1e-15));
  double prev = lambert_side(1e-3);
  for (double x = 2e-3; x < 40.0; x *= 1.3) {
    const double y = lambert_side(x);
    CHECK(y < prev);
    prev = y;
  }
  CHECK(lambert_side(700.0) == doctest::Approx(2.0 * std::exp(-700.0)).epsilon(1e-12));
  CHECK(lambert_side(800.0) == 0.0);
  for (double x = 1e-3; x <= 10.0; x *= 1.1) {
    CHECK(std::abs(lambert_side(lambert_side(x)) - x) < 1e-9);
  }
  CHECK_THROWS_AS(lambert_side(0.0), DomainError);
}

TEST_CASE("saccheri summit") {
  CHECK(saccheri_summit(1.3, 0.0) == doctest::Approx(1.3).epsilon(1e-15));
  CHECK(saccheri_summit(1e-12, 2.0) < 1e-10);
  CHECK(saccheri_summit(1.0, 1.0) == doctest::Approx(1.471720882725903699327922).epsilon(1e-15));
  CHECK(std::isfinite(saccheri_summit(500.0, 500.0)));
  CHECK_THROWS_AS(saccheri_summit(0.0, 1.0), DomainError);
}

TEST_CASE("cayley transform") {
  CHECK(cayley_to_disk(BP(infinity)).angle() == 0.0);
  CHECK(cayley_to_disk(BP(0.0)).angle() == doctest::Approx(M_PI));
  CHECK(angular_gap(cayley_to_disk(BP(0.0)), cayley_to_disk(BP(infinity))) == doctest::Approx(M_PI));
  for (double x = -50.0; x <= 50.0; x += 0.77) {
    const BP back = disk_to_half_plane(cayley_to_disk(BP(x)));
    CHECK(value(back) == doctest::Approx(x).epsilon(1e-12));
  }
  CHECK(disk_to_half_plane(cayley_to_disk(BP(infinity))).is_infinite());
  const auto g = cayley_to_disk(Geodesic<double>(-2.0, 3.0));
  const auto back = disk_to_half_plane(g);
  CHECK(value(back.initial()) == doctest::Approx(-2.0));
  CHECK(value(back.terminal()) == doctest::Approx(3.0));
  const PlanePoint<double> w = cayley_to_disk(PlanePoint<double>(0.3, 2.0));
  CHECK(w.norm() < 1.0);
  CHECK(cayley_to_disk(PlanePoint<double>(0.0, 1.0)).norm() < 1e-15);
}

TEST_CASE("formulas run in extended precision") {
  using F = Float50;
  const F s = shear_of_diagonal(IdealQuadrilateral<F>(F(-1), F(0), F(exp(F(2))), infinity));
  CHECK(abs(s - F(2)) < F(1e-45));
  CHECK(abs(lambert_side(lambert_side(F("0.25"))) - F("0.25")) < F(1e-45));
}
