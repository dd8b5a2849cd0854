#include "doctest.h"

#include <cmath>
#include <random>

#include "flutes/fenchel_nielsen.hpp"
#include "flutes/multiprecision.hpp"

using namespace flutes;

TEST_CASE("slice lengths") {
  const Eigen::ArrayXd ell = slice_lengths({4.0, 1.0, 1000});
  REQUIRE(ell.size() == 1000);
  CHECK(ell(0) == doctest::Approx(4.0 * std::log(2.0)).epsilon(1e-15));
  CHECK(ell(1) == doctest::Approx(5.0 * std::log(2.0)).epsilon(1e-15));
  CHECK(ell(2) == doctest::Approx(4.0 * std::log(3.0) + std::log(2.0)).epsilon(1e-15));
  for (double a : {0.5, 1.0, 3.0, 6.0}) {
    for (double b : {0.5, 2.0, 6.2}) {
      CHECK(is_nondecreasing(slice_lengths({a, b, 500})));
    }
  }
  CHECK_THROWS_AS(slice_lengths({0.0, 1.0, 10}), ValidationError);
  CHECK_THROWS_AS(slice_lengths({1.0, 1.0, 1}), ValidationError);
}

TEST_CASE("sigma sequence") {
  Eigen::ArrayXd ell(4);
  ell << 1, 2, 3, 4;
  const Eigen::ArrayXd sigma = sigma_sequence(ell);
  CHECK(sigma(0) == 1.0);
  CHECK(sigma(1) == 1.0);
  CHECK(sigma(2) == 2.0);
  CHECK(sigma(3) == 2.0);
  const Eigen::ArrayXd flat = sigma_sequence(Eigen::ArrayXd::Constant(6, 2.5));
  for (Eigen::Index i = 0; i < 6; ++i) CHECK(flat(i) == (i % 2 == 0 ? 2.5 : 0.0));
}

TEST_CASE("slice sigma terms are comparable to the min(a,b)/2 power series") {
  for (auto [a, b] : {std::pair{4.0, 1.0}, {1.0, 3.0}, {3.0, 3.0}}) {
    const Eigen::ArrayXd sigma = sigma_sequence(slice_lengths({a, b, 200000}));
    const double p = std::min(a, b) / 2.0;
    double lhs = 0.0, rhs = 0.0;
    double lo = 1e300, hi = 0.0;
    Eigen::Index k = 0;
    for (Eigen::Index n = 0; n < sigma.size(); ++n) {
      lhs += std::exp(-sigma(n) / 2.0);
      if (n % 2 == 1) rhs += std::pow(static_cast<double>(++k), -p);
      if (n > 1000 && n % 1000 == 1) {
        lo = std::min(lo, lhs / rhs);
        hi = std::max(hi, lhs / rhs);
      }
    }
    CHECK(hi / lo < 3.0);
  }
}

TEST_CASE("pentagon orthogeodesic") {
  CHECK(eta_pentagon(2.0, 2.0) == doctest::Approx(1.543873665810609450141278).epsilon(1e-15));
  CHECK(eta_pentagon(40.0, 41.0) == doctest::Approx(6.622612977650600920947222e-9).epsilon(1e-13));
  CHECK(eta_pentagon(1.3, 7.1) == eta_pentagon(7.1, 1.3));
  for (double x = 0.2; x < 30.0; x += 0.7) {
    for (double y = 0.2; y < 30.0; y += 1.3) {
      CHECK(eta_pentagon(x + 0.1, y) < eta_pentagon(x, y));
      CHECK(eta_pentagon(x, y + 0.1) < eta_pentagon(x, y));
    }
  }
  CHECK(eta_pentagon(1400.0, 1400.0) > 0.0);
  CHECK_THROWS_AS(eta_pentagon(0.0, 1.0), DomainError);
  CHECK_THROWS_AS(eta_pentagon(1.0, -1.0), DomainError);
}

TEST_CASE("pentagon two-sided bound with C = 8") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> step(0.0, 3.0);
  for (int t = 0; t < 50; ++t) {
    double l = 4.0 + step(rng);
    for (int n = 0; n < 300; ++n) {
      const double next = l + step(rng);
      const double eta = eta_pentagon(l, next);
      CHECK(std::exp(-next / 2.0) < eta);
      CHECK(eta < 8.0 * std::exp(-l / 2.0));
      l = next;
    }
  }
}

TEST_CASE("hexagon orthogeodesic") {
  CHECK(eta_hexagon(3.0, 5.0, 1.0) == doctest::Approx(0.633277081288758327632139).epsilon(1e-14));
  CHECK(eta_hexagon(40.0, 41.0, 0.5) == doctest::Approx(6.671323262983772096796711e-9).epsilon(1e-12));
  CHECK(eta_hexagon(2.0, 9.0, 0.7) == eta_hexagon(9.0, 2.0, 0.7));
  CHECK_THROWS_AS(eta_hexagon(1.0, 1.0, 0.0), DomainError);
  for (double l = 1.0; l <= 10.0; l += 0.5) {
    // cosh(2 artanh(sech(l/2))) sinh^2(l/2) = 1 + cosh^2(l/2): the beta -> 0
    // limit of the hexagon relation is the pentagon value.
    const double eta = 2.0 * std::atanh(1.0 / std::cosh(l / 2.0));
    const double lhs = std::cosh(eta) * std::sinh(l / 2.0) * std::sinh(l / 2.0);
    const double rhs = 1.0 + std::cosh(l / 2.0) * std::cosh(l / 2.0);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
    CHECK(eta_hexagon(l, l, 1e-9) == doctest::Approx(eta_pentagon(l, l)).epsilon(1e-9));
  }
  for (double beta : {0.5, 1.0, 2.0}) {
    double l = 4.0;
    double ratio_max = 0.0;
    for (int n = 0; n < 200; ++n) {
      const double next = l + 0.37;
      const double eta = eta_hexagon(l, next, beta);
      CHECK(std::exp(-next / 2.0) < eta);
      ratio_max = std::max(ratio_max, eta * std::exp(l / 2.0));
      l = next;
    }
    CHECK(ratio_max < 2.0 * std::cosh(beta / 2.0) + 8.0);
  }
}

TEST_CASE("pentagon in extended precision") {
  const Float50 eta = eta_pentagon(Float50(2), Float50(2));
  CHECK(abs(eta - Float50("1.543873665810609450141278")) < Float50(1e-24));
}

TEST_CASE("derive sequences") {
  SurfaceSpec flute{SurfaceKind::flute, ExplicitLengths{{2.0, 2.0, 2.0}}, Twists::zero()};
  const LengthSequences s = derive_sequences(flute, 3);
  REQUIRE(s.eta.size() == 2);
  CHECK(s.eta(0) == s.eta(1));
  CHECK_THROWS_WITH(derive_sequences(flute, 4), "surface.cuffs: insufficient data");

  SurfaceSpec end{SurfaceKind::end_surface, ConstantLengths{3.0, 10}, Twists::half(), 1.0, 1.0};
  const LengthSequences e = derive_sequences(end, 10);
  CHECK(e.eta(0) == eta_hexagon(3.0, 3.0, 1.0));

  SurfaceSpec slice{SurfaceKind::flute, SliceParams{4.0, 1.0, 1000}, Twists::half()};
  const LengthSequences q = derive_sequences(slice, 1000);
  CHECK(q.ell.size() == 1000);
  CHECK(q.eta.size() == 999);
  CHECK(q.sigma.size() == 1000);
  for (Eigen::Index n = 1; n < q.ell.size(); ++n) {
    CHECK(std::abs(q.sigma(n) + q.sigma(n - 1) - q.ell(n)) <= 1e-12 * q.ell(n));
    CHECK(q.sigma(n) >= 0.0);
    CHECK(q.sigma(n) <= q.ell(n));
  }

  SurfaceSpec missing{SurfaceKind::end_surface, ConstantLengths{3.0, 10}, Twists::half()};
  CHECK_THROWS_AS(derive_sequences(missing, 10), ValidationError);
  SurfaceSpec bad_twist{SurfaceKind::flute, ConstantLengths{3.0, 10}, Twists::explicit_values({0.7})};
  CHECK_THROWS_WITH(bad_twist.validate(), "surface.twists[0]: twist out of range");
}
