#pragma once

// Oracle-equivalence suites shared by `flutes selftest` and the acceptance
// runner. Each suite compares a library result with an independent
// construction and reports the worst discrepancy it saw.

#include <cstdint>
#include <string>
#include <vector>

namespace flutes::selftest {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

// Closed-form horocyclic lengths against arcs measured on realized fans
// (50-digit arithmetic), random shears |s| <= 3, at most 30 arcs, s1 = 0.
CheckResult horocyclic_oracle(int samples = 500, std::uint64_t seed = 20240601);

// Fan built from random shears |s| <= 5 (150-digit arithmetic), at most 50
// geodesics; junction shears read back with shear_of_diagonal.
CheckResult fan_round_trip(int samples = 200, std::uint64_t seed = 7);

// Even shears against the symmetric quadrilateral (-y, -x, x, y).
CheckResult even_shear_oracle(int samples = 200, std::uint64_t seed = 11);

// Odd shears against the quadrilateral built from two cuff perpendiculars on
// the diagonal and the geodesics at distance eta from them.
CheckResult odd_shear_oracle(int samples = 200, std::uint64_t seed = 13);

// exp(-l_{n+1}/2) < eta_n < 8 exp(-l_n/2) for random nondecreasing lengths
// with l_1 >= 4.
CheckResult pentagon_bounds(int samples = 100, std::uint64_t seed = 17);

// Fitted exponent of exp(-sigma_n/2) within 0.15 of min(a, b)/2.
CheckResult sigma_exponents(std::size_t n_terms = 100000);

// The four inequalities on uniform grids of `points` points over (0, 10] and
// (0, 0.1].
CheckResult proof_inequalities(int points = 10000);

// Zero-shear fan of 2000 arcs in 900-digit arithmetic: gap below 1e-3,
// cumulative length 2000, SINGLE_POINT.
CheckResult zero_shear_dichotomy();

// Slice (3, 3): gap above 1e-6 at the truncation index and the last four arcs
// of the closed-form path summing below 1e-9: GEODESIC_LIMIT.
CheckResult slice_geodesic_limit(std::size_t cuffs = 6000000);

// Numeric verdicts on the slice grid against the closed form, outside the
// band |min(a, b) - 2| <= 0.25, within the time budget.
CheckResult phase_diagram(std::size_t n_terms = 100000, double budget_seconds = 60.0);

// Structural checks on an SVG produced by render_fan_svg in the disk model:
// geodesic circles orthogonal to the unit circle, horocyclic arcs chained.
CheckResult svg_geometry(const std::string& name, const std::string& svg, double orthogonality_tol = 1e-6,
                         double connectivity_tol = 1e-9);

std::vector<CheckResult> quick_suite();

}  // namespace flutes::selftest
