#include "flutes/selftest.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>
#include <regex>
#include <sstream>

#include "flutes/classifier.hpp"
#include "flutes/hyperbolic.hpp"
#include "flutes/multiprecision.hpp"
#include "flutes/report.hpp"
#include "flutes/shear_fan.hpp"
#include "flutes/sweep.hpp"

namespace flutes::selftest {

namespace {

std::string fmt(double x) { return format_double(x); }

CheckResult make(std::string name, bool passed, const std::string& detail) {
  return {std::move(name), passed, detail};
}

ShearSequence random_shears(std::mt19937_64& rng, std::size_t count, double bound) {
  std::uniform_real_distribution<double> u(-bound, bound);
  ShearSequence sh;
  sh.s.resize(static_cast<Eigen::Index>(count));
  for (auto& x : sh.s) x = u(rng);
  return sh;
}

}  // namespace

CheckResult horocyclic_oracle(int samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> arcs_dist(2, 30);
  double worst = 0.0;
  std::size_t compared = 0;
  std::size_t truncated = 0;
  for (int t = 0; t < samples; ++t) {
    const std::size_t arcs = arcs_dist(rng);
    const ShearSequence sh = random_shears(rng, arcs - 1, 3.0);
    const auto fan = realize_fan<Float50>(sh, arcs + 1);
    if (fan.truncated()) ++truncated;
    const HorocyclicPath measured = measure_path(fan, 0.0);
    const HorocyclicPath closed = horocyclic_lengths(sh, static_cast<std::size_t>(measured.size()));
    for (Eigen::Index i = 0; i < measured.size(); ++i) {
      worst = std::max(worst, std::abs(std::expm1(measured.log_lengths(i) - closed.log_lengths(i))));
      ++compared;
    }
  }
  return make("horocyclic lengths: measured vs closed form", worst < 1e-9,
              "max relative error " + fmt(worst) + " over " + std::to_string(compared) + " arcs, " +
                  std::to_string(truncated) + " fans truncated");
}

CheckResult fan_round_trip(int samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> size_dist(3, 50);
  double worst = 0.0;
  bool nested = true;
  std::size_t truncated = 0;
  for (int t = 0; t < samples; ++t) {
    const std::size_t n = size_dist(rng);
    const ShearSequence sh = random_shears(rng, n - 2, 5.0);
    const auto fan = realize_fan<Float150>(sh, n);
    if (fan.truncated()) ++truncated;
    for (std::size_t j = 2; j < fan.size(); ++j) {
      worst = std::max(worst, std::abs(static_cast<double>(fan_junction_shear(fan, j)) - sh.at(j)));
    }
    // After g_2 every endpoint is a negative real; the free endpoints on each
    // side of the fan move strictly monotonically towards the limit.
    std::vector<Float150> lows;
    std::vector<Float150> highs;
    for (std::size_t j = 2; j < fan.size(); ++j) {
      const auto& g = fan.geodesics[j];
      const Float150 x = g.initial().value();
      const Float150 y = g.terminal().value();
      lows.push_back(std::min(x, y));
      highs.push_back(std::max(x, y));
    }
    for (std::size_t j = 1; j < lows.size(); ++j) {
      if (lows[j] < lows[j - 1] || highs[j] > highs[j - 1]) nested = false;
      if (!(lows[j] < highs[j])) nested = false;
    }
  }
  return make("fan round trip: junction shears and nesting", worst < 1e-9 && nested && truncated == 0,
              "max shear error " + fmt(worst) + (nested ? ", nested" : ", NOT nested") + ", " +
                  std::to_string(truncated) + " truncated");
}

CheckResult even_shear_oracle(int samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 10.0);
  double worst = 0.0;
  int done = 0;
  while (done < samples) {
    double x = u(rng);
    double y = u(rng);
    if (x > y) std::swap(x, y);
    if (!(x > 0.0) || y - x < 1e-6) continue;
    ++done;
    const double eta = std::log(y / x);
    const double closed = 2.0 * std::log(std::sinh(eta / 2.0));
    const auto quad = IdealQuadrilateral<double>::around(Geodesic<double>(x, -y), -x, y);
    const double measured = shear_of_diagonal(quad);
    worst = std::max({worst, std::abs(measured - closed), std::abs(shear_even(eta) - closed)});
  }
  return make("even shears: closed form vs symmetric quadrilateral", worst < 1e-9, "max error " + fmt(worst));
}

namespace {

// Endpoints of the geodesic at distance eta from the perpendicular to (0, inf)
// through i*e^h, with common perpendicular along (0, inf). The map
// K(z) = (1 + z)/(1 - z) sends the unit perpendicular to (0, inf) and (0, inf)
// to the unit semicircle, where the wanted geodesic is (-e^{-eta}, e^{-eta}).
std::array<double, 2> partner_endpoints(double h, double eta) {
  const MobiusMap<double> k(1.0, 1.0, -1.0, 1.0);
  const MobiusMap<double> scale(std::exp(h / 2.0), 0.0, 0.0, std::exp(-h / 2.0));
  const MobiusMap<double> back = mobius_compose(scale, mobius_invert(k));
  const double w = std::exp(-eta);
  return {mobius_apply(back, BoundaryPoint<double>(w)).value(), mobius_apply(back, BoundaryPoint<double>(-w)).value()};
}

}  // namespace

CheckResult odd_shear_oracle(int samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> eta_dist(0.01, 5.0);
  std::uniform_real_distribution<double> ell_dist(0.1, 20.0);
  std::uniform_real_distribution<double> height(-3.0, 3.0);
  double worst = 0.0;
  for (int t = 0; t < samples; ++t) {
    const double eta_prev = eta_dist(rng);
    const double eta_next = eta_dist(rng);
    const double ell = ell_dist(rng);
    const double q = height(rng);
    for (int residue : {1, 3}) {
      const double r = residue == 1 ? q - ell / 2.0 : q + ell / 2.0;
      // A on the negative side nearest the diagonal's end 0, D on the positive
      // side nearest its end inf.
      const auto a_pair = partner_endpoints(q, eta_prev);
      const auto d_pair = partner_endpoints(r, eta_next);
      const double a = std::max(a_pair[0], a_pair[1]);
      const double d = -std::min(d_pair[0], d_pair[1]);
      const double measured = shear_of_diagonal(IdealQuadrilateral<double>(a, 0.0, d, infinity));
      const double closed = shear_odd(eta_prev, eta_next, ell, residue);
      worst = std::max(worst, std::abs(measured - closed));
    }
  }
  return make("odd shears: closed form vs perpendicular construction", worst < 1e-8, "max error " + fmt(worst));
}

CheckResult pentagon_bounds(int samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> start(4.0, 10.0);
  std::uniform_real_distribution<double> step(0.0, 2.0);
  std::size_t checked = 0;
  std::size_t failures = 0;
  for (int t = 0; t < samples; ++t) {
    std::vector<double> ell{start(rng)};
    for (int i = 1; i < 200; ++i) ell.push_back(ell.back() + step(rng));
    for (std::size_t n = 0; n + 1 < ell.size(); ++n) {
      const double eta = eta_pentagon(ell[n], ell[n + 1]);
      ++checked;
      if (!(std::exp(-ell[n + 1] / 2.0) < eta && eta < 8.0 * std::exp(-ell[n] / 2.0))) ++failures;
    }
  }
  return make("pentagon bounds with C = 8", failures == 0,
              std::to_string(failures) + " violations in " + std::to_string(checked) + " terms");
}

CheckResult sigma_exponents(std::size_t n_terms) {
  std::ostringstream detail;
  bool ok = true;
  for (auto [a, b] : {std::pair{4.0, 1.0}, {1.0, 1.0}, {3.0, 3.0}, {0.5, 6.2}}) {
    const SurfaceSpec spec{SurfaceKind::flute, SliceParams{a, b, n_terms}, Twists::half()};
    const LengthSequences seq = derive_sequences(spec, n_terms);
    const SeriesVerdict v = series_verdict_log(-seq.sigma / 2.0, 0.1);
    const double want = std::min(a, b) / 2.0;
    const bool pass = std::abs(v.exponent_estimate - want) < 0.15;
    ok = ok && pass;
    detail << "(" << fmt(a) << "," << fmt(b) << ") p=" << fmt(v.exponent_estimate) << " want " << fmt(want) << "; ";
  }
  return make("sigma exponents", ok, detail.str());
}

CheckResult proof_inequalities(int points) {
  std::size_t failures = 0;
  for (int k = 1; k <= points; ++k) {
    const double x = 10.0 * k / points;
    const double side = lambert_side(x);
    if (!(std::exp(side) > 2.0 / x)) ++failures;
    if (!(std::sinh(x) > x)) ++failures;
  }
  for (int k = 1; k <= points; ++k) {
    const double x = 0.1 * k / points;
    const double side = lambert_side(x);
    if (!(std::exp(-side) > x / 5.0)) ++failures;
    if (!(std::exp(-side) / std::sinh(x / 2.0) > 1.0 / (1.0 + x))) ++failures;
  }
  return make("proof inequalities", failures == 0,
              std::to_string(failures) + " violations over " + std::to_string(4 * points) + " evaluations");
}

CheckResult zero_shear_dichotomy() {
  ShearSequence sh;
  sh.s = Eigen::ArrayXd::Zero(2000);
  const auto fan = realize_fan<Float900>(sh, 2001);
  const HorocyclicPath path = measure_path(fan, 0.0);
  const Float900 gap = fan_gap(fan, fan.size());
  const AccumulationVerdict v = accumulation_verdict(fan, path);
  const double total = path.cumulative_length();
  const bool ok = !fan.truncated() && gap < Float900(1e-3) && std::abs(total / 2000.0 - 1.0) < 1e-9 &&
                  v.outcome == Accumulation::single_point;
  std::ostringstream detail;
  detail << "gap " << gap.str(6, std::ios_base::scientific) << ", length " << fmt(total) << ", "
         << to_string(v.outcome);
  return make("zero-shear fan accumulates at a point", ok, detail.str());
}

CheckResult slice_geodesic_limit(std::size_t cuffs) {
  ShearSequence sh;
  {
    const SurfaceSpec spec{SurfaceKind::flute, SliceParams{3.0, 3.0, cuffs}, Twists::half()};
    sh = assemble_shears(derive_sequences(spec, cuffs));
  }
  const HorocyclicPath path = horocyclic_lengths(sh, sh.last_index());
  const auto fan = realize_fan<double>(sh, sh.last_index() + 1);
  AccumulationOptions opt;
  opt.increment_tol = 1e-9;
  const AccumulationVerdict v = accumulation_verdict(fan, path, opt);
  const bool ok = v.endpoint_gap > 1e-6 && v.last_increment < 1e-9 && v.outcome == Accumulation::geodesic_limit;
  return make("slice (3,3) fan accumulates on a geodesic", ok,
              "gap " + fmt(v.endpoint_gap) + " at geodesic " + std::to_string(fan.size()) + ", length " +
                  fmt(v.path_length_estimate) + ", last increment " + fmt(v.last_increment) + " over " +
                  std::to_string(path.size()) + " arcs, " + to_string(v.outcome));
}

CheckResult phase_diagram(std::size_t n_terms, double budget_seconds) {
  const auto start = std::chrono::steady_clock::now();
  const SliceSweepResult sweep = sweep_slice(SweepGrid{}, n_terms);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::size_t considered = 0;
  std::size_t agreeing = 0;
  for (const auto& row : sweep.rows) {
    if (std::abs(row.min_ab - 2.0) <= 0.25) continue;
    ++considered;
    if (row.numeric_verdict == row.closed_form_verdict) ++agreeing;
  }
  const bool ok = considered > 0 && agreeing == considered && seconds < budget_seconds;
  return make("slice phase diagram", ok,
              std::to_string(agreeing) + "/" + std::to_string(considered) + " grid points agree in " + fmt(seconds) +
                  " s");
}

namespace {

double attribute(const std::string& element, const std::string& name, bool& found) {
  const std::regex re(name + "=\"([^\"]*)\"");
  std::smatch m;
  found = std::regex_search(element, m, re);
  return found ? std::stod(m[1].str()) : 0.0;
}

Eigen::Vector2d point_attribute(const std::string& element, const std::string& name, bool& found) {
  const std::regex re(name + "=\"([^\",]*),([^\"]*)\"");
  std::smatch m;
  found = std::regex_search(element, m, re);
  if (!found) return {0.0, 0.0};
  return {std::stod(m[1].str()), std::stod(m[2].str())};
}

}  // namespace

CheckResult svg_geometry(const std::string& name, const std::string& svg, double orthogonality_tol,
                         double connectivity_tol) {
  if (svg.rfind("<?xml", 0) != 0 || svg.find("</svg>") == std::string::npos) {
    return make(name, false, "not an SVG document");
  }
  std::size_t geodesics = 0;
  double worst_orth = 0.0;
  bool ok = true;
  const std::regex path_re("<path [^>]*>");
  for (auto it = std::sregex_iterator(svg.begin(), svg.end(), path_re); it != std::sregex_iterator(); ++it) {
    const std::string el = it->str();
    ++geodesics;
    bool f0 = false, f1 = false;
    const double t0 = attribute(el, "data-theta0", f0);
    const double t1 = attribute(el, "data-theta1", f1);
    if (!f0 || !f1) {
      ok = false;
      continue;
    }
    if (el.find("data-kind=\"diameter\"") != std::string::npos) {
      worst_orth = std::max(worst_orth, std::abs(std::abs(std::remainder(t1 - t0, 2.0 * pi<double>())) - pi<double>()));
      continue;
    }
    bool fx = false, fy = false, fr = false;
    const Eigen::Vector2d c(attribute(el, "data-cx", fx), attribute(el, "data-cy", fy));
    const double r = attribute(el, "data-r", fr);
    if (!fx || !fy || !fr) {
      ok = false;
      continue;
    }
    // Two circles meet at right angles iff |c|^2 = 1 + r^2; on the arc ends the
    // radius of the geodesic circle is tangent to the unit circle.
    worst_orth = std::max(worst_orth, std::abs(c.squaredNorm() - 1.0 - r * r));
    for (double t : {t0, t1}) {
      const Eigen::Vector2d p(std::cos(t), std::sin(t));
      worst_orth = std::max(worst_orth, std::abs((p - c).norm() - r));
      if (r >= 1e-6) worst_orth = std::max(worst_orth, std::abs((p - c).dot(p)) / r);
    }
  }

  std::size_t arcs = 0;
  double worst_gap = 0.0;
  Eigen::Vector2d previous_end;
  const std::regex poly_re("<polyline [^>]*>");
  for (auto it = std::sregex_iterator(svg.begin(), svg.end(), poly_re); it != std::sregex_iterator(); ++it) {
    const std::string el = it->str();
    bool fs = false, fe = false;
    const Eigen::Vector2d start = point_attribute(el, "data-start", fs);
    const Eigen::Vector2d end = point_attribute(el, "data-end", fe);
    if (!fs || !fe) {
      ok = false;
      continue;
    }
    if (arcs > 0) worst_gap = std::max(worst_gap, (start - previous_end).norm());
    previous_end = end;
    ++arcs;
  }
  ok = ok && geodesics > 0 && arcs > 0 && worst_orth <= orthogonality_tol && worst_gap <= connectivity_tol;
  return make(name, ok,
              std::to_string(geodesics) + " geodesics (orthogonality residual " + fmt(worst_orth) + "), " +
                  std::to_string(arcs) + " arcs (max joint gap " + fmt(worst_gap) + ")");
}

std::vector<CheckResult> quick_suite() {
  return {
      horocyclic_oracle(),   fan_round_trip(),      even_shear_oracle(), odd_shear_oracle(),
      pentagon_bounds(),     sigma_exponents(),     proof_inequalities(), zero_shear_dichotomy(),
  };
}

}  // namespace flutes::selftest
