#include "flutes/render.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <sstream>

#include "flutes/report.hpp"
#include "flutes/shear_fan.hpp"

namespace flutes {

namespace {

constexpr double kCentre = 500.0;
constexpr double kRadius = 480.0;
constexpr const char* kGeodesicColour = "#1f4e9c";
constexpr const char* kPathColour = "#c0392b";

std::string px(double x) {
  std::ostringstream out;
  out.imbue(std::locale::classic());
  out << std::fixed << std::setprecision(4) << x;
  std::string s = out.str();
  return s == "-0.0000" ? "0.0000" : s;
}

std::string pair(double x, double y) { return format_double(x) + "," + format_double(y); }

struct Frame {
  virtual ~Frame() = default;
  virtual Eigen::Vector2d screen(const PlanePoint<double>& z) const = 0;
};

struct DiskFrame final : Frame {
  Eigen::Vector2d screen(const PlanePoint<double>& w) const override {
    return {kCentre + kRadius * w(0), kCentre - kRadius * w(1)};
  }
};

// Half-plane window around the finite fan endpoints; the real axis sits at
// y = 900.
struct HalfPlaneFrame final : Frame {
  double x_lo = -1.0;
  double scale = 1.0;

  Eigen::Vector2d screen(const PlanePoint<double>& z) const override {
    return {50.0 + (z(0) - x_lo) * scale, 900.0 - z(1) * scale};
  }
};

void disk_geodesic(std::ostringstream& out, const Geodesic<double>& g, std::size_t index) {
  const auto ends = cayley_to_disk(g);
  const double t0 = ends[0].angle();
  const double t1 = ends[1].angle();
  const Eigen::Vector2d p0 = ends[0].position();
  const Eigen::Vector2d p1 = ends[1].position();
  const DiskFrame frame;
  const Eigen::Vector2d s0 = frame.screen(p0);
  const Eigen::Vector2d s1 = frame.screen(p1);
  const double gap = angular_gap(ends[0], ends[1]);

  out << "<path data-index=\"" << index << "\" data-theta0=\"" << format_double(t0) << "\" data-theta1=\""
      << format_double(t1) << "\"";
  if (std::abs(gap - pi<double>()) < 1e-12) {
    out << " data-kind=\"diameter\" d=\"M " << px(s0(0)) << " " << px(s0(1)) << " L " << px(s1(0)) << " "
        << px(s1(1)) << "\"/>\n";
    return;
  }
  double mid = (t0 + t1) / 2.0;
  if (std::abs(t1 - t0) > pi<double>()) mid += pi<double>();
  const double reach = 1.0 / std::cos(gap / 2.0);
  const Eigen::Vector2d centre(reach * std::cos(mid), reach * std::sin(mid));
  const double r = std::tan(gap / 2.0);
  const Eigen::Vector2d nearest = centre * (1.0 - r / reach);
  const Eigen::Vector2d sm = frame.screen(nearest);
  const double cross = (s1(0) - s0(0)) * (sm(1) - s0(1)) - (s1(1) - s0(1)) * (sm(0) - s0(0));
  out << " data-cx=\"" << format_double(centre(0)) << "\" data-cy=\"" << format_double(centre(1))
      << "\" data-r=\"" << format_double(r) << "\" d=\"M " << px(s0(0)) << " " << px(s0(1)) << " A "
      << px(kRadius * r) << " " << px(kRadius * r) << " 0 0 " << (cross > 0 ? 0 : 1) << " " << px(s1(0)) << " "
      << px(s1(1)) << "\"/>\n";
}

void plane_geodesic(std::ostringstream& out, const Geodesic<double>& g, std::size_t index,
                    const HalfPlaneFrame& frame) {
  const auto label = [](const BoundaryPoint<double>& p) {
    return p.is_infinite() ? std::string("inf") : format_double(p.value());
  };
  out << "<path data-index=\"" << index << "\" data-x0=\"" << label(g.initial()) << "\" data-x1=\""
      << label(g.terminal()) << "\"";
  if (g.initial().is_infinite() || g.terminal().is_infinite()) {
    const double x = g.initial().is_infinite() ? g.terminal().value() : g.initial().value();
    const Eigen::Vector2d foot = frame.screen({x, 0.0});
    out << " d=\"M " << px(foot(0)) << " " << px(foot(1)) << " L " << px(foot(0)) << " 0.0000\"/>\n";
    return;
  }
  const double x0 = std::min(g.initial().value(), g.terminal().value());
  const double x1 = std::max(g.initial().value(), g.terminal().value());
  const Eigen::Vector2d a = frame.screen({x0, 0.0});
  const Eigen::Vector2d b = frame.screen({x1, 0.0});
  const double r = (b(0) - a(0)) / 2.0;
  out << " d=\"M " << px(a(0)) << " " << px(a(1)) << " A " << px(r) << " " << px(r) << " 0 0 1 " << px(b(0))
      << " " << px(b(1)) << "\"/>\n";
}

std::size_t cuffs_for_arcs(std::size_t arcs) {
  // 2N - 3 shears from N cuffs; the path needs arcs - 1 of them.
  return std::max<std::size_t>(3, (arcs + 2) / 2 + 1);
}

}  // namespace

RenderResult render_fan_svg(const RunConfig& cfg) {
  cfg.validate();
  const std::size_t arcs_wanted = cfg.path.terms;
  const LengthSequences seq = derive_sequences(cfg.surface, cuffs_for_arcs(arcs_wanted));
  const ShearSequence sh = assemble_shears(seq, cfg.path.s1);
  const GeodesicFan<double> fan = realize_fan<double>(sh, arcs_wanted + 1);
  const auto arcs = trace_path(fan, cfg.path.s1, cfg.render.samples_per_arc);
  const HorocyclicPath closed = horocyclic_lengths(sh, std::max<std::size_t>(1, fan.size() - 1));

  RenderResult result;
  result.geodesics = fan.size();
  result.arcs = arcs.size();
  result.truncated_at = fan.truncated_at;

  std::ostringstream out;
  out.imbue(std::locale::classic());
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"1000\" height=\"1000\" viewBox=\"0 0 1000 1000\">\n";
  out << "<!-- model=" << to_string(cfg.render.model) << " s1=" << format_double(cfg.path.s1)
      << " terms=" << cfg.path.terms << " samples_per_arc=" << cfg.render.samples_per_arc
      << " geodesics=" << result.geodesics << " arcs=" << result.arcs << " -->\n";
  out << "<!-- surface=" << to_string(cfg.surface.kind) << " cuffs=" << seq.ell.size() << " -->\n";
  if (fan.truncated()) {
    out << "<!-- resolution exhausted at shear index " << *fan.truncated_at << " -->\n";
  }

  if (cfg.render.model == RenderModel::disk) {
    out << "<circle cx=\"500\" cy=\"500\" r=\"480\" fill=\"none\" stroke=\"#000000\" stroke-width=\"1.5\"/>\n";
  }
  out << "<g id=\"geodesics\" fill=\"none\" stroke=\"" << kGeodesicColour << "\" stroke-width=\"0.8\">\n";

  HalfPlaneFrame plane;
  if (cfg.render.model == RenderModel::halfplane) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (const auto& g : fan.geodesics) {
      for (const auto* p : {&g.initial(), &g.terminal()}) {
        if (p->is_finite()) {
          lo = std::min(lo, p->value());
          hi = std::max(hi, p->value());
        }
      }
    }
    const double span = std::max(hi - lo, 1e-12);
    plane.x_lo = lo - 0.05 * span;
    plane.scale = 900.0 / (1.1 * span);
    out << "<line x1=\"0\" y1=\"900\" x2=\"1000\" y2=\"900\" stroke=\"#000000\" stroke-width=\"1.5\"/>\n";
  }
  for (std::size_t i = 0; i < fan.size(); ++i) {
    if (cfg.render.model == RenderModel::disk) {
      disk_geodesic(out, fan.geodesics[i], i + 1);
    } else {
      plane_geodesic(out, fan.geodesics[i], i + 1, plane);
    }
  }
  out << "</g>\n";

  out << "<g id=\"horocycles\" fill=\"none\" stroke=\"" << kPathColour << "\" stroke-width=\"1\">\n";
  const DiskFrame disk;
  for (std::size_t k = 0; k < arcs.size(); ++k) {
    const auto& arc = arcs[k];
    const PlanePoint<double> start = cayley_to_disk(arc.front());
    const PlanePoint<double> end = cayley_to_disk(arc.back());
    out << "<polyline data-index=\"" << k + 1 << "\" data-log-length=\""
        << format_double(closed.log_lengths(static_cast<Eigen::Index>(k))) << "\" data-start=\""
        << pair(start(0), start(1)) << "\" data-end=\"" << pair(end(0), end(1)) << "\" points=\"";
    for (std::size_t j = 0; j < arc.size(); ++j) {
      const Eigen::Vector2d s = cfg.render.model == RenderModel::disk ? disk.screen(cayley_to_disk(arc[j]))
                                                                       : plane.screen(arc[j]);
      if (j) out << ' ';
      out << px(s(0)) << ',' << px(s(1));
    }
    out << "\"/>\n";
  }
  out << "</g>\n</svg>\n";
  result.svg = out.str();
  return result;
}

}  // namespace flutes
