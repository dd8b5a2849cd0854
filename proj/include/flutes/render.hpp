#pragma once

// SVG pictures of a realized fan and its horocyclic path.
//
// Disk model: the unit disk fills a 1000 x 1000 viewport (centre 500, 500,
// radius 480, y up). Every geodesic path carries its disk data in attributes:
// data-theta0/1 (boundary angles) and either data-cx/cy/r (the supporting
// circle) or data-kind="diameter". Every horocyclic polyline carries
// data-start and data-end, its end points in disk coordinates.

#include <cstddef>
#include <optional>
#include <string>

#include "flutes/config.hpp"

namespace flutes {

struct RenderResult {
  std::string svg;
  std::size_t geodesics = 0;
  std::size_t arcs = 0;
  std::optional<std::size_t> truncated_at;
};

// Realizes cfg.path.terms horocyclic arcs (cfg.path.terms + 1 geodesics) in
// double precision; a fan that runs out of resolution is drawn up to the
// truncation and the truncation is noted in the document.
RenderResult render_fan_svg(const RunConfig& cfg);

}  // namespace flutes
