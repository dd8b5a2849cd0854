#pragma once

// Run configuration: a JSON document with the sections surface, path,
// classify and render. Unknown keys are rejected.
//
//   {
//     "surface": {
//       "kind": "flute" | "end_surface",
//       "cuffs": {"type": "slice", "a": 4, "b": 1, "count": 1000}
//              | {"type": "logarithmic", "coefficient": 2, "shift": 1, "count": 1000}
//              | {"type": "constant", "value": 3, "count": 1000}
//              | {"type": "explicit", "values": [...]},
//       "twists": "half" | "zero" | [t_1, t_2, ...],
//       "beta_length": 1, "gamma_length": 1
//     },
//     "path": {"s1": 0, "terms": 1000},
//     "classify": {"n_terms": 100000, "tolerance": 0.1},
//     "render": {"model": "disk" | "halfplane", "samples_per_arc": 48}
//   }

#include <cstddef>
#include <string>

#include "flutes/fenchel_nielsen.hpp"

namespace flutes {

enum class RenderModel { disk, halfplane };

std::string to_string(RenderModel m);
RenderModel parse_render_model(const std::string& text);

struct PathConfig {
  double s1 = 0.0;
  std::size_t terms = 1000;

  bool operator==(const PathConfig&) const = default;
};

struct ClassifyConfig {
  std::size_t n_terms = 100000;
  double tolerance = 0.1;

  bool operator==(const ClassifyConfig&) const = default;
};

struct RenderConfig {
  RenderModel model = RenderModel::disk;
  std::size_t samples_per_arc = 48;

  bool operator==(const RenderConfig&) const = default;
};

struct RunConfig {
  SurfaceSpec surface;
  PathConfig path;
  ClassifyConfig classify;
  RenderConfig render;

  void validate() const;
  bool operator==(const RunConfig&) const = default;
};

// Throws ValidationError naming the offending field.
RunConfig load_config(const std::string& text);
RunConfig load_config_file(const std::string& path);

// Canonical JSON text; load_config(emit_config(c)) == c.
std::string emit_config(const RunConfig& cfg);

}  // namespace flutes
