#include "flutes/config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

#include "flutes/report.hpp"

namespace flutes {

using nlohmann::json;

std::string to_string(RenderModel m) {
  return m == RenderModel::disk ? "disk" : "halfplane";
}

RenderModel parse_render_model(const std::string& text) {
  if (text == "disk") return RenderModel::disk;
  if (text == "halfplane") return RenderModel::halfplane;
  throw ValidationError("render.model", "expected \"disk\" or \"halfplane\"");
}

namespace {

std::string join(const std::string& prefix, const std::string& key) {
  return prefix.empty() ? key : prefix + "." + key;
}

void require_object(const json& j, const std::string& field) {
  if (!j.is_object()) throw ValidationError(field, "expected an object");
}

void reject_unknown(const json& j, const std::string& field, std::set<std::string> allowed) {
  for (const auto& item : j.items()) {
    if (!allowed.count(item.key())) throw ValidationError(join(field, item.key()), "unknown key");
  }
}

double number(const json& j, const std::string& field) {
  if (!j.is_number()) throw ValidationError(field, "expected a number");
  const double x = j.get<double>();
  if (!std::isfinite(x)) throw ValidationError(field, "expected a finite number");
  return x;
}

double positive(const json& j, const std::string& field) {
  const double x = number(j, field);
  if (!(x > 0.0)) throw ValidationError(field, "nonpositive length");
  return x;
}

std::size_t count(const json& j, const std::string& field) {
  if (!j.is_number_integer() && !j.is_number_unsigned()) throw ValidationError(field, "expected an integer");
  const auto v = j.get<long long>();
  if (v <= 0) throw ValidationError(field, "expected a positive integer");
  return static_cast<std::size_t>(v);
}

std::string text(const json& j, const std::string& field) {
  if (!j.is_string()) throw ValidationError(field, "expected a string");
  return j.get<std::string>();
}

CuffLengths parse_cuffs(const json& j, const std::string& field) {
  require_object(j, field);
  if (!j.contains("type")) throw ValidationError(join(field, "type"), "missing");
  const std::string type = text(j.at("type"), join(field, "type"));
  if (type == "slice") {
    reject_unknown(j, field, {"type", "a", "b", "count"});
    SliceParams p;
    if (!j.contains("a")) throw ValidationError(join(field, "a"), "missing");
    if (!j.contains("b")) throw ValidationError(join(field, "b"), "missing");
    p.a = positive(j.at("a"), join(field, "a"));
    p.b = positive(j.at("b"), join(field, "b"));
    p.count = j.contains("count") ? count(j.at("count"), join(field, "count")) : 1000;
    if (p.count < 2) throw ValidationError(join(field, "count"), "slice needs at least 2 cuffs");
    return p;
  }
  if (type == "logarithmic") {
    reject_unknown(j, field, {"type", "coefficient", "shift", "count"});
    LogarithmicLengths p;
    if (!j.contains("coefficient")) throw ValidationError(join(field, "coefficient"), "missing");
    p.coefficient = positive(j.at("coefficient"), join(field, "coefficient"));
    if (j.contains("shift")) p.shift = number(j.at("shift"), join(field, "shift"));
    p.count = j.contains("count") ? count(j.at("count"), join(field, "count")) : 1000;
    return p;
  }
  if (type == "constant") {
    reject_unknown(j, field, {"type", "value", "count"});
    ConstantLengths p;
    if (!j.contains("value")) throw ValidationError(join(field, "value"), "missing");
    p.value = positive(j.at("value"), join(field, "value"));
    p.count = j.contains("count") ? count(j.at("count"), join(field, "count")) : 1000;
    return p;
  }
  if (type == "explicit") {
    reject_unknown(j, field, {"type", "values"});
    const std::string vf = join(field, "values");
    if (!j.contains("values") || !j.at("values").is_array()) throw ValidationError(vf, "expected an array");
    ExplicitLengths p;
    std::size_t i = 0;
    for (const auto& v : j.at("values")) {
      p.values.push_back(positive(v, vf + "[" + std::to_string(i++) + "]"));
    }
    if (p.values.size() < 2) throw ValidationError(vf, "need at least 2 cuffs");
    return p;
  }
  throw ValidationError(join(field, "type"), "unknown cuff generator \"" + type + "\"");
}

Twists parse_twists(const json& j, const std::string& field) {
  if (j.is_string()) {
    const std::string t = j.get<std::string>();
    if (t == "half") return Twists::half();
    if (t == "zero") return Twists::zero();
    throw ValidationError(field, "expected \"half\", \"zero\" or an array");
  }
  if (!j.is_array()) throw ValidationError(field, "expected \"half\", \"zero\" or an array");
  std::vector<double> values;
  std::size_t i = 0;
  for (const auto& v : j) {
    const std::string f = field + "[" + std::to_string(i++) + "]";
    const double t = number(v, f);
    if (!(t >= -0.5 && t <= 0.5)) throw ValidationError(f, "twist out of range");
    values.push_back(t);
  }
  if (values.empty()) throw ValidationError(field, "empty twist list");
  return Twists::explicit_values(std::move(values));
}

SurfaceSpec parse_surface(const json& j) {
  const std::string field = "surface";
  require_object(j, field);
  reject_unknown(j, field, {"kind", "cuffs", "twists", "beta_length", "gamma_length"});
  SurfaceSpec s;
  if (!j.contains("kind")) throw ValidationError("surface.kind", "missing");
  const std::string kind = text(j.at("kind"), "surface.kind");
  if (kind == "flute") {
    s.kind = SurfaceKind::flute;
  } else if (kind == "end_surface") {
    s.kind = SurfaceKind::end_surface;
  } else {
    throw ValidationError("surface.kind", "unknown surface kind \"" + kind + "\"");
  }
  if (!j.contains("cuffs")) throw ValidationError("surface.cuffs", "missing");
  s.cuffs = parse_cuffs(j.at("cuffs"), "surface.cuffs");
  s.twists = j.contains("twists") ? parse_twists(j.at("twists"), "surface.twists") : Twists::half();
  if (j.contains("beta_length")) s.beta_length = positive(j.at("beta_length"), "surface.beta_length");
  if (j.contains("gamma_length")) s.gamma_length = positive(j.at("gamma_length"), "surface.gamma_length");
  return s;
}

json cuffs_json(const CuffLengths& cuffs) {
  return std::visit(
      [](const auto& c) -> json {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, SliceParams>) {
          return {{"type", "slice"}, {"a", c.a}, {"b", c.b}, {"count", c.count}};
        } else if constexpr (std::is_same_v<T, LogarithmicLengths>) {
          return {{"type", "logarithmic"}, {"coefficient", c.coefficient}, {"shift", c.shift}, {"count", c.count}};
        } else if constexpr (std::is_same_v<T, ConstantLengths>) {
          return {{"type", "constant"}, {"value", c.value}, {"count", c.count}};
        } else {
          return {{"type", "explicit"}, {"values", c.values}};
        }
      },
      cuffs);
}

}  // namespace

void RunConfig::validate() const {
  surface.validate();
  if (path.terms < 1) throw ValidationError("path.terms", "expected a positive integer");
  if (classify.n_terms < 100) throw ValidationError("classify.n_terms", "need at least 100 terms");
  if (!(classify.tolerance > 0.0 && classify.tolerance < 1.0)) {
    throw ValidationError("classify.tolerance", "tolerance must lie in (0, 1)");
  }
  if (render.samples_per_arc < 2) throw ValidationError("render.samples_per_arc", "need at least 2 samples");
}

RunConfig load_config(const std::string& text_in) {
  json root;
  try {
    root = json::parse(text_in);
  } catch (const json::parse_error& e) {
    throw ValidationError("", std::string("malformed config: ") + e.what());
  }
  require_object(root, "");
  reject_unknown(root, "", {"surface", "path", "classify", "render"});
  if (!root.contains("surface")) throw ValidationError("surface", "missing");

  RunConfig cfg;
  cfg.surface = parse_surface(root.at("surface"));
  if (root.contains("path")) {
    const json& p = root.at("path");
    require_object(p, "path");
    reject_unknown(p, "path", {"s1", "terms"});
    if (p.contains("s1")) cfg.path.s1 = number(p.at("s1"), "path.s1");
    if (p.contains("terms")) cfg.path.terms = count(p.at("terms"), "path.terms");
  }
  if (root.contains("classify")) {
    const json& c = root.at("classify");
    require_object(c, "classify");
    reject_unknown(c, "classify", {"n_terms", "tolerance"});
    if (c.contains("n_terms")) cfg.classify.n_terms = count(c.at("n_terms"), "classify.n_terms");
    if (c.contains("tolerance")) cfg.classify.tolerance = number(c.at("tolerance"), "classify.tolerance");
  }
  if (root.contains("render")) {
    const json& r = root.at("render");
    require_object(r, "render");
    reject_unknown(r, "render", {"model", "samples_per_arc"});
    if (r.contains("model")) cfg.render.model = parse_render_model(text(r.at("model"), "render.model"));
    if (r.contains("samples_per_arc")) {
      cfg.render.samples_per_arc = count(r.at("samples_per_arc"), "render.samples_per_arc");
    }
  }
  cfg.validate();
  return cfg;
}

RunConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("config", "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_config(buf.str());
}

std::string emit_config(const RunConfig& cfg) {
  json surface = {{"kind", to_string(cfg.surface.kind)}, {"cuffs", cuffs_json(cfg.surface.cuffs)}};
  switch (cfg.surface.twists.mode) {
    case TwistMode::half:
      surface["twists"] = "half";
      break;
    case TwistMode::zero:
      surface["twists"] = "zero";
      break;
    case TwistMode::explicit_values:
      surface["twists"] = cfg.surface.twists.values;
      break;
  }
  if (cfg.surface.beta_length) surface["beta_length"] = *cfg.surface.beta_length;
  if (cfg.surface.gamma_length) surface["gamma_length"] = *cfg.surface.gamma_length;
  const json root = {
      {"surface", surface},
      {"path", {{"s1", cfg.path.s1}, {"terms", cfg.path.terms}}},
      {"classify", {{"n_terms", cfg.classify.n_terms}, {"tolerance", cfg.classify.tolerance}}},
      {"render", {{"model", to_string(cfg.render.model)}, {"samples_per_arc", cfg.render.samples_per_arc}}},
  };
  return dump_json(root);
}

}  // namespace flutes
