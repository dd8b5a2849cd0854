#include "flutes/report.hpp"

#include <cmath>
#include <iomanip>
#include <limits>
#include <sstream>

namespace flutes {

using nlohmann::json;

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  std::ostringstream out;
  out.imbue(std::locale::classic());
  out << std::setprecision(17) << x;
  return out.str();
}

namespace {

void write(std::ostringstream& out, const json& j, int indent, int depth) {
  const std::string pad(static_cast<std::size_t>(indent * (depth + 1)), ' ');
  const std::string close(static_cast<std::size_t>(indent * depth), ' ');
  switch (j.type()) {
    case json::value_t::object: {
      if (j.empty()) {
        out << "{}";
        return;
      }
      out << "{\n";
      bool first = true;
      for (const auto& item : j.items()) {
        if (!first) out << ",\n";
        first = false;
        out << pad << json(item.key()).dump() << ": ";
        write(out, item.value(), indent, depth + 1);
      }
      out << "\n" << close << "}";
      return;
    }
    case json::value_t::array: {
      if (j.empty()) {
        out << "[]";
        return;
      }
      out << "[\n";
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) out << ",\n";
        out << pad;
        write(out, j[i], indent, depth + 1);
      }
      out << "\n" << close << "]";
      return;
    }
    case json::value_t::number_float: {
      const double x = j.get<double>();
      if (std::isfinite(x)) {
        out << format_double(x);
      } else {
        out << '"' << format_double(x) << '"';
      }
      return;
    }
    default:
      out << j.dump();
  }
}

}  // namespace

std::string dump_json(const json& j, int indent) {
  std::ostringstream out;
  write(out, j, indent, 0);
  out << "\n";
  return out.str();
}

json to_json(const SeriesVerdict& v) {
  return {
      {"status", to_string(v.status)},
      {"exponent_estimate", v.exponent_estimate},
      {"partial_sum", v.partial_sum},
      {"log_partial_sum", v.log_partial_sum},
      {"decade_growth", v.decade_growth},
      {"n_terms_used", v.n_terms_used},
  };
}

json to_json(const AccumulationVerdict& v) {
  json out = {
      {"outcome", to_string(v.outcome)},
      {"endpoint_gap", v.endpoint_gap},
      {"midpoint_gap", v.midpoint_gap},
      {"fan_size", v.fan_size},
      {"last_increment", v.last_increment},
  };
  if (v.diverging) {
    out["path_length_estimate"] = "diverging";
  } else {
    out["path_length_estimate"] = v.path_length_estimate;
  }
  return out;
}

json to_json(const ClassificationReport& r) {
  json series = json::array();
  for (const auto& s : r.series) {
    json entry = to_json(s.verdict);
    entry["label"] = s.label;
    series.push_back(entry);
  }
  json evidence = {{"series", series}, {"accumulation", nullptr}};
  if (r.accumulation) evidence["accumulation"] = to_json(*r.accumulation);
  return {
      {"kind_verdict", to_string(r.kind_verdict)},
      {"parabolic_verdict", to_string(r.parabolic_verdict)},
      {"theorem_used", r.theorem_used},
      {"evidence", evidence},
      {"caveats", r.caveats},
  };
}

std::string report_text(const ClassificationReport& r) {
  std::ostringstream out;
  out << "kind:       " << to_string(r.kind_verdict) << "\n";
  out << "parabolic:  " << to_string(r.parabolic_verdict) << "\n";
  out << "theorem:    " << r.theorem_used << "\n";
  for (const auto& s : r.series) {
    out << "series:     " << s.label << ": " << to_string(s.verdict.status)
        << " (p = " << format_double(s.verdict.exponent_estimate)
        << ", partial sum = " << format_double(s.verdict.partial_sum)
        << ", terms = " << s.verdict.n_terms_used << ")\n";
  }
  if (r.accumulation) {
    const auto& a = *r.accumulation;
    out << "fan:        " << to_string(a.outcome) << " (gap = " << format_double(a.endpoint_gap)
        << ", geodesics = " << a.fan_size << ", path length = "
        << (a.diverging ? std::string("diverging") : format_double(a.path_length_estimate)) << ")\n";
  }
  for (const auto& c : r.caveats) out << "caveat:     " << c << "\n";
  return out.str();
}

}  // namespace flutes
