#pragma once

// Report emission. Floats are written with 17 significant digits; non-finite
// values become the strings "inf", "-inf" and "nan".

#include <string>

#include "json.hpp"

#include "flutes/classifier.hpp"

namespace flutes {

std::string format_double(double x);

// Pretty-printed JSON with the float convention above.
std::string dump_json(const nlohmann::json& j, int indent = 2);

nlohmann::json to_json(const SeriesVerdict& v);
nlohmann::json to_json(const AccumulationVerdict& v);
nlohmann::json to_json(const ClassificationReport& r);

std::string report_text(const ClassificationReport& r);

}  // namespace flutes
