#include "nuent/params_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace nuent {

namespace {

using nlohmann::json;

double number_field(const json& j, const std::string& key) {
  if (!j.is_number()) throw ConfigError(key, "expected a number");
  return j.get<double>();
}

}  // namespace

OscillationParams params_from_json(std::string_view text, OscillationParams base) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError("params", std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ConfigError("params", "expected a JSON object");

  OscillationParams p = base;
  bool custom_values = false;
  for (const auto& [key, value] : doc.items()) {
    if (key == "theta12") p.theta12 = number_field(value, key);
    else if (key == "theta23") p.theta23 = number_field(value, key);
    else if (key == "theta13") p.theta13 = number_field(value, key);
    else if (key == "delta_cp") p.delta_cp = number_field(value, key);
    else if (key == "dm2_21") p.dm2_21 = number_field(value, key);
    else if (key == "dm2_31") p.dm2_31 = number_field(value, key);
    else if (key == "dm2_32") p.dm2_32 = number_field(value, key);
    else if (key == "ordering") {
      if (!value.is_string()) throw ConfigError(key, "expected \"normal\" or \"custom\"");
      const auto s = value.get<std::string>();
      if (s == "normal") p.ordering = MassOrdering::normal;
      else if (s == "custom") p.ordering = MassOrdering::custom;
      else throw ConfigError(key, "expected \"normal\" or \"custom\", got \"" + s + "\"");
      continue;
    } else {
      throw ConfigError(key, "unknown parameter");
    }
    custom_values = true;
  }
  if (custom_values && !doc.contains("ordering")) p.ordering = MassOrdering::custom;

  try {
    p.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError("params", e.what());
  }
  return p;
}

OscillationParams load_params(const std::filesystem::path& path, OscillationParams base) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read parameter file '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return params_from_json(buf.str(), base);
}

std::string params_to_json(const OscillationParams& p) {
  json j = {{"theta12", p.theta12}, {"theta23", p.theta23}, {"theta13", p.theta13},
            {"delta_cp", p.delta_cp}, {"dm2_21", p.dm2_21}, {"dm2_31", p.dm2_31},
            {"dm2_32", p.dm2_32},
            {"ordering", p.ordering == MassOrdering::normal ? "normal" : "custom"}};
  return j.dump(2);
}

}  // namespace nuent
