#pragma once

// JSON parameter override files. Recognised keys: theta12, theta23, theta13,
// delta_cp (degrees), dm2_21, dm2_31, dm2_32 (eV^2) and an optional
// "ordering" ("normal" or "custom"). Absent keys keep their defaults.

#include <filesystem>
#include <string>
#include <string_view>

#include "nuent/errors.hpp"
#include "nuent/oscillation.hpp"

namespace nuent {

/// Throws ConfigError for malformed JSON, unknown keys or invalid values.
OscillationParams params_from_json(std::string_view text, OscillationParams base = {});

/// Throws IoError if the file cannot be read, ConfigError as above.
OscillationParams load_params(const std::filesystem::path& path, OscillationParams base = {});

std::string params_to_json(const OscillationParams& params);

}  // namespace nuent
