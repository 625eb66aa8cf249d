#pragma once

#include <string>
#include <string_view>

#include "dbsim/config.hpp"

namespace dbsim {

/// Parses the flat key-value configuration format (`key = value`, one per
/// line, `#` comments). Missing keys take the documented defaults; unknown
/// keys, duplicate keys and malformed lines are hard errors, so a typo can
/// never silently change an experiment. Throws ParseError, UnknownKeyError
/// or ValidationError.
SimConfig parse_config(std::string_view text);

/// Reads and parses a configuration file. Throws IoError if unreadable.
SimConfig load_config(const std::string& path);

/// Canonical serialization: every key on its own line in the documented key
/// order. Doubles use shortest round-trip formatting, so
/// parse_config(serialize_config(c)) == c exactly.
std::string serialize_config(const SimConfig& config);

}  // namespace dbsim
