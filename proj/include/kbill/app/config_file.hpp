#pragma once

#include <filesystem>
#include <istream>
#include <map>
#include <string>

#include "kbill/config.hpp"

namespace kbill::app {

/// Flat key/value settings, e.g. from a config file merged with flags.
using Settings = std::map<std::string, std::string>;

/// Keys accepted in config files (and their flag spellings).
bool is_known_key(const std::string& key);

/// Parses `key = value` lines; blank lines and `#` comments are skipped.
/// Unknown keys and malformed lines throw Error(invalid_configuration) naming
/// `origin` and the line number.
Settings parse_settings(std::istream& in, const std::string& origin);

/// Reads a config file. Unreadable files throw std::runtime_error with the path.
Settings read_settings(const std::filesystem::path& path);

/// Builds and validates a configuration. Refractive mode requires hE.
BilliardConfig build_config(const Settings& settings);

/// read_settings + build_config.
BilliardConfig read_config(const std::filesystem::path& path);

}  // namespace kbill::app
