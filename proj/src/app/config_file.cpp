#include "kbill/app/config_file.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <stdexcept>

#include "kbill/error.hpp"

namespace kbill::app {

namespace {

constexpr std::array kKnownKeys = {"mode",      "b",          "x0",        "y0",       "mu",
                                   "hI",        "hE",         "omega",     "root_tol", "fd_step",
                                   "angmom_tol", "graze_tol", "max_iter", "internal_reflection"};

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

[[noreturn]] void invalid(const std::string& msg) { throw Error(ErrorKind::invalid_configuration, msg); }

double to_double(const std::string& key, const std::string& text) {
  double v = 0.0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc{} || ptr != end) invalid("key '" + key + "': not a number: '" + text + "'");
  return v;
}

bool to_bool(const std::string& key, const std::string& text) {
  if (text == "true" || text == "1" || text == "on") return true;
  if (text == "false" || text == "0" || text == "off") return false;
  invalid("key '" + key + "': expected true/false, got '" + text + "'");
}

}  // namespace

bool is_known_key(const std::string& key) {
  for (const char* k : kKnownKeys)
    if (key == k) return true;
  return false;
}

Settings parse_settings(std::istream& in, const std::string& origin) {
  Settings out;
  std::string line;
  for (int lineno = 1; std::getline(in, line); ++lineno) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    const std::string where = origin + ":" + std::to_string(lineno);
    if (eq == std::string::npos) invalid(where + ": expected 'key = value'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (!is_known_key(key)) invalid(where + ": unknown key '" + key + "'");
    if (value.empty()) invalid(where + ": key '" + key + "' has no value");
    out[key] = value;
  }
  return out;
}

Settings read_settings(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file '" + path.string() + "'");
  return parse_settings(in, path.string());
}

BilliardConfig build_config(const Settings& settings) {
  BilliardConfig cfg;
  for (const auto& [key, value] : settings) {
    if (!is_known_key(key)) invalid("unknown key '" + key + "'");
    if (key == "mode") {
      if (value == "reflective")
        cfg.mode = Mode::reflective;
      else if (value == "refractive")
        cfg.mode = Mode::refractive;
      else
        invalid("key 'mode': expected reflective or refractive, got '" + value + "'");
    } else if (key == "internal_reflection") {
      cfg.internal_reflection = to_bool(key, value);
    } else if (key == "max_iter") {
      cfg.tol.max_iter = static_cast<int>(to_double(key, value));
    } else {
      const double v = to_double(key, value);
      if (key == "b") cfg.b = v;
      else if (key == "x0") cfg.x0 = v;
      else if (key == "y0") cfg.y0 = v;
      else if (key == "mu") cfg.mu = v;
      else if (key == "hI") cfg.h_inner = v;
      else if (key == "hE") cfg.h_outer = v;
      else if (key == "omega") cfg.omega = v;
      else if (key == "root_tol") cfg.tol.root_tol = v;
      else if (key == "fd_step") cfg.tol.fd_step = v;
      else if (key == "angmom_tol") cfg.tol.angmom_tol = v;
      else if (key == "graze_tol") cfg.tol.graze_tol = v;
    }
  }
  if (cfg.mode == Mode::refractive && !settings.contains("hE"))
    invalid("missing key 'hE' (required in refractive mode)");
  validate(cfg);
  return cfg;
}

BilliardConfig read_config(const std::filesystem::path& path) { return build_config(read_settings(path)); }

}  // namespace kbill::app
