#pragma once

#include <istream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "courant/charclass.hpp"
#include "courant/morphism.hpp"

namespace courant::cli {

// Input problem in a config file: location plus field path.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(const std::string& source, int line, const std::string& field, const std::string& what)
      : std::runtime_error(source + (line > 0 ? ":" + std::to_string(line) : std::string()) +
                           (field.empty() ? std::string() : ": " + field) + ": " + what) {}
};

struct Config {
  Quintuple quintuple;
  std::optional<FConnection> nabla_f;
  std::optional<IsoData> iso;
  std::optional<GValuedForm> hoist;  // J
  std::optional<FForm> omega;
  std::optional<AForm> cform;
  friend bool operator==(const Config&, const Config&) = default;
};

Config parse_config(std::istream& in, const std::string& source = "<input>");
Config parse_config_file(const std::string& path);

// One key of the canonical text. An entry with an empty key only opens its
// section (used for present-but-zero optional blocks).
struct ConfigEntry {
  std::string section;
  std::string key;
  std::string value;
  bool quoted = false;
};

// Nonzero components in canonical order; the mandatory sections come first.
std::vector<ConfigEntry> config_entries(const Config& c);

// Canonical text; parse_config(print_config(c)) == c.
std::string print_config(const Config& c);

// Bigraded key of an A-form component, e.g. "ggf.1.2.1".
std::string aform_key(const AForm& w, std::span<const int> tuple);

}  // namespace courant::cli
