#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "courant/report.hpp"
#include "courant_cli/config.hpp"

namespace courant::cli {

// Bad invocation: unknown command, missing config block, bad flag value.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Flags {
  std::uint64_t seed = 0;
  std::optional<int> degree;
  std::optional<std::string> kind;
};

// A named list of key/value pairs produced by a command (forms, quintuples).
struct Output {
  std::string name;
  std::vector<std::pair<std::string, std::string>> entries;
  friend bool operator==(const Output&, const Output&) = default;
};

struct CommandResult {
  Report report;
  std::vector<Output> outputs;
};

const std::vector<std::string>& command_names();

CommandResult run_command(const std::string& command, const Config& config, const Flags& flags);

// 0 when every check passes, 1 otherwise.
int exit_code(const Report& report);

enum class Format { text, json };

std::string emit_report(const CommandResult& result, Format format);

}  // namespace courant::cli
