#pragma once

#include <string>
#include <vector>

#include "json_io.hpp"

namespace glidekit::cli {

enum ExitCode : int { kExitOk = 0, kExitDomain = 1, kExitUsage = 2 };

struct CommandResult {
  int exit_code = kExitOk;
  std::string command;
  Json inputs = Json::object();
  Json result;
  bool exact = true;
  double elapsed_ms = 0;
  /// Text destined for stdout and stderr.
  std::string out;
  std::string err;
};

/// Parses args (without the program name), dispatches the subcommand and
/// renders its output. Never throws.
CommandResult run(const std::vector<std::string>& args);

}  // namespace glidekit::cli
