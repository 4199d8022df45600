#pragma once

#include <string>
#include <vector>

#include "sweep/config.hpp"

namespace lmgdtc {

struct CommandReport {
  std::vector<std::string> outputs;
  std::vector<std::string> warnings;
  std::string summary;
};

/// Resolves `params` for `command`, writes the command's output file into
/// the configured output directory and returns a human-readable summary.
CommandReport run_command(sweep::Command command, const sweep::ParamSet& params, bool resume);

/// File name written by a command inside the output directory.
std::string output_filename(sweep::Command command, const sweep::RunConfig& cfg);

}  // namespace lmgdtc
