#pragma once

#include <ostream>

#include "mpt/cli/config.hpp"
#include "mpt/cli/table.hpp"

namespace mpt::cli {

enum ExitCode : int { kExitOk = 0, kExitVerifyFailed = 1, kExitUsage = 2, kExitNumerical = 3 };

struct CommandResult {
  Table table;
  int exit_code = kExitOk;
};

CommandResult cmd_spectrum(const RunConfig& cfg);
CommandResult cmd_matelem(const RunConfig& cfg);
CommandResult cmd_verify(const RunConfig& cfg);
CommandResult cmd_vibron(const RunConfig& cfg);
CommandResult cmd_params(const RunConfig& cfg);

/// Well description for the "well" field of JSON output.
nlohmann::ordered_json describe_well(const PotentialSpec& spec);

/// Parse argv, run one subcommand, write its table to --out or `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace mpt::cli
