#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "config.hpp"

namespace darboux::cli {

enum ExitCode : int { kPass = 0, kFail = 1, kError = 2 };

const std::vector<std::string>& command_names();

/// Runs one subcommand; writes its files under config.out_dir and a one-line
/// summary to `log`. Library errors propagate as darboux::Error.
int run_command(const std::string& name, const RunConfig& config, std::ostream& log);

int cmd_jost(const RunConfig& config, std::ostream& log);
int cmd_transform(const RunConfig& config, std::ostream& log);
int cmd_identity(const RunConfig& config, std::ostream& log);
int cmd_binorm(const RunConfig& config, std::ostream& log);
int cmd_scan(const RunConfig& config, std::ostream& log);
int cmd_schwartz_check(const RunConfig& config, std::ostream& log);

}  // namespace darboux::cli
