#pragma once

#include "chiralq_app/config.hpp"

#include <iosfwd>
#include <string>

namespace chiralq::app {

inline constexpr int kExitOk = 0;
inline constexpr int kExitAssertion = 1;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitIo = 3;

/// Executes one run. CSV goes to `csv` and the human-readable summary to
/// `log`. Returns kExitOk or kExitAssertion; configuration and I/O problems
/// surface as ConfigError and IoError.
int run(RunKind kind, const RunConfig& config, unsigned threads, std::ostream& csv, std::ostream& log);

/// Full command: resolves the output destination (out_path, else
/// config.output, else stdout) and maps exceptions to exit codes.
int run_command(RunKind kind, const std::string& config_path, const std::string& out_path, unsigned threads);

} // namespace chiralq::app
