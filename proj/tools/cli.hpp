#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fusion::cli {

/// Parsed command line shared by every command.
struct RunConfig {
    int qmax4 = 40;
    std::string format = "json";  ///< json or text
    std::string output;           ///< empty: stdout
    int cutoff_depth = 24;        ///< oracle cutoff depth (FUSION_CUTOFF)
};

enum ExitCode : int { ok = 0, verification_failed = 1, usage_error = 2 };

/// Runs one command line (args excludes the program name). Results go to
/// `out` (or the --output file), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Cutoff depth from FUSION_CUTOFF, or `fallback` when unset.
int cutoff_depth_from_env(int fallback);

}  // namespace fusion::cli
