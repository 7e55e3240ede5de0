#pragma once

#include "session.hpp"

#include <filesystem>
#include <ostream>
#include <string>

namespace singulocus::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kAborted = 2, kUndetermined = 3 };

struct RunOptions {
  bool json = false;
  /// Empty disables the cache.
  std::filesystem::path cache_dir;
};

/// Runs one command line such as `singlocus J 2 --m-variant` against the
/// session, printing the result to `out` and diagnostics to `err`.
int run_command(const Session& session, const std::string& command, const RunOptions& options,
                std::ostream& out, std::ostream& err);

}  // namespace singulocus::cli
