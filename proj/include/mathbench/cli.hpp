#pragma once

#include <filesystem>
#include <iosfwd>

namespace mathbench {

enum ExitCode : int { kExitOk = 0, kExitConfigError = 1, kExitRuntimeError = 2 };

// Special-point directory used when --worstcases is not given.
std::filesystem::path default_worstcase_dir();

// `mathbench -t <int|auto> [--config path] [--outputs dir] [--functions csv]
//  [--worstcases dir]`
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace mathbench
