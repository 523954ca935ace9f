#pragma once

namespace gaussq {

/// Command-line entry point. Exit codes: 0 success, 1 check or diff
/// failure, 2 usage error.
int run_cli(int argc, const char* const* argv);

} // namespace gaussq
