#pragma once

#include <ostream>

namespace tensegrity {

/// Runs the command-line tool. Returns the process exit code: 0 success,
/// 1 semantic negative (not equivalent, claim failed, system unsatisfied),
/// 2 input or precondition error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace tensegrity
