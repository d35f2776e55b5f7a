#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace klie {

/// Batch front end. Subcommands: roots, orbit, spectrum, classify,
/// decompose, verify-sphere, selftest. Returns the process exit code:
/// 0 on success, 2 on parameter errors, 1 on selftest/verification failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace klie
