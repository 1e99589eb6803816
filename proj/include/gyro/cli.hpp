#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gyro {

// Entry point for the gyrocayley command-line tool. `args` excludes the
// program name. Exit codes: 0 success, 1 verification failure or theorem
// violation found, 2 usage or parse errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gyro
