#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "gyro/gyrogroup.hpp"

namespace gyro {

// Embedded gyrogroups g8, g15 and g16, each stored as table-file text,
// parsed and fully validated on first use.
const Gyrogroup& builtin(std::string_view name);

std::vector<std::string> builtin_names();

// The embedded table-file source (useful for parser tests and as format
// documentation).
std::string_view builtin_source(std::string_view name);

}  // namespace gyro
