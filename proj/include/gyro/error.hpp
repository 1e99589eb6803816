#pragma once

#include <stdexcept>
#include <string>

namespace gyro {

// Domain errors: invalid inputs, broken preconditions, refused workloads.
struct GyroError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Text-input errors with a 1-based source location.
struct ParseError : GyroError {
    ParseError(const std::string& msg, int line_no, int col_no)
        : GyroError("line " + std::to_string(line_no) + ", col " + std::to_string(col_no) +
                    ": " + msg),
          line(line_no),
          col(col_no) {}

    int line;
    int col;
};

}  // namespace gyro
