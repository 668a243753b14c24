#pragma once

#include <stdexcept>
#include <string>

namespace qfs {

// Invalid argument or malformed input (CLI exit code 2).
class validation_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A requested object exceeds the configured Hilbert-space caps (CLI exit code 3).
class dimension_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace qfs
