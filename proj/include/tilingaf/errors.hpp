#pragma once

#include <stdexcept>
#include <string>

namespace tilingaf {

// Error taxonomy mirrored by the CLI exit codes.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed or inconsistent input documents / flags.  Exit code 2.
struct InputError : Error {
  explicit InputError(const std::string& msg) : Error(msg) {}
};

// A requested verification failed (the witness is in the message).  Exit code 3.
struct VerificationError : Error {
  explicit VerificationError(const std::string& msg) : Error(msg) {}
};

// Precision budget or search-depth budget exhausted.  Exit code 4.
struct ResourceError : Error {
  explicit ResourceError(const std::string& msg) : Error(msg) {}
};

}  // namespace tilingaf
