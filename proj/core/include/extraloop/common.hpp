// Shared error types and configuration for the extraloop library.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace extraloop {

// Malformed input or a violated operation precondition (bad table file,
// table that is not a loop, non-extra loop passed where one is required).
// The CLI maps this to exit code 2.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A mathematical assertion failed: something that must hold for every
// valid input did not hold.  The CLI maps this to exit code 1.
struct CheckError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An enumeration outgrew its configured cap.  The CLI maps this to exit
// code 3.
struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Default cap for group enumerations: 1<<20 elements, overridable through
// the EXTRALOOP_CAP environment variable.  Operations that enumerate take
// an explicit cap argument defaulting to this.
std::uint64_t enumeration_cap();

}  // namespace extraloop
