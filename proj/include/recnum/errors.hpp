#pragma once

#include <stdexcept>
#include <string>

namespace recnum {

// Base of the library's exception hierarchy. The CLI maps each subclass to an
// exit code (see cli.hpp).
class error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Invalid parameters: base < 2, bad block width, conflicting engine options.
class config_error : public error {
public:
  using error::error;
};

// Structurally invalid input data (digit >= base, unparsable function text).
class malformed_input : public error {
public:
  using error::error;
};

// A function evaluated outside its domain.
class domain_error : public error {
public:
  using error::error;
};

// No finiteness argument is available for the requested function and no cap
// was given.
class unsupported_function : public error {
public:
  using error::error;
};

// A result failed its own re-verification. Always a defect.
class invariant_violation : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

}  // namespace recnum
