#pragma once

#include <stdexcept>
#include <string>

namespace twistkit {

/// Two series with different truncation orders were combined.
class TruncationMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A series (or its constant term) has no inverse / square root.
class NotInvertible : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Malformed external input (JSON documents, CLI values).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace twistkit
