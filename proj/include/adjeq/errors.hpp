#pragma once

#include <stdexcept>
#include <string>

namespace adjeq {

// Error taxonomy. Everything user-facing derives from std::invalid_argument or
// std::runtime_error so callers can catch at whichever granularity they like.

class UnsupportedSystem : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class InvalidRoot : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class InvalidPair : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotAnA3Triple : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class IndexOutOfRange : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// System, ring or dimension of two operands disagree.
class Mismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class VerificationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace adjeq
