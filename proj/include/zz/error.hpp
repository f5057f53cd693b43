#pragma once

#include <stdexcept>
#include <string>

namespace zz {

// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed strip text, unknown shape letter, bad numeric field.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Shape sequence that does not describe a regular strip.
class InvalidStrip : public Error {
 public:
  using Error::Error;
};

// Strip with a negative interface order: no Kekule structure, no DIB poset.
class NotKekulean : public Error {
 public:
  using Error::Error;
};

// Brute-force or subset enumeration would exceed its configured size limit.
class GuardExceeded : public Error {
 public:
  using Error::Error;
};

// Argument violating an operation's precondition (bad labeling, bad map, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

}  // namespace zz
