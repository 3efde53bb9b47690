#pragma once

#include <stdexcept>
#include <string>

namespace fcg {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Group parameters or generating-set choice are inconsistent.
class InvalidSpec : public Error {
 public:
  using Error::Error;
};

/// Text could not be parsed as an element, word or canonical word.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// An element is not a member of the group it is used with.
class NotMember : public Error {
 public:
  using Error::Error;
};

/// The group is larger than the configured element cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// Materializing reduced expressions (or a commutation class) hit its word cap.
class WordCapExceeded : public Error {
 public:
  using Error::Error;
};

/// A decider was asked about a group it does not characterize.
class Unsupported : public Error {
 public:
  using Error::Error;
};

/// An exact integer computation produced a non-integral intermediate.
class InexactDivision : public Error {
 public:
  using Error::Error;
};

}  // namespace fcg
