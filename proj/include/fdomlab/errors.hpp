#pragma once

#include <stdexcept>
#include <string>

namespace fdom {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Caller passed something outside an operation's domain.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// A configured search or size cap was hit; the answer is unknown, not negative.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

// Input graph is one of the eight exceptional graphs with fdom < 5/2.
class BadFamilyError : public Error {
 public:
  BadFamilyError(int id, const std::string& name)
      : Error("bad-family:" + name), id_(id), name_(name) {}
  int id() const { return id_; }
  const std::string& name() const { return name_; }

 private:
  int id_;
  std::string name_;
};

// An internal consistency check failed; indicates a bug, not bad input.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace fdom
