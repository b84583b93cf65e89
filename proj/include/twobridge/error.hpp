// SPDX-License-Identifier: MIT
//
// Exception hierarchy shared by every module.  Callers that need to map a
// failure onto a process exit status (the CLI) dispatch on the concrete type.

#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace twobridge {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An input violates a documented precondition or data invariant.  The
// invariant name is kept separately so front ends can report it verbatim.
class DomainError : public Error {
 public:
  DomainError(std::string invariant, const std::string& detail)
      : Error(invariant + ": " + detail), invariant_(std::move(invariant)) {}

  const std::string& invariant() const noexcept { return invariant_; }

 private:
  std::string invariant_;
};

// A 64-bit intermediate result would have wrapped around.
class OverflowError : public Error {
 public:
  using Error::Error;
};

// A state that the catalog guarantees unreachable was reached anyway.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace twobridge
