#pragma once

#include <stdexcept>
#include <string>

namespace sdcodes {

enum class ErrorKind {
  InvalidArgument,
  Parse,
  Precondition,
  NoSolution,
  Singular,
  Limit,
  Verification,
};

// Every failure raised by the library carries a kind so the C API can map it
// onto a status code without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace sdcodes
