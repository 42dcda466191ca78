#pragma once

#include <stdexcept>
#include <string>

namespace umrow {

// Failure categories shared by every module. The CLI maps these onto its
// exit codes, so the set is part of the external contract.
enum class ErrorKind {
  DescriptorMismatch,   // operands live over different carriers
  Unsupported,          // operation not available for this ring / monoid
  Precondition,         // caller violated a documented precondition
  DeskScaleLimit,       // input exceeds the exact-enumeration limits
  PositivityRequired,   // monoid / cone is not pointed
  NotInteriorDual,      // section functional not strictly positive on the cone
  Containment,          // polytope not contained in the section polytope
  DegenerateDecomposition,
  UndefinedLeadingTerm,
  InvalidToken,
  SizeMismatch,
  Parse,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

inline void require(bool cond, ErrorKind kind, const std::string& what) {
  if (!cond) fail(kind, what);
}

}  // namespace umrow
