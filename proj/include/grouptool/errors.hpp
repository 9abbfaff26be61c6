#pragma once

#include <stdexcept>
#include <string>

namespace grouptool {

enum class ErrorCode {
  NotAssociative,
  NoIdentity,
  MissingInverse,
  NotLatinSquare,
  InvalidPermutation,
  CapExceeded,
  NotNormal,
  SyntaxError,
  RepeatedPointInCycle,
  IoError,
  ParseError,
  UnknownName,
  InvalidParams,
  NotAnMElement,
  OrderMismatch,
  NotAPGroup,
  NotASemidirectDecomposition,
  UnknownSuite,
  InternalInconsistency,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

  // Everything except an internal inconsistency traces back to the caller's
  // input or parameters, cap overruns from infeasible requests included.
  bool is_input_error() const noexcept {
    return code_ != ErrorCode::InternalInconsistency;
  }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace grouptool
