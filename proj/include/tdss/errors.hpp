#pragma once

#include <stdexcept>
#include <string>

namespace tdss {

// Machine-checkable failure categories. The CLI maps these onto exit codes,
// tests match on the code instead of parsing messages.
enum class ErrorCode {
  InvalidLabel,
  SelfLoop,
  NoEdges,
  UnknownVertex,
  VertexSetMismatch,
  NotAugmentation,
  CyclicInput,
  InvalidTarget,
  TargetTooSmall,
  NotAPath,
  NotSimple,
  NotForward,
  MalformedEdge,
  InvalidShortcut,
  TooLarge,
  Infeasible,
  ParseError,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

const char* error_code_name(ErrorCode code);

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace tdss
