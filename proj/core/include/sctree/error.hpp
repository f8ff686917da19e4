#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sctree {

enum class ErrorCode {
  FaceNotInComplex,
  NotAGoodLeaf,
  SizeLimitExceeded,
  VertexNotPresent,
  NoEdges,
  NotSquarefree,
  NotAPolarizedGenerator,
  VariableNotPresent,
  KVectorLengthMismatch,
  InconsistentState,
  StringTooShort,
  NotTerminated,
  NotAShelling,
  NotAPermutation,
  NotATree,
  ParseError,
  UnknownSuite,
  InvalidArgument,
  Overflow,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& message);

}  // namespace sctree
