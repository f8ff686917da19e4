#include "sctree/error.hpp"

namespace sctree {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::FaceNotInComplex: return "FaceNotInComplex";
    case ErrorCode::NotAGoodLeaf: return "NotAGoodLeaf";
    case ErrorCode::SizeLimitExceeded: return "SizeLimitExceeded";
    case ErrorCode::VertexNotPresent: return "VertexNotPresent";
    case ErrorCode::NoEdges: return "NoEdges";
    case ErrorCode::NotSquarefree: return "NotSquarefree";
    case ErrorCode::NotAPolarizedGenerator: return "NotAPolarizedGenerator";
    case ErrorCode::VariableNotPresent: return "VariableNotPresent";
    case ErrorCode::KVectorLengthMismatch: return "KVectorLengthMismatch";
    case ErrorCode::InconsistentState: return "InconsistentState";
    case ErrorCode::StringTooShort: return "StringTooShort";
    case ErrorCode::NotTerminated: return "NotTerminated";
    case ErrorCode::NotAShelling: return "NotAShelling";
    case ErrorCode::NotAPermutation: return "NotAPermutation";
    case ErrorCode::NotATree: return "NotATree";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UnknownSuite: return "UnknownSuite";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Overflow: return "Overflow";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

void fail(ErrorCode code, const std::string& message) { throw Error(code, message); }

}  // namespace sctree
