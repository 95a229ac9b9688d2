#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hgpoly {

enum class ErrorCode {
  // input validation
  ParseError,
  IoError,
  DuplicateVertexLabel,
  DuplicateEdge,
  AntichainViolation,
  UnknownVertexLabel,
  UnknownVertex,
  UnknownEdge,
  EmptyEdge,
  IndexOutOfRange,
  DegreeExceedsN,
  LengthMismatch,
  // resource limits
  LimitExceeded,
  // reconstruction
  TooFewVertices,
  NoEdges,
  SingleSpanningEdge,
  NonIntegerCoefficient,
  NegativeTopCoefficient,
  InconsistentDeck,
  // internal consistency between two independent computations
  InternalMismatch,
  PathsDisagree,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace hgpoly
