#include "hgpoly/error.hpp"

namespace hgpoly {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::DuplicateVertexLabel: return "DuplicateVertexLabel";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::AntichainViolation: return "AntichainViolation";
    case ErrorCode::UnknownVertexLabel: return "UnknownVertexLabel";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::UnknownEdge: return "UnknownEdge";
    case ErrorCode::EmptyEdge: return "EmptyEdge";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::DegreeExceedsN: return "DegreeExceedsN";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::LimitExceeded: return "LimitExceeded";
    case ErrorCode::TooFewVertices: return "TooFewVertices";
    case ErrorCode::NoEdges: return "NoEdges";
    case ErrorCode::SingleSpanningEdge: return "SingleSpanningEdge";
    case ErrorCode::NonIntegerCoefficient: return "NonIntegerCoefficient";
    case ErrorCode::NegativeTopCoefficient: return "NegativeTopCoefficient";
    case ErrorCode::InconsistentDeck: return "InconsistentDeck";
    case ErrorCode::InternalMismatch: return "InternalMismatch";
    case ErrorCode::PathsDisagree: return "PathsDisagree";
  }
  return "UnknownError";
}

}  // namespace hgpoly
