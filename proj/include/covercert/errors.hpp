#ifndef COVERCERT_ERRORS_HPP
#define COVERCERT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace covercert {

enum class ErrorCode {
  DuplicateVertexInSimplex,
  EmptySimplex,
  UnknownVertex,
  ParentMismatch,
  NotSimplicial,
  Disconnected,
  UncoveredSimplex,
  DisconnectedElement,
  EmptyElement,
  DuplicateElement,
  StarConditionNotReached,
  RelatorNotKilled,
  UnknownCorpusName,
  ParseError,
  ValidationError,
  InternalCheckFailure,
};

inline const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::DuplicateVertexInSimplex: return "DuplicateVertexInSimplex";
    case ErrorCode::EmptySimplex: return "EmptySimplex";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::ParentMismatch: return "ParentMismatch";
    case ErrorCode::NotSimplicial: return "NotSimplicial";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::UncoveredSimplex: return "UncoveredSimplex";
    case ErrorCode::DisconnectedElement: return "DisconnectedElement";
    case ErrorCode::EmptyElement: return "EmptyElement";
    case ErrorCode::DuplicateElement: return "DuplicateElement";
    case ErrorCode::StarConditionNotReached: return "StarConditionNotReached";
    case ErrorCode::RelatorNotKilled: return "RelatorNotKilled";
    case ErrorCode::UnknownCorpusName: return "UnknownCorpusName";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ValidationError: return "ValidationError";
    case ErrorCode::InternalCheckFailure: return "InternalCheckFailure";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace covercert

#endif
