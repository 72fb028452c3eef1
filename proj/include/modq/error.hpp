#ifndef MODQ_ERROR_HPP
#define MODQ_ERROR_HPP

#include <stdexcept>
#include <string>

namespace modq {

enum class ErrorCode {
  InvalidArgument,
  IllegalMove,
  EmptyHistory,
  ParseError,
  BudgetExceeded,
  SearchFailed,
  NotFound,
};

inline const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "invalid_argument";
    case ErrorCode::IllegalMove: return "illegal_move";
    case ErrorCode::EmptyHistory: return "empty_history";
    case ErrorCode::ParseError: return "parse_error";
    case ErrorCode::BudgetExceeded: return "budget_exceeded";
    case ErrorCode::SearchFailed: return "search_failed";
    case ErrorCode::NotFound: return "not_found";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace modq

#endif
