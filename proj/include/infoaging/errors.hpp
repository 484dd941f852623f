#pragma once

#include <stdexcept>
#include <string>

namespace infoaging {

enum class ErrorCode {
  invalid_model,          // malformed or non-stationary AR model
  degenerate_model,       // numerically singular Yule-Walker system
  not_positive_definite,  // Cholesky pivot at or below tolerance
  dimension_mismatch,
  out_of_range,           // offset or lag beyond the autocovariance table
  numerical_consistency,  // e.g. conditional mutual information < -1e-10
  bad_config,             // CLI / run configuration errors
};

inline const char* to_string(ErrorCode c) {
  switch (c) {
    case ErrorCode::invalid_model: return "invalid-model";
    case ErrorCode::degenerate_model: return "degenerate-model";
    case ErrorCode::not_positive_definite: return "not-positive-definite";
    case ErrorCode::dimension_mismatch: return "dimension-mismatch";
    case ErrorCode::out_of_range: return "out-of-range";
    case ErrorCode::numerical_consistency: return "numerical-consistency";
    case ErrorCode::bad_config: return "bad-config";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace infoaging
