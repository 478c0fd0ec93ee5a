#pragma once

#include <stdexcept>
#include <string>

namespace mocktheta {

struct ZeroLeadingTerm : std::domain_error {
  ZeroLeadingTerm() : std::domain_error("series has no nonzero term below its order") {}
};

struct InsufficientOrder : std::domain_error {
  using std::domain_error::domain_error;
};

struct NonTerminating : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ParamDomain : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Evaluation failures; the suite records these as ERROR rather than FAIL.
struct EvalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NearPole : EvalError {
  long index;
  NearPole(const std::string& where, long j)
      : EvalError(where + ": denominator below pole guard at j=" + std::to_string(j)), index(j) {}
};

struct BudgetExceeded : EvalError {
  using EvalError::EvalError;
};

struct UnknownCheck : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ConfigError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace mocktheta
