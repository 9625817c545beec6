#pragma once

#include <stdexcept>
#include <string>

namespace rollefn {

enum class ErrorKind {
  invalid_input,        // precondition violation on caller-supplied data
  order_out_of_range,   // derivative order beyond the registered stack
  singular_denominator, // Rolle ODE denominator below the singularity guard
  no_root,              // bootstrap sign scan found no bracket
  degenerate_problem,   // remainder model is xi-independent, no branch to pick
  all_branches_invalid, // every candidate trajectory violated the domain
  ambiguous_branch,     // more than one candidate trajectory survived
  fit_failure,          // rank-deficient least-squares system
  slope_estimation,     // no usable method for spline clamp slopes
  capability,           // request exceeds what the implementation supports
  domain,               // evaluation outside the defined domain
  io,                   // file output failure
  config,               // experiment configuration rejected
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

/// Pipeline failure carrying the name of the stage that raised it.
class StageError : public Error {
public:
  StageError(std::string stage, ErrorKind kind, const std::string& message)
      : Error(kind, "stage '" + stage + "': " + message), stage_(std::move(stage)) {}

  const std::string& stage() const noexcept { return stage_; }

private:
  std::string stage_;
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_input: return "invalid-input";
    case ErrorKind::order_out_of_range: return "order-out-of-range";
    case ErrorKind::singular_denominator: return "singular-denominator";
    case ErrorKind::no_root: return "no-root";
    case ErrorKind::degenerate_problem: return "degenerate-problem";
    case ErrorKind::all_branches_invalid: return "all-branches-invalid";
    case ErrorKind::ambiguous_branch: return "ambiguous-branch";
    case ErrorKind::fit_failure: return "fit-failure";
    case ErrorKind::slope_estimation: return "slope-estimation";
    case ErrorKind::capability: return "capability";
    case ErrorKind::domain: return "domain";
    case ErrorKind::io: return "io";
    case ErrorKind::config: return "config";
  }
  return "unknown";
}

}  // namespace rollefn
