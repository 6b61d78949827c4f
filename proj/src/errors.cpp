#include "largeset/errors.hpp"

namespace largeset {

const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::InvalidParams: return "invalid-params";
    case ErrorKind::Parse: return "parse-error";
    case ErrorKind::SizeCapExceeded: return "size-cap-exceeded";
    case ErrorKind::EnumerationCap: return "enumeration-cap-exceeded";
    case ErrorKind::BudgetExceeded: return "budget-exceeded";
    case ErrorKind::NonIntegralLambda: return "non-integral-lambda";
    case ErrorKind::NotFullRank: return "not-full-rank";
    case ErrorKind::SingularCovariance: return "singular-covariance";
    case ErrorKind::PreconditionViolated: return "precondition-violated";
    case ErrorKind::NotApplicable: return "not-applicable";
    case ErrorKind::DimensionMismatch: return "dimension-mismatch";
    case ErrorKind::Internal: return "internal-error";
  }
  return "unknown";
}

int exit_code_for(ErrorKind k) {
  switch (k) {
    case ErrorKind::InvalidParams:
    case ErrorKind::Parse:
    case ErrorKind::DimensionMismatch:
    case ErrorKind::Internal:
      return 2;
    case ErrorKind::SizeCapExceeded:
    case ErrorKind::EnumerationCap:
    case ErrorKind::BudgetExceeded:
      return 3;
    default:
      return 1;
  }
}

void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace largeset
