#pragma once

#include <stdexcept>
#include <string>

namespace largeset {

// Error taxonomy shared by the library and the CLI.  Each kind maps to a
// process exit code: usage-level problems exit 2, resource caps and budgets
// exit 3, everything that is a *verified* negative answer exits 1.
enum class ErrorKind {
  InvalidParams,       // parameter ranges violated, inconsistent inputs
  Parse,               // malformed JSON / CSV / matrix input
  SizeCapExceeded,     // instance larger than the configured safety cap
  EnumerationCap,      // exact enumeration would exceed its budget
  BudgetExceeded,      // search node/time budget hit
  NonIntegralLambda,   // C(n-t,k-t) not divisible by l
  NotFullRank,         // lattice operation requires full row rank
  SingularCovariance,  // Gaussian surrogate undefined
  PreconditionViolated,  // analytic lemma hypothesis fails for these inputs
  NotApplicable,       // requested quantity undefined for the instance
  DimensionMismatch,   // vector/matrix shapes disagree
  Internal,            // should-not-happen
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string message)
      : std::runtime_error(std::move(message)), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

const char* error_kind_name(ErrorKind k);

// Exit code the CLI uses for a given failure class.
int exit_code_for(ErrorKind k);

[[noreturn]] void fail(ErrorKind kind, const std::string& message);

}  // namespace largeset
