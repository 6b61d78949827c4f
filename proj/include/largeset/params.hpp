#pragma once

#include <vector>

#include "largeset/bigint.hpp"

namespace largeset {

// Parameters of a partition instance: k-subsets of [n] split into l classes,
// each of which should cover every t-subset equally often.
struct InstanceParams {
  int n = 0;
  int k = 0;
  int t = 0;
  long long l = 1;
};

// Throws InvalidParams unless 1 <= t < k <= n and l >= 1.
void validate(const InstanceParams& p);

// C(n-t, k-t) / l; throws NonIntegralLambda when l does not divide it.
Int lambda_of(const InstanceParams& p);

struct DivisibilityCheck {
  int s;
  Int divisor;   // left side of "divisor | dividend"
  Int dividend;
  bool pass;
};

struct DivisibilityReport {
  std::vector<DivisibilityCheck> checks;
  bool pass = true;
};

// Necessary conditions for a single design with index lambda:
//   C(k-s, t-s) | lambda * C(n-s, t-s)   for s = 0 .. t-1.
DivisibilityReport check_design_divisibility(int n, int k, int t, const Int& lambda);

// Necessary conditions for the full partition:
//   l * C(k-s, t-s) | C(n-t, k-t) * C(n-s, t-s)   for s = 0 .. t.
// (s = t is exactly integrality of lambda.)
DivisibilityReport check_largeset_divisibility(const InstanceParams& p);

// ceil((4*e*n/t)^t) evaluated in exact rational arithmetic with e replaced
// by its 50-decimal-digit upper rounding, so the ceiling never drops below
// the true value.
Int c3_design_bound(int n, int t);

}  // namespace largeset
