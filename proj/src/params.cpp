#include "largeset/params.hpp"

#include "largeset/errors.hpp"

namespace largeset {

void validate(const InstanceParams& p) {
  if (!(1 <= p.t && p.t < p.k && p.k <= p.n))
    fail(ErrorKind::InvalidParams, "require 1 <= t < k <= n");
  if (p.l < 1) fail(ErrorKind::InvalidParams, "require l >= 1");
}

Int lambda_of(const InstanceParams& p) {
  validate(p);
  const Int total = binomial(p.n - p.t, p.k - p.t);
  if (total % p.l != 0)
    fail(ErrorKind::NonIntegralLambda,
         "l = " + std::to_string(p.l) + " does not divide C(n-t, k-t) = " + total.str());
  return total / p.l;
}

DivisibilityReport check_design_divisibility(int n, int k, int t, const Int& lambda) {
  if (!(1 <= t && t < k && k <= n))
    fail(ErrorKind::InvalidParams, "require 1 <= t < k <= n");
  if (lambda < 1) fail(ErrorKind::InvalidParams, "require lambda >= 1");
  DivisibilityReport rep;
  for (int s = 0; s < t; ++s) {
    DivisibilityCheck c;
    c.s = s;
    c.divisor = binomial(k - s, t - s);
    c.dividend = lambda * binomial(n - s, t - s);
    c.pass = (c.dividend % c.divisor == 0);
    rep.pass = rep.pass && c.pass;
    rep.checks.push_back(std::move(c));
  }
  return rep;
}

DivisibilityReport check_largeset_divisibility(const InstanceParams& p) {
  validate(p);
  const Int total = binomial(p.n - p.t, p.k - p.t);
  DivisibilityReport rep;
  for (int s = 0; s <= p.t; ++s) {
    DivisibilityCheck c;
    c.s = s;
    c.divisor = Int(p.l) * binomial(p.k - s, p.t - s);
    c.dividend = total * binomial(p.n - s, p.t - s);
    c.pass = (c.dividend % c.divisor == 0);
    rep.pass = rep.pass && c.pass;
    rep.checks.push_back(std::move(c));
  }
  return rep;
}

Int c3_design_bound(int n, int t) {
  if (!(1 <= t && t <= n)) fail(ErrorKind::InvalidParams, "require 1 <= t <= n");
  // e rounded *up* at the 50th decimal digit keeps the bound an upper bound.
  static const Rat e_up =
      Rat(Int("271828182845904523536028747135266249775724709369996"),
          int_pow(Int(10), 50));
  Rat base = 4 * e_up * n / t;
  Rat power = 1;
  for (int i = 0; i < t; ++i) power *= base;
  return ceil_rat(power);
}

}  // namespace largeset
