#include "largeset/bigint.hpp"

#include <cmath>
#include <limits>

#include "largeset/errors.hpp"

namespace largeset {

Int binomial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Int r = 1;
  for (long long i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;  // exact: r is C(n-k+i, i) at this point
  }
  return r;
}

Int int_pow(const Int& base, unsigned long exp) {
  Int r = 1, b = base;
  for (; exp; exp >>= 1) {
    if (exp & 1) r *= b;
    if (exp > 1) b *= b;
  }
  return r;
}

Int int_lcm(const Int& a, const Int& b) {
  if (a == 0 || b == 0) return 0;
  return abs(a / gcd(a, b) * b);
}

Int floor_div(const Int& p, const Int& q) {
  if (q == 0) fail(ErrorKind::InvalidParams, "floor_div by zero");
  Int quo = p / q, rem = p % q;
  if (rem != 0 && ((rem < 0) != (q < 0))) --quo;
  return quo;
}

Int ceil_div(const Int& p, const Int& q) { return -floor_div(-p, q); }

Int ceil_rat(const Rat& x) {
  return ceil_div(numerator(x), denominator(x));
}

double log_int(const Int& x) {
  if (x <= 0) fail(ErrorKind::InvalidParams, "log_int of non-positive value");
  const unsigned bits = msb(x);  // index of highest set bit
  if (bits <= 62) return std::log(static_cast<double>(static_cast<std::uint64_t>(x)));
  const unsigned shift = bits - 62;
  const auto top = static_cast<std::uint64_t>(x >> shift);
  return std::log(static_cast<double>(top)) + shift * 0.6931471805599453094;
}

double log_rat(const Rat& x) {
  if (x <= 0) fail(ErrorKind::InvalidParams, "log_rat of non-positive value");
  return log_int(numerator(x)) - log_int(denominator(x));
}

double to_double(const Rat& x) {
  double d = static_cast<double>(x);
  if (std::isfinite(d)) return d;
  return x < 0 ? -std::numeric_limits<double>::infinity()
               : std::numeric_limits<double>::infinity();
}

double to_double(const Int& x) {
  double d = static_cast<double>(x);
  if (std::isfinite(d)) return d;
  return x < 0 ? -std::numeric_limits<double>::infinity()
               : std::numeric_limits<double>::infinity();
}

std::string rat_string(const Rat& x) {
  const Int num = numerator(x), den = denominator(x);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

bool fits_int64(const Int& x) {
  return x >= std::numeric_limits<std::int64_t>::min() &&
         x <= std::numeric_limits<std::int64_t>::max();
}

std::int64_t to_int64(const Int& x) {
  if (!fits_int64(x)) fail(ErrorKind::SizeCapExceeded, "value exceeds 64-bit range: " + x.str());
  return static_cast<std::int64_t>(x);
}

}  // namespace largeset
