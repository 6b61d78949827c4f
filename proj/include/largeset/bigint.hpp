#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace largeset {

// Exact arithmetic backbone.  All combinatorial counts, lattice entries and
// rational witnesses live in these types; doubles only appear at the
// reporting/analytic boundary.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// C(n, k), exact; 0 outside the triangle.  The running product is divided
// stepwise so every intermediate stays integral.
Int binomial(long long n, long long k);

Int int_pow(const Int& base, unsigned long exp);
Int int_lcm(const Int& a, const Int& b);

// floor / ceil of p/q for integers (q != 0).
Int floor_div(const Int& p, const Int& q);
Int ceil_div(const Int& p, const Int& q);
Int ceil_rat(const Rat& x);

// Natural logarithm of a positive value, stable far beyond double range:
// the value is shifted down to < 2^62, converted, and the shift re-added
// as a multiple of ln 2.
double log_int(const Int& x);
double log_rat(const Rat& x);

// Lossy conversions for reports; saturate to +/-inf instead of throwing.
double to_double(const Rat& x);
double to_double(const Int& x);

// Canonical "p/q" with q > 0; integers render without the "/q" part.
std::string rat_string(const Rat& x);

bool fits_int64(const Int& x);
std::int64_t to_int64(const Int& x);  // throws on overflow

}  // namespace largeset
