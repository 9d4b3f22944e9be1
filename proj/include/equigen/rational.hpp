// Exact rational scalars (GMP-backed) and the error taxonomy used across the
// library: schema_error for malformed input files, precondition_error for
// violated operation preconditions, verification_error for failed exactness
// cross-checks.
#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace equigen {

using Rational = mpq_class;
using Integer = mpz_class;

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct schema_error : error {
    using error::error;
};
struct precondition_error : error {
    using error::error;
};
struct verification_error : error {
    using error::error;
};

// Accepts "n", "-n", "n/d" with arbitrary precision.
Rational parse_rational(const std::string& s);

std::string rational_str(const Rational& q);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

// Checked narrowing; throws precondition_error when q is not an integer or
// does not fit.
long rational_to_long(const Rational& q);
Integer rational_to_integer(const Rational& q);

long gcd_long(long a, long b);
long lcm_long(long a, long b);

// mpq_class(num, den) does not canonicalize; this does.
inline Rational frac(long num, long den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

}  // namespace equigen
