#ifndef X1_ARITH_HPP
#define X1_ARITH_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace x1 {

// Exact scalars. mpq_class is always canonical (lowest terms, positive
// denominator), which is exactly the invariant Rational needs.
using Int = mpz_class;
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// Thrown by nearest_int on an exact half-integer: no rounding convention
/// is defined for ties, so we refuse instead of guessing.
struct tie_error : std::domain_error {
  explicit tie_error(const std::string& what) : std::domain_error(what) {}
};

/// Fractional part {x} = x - floor(x), always in [0,1).
Rational frac(const Rational& x);

/// Second Bernoulli polynomial B2(x) = x^2 - x + 1/6 on [0,1).
/// Inputs outside [0,1) are a domain error; reduce with frac first.
Rational bernoulli2(const Rational& x);

/// Euler totient.
long euler_phi(long n);

/// Moebius function.
long moebius(long n);

/// Divisors of n in increasing order.
std::vector<long> divisors(long n);

/// Number of elements of exact order k in (Z/kZ)^2, i.e. the order-2 Jordan
/// totient sum_{d|k} mu(k/d) d^2.  m_2 = 3, m_3 = 8, 12 | m_k for k > 3.
long exact_order_count(long k);

/// Nearest integer; throws tie_error on exact half-integers.
Int nearest_int(const Rational& q);

bool is_prime(long n);

/// Deterministic "p/q" rendering ("p" when q = 1).
std::string to_string(const Rational& q);

}  // namespace x1

#endif
