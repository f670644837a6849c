#include "x1/arith.hpp"

namespace x1 {

Rational frac(const Rational& x) {
  Int fl;
  mpz_fdiv_q(fl.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
  Rational r = x - Rational(fl);
  return r;
}

Rational bernoulli2(const Rational& x) {
  if (x < 0 || x >= 1)
    throw std::domain_error("bernoulli2: argument " + to_string(x) +
                            " outside [0,1); reduce with frac first");
  static const Rational sixth(1, 6);
  return x * x - x + sixth;
}

long euler_phi(long n) {
  if (n < 1) throw std::domain_error("euler_phi: n must be >= 1");
  long result = n;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

long moebius(long n) {
  if (n < 1) throw std::domain_error("moebius: n must be >= 1");
  long result = 1;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      result = -result;
    }
  }
  if (n > 1) result = -result;
  return result;
}

std::vector<long> divisors(long n) {
  std::vector<long> small, large;
  for (long d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d != n / d) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

long exact_order_count(long k) {
  if (k < 2) throw std::domain_error("exact_order_count: k must be >= 2");
  long m = 0;
  for (long d : divisors(k)) m += moebius(k / d) * d * d;
  return m;
}

Int nearest_int(const Rational& q) {
  Int fl;
  mpz_fdiv_q(fl.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  Rational rem = q - Rational(fl);
  static const Rational half(1, 2);
  if (rem == half)
    throw tie_error("nearest_int: " + to_string(q) + " is an exact half-integer");
  return rem < half ? fl : Int(fl + 1);
}

bool is_prime(long n) {
  if (n < 2) return false;
  for (long p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace x1
