#include "x1/cusps.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

#include "x1/arith.hpp"

namespace x1 {

CuspOrbit orbit(long N, long c) {
  if (N < 2) throw std::invalid_argument("orbit: N must be >= 2");
  if (c < 0 || c > N / 2)
    throw std::invalid_argument("orbit: label c=" + std::to_string(c) +
                                " out of range [0," + std::to_string(N / 2) +
                                "] for N=" + std::to_string(N));
  CuspOrbit o;
  o.N = N;
  o.c = c;
  long d = std::gcd(c, N);  // gcd(0,N) = N handles c = 0
  o.width = N / d;
  if (c == 0) {
    o.n = (N == 2) ? 1 : euler_phi(N) / 2;
  } else if (2 * c == N) {
    o.n = (N == 2) ? 2 : euler_phi(N / 2);
  } else {
    o.n = euler_phi(d) * (N / d);
  }
  o.irregular = (N == 4 && c == 2);
  o.e = o.irregular ? 1 : o.width;
  if (o.n % o.e != 0)
    throw std::runtime_error("orbit: n not divisible by e at N=" +
                             std::to_string(N) + " c=" + std::to_string(c));
  o.f = o.n / o.e;
  return o;
}

std::vector<CuspOrbit> all_orbits(long N) {
  std::vector<CuspOrbit> out;
  out.reserve(N / 2 + 1);
  for (long c = 0; c <= N / 2; ++c) out.push_back(orbit(N, c));
  return out;
}

}  // namespace x1
