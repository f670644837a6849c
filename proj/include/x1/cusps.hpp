#ifndef X1_CUSPS_HPP
#define X1_CUSPS_HPP

#include <vector>

namespace x1 {

/// Galois orbit C_c(N) of cusps of X_1(N).  n = e*f; width = N/gcd(c,N).
/// e equals the width except at the lone irregular cusp (N,c) = (4,2),
/// where the width is 2 but the order e is 1.
struct CuspOrbit {
  long N = 0;
  long c = 0;       // orbit label in [0, floor(N/2)]
  long n = 0;       // orbit size
  long e = 0;       // ramification ("order"); used in divisor weights
  long f = 0;       // residue degree, n / e
  long width = 0;   // N / gcd(c, N)
  bool irregular = false;
};

/// Orbit invariants for label c on X_1(N).  c out of [0, floor(N/2)] is a
/// usage error.
CuspOrbit orbit(long N, long c);

/// All orbits c = 0..floor(N/2), in order.
std::vector<CuspOrbit> all_orbits(long N);

}  // namespace x1

#endif
