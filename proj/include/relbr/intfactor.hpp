#pragma once

#include <map>
#include <vector>

#include "relbr/rational.hpp"

namespace relbr {

// Deterministic Miller-Rabin below 3317044064679887385961981 (~3.3e24, so
// well past 2^80); probabilistic with 40 rounds above that.
bool is_probable_prime(const Int& n);

// Complete factorization of |n| as prime -> exponent; n must be nonzero.
// The sign is the caller's business.  Trial division up to 10^5, then
// Pollard rho (Brent cycle detection) on the remaining cofactors.
std::map<Int, unsigned> factor_integer(const Int& n);

// The unique squarefree integer s with q = s * r^2 for some rational r.
// q must be nonzero; the sign of q is preserved.
Int squarefree_part(const Rat& q);
inline Int squarefree_part(const Int& n) { return squarefree_part(Rat(n)); }

// Ascending primes dividing numerator or denominator.
std::vector<Int> prime_support(const Rat& q);

}  // namespace relbr
