#pragma once

#include <optional>

#include "relbr/rational.hpp"

namespace relbr {

struct PrimeFieldElement {
    Int p;      // odd prime modulus
    Int value;  // canonical representative in [0, p)
};

// Legendre symbol (a|p) in {-1, 0, +1}; p must be an odd prime.
int legendre(const Int& a, const Int& p);

// Tonelli-Shanks square root mod an odd prime; returns the smaller of the two
// roots for determinism, std::nullopt for quadratic non-residues.
std::optional<PrimeFieldElement> sqrt_mod(const Int& a, const Int& p);

}  // namespace relbr
