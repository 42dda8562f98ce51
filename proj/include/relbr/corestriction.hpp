#pragma once

#include <vector>

#include "relbr/brauer.hpp"
#include "relbr/etale.hpp"

namespace relbr {

// Audit trail of a corestriction computation: quaternion symbols over Q whose
// classes sum to cor_{L/Q}(u, ell).  The symbol list depends on internal
// normalization choices; only the summed class is canonical.
struct SymbolChain {
    Poly modulus;  // monic modulus of L actually used
    Poly u_rep, ell_rep;
    std::vector<QuatSymbol> steps;
};

// Rosset-Tate style corestriction of the quaternion symbol (u, ell) from
// L = Q[t]/(F) down to Q, computed by a Euclidean chain of remainders.  Both
// elements must be units of L.
SymbolChain rosset_tate(const EtaleElement& u, const EtaleElement& ell);

BrauerClass2 cor_class(const SymbolChain& chain);
BrauerClass2 cor_class(const EtaleElement& u, const EtaleElement& ell);

// Projection-formula shortcut for a rational first slot.
BrauerClass2 cor_class(const Rat& a, const EtaleElement& ell);

}  // namespace relbr
