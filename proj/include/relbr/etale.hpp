#pragma once

#include <vector>

#include "relbr/poly.hpp"

namespace relbr {

// The quotient algebra L = Q[t]/(F) for a squarefree F of degree >= 1.
// F need not be monic or irreducible; L is a product of number fields.
class EtaleAlgebra {
public:
    explicit EtaleAlgebra(Poly modulus);

    int degree() const { return modulus_.degree(); }
    const Poly& modulus() const { return modulus_; }
    const Poly& monic_modulus() const { return monic_; }
    const Rat& lead() const { return lead_; }

    bool operator==(const EtaleAlgebra& o) const { return monic_ == o.monic_; }
    bool operator!=(const EtaleAlgebra& o) const { return !(*this == o); }

    // Ascending rational roots of the modulus; size == degree iff L is split.
    std::vector<Rat> rational_roots() const;

private:
    Poly modulus_;
    Poly monic_;
    Rat lead_;
};

// An element of L, stored as its unique representative of degree < deg F.
class EtaleElement {
public:
    EtaleElement(EtaleAlgebra algebra, const Poly& rep);

    const EtaleAlgebra& parent() const { return algebra_; }
    const Poly& rep() const { return rep_; }
    bool is_zero() const { return rep_.is_zero(); }
    bool is_unit() const;

    EtaleElement operator*(const EtaleElement& o) const;
    EtaleElement operator+(const EtaleElement& o) const;
    EtaleElement operator-(const EtaleElement& o) const;
    bool operator==(const EtaleElement& o) const;

    // Multiplicative inverse; throws ZeroDivisor (carrying the offending gcd)
    // when the representative shares a factor with the modulus.
    EtaleElement inv() const;

    // N(a) = det of multiplication by a on L; equals prod rep(theta_i) over
    // the roots of F, i.e. res(F, rep) / lc(F)^deg(rep).
    Rat norm() const;

    // Value at a rational root of the modulus (component of a in the split part).
    Rat value_at(const Rat& root) const { return rep_.eval(root); }

private:
    void check_same_parent(const EtaleElement& o) const;
    EtaleAlgebra algebra_;
    Poly rep_;
};

// The element with prescribed values at the rational roots of a split algebra
// (Lagrange interpolation).  values[i] corresponds to roots[i]; the roots must
// be exactly the distinct rational roots of the modulus.
EtaleElement interpolate_from_values(const EtaleAlgebra& algebra,
                                     const std::vector<Rat>& roots,
                                     const std::vector<Rat>& values);

// (-1)^deg(u) * u(theta) for monic u coprime to the modulus: the image of the
// effective divisor with x-coordinate polynomial u under the x - theta map.
EtaleElement elem_from_monic(const EtaleAlgebra& algebra, const Poly& u);

}  // namespace relbr
