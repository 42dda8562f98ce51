#pragma once

#include <initializer_list>
#include <utility>
#include <vector>

#include "relbr/rational.hpp"

namespace relbr {

// Dense univariate polynomial over Q.  Coefficients are stored lowest degree
// first and the representation is normalized: no trailing zero coefficients.
// The zero polynomial has an empty coefficient vector and degree() == -1.
class Poly {
public:
    Poly() = default;
    explicit Poly(const Rat& c) { coeffs_.push_back(c); normalize(); }
    explicit Poly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }
    Poly(std::initializer_list<Rat> coeffs) : coeffs_(coeffs) { normalize(); }

    static Poly x();                       // the monomial t
    static Poly from_strings(const std::vector<std::string>& coeffs);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    const Rat& lc() const;                 // leading coefficient; error on zero poly
    Rat coeff(int i) const;                // 0 outside range
    const std::vector<Rat>& coeffs() const { return coeffs_; }

    Rat eval(const Rat& x) const;
    Poly derivative() const;
    Poly monic() const;                    // error on zero poly

    bool operator==(const Poly& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Rat& c) const;

    std::string str(const std::string& var = "x") const;

private:
    void normalize();
    std::vector<Rat> coeffs_;
};

// Quotient and remainder with deg r < deg b; exact over Q.  b must be nonzero.
std::pair<Poly, Poly> poly_divrem(const Poly& a, const Poly& b);
inline Poly operator%(const Poly& a, const Poly& b) { return poly_divrem(a, b).second; }
inline Poly operator/(const Poly& a, const Poly& b) { return poly_divrem(a, b).first; }

// Monic gcd (1 for coprime, 0 only if both inputs are 0).
Poly poly_gcd(const Poly& a, const Poly& b);

bool is_squarefree(const Poly& a);

// Product of the irreducible factors of a that occur with odd multiplicity,
// made monic.  a squarefree gives back a.monic(); a nonzero.
Poly odd_radical(const Poly& a);

// Resultant normalized so that res(a, b) = lc(a)^deg(b) * prod b(alpha_i) over
// the roots alpha_i of a.  Computed by a fraction-free pseudo-remainder chain
// over Z with content stripping; exact for all rational inputs.
Rat resultant(const Poly& a, const Poly& b);

}  // namespace relbr
