#include "relbr/etale.hpp"

#include <algorithm>

#include "relbr/intfactor.hpp"

namespace relbr {

EtaleAlgebra::EtaleAlgebra(Poly modulus) : modulus_(std::move(modulus)) {
    if (modulus_.degree() < 1)
        throw error("BadModulus", "etale algebra needs a modulus of degree >= 1");
    if (!is_squarefree(modulus_))
        throw error("NotSquarefree", "modulus " + modulus_.str() + " is not squarefree");
    lead_ = modulus_.lc();
    monic_ = modulus_.monic();
}

std::vector<Rat> EtaleAlgebra::rational_roots() const {
    // Rational root sieve on the primitive integer model: candidates p/q with
    // p | constant term, q | leading coefficient.
    Poly f = monic_;
    std::vector<Rat> roots;
    while (f.coeff(0) == 0) {
        roots.push_back(Rat(0));
        f = f / Poly::x();
        if (f.is_constant()) break;
    }
    if (!f.is_constant()) {
        Int den(1);
        for (const auto& c : f.coeffs())
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), rat_den(c).get_mpz_t());
        std::vector<Int> zc;
        for (const auto& c : f.coeffs()) zc.push_back(rat_num(c) * (den / rat_den(c)));
        auto divisors = [](const Int& n) {
            std::vector<Int> ds{Int(1)};
            for (const auto& [p, e] : factor_integer(n)) {
                size_t base = ds.size();
                Int pk(1);
                for (unsigned i = 1; i <= e; ++i) {
                    pk *= p;
                    for (size_t j = 0; j < base; ++j) ds.push_back(ds[j] * pk);
                }
            }
            return ds;
        };
        for (const Int& p : divisors(zc.front()))
            for (const Int& q : divisors(zc.back()))
                for (int s : {1, -1}) {
                    Rat cand = make_rat(s * p, q);
                    if (f.eval(cand) == 0 &&
                        std::find(roots.begin(), roots.end(), cand) == roots.end())
                        roots.push_back(cand);
                }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

EtaleElement::EtaleElement(EtaleAlgebra algebra, const Poly& rep)
    : algebra_(std::move(algebra)), rep_(rep % algebra_.modulus()) {}

void EtaleElement::check_same_parent(const EtaleElement& o) const {
    if (algebra_ != o.algebra_)
        throw error("ParentMismatch", "elements of different etale algebras");
}

bool EtaleElement::is_unit() const {
    if (rep_.is_zero()) return false;
    return poly_gcd(rep_, algebra_.modulus()).degree() == 0;
}

EtaleElement EtaleElement::operator*(const EtaleElement& o) const {
    check_same_parent(o);
    return EtaleElement(algebra_, rep_ * o.rep_);
}

EtaleElement EtaleElement::operator+(const EtaleElement& o) const {
    check_same_parent(o);
    return EtaleElement(algebra_, rep_ + o.rep_);
}

EtaleElement EtaleElement::operator-(const EtaleElement& o) const {
    check_same_parent(o);
    return EtaleElement(algebra_, rep_ - o.rep_);
}

bool EtaleElement::operator==(const EtaleElement& o) const {
    return algebra_ == o.algebra_ && rep_ == o.rep_;
}

EtaleElement EtaleElement::inv() const {
    const Poly& f = algebra_.monic_modulus();
    // extended Euclid: s*rep + t*f = gcd
    Poly r0 = f, r1 = rep_, s0, s1{Rat(1)};
    while (!r1.is_zero()) {
        auto [q, r2] = poly_divrem(r0, r1);
        Poly s2 = s0 - q * s1;
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r0.degree() != 0)
        throw error("ZeroDivisor", "zero divisor with gcd " + r0.str() + " in " +
                                       algebra_.modulus().str());
    return EtaleElement(algebra_, s0 * (1 / r0.lc()));
}

Rat EtaleElement::norm() const {
    if (rep_.is_zero()) return Rat(0);
    return resultant(algebra_.modulus(), rep_) / rat_pow(algebra_.lead(), rep_.degree());
}

EtaleElement interpolate_from_values(const EtaleAlgebra& algebra,
                                     const std::vector<Rat>& roots,
                                     const std::vector<Rat>& values) {
    auto actual = algebra.rational_roots();
    if (static_cast<int>(actual.size()) != algebra.degree())
        throw error("NotSplit", "modulus is not split over Q: " + algebra.modulus().str());
    if (roots.size() != values.size() || roots.size() != actual.size())
        throw error("BadInterpolation", "need one value per root of the modulus");
    auto sorted = roots;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != actual)
        throw error("BadInterpolation", "supplied roots do not match the modulus roots");
    Poly acc;
    for (size_t i = 0; i < roots.size(); ++i) {
        Poly basis{Rat(1)};
        Rat denom(1);
        for (size_t j = 0; j < roots.size(); ++j) {
            if (j == i) continue;
            basis = basis * Poly{-roots[j], Rat(1)};
            denom *= roots[i] - roots[j];
        }
        acc = acc + basis * (values[i] / denom);
    }
    return EtaleElement(algebra, acc);
}

EtaleElement elem_from_monic(const EtaleAlgebra& algebra, const Poly& u) {
    if (u.is_zero() || u.lc() != 1)
        throw error("NotMonic", "divisor polynomial must be monic");
    Poly g = poly_gcd(u, algebra.modulus());
    if (g.degree() != 0)
        throw error("ZeroDivisor",
                    "divisor polynomial shares factor " + g.str() + " with the curve");
    Rat s = u.degree() % 2 == 0 ? Rat(1) : Rat(-1);
    return EtaleElement(algebra, u * s);
}

}  // namespace relbr
