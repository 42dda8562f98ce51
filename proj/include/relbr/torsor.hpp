#pragma once

#include <vector>

#include "relbr/brauer.hpp"
#include "relbr/etale.hpp"

namespace relbr {

// The hyperelliptic curve y^2 = F(x) for squarefree F of degree 3..6.
class HyperCurve {
public:
    explicit HyperCurve(Poly f);

    const Poly& f() const { return f_; }
    int degree() const { return f_.degree(); }
    bool even_degree() const { return degree() % 2 == 0; }
    int genus() const { return (degree() - 1) / 2; }
    const Rat& lead() const { return f_.lc(); }
    EtaleAlgebra algebra() const { return EtaleAlgebra(f_); }

private:
    Poly f_;
};

using Gram = std::vector<std::vector<Rat>>;  // symmetric, Q(x) = x^T M x

// Quadric model of the 2-covering attached to ell.  power_forms[i] is the
// Gram matrix of the coefficient of theta^i in ell * (sum theta^j x_j)^2,
// a quadratic form in deg(F) variables.
struct TorsorModel {
    int degree = 0;          // 3 or 4
    int n = 0;               // twist exponent, quartic case only
    std::vector<Gram> power_forms;
    std::vector<std::string> equations;  // textual model equations

    const Gram& conic() const;  // Q^(2) of the cubic model
};

// Cubic case: V is Q^(1)(u,v,w) + t^2 = Q^(2)(u,v,w) = 0; requires monic
// cubic F and N(ell) a rational square (NormNotSquare otherwise).
TorsorModel build_model_deg3(const HyperCurve& curve, const EtaleElement& ell);

// Quartic case: V is Q^(2) = Q^(3) = 0 in variables (t,u,v,w); requires
// lc(F)^n * N(ell) a rational square for the given n in {0,1}
// (NormConditionFailed otherwise).
TorsorModel build_model_deg4(const HyperCurve& curve, const EtaleElement& ell, int n);

// Class of the plane conic with (rank-3) Gram matrix M: diagonalize by
// congruence to diag(d1,d2,d3) and return class_of_symbol(-d1 d2, -d1 d3).
BrauerClass2 conic_class(const Gram& m);

// A divisor on the curve described by x-coordinate data.
struct DivisorItem {
    enum class Kind { MonicPoly, WeierstrassX, Infinity };
    Kind kind;
    int mult = 1;
    Poly u;   // MonicPoly: monic x-coordinate polynomial
    Rat x0;   // WeierstrassX: rational root of F

    static DivisorItem monic(Poly u, int mult = 1);
    static DivisorItem weierstrass(Rat x0, int mult = 1);
    static DivisorItem infinity(int mult = 1);
};

struct DivisorSpec {
    std::vector<DivisorItem> items;
    // infinity counts 1 on odd-degree curves and 2 (the pulled-back fiber) on
    // even-degree curves
    int degree(const HyperCurve& curve) const;
};

// Image of the divisor under the x - theta descent map, as an element of
// L = Q[t]/(F) well defined modulo squares.  Weierstrass points (x0, 0) use
// the corrected element (x0 - theta) + lc(F) * G(theta) with
// F = lc(F) (x - x0) G; items of even multiplicity drop out.  Rational
// Weierstrass roots hiding inside a MonicPoly item are split off
// automatically; irrational ones raise UnsupportedDivisor.
EtaleElement x_minus_theta(const HyperCurve& curve, const DivisorSpec& divisor);

// Affine or infinite point on y^2 = F(x), F monic cubic.
struct EllipticPoint {
    bool at_infinity = false;
    Rat x, y;

    static EllipticPoint infinity() { return {true, Rat(0), Rat(0)}; }
    static EllipticPoint affine(Rat x, Rat y) { return {false, std::move(x), std::move(y)}; }
    bool operator==(const EllipticPoint& o) const {
        return at_infinity == o.at_infinity && (at_infinity || (x == o.x && y == o.y));
    }
};

bool on_curve(const HyperCurve& curve, const EllipticPoint& p);
EllipticPoint ec_neg(const HyperCurve& curve, const EllipticPoint& p);
EllipticPoint ec_add(const HyperCurve& curve, const EllipticPoint& p, const EllipticPoint& q);
EllipticPoint ec_mul(const HyperCurve& curve, long n, const EllipticPoint& p);

// x - theta image of a single rational point (Weierstrass points routed to the
// corrected element, infinity to 1).
EtaleElement x_minus_theta(const HyperCurve& curve, const EllipticPoint& p);

// Exhaustive verification over F_q that the t != 0 locus of the cubic model
// maps onto the curve via x = Q^(0)/t^2, y = sqrt(N ell) * N(u+theta v+theta^2 w)/t^3
// with fibers of size at most 4, plus reconstruction of model points above
// sampled curve points.  Requires odd prime q <= 97, F split and squarefree
// mod q, ell a unit mod q with square norm mod q.
struct CoverReport {
    long q = 0;
    long roots[3] = {0, 0, 0};
    long total_v_points = 0;   // projective points on the model
    long t_zero_points = 0;
    long mapped_points = 0;    // t != 0 points that landed on the curve
    long max_fiber = 0;
    long curve_points_checked = 0;   // affine curve points sampled
    long curve_points_with_preimage = 0;
    long reconstructions_ok = 0;     // preimages that satisfy the model equations
    bool map_well_defined = false;   // every t != 0 point maps onto the curve
    bool fibers_bounded = false;     // all fibers have size <= 4
    bool all_ok = false;
};

CoverReport cover_map_check(const HyperCurve& curve, const EtaleElement& ell, long q);

}  // namespace relbr
