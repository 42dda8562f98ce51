#include "relbr/torsor.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "relbr/intfactor.hpp"

namespace relbr {

HyperCurve::HyperCurve(Poly f) : f_(std::move(f)) {
    if (f_.degree() < 3 || f_.degree() > 6)
        throw error("BadDegree", "curve polynomial must have degree 3..6, got " +
                                      std::to_string(f_.degree()));
    if (!is_squarefree(f_))
        throw error("NotSquarefree", "curve polynomial must be squarefree");
}

const Gram& TorsorModel::conic() const {
    if (degree != 3) throw error("NoConic", "conic form only exists for cubic models");
    return power_forms[2];
}

namespace {

// power_grams(A, ell)[i][j][k] is the coefficient of theta^i in
// ell * theta^(j+k), so that ell * (sum theta^j x_j)^2 = sum_i Q^(i) theta^i.
std::vector<Gram> power_grams(const EtaleAlgebra& a, const EtaleElement& ell) {
    const int d = a.modulus().degree();
    std::vector<Poly> lam(2 * d - 1);
    EtaleElement cur = ell;
    EtaleElement theta(a, Poly::x());
    for (int s = 0; s < 2 * d - 1; ++s) {
        lam[s] = cur.rep();
        cur = cur * theta;
    }
    std::vector<Gram> out(d, Gram(d, std::vector<Rat>(d)));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k) out[i][j][k] = lam[j + k].coeff(i);
    return out;
}

std::string form_str(const Gram& m, const std::vector<std::string>& vars) {
    std::ostringstream os;
    bool first = true;
    const int d = static_cast<int>(m.size());
    for (int j = 0; j < d; ++j)
        for (int k = j; k < d; ++k) {
            Rat c = (j == k) ? m[j][k] : m[j][k] + m[k][j];
            if (c == 0) continue;
            if (first) {
                if (sign(c) < 0) os << "-";
            } else {
                os << (sign(c) < 0 ? " - " : " + ");
            }
            first = false;
            Rat ac = abs(c);
            std::string mono = (j == k) ? vars[j] + "^2" : vars[j] + "*" + vars[k];
            if (ac == 1)
                os << mono;
            else
                os << to_string(ac) << "*" << mono;
        }
    if (first) os << "0";
    return os.str();
}

void require_same_algebra(const HyperCurve& curve, const EtaleElement& ell) {
    if (ell.parent() != curve.algebra())
        throw error("ParentMismatch", "ell does not live in Q[t]/(curve polynomial)");
    if (!ell.is_unit()) throw error("NonUnit", "ell must be a unit");
}

}  // namespace

TorsorModel build_model_deg3(const HyperCurve& curve, const EtaleElement& ell) {
    if (curve.degree() != 3) throw error("NotCubic", "cubic model needs a degree 3 curve");
    if (curve.lead() != 1) throw error("NotMonic", "cubic model needs a monic curve polynomial");
    require_same_algebra(curve, ell);
    if (!is_square(ell.norm()))
        throw error("NormNotSquare",
                    "N(ell) = " + to_string(ell.norm()) + " is not a rational square");

    TorsorModel m;
    m.degree = 3;
    m.power_forms = power_grams(curve.algebra(), ell);
    std::vector<std::string> vars{"u", "v", "w"};
    m.equations.push_back(form_str(m.power_forms[1], vars) + " + t^2 = 0");
    m.equations.push_back(form_str(m.power_forms[2], vars) + " = 0");
    return m;
}

TorsorModel build_model_deg4(const HyperCurve& curve, const EtaleElement& ell, int n) {
    if (curve.degree() != 4) throw error("NotQuartic", "quartic model needs a degree 4 curve");
    if (n != 0 && n != 1) throw error("BadTwist", "twist exponent must be 0 or 1");
    require_same_algebra(curve, ell);
    Rat target = rat_pow(curve.lead(), n) * ell.norm();
    if (!is_square(target))
        throw error("NormConditionFailed", "lc(F)^" + std::to_string(n) +
                                               " * N(ell) = " + to_string(target) +
                                               " is not a rational square");

    TorsorModel m;
    m.degree = 4;
    m.n = n;
    m.power_forms = power_grams(curve.algebra(), ell);
    std::vector<std::string> vars{"t", "u", "v", "w"};
    m.equations.push_back(form_str(m.power_forms[2], vars) + " = 0");
    m.equations.push_back(form_str(m.power_forms[3], vars) + " = 0");
    return m;
}

BrauerClass2 conic_class(const Gram& m) {
    const int d = static_cast<int>(m.size());
    if (d != 3) throw error("BadGram", "conic Gram matrix must be 3x3");
    Gram a = m;
    for (int i = 0; i < 3; ++i) {
        if (static_cast<int>(a[i].size()) != 3) throw error("BadGram", "conic Gram matrix must be 3x3");
        for (int j = 0; j < 3; ++j)
            if (a[i][j] != a[j][i]) throw error("BadGram", "conic Gram matrix must be symmetric");
    }
    // congruence diagonalization
    for (int i = 0; i < 3; ++i) {
        if (a[i][i] == 0) {
            int pivot = -1;
            for (int j = i + 1; j < 3; ++j)
                if (a[j][j] != 0) { pivot = j; break; }
            if (pivot >= 0) {
                std::swap(a[i], a[pivot]);
                for (int r = 0; r < 3; ++r) std::swap(a[r][i], a[r][pivot]);
            } else {
                int off = -1;
                for (int j = i + 1; j < 3; ++j)
                    if (a[i][j] != 0) { off = j; break; }
                if (off < 0) throw error("DegenerateConic", "Gram matrix is singular");
                for (int c = 0; c < 3; ++c) a[i][c] = a[i][c] + a[off][c];
                for (int r = 0; r < 3; ++r) a[r][i] = a[r][i] + a[r][off];
            }
        }
        for (int j = i + 1; j < 3; ++j) {
            if (a[j][i] == 0) continue;
            Rat f = a[j][i] / a[i][i];
            for (int c = 0; c < 3; ++c) a[j][c] = a[j][c] - f * a[i][c];
            for (int r = 0; r < 3; ++r) a[r][j] = a[r][j] - f * a[r][i];
        }
    }
    if (a[0][0] == 0 || a[1][1] == 0 || a[2][2] == 0)
        throw error("DegenerateConic", "Gram matrix is singular");
    return class_of_symbol(-a[0][0] * a[1][1], -a[0][0] * a[2][2]);
}

DivisorItem DivisorItem::monic(Poly u, int mult) {
    if (mult == 0) throw error("BadDivisor", "zero multiplicity");
    if (u.degree() < 1) throw error("BadDivisor", "x-coordinate polynomial must be nonconstant");
    if (u.lc() != 1) throw error("BadDivisor", "x-coordinate polynomial must be monic");
    DivisorItem it;
    it.kind = Kind::MonicPoly;
    it.mult = mult;
    it.u = std::move(u);
    return it;
}

DivisorItem DivisorItem::weierstrass(Rat x0, int mult) {
    if (mult == 0) throw error("BadDivisor", "zero multiplicity");
    DivisorItem it;
    it.kind = Kind::WeierstrassX;
    it.mult = mult;
    it.x0 = std::move(x0);
    return it;
}

DivisorItem DivisorItem::infinity(int mult) {
    if (mult == 0) throw error("BadDivisor", "zero multiplicity");
    DivisorItem it;
    it.kind = Kind::Infinity;
    it.mult = mult;
    return it;
}

int DivisorSpec::degree(const HyperCurve& curve) const {
    int d = 0;
    for (const auto& it : items) switch (it.kind) {
            case DivisorItem::Kind::MonicPoly: d += it.mult * it.u.degree(); break;
            case DivisorItem::Kind::WeierstrassX: d += it.mult; break;
            case DivisorItem::Kind::Infinity: d += it.mult * (curve.even_degree() ? 2 : 1); break;
        }
    return d;
}

namespace {

// (x0 - theta) is a zero divisor when F(x0) = 0; the class of the point
// (x0, 0) is represented instead by (x0 - theta) + lc(F) G(theta) where
// F = lc(F) (x - x0) G.  Its component at the root x0 is F'(x0).
EtaleElement weierstrass_elem(const HyperCurve& curve, const Rat& x0) {
    if (curve.f().eval(x0) != 0)
        throw error("NotWeierstrassX", to_string(x0) + " is not a root of the curve polynomial");
    Poly lin = Poly({-x0, Rat(1)});
    Poly q = curve.f() / lin;  // q = lc(F) * G
    Poly rep = Poly({x0, Rat(-1)}) + q;
    EtaleElement e(curve.algebra(), rep);
    if (!e.is_unit()) throw error("NotSquarefree", "curve polynomial has a repeated root");
    return e;
}

}  // namespace

EtaleElement x_minus_theta(const HyperCurve& curve, const DivisorSpec& divisor) {
    EtaleAlgebra a = curve.algebra();
    EtaleElement acc(a, Poly(Rat(1)));
    for (const auto& it : divisor.items) {
        if (it.mult % 2 == 0) continue;  // even multiplicities drop modulo squares
        switch (it.kind) {
            case DivisorItem::Kind::Infinity:
                break;
            case DivisorItem::Kind::WeierstrassX:
                acc = acc * weierstrass_elem(curve, it.x0);
                break;
            case DivisorItem::Kind::MonicPoly: {
                Poly u = it.u;
                Poly g = poly_gcd(u, curve.f());
                if (g.degree() >= 1) {
                    // split off the Weierstrass x-coordinates hiding in u
                    for (const Rat& r : EtaleAlgebra(g).rational_roots()) {
                        Poly lin = Poly({-r, Rat(1)});
                        int k = 0;
                        while (u.degree() >= 1) {
                            auto [q, rem] = poly_divrem(u, lin);
                            if (!rem.is_zero()) break;
                            u = q;
                            ++k;
                        }
                        if (k % 2 == 1) acc = acc * weierstrass_elem(curve, r);
                    }
                    if (poly_gcd(u, curve.f()).degree() >= 1)
                        throw error("UnsupportedDivisor",
                                    "divisor meets a Weierstrass point with irrational "
                                    "x-coordinate");
                }
                if (u.degree() >= 1) acc = acc * elem_from_monic(a, u);
                break;
            }
        }
    }
    return acc;
}

bool on_curve(const HyperCurve& curve, const EllipticPoint& p) {
    if (p.at_infinity) return true;
    return p.y * p.y == curve.f().eval(p.x);
}

namespace {

void require_elliptic(const HyperCurve& curve) {
    if (curve.degree() != 3 || curve.lead() != 1)
        throw error("NotElliptic", "group law needs y^2 = monic cubic");
}

void require_on_curve(const HyperCurve& curve, const EllipticPoint& p) {
    if (!on_curve(curve, p))
        throw error("OffCurve", "point (" + to_string(p.x) + ", " + to_string(p.y) +
                                    ") does not satisfy y^2 = F(x)");
}

}  // namespace

EllipticPoint ec_neg(const HyperCurve& curve, const EllipticPoint& p) {
    require_elliptic(curve);
    require_on_curve(curve, p);
    if (p.at_infinity) return p;
    return EllipticPoint::affine(p.x, -p.y);
}

EllipticPoint ec_add(const HyperCurve& curve, const EllipticPoint& p, const EllipticPoint& q) {
    require_elliptic(curve);
    require_on_curve(curve, p);
    require_on_curve(curve, q);
    if (p.at_infinity) return q;
    if (q.at_infinity) return p;
    if (p.x == q.x && p.y == -q.y) return EllipticPoint::infinity();
    Rat lambda;
    if (p.x == q.x)
        lambda = curve.f().derivative().eval(p.x) / (2 * p.y);
    else
        lambda = (q.y - p.y) / (q.x - p.x);
    Rat a2 = curve.f().coeff(2);
    Rat x3 = lambda * lambda - a2 - p.x - q.x;
    Rat y3 = -(p.y + lambda * (x3 - p.x));
    return EllipticPoint::affine(x3, y3);
}

EllipticPoint ec_mul(const HyperCurve& curve, long n, const EllipticPoint& p) {
    require_elliptic(curve);
    require_on_curve(curve, p);
    EllipticPoint base = n < 0 ? ec_neg(curve, p) : p;
    unsigned long k = n < 0 ? static_cast<unsigned long>(-n) : static_cast<unsigned long>(n);
    EllipticPoint acc = EllipticPoint::infinity();
    while (k) {
        if (k & 1) acc = ec_add(curve, acc, base);
        base = ec_add(curve, base, base);
        k >>= 1;
    }
    return acc;
}

EtaleElement x_minus_theta(const HyperCurve& curve, const EllipticPoint& p) {
    require_on_curve(curve, p);
    EtaleAlgebra a = curve.algebra();
    if (p.at_infinity) return EtaleElement(a, Poly(Rat(1)));
    if (p.y == 0) return weierstrass_elem(curve, p.x);
    return EtaleElement(a, Poly({p.x, Rat(-1)}));
}

namespace {

long mod_pow(long b, long e, long q) {
    long r = 1 % q;
    b %= q;
    if (b < 0) b += q;
    while (e) {
        if (e & 1) r = r * b % q;
        b = b * b % q;
        e >>= 1;
    }
    return r;
}

long mod_inv(long a, long q) { return mod_pow(a, q - 2, q); }

long rat_mod(const Rat& r, long q) {
    Int num = rat_num(r) % q;
    Int den = rat_den(r) % q;
    long n = num.get_si();
    long d = den.get_si();
    if (n < 0) n += q;
    if (d == 0) throw error("PreconditionFailed", "denominator divisible by q");
    return n * mod_inv(d, q) % q;
}

}  // namespace

CoverReport cover_map_check(const HyperCurve& curve, const EtaleElement& ell, long q) {
    if (curve.degree() != 3 || curve.lead() != 1)
        throw error("PreconditionFailed", "cover check needs y^2 = monic cubic");
    require_same_algebra(curve, ell);
    if (q < 3 || q > 97 || !is_probable_prime(Int(q)))
        throw error("PreconditionFailed", "q must be an odd prime at most 97");

    CoverReport rep;
    rep.q = q;

    long f[4];
    for (int i = 0; i <= 3; ++i) f[i] = rat_mod(curve.f().coeff(i), q);
    auto eval_f = [&](long x) { return ((f[3] * x % q * x % q + f[2] * x % q + f[1]) % q * x % q + f[0]) % q; };

    int nroots = 0;
    for (long x = 0; x < q && nroots <= 3; ++x)
        if (eval_f(x) == 0) {
            if (nroots < 3) rep.roots[nroots] = x;
            ++nroots;
        }
    if (nroots != 3)
        throw error("PreconditionFailed", "curve polynomial is not split and squarefree mod q");
    const long* e = rep.roots;

    long lam[3];
    for (int i = 0; i < 3; ++i) {
        long v = 0;
        for (int d = ell.rep().degree(); d >= 0; --d)
            v = (v * e[i] + rat_mod(ell.rep().coeff(d), q)) % q;
        if (v == 0) throw error("PreconditionFailed", "ell is not a unit mod q");
        lam[i] = v;
    }
    long nrm = lam[0] * lam[1] % q * lam[2] % q;
    long a = -1;
    for (long z = 0; z < q; ++z)
        if (z * z % q == nrm) { a = z; break; }
    if (a < 0) throw error("PreconditionFailed", "N(ell) is not a square mod q");

    auto grams = power_grams(curve.algebra(), ell);
    long M[3][3][3];
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) M[i][j][k] = rat_mod(grams[i][j][k], q);
    auto form = [&](int i, long u, long v, long w) {
        long p[3] = {u, v, w};
        long s = 0;
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) s = (s + M[i][j][k] * p[j] % q * p[k]) % q;
        return s;
    };

    std::vector<long> fiber(static_cast<size_t>(q) * q, 0);
    bool well_defined = true;

    auto visit = [&](long u, long v, long w, long t) {
        long q1 = (form(1, u, v, w) + t * t) % q;
        if (q1 != 0) return;
        if (form(2, u, v, w) != 0) return;
        ++rep.total_v_points;
        if (t == 0) {
            ++rep.t_zero_points;
            return;
        }
        long it = mod_inv(t, q);
        long it2 = it * it % q;
        long x = form(0, u, v, w) * it2 % q;
        long nz = (u + e[0] * v % q + e[0] * e[0] % q * w) % q *
                      ((u + e[1] * v % q + e[1] * e[1] % q * w) % q) % q *
                      ((u + e[2] * v % q + e[2] * e[2] % q * w) % q) % q;
        long y = a * nz % q * it2 % q * it % q;
        if (y * y % q != eval_f(x)) {
            well_defined = false;
            return;
        }
        ++rep.mapped_points;
        ++fiber[static_cast<size_t>(x) * q + y];
    };

    for (long v = 0; v < q; ++v)
        for (long w = 0; w < q; ++w)
            for (long t = 0; t < q; ++t) visit(1, v, w, t);
    for (long w = 0; w < q; ++w)
        for (long t = 0; t < q; ++t) visit(0, 1, w, t);
    for (long t = 0; t < q; ++t) visit(0, 0, 1, t);
    visit(0, 0, 0, 1);

    rep.map_well_defined = well_defined;
    for (long c : fiber) rep.max_fiber = std::max(rep.max_fiber, c);
    rep.fibers_bounded = rep.max_fiber <= 4;

    // reverse direction: reconstruct the fiber over each affine curve point
    // from componentwise square roots of (x - e_i) / lam_i
    for (long x = 0; x < q; ++x) {
        long fx = eval_f(x);
        std::vector<long> ys;
        for (long y = 0; y < q; ++y)
            if (y * y % q == fx) ys.push_back(y);
        for (long y : ys) {
            ++rep.curve_points_checked;
            long z[3];
            bool have = true;
            for (int i = 0; i < 3; ++i) {
                long target = (x - e[i]) % q;
                if (target < 0) target += q;
                target = target * mod_inv(lam[i], q) % q;
                long r = -1;
                for (long s = 0; s < q; ++s)
                    if (s * s % q == target) { r = s; break; }
                if (r < 0) { have = false; break; }
                z[i] = r;
            }
            if (!have) continue;
            // fix signs so that a * z0 z1 z2 = y; at Weierstrass points some
            // z_i = 0 and any signs work
            long prod = a * z[0] % q * z[1] % q * z[2] % q;
            if (prod != 0 && prod != y) z[0] = q - z[0];
            prod = a * z[0] % q * z[1] % q * z[2] % q;
            if (prod != y && y != 0) continue;
            ++rep.curve_points_with_preimage;
            // interpolate u + v s + w s^2 through (e_i, z_i)
            long uvw[3] = {0, 0, 0};
            for (int i = 0; i < 3; ++i) {
                int j = (i + 1) % 3, k = (i + 2) % 3;
                long den = (e[i] - e[j] + q) % q * ((e[i] - e[k] + q) % q) % q;
                long scale = z[i] * mod_inv(den, q) % q;
                // (s - e_j)(s - e_k) = s^2 - (e_j + e_k) s + e_j e_k
                long c0 = e[j] * e[k] % q;
                long c1 = (2 * q - e[j] - e[k]) % q;
                uvw[0] = (uvw[0] + scale * c0) % q;
                uvw[1] = (uvw[1] + scale * c1) % q;
                uvw[2] = (uvw[2] + scale) % q;
            }
            long q1 = (form(1, uvw[0], uvw[1], uvw[2]) + 1) % q;
            long q2 = form(2, uvw[0], uvw[1], uvw[2]);
            long x_back = form(0, uvw[0], uvw[1], uvw[2]);
            if (q1 == 0 && q2 == 0 && x_back == x) ++rep.reconstructions_ok;
        }
    }

    rep.all_ok = rep.map_well_defined && rep.fibers_bounded &&
                 rep.curve_points_with_preimage == rep.reconstructions_ok &&
                 rep.curve_points_with_preimage > 0;
    return rep;
}

}  // namespace relbr
