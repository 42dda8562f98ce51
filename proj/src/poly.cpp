#include "relbr/poly.hpp"

#include <algorithm>
#include <sstream>

namespace relbr {

void Poly::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Poly Poly::x() { return Poly{Rat(0), Rat(1)}; }

Poly Poly::from_strings(const std::vector<std::string>& coeffs) {
    std::vector<Rat> v;
    v.reserve(coeffs.size());
    for (const auto& s : coeffs) v.push_back(rat_from_string(s));
    return Poly(std::move(v));
}

const Rat& Poly::lc() const {
    if (is_zero()) throw error("ZeroPolynomial", "leading coefficient of zero polynomial");
    return coeffs_.back();
}

Rat Poly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return Rat(0);
    return coeffs_[static_cast<size_t>(i)];
}

Rat Poly::eval(const Rat& x) const {
    Rat acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Poly Poly::derivative() const {
    if (coeffs_.size() <= 1) return Poly();
    std::vector<Rat> d(coeffs_.size() - 1);
    for (size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * Rat(static_cast<long>(i));
    return Poly(std::move(d));
}

Poly Poly::monic() const {
    if (is_zero()) throw error("ZeroPolynomial", "monic of zero polynomial");
    return *this * (1 / lc());
}

Poly Poly::operator-() const {
    std::vector<Rat> v(coeffs_);
    for (auto& c : v) c = -c;
    return Poly(std::move(v));
}

Poly Poly::operator+(const Poly& o) const {
    std::vector<Rat> v(std::max(coeffs_.size(), o.coeffs_.size()), Rat(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) v[i] += coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) v[i] += o.coeffs_[i];
    return Poly(std::move(v));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly();
    std::vector<Rat> v(coeffs_.size() + o.coeffs_.size() - 1, Rat(0));
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < o.coeffs_.size(); ++j) v[i + j] += coeffs_[i] * o.coeffs_[j];
    return Poly(std::move(v));
}

Poly Poly::operator*(const Rat& c) const {
    std::vector<Rat> v(coeffs_);
    for (auto& e : v) e *= c;
    return Poly(std::move(v));
}

std::string Poly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        Rat c = coeff(i);
        if (c == 0) continue;
        if (!first) os << (sign(c) < 0 ? " - " : " + ");
        else if (sign(c) < 0) os << "-";
        Rat a = abs(c);
        if (i == 0 || a != 1) os << to_string(a) << (i > 0 ? "*" : "");
        if (i > 0) os << var;
        if (i > 1) os << "^" << i;
        first = false;
    }
    return os.str();
}

std::pair<Poly, Poly> poly_divrem(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw error("ZeroPolynomial", "division by zero polynomial");
    if (a.degree() < b.degree()) return {Poly(), a};
    std::vector<Rat> r(a.coeffs());
    std::vector<Rat> q(static_cast<size_t>(a.degree() - b.degree()) + 1, Rat(0));
    const Rat inv_lc = 1 / b.lc();
    for (int k = a.degree() - b.degree(); k >= 0; --k) {
        Rat c = r[static_cast<size_t>(k + b.degree())] * inv_lc;
        q[static_cast<size_t>(k)] = c;
        if (c == 0) continue;
        for (int j = 0; j <= b.degree(); ++j)
            r[static_cast<size_t>(k + j)] -= c * b.coeff(j);
    }
    return {Poly(std::move(q)), Poly(std::move(r))};
}

Poly poly_gcd(const Poly& a, const Poly& b) {
    Poly r0 = a, r1 = b;
    while (!r1.is_zero()) {
        Poly r2 = r0 % r1;
        r0 = std::move(r1);
        r1 = std::move(r2);
        if (!r1.is_zero()) r1 = r1.monic();
    }
    if (r0.is_zero()) return r0;
    return r0.monic();
}

bool is_squarefree(const Poly& a) {
    if (a.is_zero()) return false;
    if (a.is_constant()) return true;
    return poly_gcd(a, a.derivative()).degree() == 0;
}

Poly odd_radical(const Poly& a) {
    if (a.is_zero()) throw error("ZeroPolynomial", "odd_radical of zero polynomial");
    if (a.is_constant()) return Poly(Rat(1));
    Poly rad = a.monic() / poly_gcd(a, a.derivative());  // product of distinct factors
    Poly rest = a.monic() / rad;                         // multiplicities reduced by one
    Poly sub = odd_radical(rest);                        // factors of even multiplicity in a
    return rad / sub;
}

namespace {

// Integer polynomial utilities for the resultant chain.
using ZVec = std::vector<Int>;

int zdeg(const ZVec& v) { return static_cast<int>(v.size()) - 1; }

void znormalize(ZVec& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

Int zcontent(const ZVec& v) {
    Int g(0);
    for (const auto& c : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;  // nonnegative
}

// Returns lc(b)^k * (a mod b) over Z together with the number k of
// lc(b)-scalings performed.
std::pair<ZVec, long> pseudo_rem(ZVec a, const ZVec& b) {
    const Int& c = b.back();
    int db = zdeg(b);
    long k = 0;
    while (zdeg(a) >= db) {
        Int top = a.back();
        for (auto& e : a) e *= c;
        ++k;
        int shift = zdeg(a) - db;
        for (int j = 0; j <= db; ++j) a[static_cast<size_t>(shift + j)] -= top * b[static_cast<size_t>(j)];
        znormalize(a);
        if (a.empty()) break;
    }
    return {a, k};
}

// Clears denominators: p = cont * prim with cont > 0 rational, prim primitive over Z.
std::pair<Rat, ZVec> to_primitive(const Poly& p) {
    Int den(1);
    for (const auto& c : p.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), rat_den(c).get_mpz_t());
    ZVec v;
    v.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) v.push_back(rat_num(c) * (den / rat_den(c)));
    Int g = zcontent(v);
    for (auto& e : v) e /= g;
    return {make_rat(g, den), v};
}

}  // namespace

Rat resultant(const Poly& a0, const Poly& b0) {
    if (a0.is_zero() || b0.is_zero())
        throw error("ZeroPolynomial", "resultant of zero polynomial");
    if (a0.is_constant()) return rat_pow(Rat(a0.lc()), b0.degree());
    if (b0.is_constant()) return rat_pow(Rat(b0.lc()), a0.degree());

    auto [ca, A] = to_primitive(a0);
    auto [cb, B] = to_primitive(b0);
    // res(ca*A, cb*B) = ca^deg(B) * cb^deg(A) * res(A, B)
    Rat acc = rat_pow(ca, zdeg(B)) * rat_pow(cb, zdeg(A));
    int swaps = 0;
    if (zdeg(A) < zdeg(B)) {
        std::swap(A, B);
        swaps = zdeg(A) * zdeg(B);
    }
    while (true) {
        if (zdeg(B) == 0) {
            acc *= rat_pow(Rat(B[0]), zdeg(A));
            break;
        }
        int da = zdeg(A), db = zdeg(B);
        auto [R, k] = pseudo_rem(A, B);
        if (R.empty()) return Rat(0);  // common factor
        // res(A, B) = (-1)^(da*db) * lc(B)^(da - deg R - k*db) * res(B, lc(B)^k * (A mod B))
        Int cont = zcontent(R);
        for (auto& e : R) e /= cont;
        long e = da - zdeg(R) - k * db;
        acc *= rat_pow(Rat(B.back()), e) * rat_pow(Rat(cont), db);
        swaps += da * db;
        A = std::move(B);
        B = std::move(R);
    }
    if (swaps % 2 != 0) acc = -acc;
    return acc;
}

}  // namespace relbr
