#include "relbr/brauer.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "relbr/intfactor.hpp"
#include "relbr/primefield.hpp"

namespace relbr {

BrauerClass2 BrauerClass2::from_places(std::vector<Place> places) {
    std::sort(places.begin(), places.end());
    places.erase(std::unique(places.begin(), places.end()), places.end());
    if (places.size() % 2 != 0)
        throw error("OddRamification",
                    "a 2-torsion Brauer class over Q ramifies at an even number of places");
    BrauerClass2 c;
    c.places_ = std::move(places);
    return c;
}

BrauerClass2 BrauerClass2::operator+(const BrauerClass2& o) const {
    std::vector<Place> out;
    std::set_symmetric_difference(places_.begin(), places_.end(), o.places_.begin(),
                                  o.places_.end(), std::back_inserter(out));
    BrauerClass2 c;
    c.places_ = std::move(out);
    return c;
}

std::string BrauerClass2::str() const {
    std::ostringstream os;
    os << "{";
    for (size_t i = 0; i < places_.size(); ++i) os << (i ? "," : "") << places_[i].str();
    os << "}";
    return os.str();
}

namespace {

long val_p(const Rat& a, const Int& p) {
    long v = 0;
    Int n = rat_num(a);
    while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
        n /= p;
        ++v;
    }
    Int d = rat_den(a);
    while (mpz_divisible_p(d.get_mpz_t(), p.get_mpz_t())) {
        d /= p;
        --v;
    }
    return v;
}

// unit part of a at p, i.e. a / p^v as a rational with p-free numerator and
// denominator
Rat unit_part(const Rat& a, const Int& p, long v) {
    return a * rat_pow(Rat(p), -v);
}

int legendre_rat(const Rat& u, const Int& p) {
    // (n/d | p) = (n|p)(d|p) for d a unit mod p
    return legendre(rat_num(u), p) * legendre(rat_den(u), p);
}

// u mod 8 for an odd rational unit u = n/d
long mod8(const Rat& u) {
    Int n = rat_num(u) % 8, d = rat_den(u) % 8;
    if (n < 0) n += 8;
    if (d < 0) d += 8;
    // inverses mod 8 of 1,3,5,7 are themselves
    Int r = n * d % 8;
    return r.get_si();
}

int eps(long u8) { return (u8 == 1 || u8 == 5) ? 0 : 1; }      // (u-1)/2 mod 2
int omega(long u8) { return (u8 == 1 || u8 == 7) ? 0 : 1; }    // (u^2-1)/8 mod 2

}  // namespace

int hilbert_symbol(const Rat& a, const Rat& b, const Place& v) {
    if (a == 0 || b == 0) throw error("ZeroArgument", "hilbert symbol of zero");
    if (v.infinite) return (sign(a) < 0 && sign(b) < 0) ? -1 : 1;
    const Int& p = v.p;
    if (p < 2 || !is_probable_prime(p))
        throw error("NotPrime", "hilbert symbol at non-prime " + to_string(p));
    long alpha = val_p(a, p), beta = val_p(b, p);
    Rat u = unit_part(a, p, alpha), w = unit_part(b, p, beta);
    if (p == 2) {
        long e = eps(mod8(u)) * eps(mod8(w)) + alpha * omega(mod8(w)) + beta * omega(mod8(u));
        return e % 2 == 0 ? 1 : -1;
    }
    int s = 1;
    if (alpha % 2 != 0 && beta % 2 != 0 && ((p - 1) / 2) % 2 != 0) s = -s;
    if (beta % 2 != 0 && legendre_rat(u, p) == -1) s = -s;
    if (alpha % 2 != 0 && legendre_rat(w, p) == -1) s = -s;
    return s;
}

BrauerClass2 class_of_symbol(const Rat& a, const Rat& b) {
    if (a == 0 || b == 0) throw error("ZeroArgument", "class of a symbol with zero slot");
    Int sa = squarefree_part(a), sb = squarefree_part(b);
    std::set<Int> primes;
    primes.insert(Int(2));
    for (const auto& [p, e] : factor_integer(sa)) primes.insert(p);
    for (const auto& [p, e] : factor_integer(sb)) primes.insert(p);
    std::vector<Place> ram;
    for (const Int& p : primes)
        if (hilbert_symbol(Rat(sa), Rat(sb), Place::prime(p)) == -1) ram.push_back(Place::prime(p));
    if (hilbert_symbol(Rat(sa), Rat(sb), Place::real()) == -1) ram.push_back(Place::real());
    return BrauerClass2::from_places(std::move(ram));  // even size or product formula is broken
}

SpanResult span_and_membership(const std::vector<BrauerClass2>& generators,
                               const BrauerClass2& query) {
    // index the union of supports
    std::set<Place> support;
    for (const auto& g : generators)
        support.insert(g.ramified().begin(), g.ramified().end());
    support.insert(query.ramified().begin(), query.ramified().end());
    std::vector<Place> places(support.begin(), support.end());
    auto to_bits = [&](const BrauerClass2& c) {
        std::vector<bool> row(places.size(), false);
        for (const auto& v : c.ramified()) {
            size_t i = std::lower_bound(places.begin(), places.end(), v) - places.begin();
            row[i] = true;
        }
        return row;
    };

    // Gaussian elimination over F2, reduced echelon form
    std::vector<std::vector<bool>> rows;
    for (const auto& g : generators) rows.push_back(to_bits(g));
    std::vector<std::vector<bool>> basis;
    for (auto& row : rows) {
        for (const auto& b : basis) {
            size_t lead = std::find(b.begin(), b.end(), true) - b.begin();
            if (row[lead])
                for (size_t i = 0; i < row.size(); ++i) row[i] = row[i] != b[i];
        }
        if (std::find(row.begin(), row.end(), true) != row.end()) {
            // back-reduce existing basis rows against the new pivot
            size_t lead = std::find(row.begin(), row.end(), true) - row.begin();
            for (auto& b : basis)
                if (b[lead])
                    for (size_t i = 0; i < b.size(); ++i) b[i] = b[i] != row[i];
            basis.push_back(row);
        }
    }
    std::sort(basis.begin(), basis.end(),
              [](const auto& x, const auto& y) { return x < y; });

    auto q = to_bits(query);
    for (const auto& b : basis) {
        size_t lead = std::find(b.begin(), b.end(), true) - b.begin();
        if (q[lead])
            for (size_t i = 0; i < q.size(); ++i) q[i] = q[i] != b[i];
    }
    SpanResult out;
    out.contains = std::find(q.begin(), q.end(), true) == q.end();
    out.dimension = static_cast<int>(basis.size());
    for (const auto& b : basis) {
        std::vector<Place> ps;
        for (size_t i = 0; i < b.size(); ++i)
            if (b[i]) ps.push_back(places[i]);
        out.basis.push_back(BrauerClass2::from_places(std::move(ps)));
    }
    return out;
}

int hilbert_oracle(const Int& a, const Int& b, const Place& v) {
    if (a == 0 || b == 0) throw error("ZeroArgument", "hilbert oracle with zero slot");
    if (squarefree_part(a) != a || squarefree_part(b) != b)
        throw error("NotSquarefree", "hilbert oracle expects squarefree slots");
    if (v.infinite) return (sign(a) < 0 && sign(b) < 0) ? -1 : 1;
    const Int& p = v.p;
    if (p < 2 || !is_probable_prime(p))
        throw error("NotPrime", "hilbert oracle at non-prime " + to_string(p));

    long e = 3 + val_p(Rat(4 * a * b), p);
    Int modulus = int_pow(p, static_cast<unsigned long>(e));
    // the search is quadratic in the modulus; refuse rather than stall
    if (modulus > 100000)
        throw error("OracleTooLarge",
                    "oracle modulus " + to_string(modulus) + " exceeds the search budget");
    long M = modulus.get_si();
    long pl = p.get_si();
    long am = Int(a % modulus).get_si(), bm = Int(b % modulus).get_si();
    if (am < 0) am += M;
    if (bm < 0) bm += M;

    // bit 1: w is a square mod M; bit 2: w is the square of a unit mod M
    std::vector<unsigned char> sq(static_cast<size_t>(M), 0);
    for (long z = 0; z <= M / 2; ++z) {
        long w = z * z % M;  // M <= 13^5, so all products stay below 2^63
        sq[static_cast<size_t>(w)] |= 1;
        if (z % pl != 0) sq[static_cast<size_t>(w)] |= 2;
    }
    // (x, y, z) solves together with (M-x, y, z) etc., so half ranges suffice
    const long half = M / 2;
    std::vector<long> by2(static_cast<size_t>(half) + 1);
    std::vector<unsigned char> y_unit(static_cast<size_t>(half) + 1);
    for (long y = 0; y <= half; ++y) {
        by2[static_cast<size_t>(y)] = bm * y % M * y % M;
        y_unit[static_cast<size_t>(y)] = y % pl != 0;
    }
    for (long x = 0; x <= half; ++x) {
        long ax = am * x % M * x % M;
        bool x_unit = x % pl != 0;
        for (long y = 0; y <= half; ++y) {
            long w = ax + by2[static_cast<size_t>(y)];
            if (w >= M) w -= M;
            unsigned char bits = sq[static_cast<size_t>(w)];
            if (x_unit || y_unit[static_cast<size_t>(y)]) {
                if (bits & 1) return 1;  // any z completes a primitive triple
            } else if (bits & 2) {
                return 1;  // x, y both divisible by p: a unit z is required
            }
        }
    }
    return -1;
}

}  // namespace relbr
