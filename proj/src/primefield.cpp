#include "relbr/primefield.hpp"

#include "relbr/intfactor.hpp"

namespace relbr {

namespace {

void require_odd_prime(const Int& p) {
    if (p == 2 || !is_probable_prime(p))
        throw error("NotOddPrime", "modulus " + to_string(p) + " is not an odd prime");
}

Int powmod(const Int& b, const Int& e, const Int& m) {
    Int r;
    mpz_powm(r.get_mpz_t(), b.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
    return r;
}

}  // namespace

int legendre(const Int& a, const Int& p) {
    require_odd_prime(p);
    return mpz_legendre(a.get_mpz_t(), p.get_mpz_t());
}

std::optional<PrimeFieldElement> sqrt_mod(const Int& a, const Int& p) {
    require_odd_prime(p);
    Int n = a % p;
    if (n < 0) n += p;
    if (n == 0) return PrimeFieldElement{p, Int(0)};
    if (legendre(n, p) != 1) return std::nullopt;

    Int root;
    if (p % 4 == 3) {
        root = powmod(n, (p + 1) / 4, p);
    } else {
        // Tonelli-Shanks: p - 1 = q * 2^s with q odd.
        Int q = p - 1;
        unsigned long s = mpz_scan1(q.get_mpz_t(), 0);
        mpz_tdiv_q_2exp(q.get_mpz_t(), q.get_mpz_t(), s);
        Int z(2);
        while (legendre(z, p) != -1) ++z;
        Int m(static_cast<long>(s));
        Int c = powmod(z, q, p);
        Int t = powmod(n, q, p);
        root = powmod(n, (q + 1) / 2, p);
        while (t != 1) {
            Int i(0), tt = t;
            while (tt != 1) {
                tt = tt * tt % p;
                ++i;
            }
            Int b = c;
            for (Int j = i + 1; j < m; ++j) b = b * b % p;
            m = i;
            c = b * b % p;
            t = t * c % p;
            root = root * b % p;
        }
    }
    if (root > p - root) root = p - root;
    return PrimeFieldElement{p, root};
}

}  // namespace relbr
