#include "relbr/intfactor.hpp"

#include <algorithm>

namespace relbr {

namespace {

const std::vector<unsigned long>& small_primes() {
    static const std::vector<unsigned long> primes = [] {
        const unsigned long limit = 100000;
        std::vector<bool> sieve(limit + 1, true);
        std::vector<unsigned long> ps;
        for (unsigned long i = 2; i <= limit; ++i) {
            if (!sieve[i]) continue;
            ps.push_back(i);
            for (unsigned long j = i * i; j <= limit; j += i) sieve[j] = false;
        }
        return ps;
    }();
    return primes;
}

bool miller_rabin_witness(const Int& n, const Int& a) {
    // returns true if a proves n composite
    Int d = n - 1;
    unsigned long r = mpz_scan1(d.get_mpz_t(), 0);
    mpz_tdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), r);
    Int x;
    mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == n - 1) return false;
    for (unsigned long i = 1; i < r; ++i) {
        x = (x * x) % n;
        if (x == n - 1) return false;
    }
    return true;
}

// Pollard rho with Brent cycle detection; n odd composite, not a prime power
// guard needed.  Returns a nontrivial factor.
Int pollard_brent(const Int& n, unsigned long seed) {
    if (mpz_divisible_ui_p(n.get_mpz_t(), 2)) return Int(2);
    gmp_randclass rng(gmp_randinit_default);
    rng.seed(seed);
    while (true) {
        Int y = rng.get_z_range(n - 3) + 1;
        Int c = rng.get_z_range(n - 3) + 1;
        Int m(128), g(1), r(1), q(1), x, ys;
        while (g == 1) {
            x = y;
            for (Int i(0); i < r; ++i) y = (y * y + c) % n;
            Int k(0);
            while (k < r && g == 1) {
                ys = y;
                Int lim = std::min(m, Int(r - k));
                for (Int i(0); i < lim; ++i) {
                    y = (y * y + c) % n;
                    q = q * abs(x - y) % n;
                }
                mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                k += m;
            }
            r *= 2;
        }
        if (g == n) {
            g = 1;
            while (g == 1) {
                ys = (ys * ys + c) % n;
                Int diff = abs(x - ys);
                mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
            }
        }
        if (g != n) return g;
        ++seed;  // rare: retry with fresh parameters
    }
}

void factor_rec(const Int& n, std::map<Int, unsigned>& out, unsigned mult) {
    if (n == 1) return;
    if (is_probable_prime(n)) {
        out[n] += mult;
        return;
    }
    // Peel perfect powers so rho always sees a product of distinct primes.
    if (mpz_perfect_power_p(n.get_mpz_t())) {
        for (unsigned long k = 2; k <= mpz_sizeinbase(n.get_mpz_t(), 2); ++k) {
            Int root;
            if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), k) != 0) {
                factor_rec(root, out, mult * static_cast<unsigned>(k));
                return;
            }
        }
    }
    Int d = pollard_brent(n, 0xb5297a4d);
    factor_rec(d, out, mult);
    factor_rec(n / d, out, mult);
}

}  // namespace

bool is_probable_prime(const Int& n) {
    if (n < 2) return false;
    for (unsigned long p : {2ul, 3ul, 5ul, 7ul, 11ul, 13ul, 17ul, 19ul, 23ul, 29ul, 31ul, 37ul}) {
        if (n == p) return true;
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
    }
    static const Int det_limit("3317044064679887385961981");
    if (n < det_limit) {
        for (unsigned long a : {2ul, 3ul, 5ul, 7ul, 11ul, 13ul, 17ul, 19ul, 23ul, 29ul, 31ul, 37ul})
            if (miller_rabin_witness(n, Int(a))) return false;
        return true;
    }
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

std::map<Int, unsigned> factor_integer(const Int& n) {
    if (n == 0) throw error("ZeroArgument", "factor_integer(0)");
    Int m = abs(n);
    std::map<Int, unsigned> out;
    for (unsigned long p : small_primes()) {
        if (m == 1) break;
        if (Int(p) * p > m) break;
        unsigned e = 0;
        while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            m /= p;
            ++e;
        }
        if (e) out[Int(p)] = e;
    }
    factor_rec(m, out, 1);
    return out;
}

Int squarefree_part(const Rat& q) {
    if (q == 0) throw error("ZeroArgument", "squarefree_part(0)");
    // s(q) = s(num * den) since den^2 is a square.
    Int s(sign(q));
    for (const auto& [p, e] : factor_integer(rat_num(q) * rat_den(q)))
        if (e % 2 != 0) s *= p;
    return s;
}

std::vector<Int> prime_support(const Rat& q) {
    std::vector<Int> ps;
    if (q == 0) return ps;
    for (const auto& [p, e] : factor_integer(rat_num(q) * rat_den(q))) ps.push_back(p);
    return ps;
}

}  // namespace relbr
