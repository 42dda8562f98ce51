#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace relbr {

// Arbitrary-precision integers and rationals.  mpq_class values are kept
// canonical (coprime numerator/denominator, positive denominator).
using Int = mpz_class;
using Rat = mpq_class;

class error : public std::runtime_error {
public:
    error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

inline Rat make_rat(const Int& n, const Int& d) {
    if (d == 0) throw error("ZeroDenominator", "rational with zero denominator");
    Rat q(n, d);
    q.canonicalize();
    return q;
}

inline Int rat_num(const Rat& q) { return q.get_num(); }
inline Int rat_den(const Rat& q) { return q.get_den(); }

inline int sign(const Int& n) { return sgn(n); }
inline int sign(const Rat& q) { return sgn(q); }

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

inline Int int_pow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

// base^e for possibly negative e; base must be nonzero when e < 0.
inline Rat rat_pow(const Rat& base, long e) {
    if (e == 0) return Rat(1);
    bool inv = e < 0;
    unsigned long a = inv ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    if (inv && base == 0) throw error("ZeroDivisor", "0 raised to a negative power");
    Rat r;
    mpz_pow_ui(mpq_numref(r.get_mpq_t()), mpq_numref(base.get_mpq_t()), a);
    mpz_pow_ui(mpq_denref(r.get_mpq_t()), mpq_denref(base.get_mpq_t()), a);
    if (inv) r = 1 / r;
    return r;
}

inline bool is_square(const Int& n) {
    return sgn(n) >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

inline bool is_square(const Rat& q) {
    return is_square(q.get_num()) && is_square(q.get_den());
}

inline Int isqrt(const Int& n) {
    if (sgn(n) < 0) throw error("NegativeSqrt", "isqrt of negative integer");
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

// Accepts "p/q", "p", optional leading '-' or '+'.
inline Rat rat_from_string(const std::string& s) {
    if (s.empty()) throw error("ParseError", "empty rational literal");
    std::string t = s[0] == '+' ? s.substr(1) : s;
    Rat q;
    if (mpq_set_str(q.get_mpq_t(), t.c_str(), 10) != 0)
        throw error("ParseError", "bad rational literal: " + s);
    if (q.get_den() == 0) throw error("ParseError", "zero denominator: " + s);
    q.canonicalize();
    return q;
}

inline std::string to_string(const Int& n) { return n.get_str(); }
inline std::string to_string(const Rat& q) { return q.get_str(); }

}  // namespace relbr
