#pragma once

#include <string>
#include <vector>

#include "relbr/rational.hpp"

namespace relbr {

// A place of Q: a finite prime or the real place.
struct Place {
    bool infinite = false;
    Int p = 0;  // meaningful only when finite

    static Place real() { return Place{true, Int(0)}; }
    static Place prime(Int q) { return Place{false, std::move(q)}; }

    bool operator==(const Place& o) const {
        return infinite == o.infinite && (infinite || p == o.p);
    }
    // finite primes ascending, the real place last
    bool operator<(const Place& o) const {
        if (infinite != o.infinite) return !infinite;
        return !infinite && p < o.p;
    }
    std::string str() const { return infinite ? "inf" : p.get_str(); }
};

// A quaternion symbol (a, b) over Q, kept for audit trails.
struct QuatSymbol {
    Rat a, b;
};

// An element of Br(Q)[2], represented by its even set of ramified places.
class BrauerClass2 {
public:
    BrauerClass2() = default;  // trivial class
    static BrauerClass2 from_places(std::vector<Place> places);

    const std::vector<Place>& ramified() const { return places_; }
    bool is_trivial() const { return places_.empty(); }

    // group law: symmetric difference of ramification sets
    BrauerClass2 operator+(const BrauerClass2& o) const;
    bool operator==(const BrauerClass2& o) const { return places_ == o.places_; }
    bool operator!=(const BrauerClass2& o) const { return !(*this == o); }
    bool operator<(const BrauerClass2& o) const { return places_ < o.places_; }

    std::string str() const;

private:
    std::vector<Place> places_;  // sorted, no duplicates, even cardinality
};

inline BrauerClass2 add(const BrauerClass2& x, const BrauerClass2& y) { return x + y; }
inline bool is_trivial(const BrauerClass2& x) { return x.is_trivial(); }

// Hilbert symbol (a, b)_v in {-1, +1} by the classical closed forms; a, b
// nonzero rationals, v a prime or the real place.
int hilbert_symbol(const Rat& a, const Rat& b, const Place& v);

// The class of the quaternion algebra (a, b) as its set of ramified places:
// slots are squarefree-reduced, then the symbol is evaluated at 2, at the real
// place and at every odd prime dividing either squarefree part.
BrauerClass2 class_of_symbol(const Rat& a, const Rat& b);

struct SpanResult {
    std::vector<BrauerClass2> basis;  // reduced F2 echelon basis of the span
    int dimension = 0;
    bool contains = false;            // query in span
};

SpanResult span_and_membership(const std::vector<BrauerClass2>& generators,
                               const BrauerClass2& query);

// Independent ground truth: decides solvability of z^2 = a x^2 + b y^2 over
// Q_v by exhaustive search for primitive solutions modulo p^e with
// e = 3 + v_p(4ab) (sign analysis at the real place).  a, b must be nonzero
// squarefree integers.  Returns +1 (solvable) or -1.
int hilbert_oracle(const Int& a, const Int& b, const Place& v);

}  // namespace relbr
