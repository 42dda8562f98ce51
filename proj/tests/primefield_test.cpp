#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "relbr/primefield.hpp"

using namespace relbr;

TEST_CASE("legendre matches the set of squares") {
    for (long p : {3, 5, 7, 11, 13, 17, 73, 97}) {
        std::set<long> squares;
        for (long z = 1; z < p; ++z) squares.insert(z * z % p);
        for (long a = 0; a < p; ++a) {
            int expect = a == 0 ? 0 : (squares.count(a) ? 1 : -1);
            CHECK(legendre(Int(a), Int(p)) == expect);
        }
        CHECK(legendre(Int(-1), Int(p)) == (p % 4 == 1 ? 1 : -1));
    }
    CHECK_THROWS_AS((void)legendre(Int(3), Int(15)), error);
    CHECK_THROWS_AS((void)legendre(Int(3), Int(2)), error);
}

TEST_CASE("sqrt_mod inverts squaring") {
    for (long p : {3, 5, 7, 11, 13, 17, 41, 73, 97}) {  // both 1 and 3 mod 4
        for (long a = 0; a < p; ++a) {
            auto r = sqrt_mod(Int(a), Int(p));
            if (legendre(Int(a), Int(p)) == -1) {
                CHECK_FALSE(r.has_value());
            } else {
                REQUIRE(r.has_value());
                CHECK(r->p == p);
                CHECK(r->value * r->value % p == a);
                CHECK((r->value <= p - r->value || a == 0));
            }
        }
    }
}

TEST_CASE("sqrt_mod on a larger prime with deep 2-adic part") {
    // 257 = 2^8 + 1 exercises the full Tonelli-Shanks loop
    Int p(257);
    int residues = 0;
    for (long a = 1; a < 257; ++a)
        if (auto r = sqrt_mod(Int(a), p)) {
            CHECK(r->value * r->value % p == a);
            ++residues;
        }
    CHECK(residues == 128);
}
