#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "relbr/etale.hpp"

using namespace relbr;

namespace {

std::mt19937_64 rng(40961);

Rat small_rat(int bound) {
    long num = static_cast<long>(rng() % (2 * bound + 1)) - bound;
    long den = 1 + static_cast<long>(rng() % 3);
    return make_rat(Int(num), Int(den));
}

EtaleAlgebra random_algebra(int deg) {
    for (;;) {
        std::vector<Rat> c;
        for (int i = 0; i < deg; ++i) c.push_back(small_rat(6));
        c.push_back(Rat(1 + static_cast<long>(rng() % 3)));
        Poly f(std::move(c));
        if (is_squarefree(f)) return EtaleAlgebra(f);
    }
}

EtaleElement random_element(const EtaleAlgebra& a) {
    std::vector<Rat> c;
    for (int i = 0; i < a.degree(); ++i) c.push_back(small_rat(5));
    return EtaleElement(a, Poly(std::move(c)));
}

}  // namespace

TEST_CASE("algebra construction") {
    CHECK_THROWS_AS(EtaleAlgebra(Poly({Rat(1), Rat(2), Rat(1)})), error);  // (x+1)^2
    CHECK_THROWS_AS(EtaleAlgebra(Poly(Rat(3))), error);
    EtaleAlgebra a(Poly({Rat(0), Rat(-256), Rat(0), Rat(1)}));
    CHECK(a.degree() == 3);
    CHECK(a.monic_modulus() == a.modulus());
    EtaleAlgebra b(Poly({Rat(3), Rat(1), Rat(3), Rat(0), Rat(5)}));
    CHECK(b.lead() == 5);
    CHECK(b.monic_modulus().lc() == 1);
}

TEST_CASE("rational roots") {
    EtaleAlgebra split(Poly({Rat(0), Rat(-256), Rat(0), Rat(1)}));
    CHECK(split.rational_roots() == std::vector<Rat>{Rat(-16), Rat(0), Rat(16)});
    EtaleAlgebra halfroot(Poly({Rat(-3), Rat(5), Rat(2)}));  // (2x-1)(x+3)
    CHECK(halfroot.rational_roots() == std::vector<Rat>{Rat(-3), Rat(1, 2)});
    EtaleAlgebra irred(Poly({Rat(11664), Rat(-1296), Rat(0), Rat(1)}));
    CHECK(irred.rational_roots().empty());
}

TEST_CASE("ring arithmetic") {
    for (int deg : {2, 3, 4}) {
        EtaleAlgebra a = random_algebra(deg);
        for (int i = 0; i < 50; ++i) {
            EtaleElement x = random_element(a), y = random_element(a), z = random_element(a);
            CHECK((x + y) * z == x * z + y * z);
            CHECK(x * y == y * x);
            if (x.is_unit()) {
                CHECK(x * x.inv() == EtaleElement(a, Poly(Rat(1))));
            } else if (!x.is_zero()) {
                CHECK_THROWS_AS((void)x.inv(), error);
            }
        }
    }
}

TEST_CASE("zero divisors are rejected by inv") {
    EtaleAlgebra a(Poly({Rat(-1), Rat(0), Rat(1)}));  // (x-1)(x+1)
    EtaleElement zd(a, Poly({Rat(-1), Rat(1)}));
    CHECK_FALSE(zd.is_unit());
    CHECK_THROWS_AS((void)zd.inv(), error);
}

TEST_CASE("norm is multiplicative") {
    for (int deg : {2, 3, 4, 5}) {
        EtaleAlgebra a = random_algebra(deg);
        for (int i = 0; i < 40; ++i) {
            EtaleElement x = random_element(a), y = random_element(a);
            CHECK((x * y).norm() == x.norm() * y.norm());
        }
    }
}

TEST_CASE("norm on a split algebra is the product of component values") {
    EtaleAlgebra a(Poly({Rat(0), Rat(-256), Rat(0), Rat(1)}));
    for (int i = 0; i < 50; ++i) {
        EtaleElement x = random_element(a);
        Rat expect = x.value_at(Rat(-16)) * x.value_at(Rat(0)) * x.value_at(Rat(16));
        CHECK(x.norm() == expect);
    }
}

TEST_CASE("norms of the worked descent elements") {
    EtaleAlgebra a61(Poly({Rat(-338256), Rat(-10044), Rat(0), Rat(1)}));
    CHECK(EtaleElement(a61, Poly({Rat(72), Rat(2)})).norm() == 186624);

    EtaleAlgebra a63(Poly({Rat(11664), Rat(-1296), Rat(0), Rat(1)}));
    EtaleElement ell63(a63, Poly({Rat(-792), Rat(161), Rat(-11, 2)}));
    CHECK(ell63.norm() == Rat(Int(16) * 729 * 323761));  // 2^4 3^6 569^2

    EtaleAlgebra a64(Poly({Rat(3), Rat(1), Rat(3), Rat(0), Rat(5)}));
    EtaleElement ell64(a64, Poly({Rat(-1), Rat(8), Rat(-1), Rat(10)}));
    CHECK(ell64.norm() == 3920);
    CHECK(is_square(Rat(5) * ell64.norm()));

    EtaleAlgebra a65(Poly({Rat(1), Rat(1), Rat(1), Rat(1), Rat(1), Rat(1), Rat(1)}));
    EtaleElement ell65(a65, Poly({Rat(3), Rat(2), Rat(2), Rat(0), Rat(3)}));
    CHECK(ell65.norm() == 1849);  // 43^2
}

TEST_CASE("norm respects a non-monic modulus") {
    // same quotient ring, two scalings of the modulus
    Poly f({Rat(3), Rat(1), Rat(3), Rat(0), Rat(5)});
    EtaleAlgebra a(f), b(f * Rat(7));
    EtaleElement xa(a, Poly({Rat(1), Rat(2), Rat(3)}));
    EtaleElement xb(b, Poly({Rat(1), Rat(2), Rat(3)}));
    CHECK(a == b);
    CHECK(xa.norm() == xb.norm());
}

TEST_CASE("interpolation hits prescribed values") {
    EtaleAlgebra a(Poly({Rat(0), Rat(-256), Rat(0), Rat(1)}));
    std::vector<Rat> roots{Rat(-16), Rat(0), Rat(16)};
    std::vector<Rat> values{Rat(-33), Rat(-11), Rat(3)};
    EtaleElement ell = interpolate_from_values(a, roots, values);
    for (size_t i = 0; i < roots.size(); ++i) CHECK(ell.value_at(roots[i]) == values[i]);
    CHECK(ell.norm() == Rat(-33) * Rat(-11) * Rat(3));

    EtaleAlgebra irred(Poly({Rat(1), Rat(0), Rat(1)}));
    CHECK_THROWS_AS((void)interpolate_from_values(irred, {Rat(0), Rat(1)}, {Rat(1), Rat(1)}),
                    error);
    CHECK_THROWS_AS((void)interpolate_from_values(a, {Rat(0), Rat(1), Rat(2)}, values), error);
}

TEST_CASE("elem_from_monic carries the degree sign") {
    EtaleAlgebra a(Poly({Rat(11664), Rat(-1296), Rat(0), Rat(1)}));
    CHECK(elem_from_monic(a, Poly({Rat(-5), Rat(1)})) ==
          EtaleElement(a, Poly({Rat(5), Rat(-1)})));
    CHECK(elem_from_monic(a, Poly({Rat(2), Rat(1), Rat(1)})) ==
          EtaleElement(a, Poly({Rat(2), Rat(1), Rat(1)})));
    CHECK_THROWS_AS((void)elem_from_monic(a, Poly({Rat(2), Rat(2)})), error);  // not monic
    // sharing a factor with the modulus is rejected
    EtaleAlgebra split(Poly({Rat(0), Rat(-256), Rat(0), Rat(1)}));
    CHECK_THROWS_AS((void)elem_from_monic(split, Poly({Rat(0), Rat(1)})), error);
}
