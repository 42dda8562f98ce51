// Acceptance gate: one line per criterion, nonzero exit if any fails.
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "relbr/intfactor.hpp"
#include "relbr/report.hpp"

using namespace relbr;

namespace {

int failures = 0;

void criterion(int num, const char* name, const std::function<void()>& body) {
    try {
        body();
        std::printf("PASS criterion %2d: %s\n", num, name);
    } catch (const std::exception& e) {
        ++failures;
        std::printf("FAIL criterion %2d: %s  [%s]\n", num, name, e.what());
    }
    std::fflush(stdout);
}

void require(bool ok, const std::string& what) {
    if (!ok) throw std::runtime_error(what);
}

BrauerClass2 places(std::initializer_list<long> finite, bool inf = false) {
    std::vector<Place> v;
    for (long p : finite) v.push_back(Place::prime(Int(p)));
    if (inf) v.push_back(Place::real());
    return BrauerClass2::from_places(v);
}

const char* kRank2 = R"({
  "curve": [-338256, -10044, 0, 1], "ell": [72, 2],
  "generators": [ { "label": "P1", "point": ["-72", "108"] },
                  { "label": "P2", "point": ["450", "9288"] } ]
})";

const char* kIrred = R"({
  "curve": [11664, -1296, 0, 1], "ell": ["-792", "161", "-11/2"],
  "generators": [ { "label": "P", "point": ["0", "108"] } ]
})";

const char* kQuartic = R"({
  "curve": [3, 1, 3, 0, 5], "ell": [-1, 8, -1, 10], "n": 1,
  "assertions": { "br0_X_trivial": true },
  "generators": [
    { "label": "P1", "divisor": [ { "monic": ["-1/2", "-1", "1"] },
                                  { "mult": -1, "monic": [0, 0, 1] } ] },
    { "label": "P2", "divisor": [ { "monic": ["73/4", "-34", "1"] },
                                  { "mult": -1, "monic": [0, 0, 1] } ] } ]
})";

const char* kSextic = R"({
  "curve": [1, 1, 1, 1, 1, 1, 1], "ell": [3, 2, 2, 0, 3],
  "generators": [
    { "label": "P1", "divisor": [ { "monic": [1, 1, 1] },
                                  { "mult": -1, "infinity": true } ] },
    { "label": "P2", "divisor": [ { "monic": [1, -1, 1] },
                                  { "mult": -1, "infinity": true } ] } ]
})";

void rank_two_cubic() {
    RelBrReport rep = relbr_elliptic(problem_from_json(kRank2));
    require(rep.per_generator.size() == 2, "two generators expected");
    require(rep.per_generator[0].cls == places({2}, true), "class of P1");
    require(rep.per_generator[1].cls.is_trivial(), "class of P2");
    require(rep.br_order && *rep.br_order == 2, "group order 2");
    require(rep.br0_basis.size() == 1 && rep.br0_basis[0] == places({2}, true),
            "generated by {2,inf}");
    require(rep.period_equals_index && *rep.period_equals_index, "period equals index");
}

void symbol_identity() {
    HyperCurve curve(Poly({Rat(-338256), Rat(-10044), Rat(0), Rat(1)}));
    EtaleElement ell(curve.algebra(), Poly({Rat(72), Rat(2)}));
    EllipticPoint p1 = EllipticPoint::affine(Rat(-72), Rat(108));
    EllipticPoint p2 = EllipticPoint::affine(Rat(450), Rat(9288));
    std::vector<EllipticPoint> pts{p1, p2, ec_add(curve, p1, p2),
                                   ec_add(curve, ec_mul(curve, 2, p1), p2)};
    for (const auto& p : pts) {
        require(!p.at_infinity && p.y != 0, "combination is affine non-Weierstrass");
        BrauerClass2 lhs = cor_class(x_minus_theta(curve, p), ell);
        BrauerClass2 rhs = class_of_symbol(p.x + 36, Rat(-2));
        require(lhs == rhs, "evaluation equals [x+36, -2] at x = " + rat_str(p.x));
    }
}

void irreducible_cubic_twist() {
    ProblemSpec spec = problem_from_json(kIrred);
    HyperCurve curve(spec.curve);
    EtaleElement ell(curve.algebra(), spec.ell);
    auto fac = factor_integer(rat_num(ell.norm()));
    require(rat_den(ell.norm()) == 1 && sign(ell.norm()) > 0, "norm is a positive integer");
    std::map<Int, unsigned> want{{Int(2), 4}, {Int(3), 6}, {Int(569), 2}};
    require(fac == want, "norm factors as 2^4 3^6 569^2");

    TorsorModel model = build_model_deg3(curve, ell);
    const Gram& canon = model.conic();
    Gram printed = {{Rat(11), Rat(-322), Rat(15840)},
                    {Rat(-322), Rat(15840), Rat(-545616)},
                    {Rat(15840), Rat(-545616), Rat(24284448)}};
    require(canon[0][0] != 0, "pivot entry nonzero");
    Rat lambda = printed[0][0] / canon[0][0];
    require(lambda != 0, "forms proportional by nonzero lambda");
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            require(printed[i][j] == lambda * canon[i][j],
                    "printed form is a scalar multiple of the canonical one");
    // the scalar is -2, not a square; the classes still agree
    require(lambda == -2, "proportionality factor");
    require(conic_class(printed) == conic_class(canon), "scaling preserves the conic class");

    RelBrReport rep = relbr_elliptic(spec);
    require(rep.per_generator[0].cls == places({2}, true), "class of (0,108)");
    BrauerClass2 conic = *rep.conic;
    require(!conic.is_trivial() && conic != places({2}, true), "conic class is new");
    bool at569 = false;
    for (const auto& v : conic.ramified()) at569 = at569 || v == Place::prime(569);
    require(at569, "conic class ramifies at 569");
    require(!*rep.period_equals_index, "period differs from index");
    require(*rep.br_order == 4, "group of order 4");
}

void quartic_divisors() {
    RelBrReport rep = relbr_even(problem_from_json(kQuartic));
    require(rep.norm_ell == 3920 && squarefree_part(rep.norm_ell) == 5,
            "norm is 5 times a square");
    require(rep.per_generator[0].cls.is_trivial(), "first divisor splits");
    require(rep.per_generator[1].cls == places({5, 7}), "second divisor gives {5,7}");
    require(rep.kernel_basis == std::vector<std::vector<int>>{{1, 0}},
            "kernel is generated by the first generator");
    require(rep.represented_iff.find("P1") != std::string::npos,
            "verdict names the subgroup generated by P1");
}

void sextic_divisors() {
    RelBrReport rep = relbr_even(problem_from_json(kSextic));
    require(rep.norm_ell == Rat(43) * 43, "norm is 43^2");
    require(rep.per_generator[0].cls == places({2, 43}), "first divisor gives {2,43}");
    require(rep.per_generator[1].cls.is_trivial(), "second divisor splits");
    require(rep.br0_order == 2, "order-two divisor span");
}

void full_two_torsion() {
    HyperCurve curve(Poly({Rat(0), Rat(-256), Rat(0), Rat(1)}));
    EtaleAlgebra a = curve.algebra();
    // values at the roots 0, 16, -16 in sorted-root order
    EtaleElement ell =
        interpolate_from_values(a, {Rat(-16), Rat(0), Rat(16)}, {Rat(-33), Rat(-11), Rat(3)});
    auto eval = [&](long x0) {
        return cor_class(x_minus_theta(curve, EllipticPoint::affine(Rat(x0), Rat(0))), ell);
    };
    BrauerClass2 c0 = eval(0), ca = eval(16), cb = eval(-16);
    require(c0 == places({2, 3, 11}, true), "class at (0,0)");
    // resolved values, pinned by representative symbols checked against the oracle
    require(ca == places({2, 11}), "class at (16,0)");
    require(cb == places({3}, true), "class at (-16,0)");
    require(class_of_symbol(Rat(2), Rat(-11)) == ca, "representative symbol for (16,0)");
    require(class_of_symbol(Rat(-3), Rat(-1)) == cb, "representative symbol for (-16,0)");
    std::vector<Place> probes{Place::prime(2), Place::prime(3), Place::prime(11), Place::real()};
    for (const auto& v : probes) {
        bool ram_a = hilbert_oracle(Int(2), Int(-11), v) == -1;
        bool ram_b = hilbert_oracle(Int(-3), Int(-1), v) == -1;
        bool in_a = false, in_b = false;
        for (const auto& w : ca.ramified()) in_a = in_a || w == v;
        for (const auto& w : cb.ramified()) in_b = in_b || w == v;
        require(ram_a == in_a && ram_b == in_b, "oracle confirms resolved classes at " + v.str());
    }

    std::set<BrauerClass2> group{BrauerClass2(), c0, ca, cb};
    require(group.size() <= 4, "at most four classes");
    for (const auto& x : group)
        for (const auto& y : group)
            require(group.count(x + y) == 1, "classes close under addition");

    BrauerClass2 conic = conic_class(build_model_deg3(curve, ell).conic());
    require(group.count(conic) == 0, "conic class lies outside the evaluation group");
}

void oracle_equivalence() {
    std::mt19937_64 rng(20240915);
    // squarefree values; the second pool avoids 7 so oracle moduli stay small
    const long poolA[] = {1,  -1, 2,  -2, 3,  -3, 5,  -5, 6,  -6, 10, -10,
                          15, -15, 30, -30, 7,  -7, 14, -14, 21, -21, 35, -35};
    const long poolB[] = {1, -1, 2, -2, 3, -3, 5, -5, 6, -6, 10, -10, 15, -15, 30, -30};
    int pairs = 0;
    for (int i = 0; i < 1000; ++i) {
        Int a(poolA[rng() % 24]), b(poolB[rng() % 16]);
        std::vector<Place> vs{Place::real(), Place::prime(2)};
        for (const auto& p : prime_support(Rat(a * b)))
            if (p != 2) vs.push_back(Place::prime(p));
        for (const auto& v : vs)
            require(hilbert_oracle(a, b, v) == hilbert_symbol(Rat(a), Rat(b), v),
                    "oracle agrees at " + v.str() + " for (" + to_string(a) + "," +
                        to_string(b) + ")");
        ++pairs;
    }
    require(pairs >= 1000, "enough oracle pairs");

    auto nonzero = [&](long bound) {
        long n = 0;
        while (n == 0) n = static_cast<long>(rng() % (2 * bound + 1)) - bound;
        return make_rat(Int(n), Int(1 + (rng() % 12)));
    };
    for (int i = 0; i < 10000; ++i) {
        Rat a = nonzero(500), b = nonzero(500);
        std::vector<Place> vs{Place::real(), Place::prime(2)};
        for (const auto& p :
             prime_support(Rat(rat_num(a) * rat_den(a) * rat_num(b) * rat_den(b))))
            if (p != 2) vs.push_back(Place::prime(p));
        int prod = 1;
        for (const auto& v : vs) prod *= hilbert_symbol(a, b, v);
        require(prod == 1, "product formula");
    }
}

void projection_formula() {
    std::mt19937_64 rng(8675309);
    auto pick = [&](long bound) { return static_cast<long>(rng() % (2 * bound + 1)) - bound; };
    int done = 0;
    while (done < 200) {
        int deg = 2 + static_cast<int>(rng() % 5);  // 2..6
        std::vector<Rat> c(deg + 1);
        for (int i = 0; i < deg; ++i) c[i] = Rat(pick(4));
        c[deg] = Rat(1 + (rng() % 3));
        Poly f{std::move(c)};
        if (f.degree() != deg || !is_squarefree(f)) continue;
        EtaleAlgebra alg(f);
        EtaleElement ell(alg, Poly(Rat(0)));
        do {
            std::vector<Rat> e(deg);
            for (auto& v : e) v = Rat(pick(3));
            ell = EtaleElement(alg, Poly(std::move(e)));
        } while (!ell.is_unit());
        long av = 0;
        while (av == 0) av = pick(40);
        Rat a(av);
        BrauerClass2 chain = cor_class(EtaleElement(alg, Poly(a)), ell);
        require(chain == class_of_symbol(a, ell.norm()),
                "chain corestriction matches the projection formula");
        ++done;
    }
}

void evaluation_additivity() {
    HyperCurve curve(Poly({Rat(-338256), Rat(-10044), Rat(0), Rat(1)}));
    EtaleElement ell(curve.algebra(), Poly({Rat(72), Rat(2)}));
    EllipticPoint g1 = EllipticPoint::affine(Rat(-72), Rat(108));
    EllipticPoint g2 = EllipticPoint::affine(Rat(450), Rat(9288));
    auto combo = [&](int a, int b) {
        return ec_add(curve, ec_mul(curve, a, g1), ec_mul(curve, b, g2));
    };
    auto eval = [&](const EllipticPoint& p) { return cor_class(x_minus_theta(curve, p), ell); };
    int done = 0;
    for (int a = -1; a <= 1; ++a)
        for (int b = -1; b <= 1; ++b)
            for (int c = -1; c <= 1; ++c)
                for (int d = -1; d <= 1; ++d) {
                    if ((a == 0 && b == 0) || (c == 0 && d == 0)) continue;
                    if (a + c == 0 && b + d == 0) continue;
                    // skip the four tallest sums to keep slot sizes factorable
                    if (std::abs(a + c) == 2 && std::abs(b + d) == 2) continue;
                    EllipticPoint p = combo(a, b), q = combo(c, d), s = combo(a + c, b + d);
                    require(eval(s) == eval(p) + eval(q), "additive on combination");
                    ++done;
                }
    require(done >= 50, "enough combinations");
}

void cover_checks() {
    HyperCurve split16(Poly({Rat(0), Rat(-256), Rat(0), Rat(1)}));
    EtaleElement ell16 = interpolate_from_values(
        split16.algebra(), {Rat(-16), Rat(0), Rat(16)}, {Rat(-33), Rat(-11), Rat(3)});
    EtaleElement one16(split16.algebra(), Poly(Rat(1)));
    HyperCurve split123(Poly({Rat(6), Rat(-7), Rat(0), Rat(1)}));  // (x-1)(x-2)(x+3)
    EtaleElement ell123 = interpolate_from_values(
        split123.algebra(), {Rat(-3), Rat(1), Rat(2)}, {Rat(2), Rat(2), Rat(1)});
    struct Triple {
        const HyperCurve* curve;
        const EtaleElement* ell;
        long q;
    };
    std::vector<Triple> triples{{&split16, &ell16, 5},  {&split16, &ell16, 7},
                                {&split16, &ell16, 13}, {&split16, &one16, 7},
                                {&split123, &ell123, 13}, {&split123, &ell123, 11}};
    for (const auto& t : triples) {
        CoverReport r = cover_map_check(*t.curve, *t.ell, t.q);
        require(r.map_well_defined, "all t != 0 points map onto the curve at q=" +
                                        std::to_string(t.q));
        require(r.fibers_bounded && r.max_fiber <= 4,
                "fibers bounded by 4 at q=" + std::to_string(t.q));
        require(r.all_ok, "cover report clean at q=" + std::to_string(t.q));
    }
    require(triples.size() >= 5, "enough cover triples");
}

}  // namespace

int main() {
    criterion(1, "rank-two cubic reproduces the order-two relative Brauer group",
              rank_two_cubic);
    criterion(2, "point evaluations match the closed-form symbol", symbol_identity);
    criterion(3, "irreducible cubic twist: norm, proportional conic form, index four",
              irreducible_cubic_twist);
    criterion(4, "quartic divisor classes and membership verdict", quartic_divisors);
    criterion(5, "sextic divisor classes", sextic_divisors);
    criterion(6, "full two-torsion classes close up and exclude the conic",
              full_two_torsion);
    criterion(7, "closed-form symbols agree with the p-adic oracle", oracle_equivalence);
    criterion(8, "projection formula along the remainder chain", projection_formula);
    criterion(9, "evaluation is additive along the group law", evaluation_additivity);
    criterion(10, "finite-field cover checks across twists", cover_checks);
    if (failures == 0) {
        std::printf("acceptance: all 10 criteria passed\n");
        return 0;
    }
    std::printf("acceptance: %d criterion(s) failed\n", failures);
    return 1;
}
