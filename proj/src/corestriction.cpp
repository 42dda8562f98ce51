#include "relbr/corestriction.hpp"

namespace relbr {

namespace {

// norm of h(theta) in Q[t]/(m), m monic: prod of h over the roots of m
Rat norm_in(const Poly& m, const Poly& h) { return resultant(m, h); }

// Emits symbols over Q whose classes sum to cor_{Q[t]/(m)} {g(theta), h(theta)}.
//
// The recursion is the residue theorem for the Milnor symbol {g(t), h(t), m(t)}
// over Q(t): the tame residue at the closed points dividing m is {g, h} over
// Q[t]/(m), the residues at points dividing g or h swap those slots into the
// modulus position with strictly smaller degree, and the residue at infinity
// contributes (-1,-1) exactly when deg g * deg h * deg m is odd (all three
// monic).  Everything is mod 2, so signs and slot order are free.
//
// Requires m monic squarefree, g and h nonzero and coprime to m.
void rt_rec(const Poly& m, Poly g, Poly h, std::vector<QuatSymbol>& out) {
    g = g % m;
    h = h % m;
    if (g.is_zero() || h.is_zero())
        throw error("NonUnit", "corestriction slot is a zero divisor");

    // projection formula: cor{c, b} = (c, N b) for rational c
    if (g.is_constant()) {
        out.push_back({g.lc(), norm_in(m, h)});
        return;
    }
    if (h.is_constant()) {
        out.push_back({h.lc(), norm_in(m, g)});
        return;
    }

    // shared factors: {dg', dh'} = {-1, d} + {d, h'} + {g', d} + {g', h'}
    Poly d = poly_gcd(g, h);
    if (d.degree() > 0) {
        Poly g1 = g / d, h1 = h / d;
        out.push_back({Rat(-1), norm_in(m, d)});
        rt_rec(m, d, h1, out);
        rt_rec(m, g1, d, out);
        rt_rec(m, g1, h1, out);
        return;
    }

    // pull out leading coefficients so all three polynomials are monic
    Rat beta = g.lc(), gamma = h.lc();
    Poly gm = g.monic(), hm = h.monic();
    if (beta != 1) out.push_back({beta, norm_in(m, h)});
    if (gamma != 1) out.push_back({gamma, norm_in(m, gm)});

    if (gm.degree() % 2 != 0 && hm.degree() % 2 != 0 && m.degree() % 2 != 0)
        out.push_back({Rat(-1), Rat(-1)});  // residue at infinity

    Poly hr = odd_radical(hm);
    if (hr.degree() > 0) rt_rec(hr, gm % hr, m % hr, out);
    Poly gr = odd_radical(gm);
    if (gr.degree() > 0) rt_rec(gr, hm % gr, m % gr, out);
}

void require_unit(const EtaleElement& a, const char* slot) {
    if (!a.is_unit())
        throw error("NonUnit", std::string("corestriction ") + slot +
                                   " slot is not a unit of the algebra");
}

}  // namespace

SymbolChain rosset_tate(const EtaleElement& u, const EtaleElement& ell) {
    if (u.parent() != ell.parent())
        throw error("ParentMismatch", "corestriction slots live in different algebras");
    require_unit(u, "first");
    require_unit(ell, "second");
    SymbolChain chain;
    chain.modulus = u.parent().monic_modulus();  // same ring as the given modulus
    chain.u_rep = u.rep();
    chain.ell_rep = ell.rep();
    rt_rec(chain.modulus, chain.u_rep, chain.ell_rep, chain.steps);
    return chain;
}

BrauerClass2 cor_class(const SymbolChain& chain) {
    BrauerClass2 acc;
    for (const auto& s : chain.steps) acc = acc + class_of_symbol(s.a, s.b);
    return acc;
}

BrauerClass2 cor_class(const EtaleElement& u, const EtaleElement& ell) {
    return cor_class(rosset_tate(u, ell));
}

BrauerClass2 cor_class(const Rat& a, const EtaleElement& ell) {
    if (a == 0) throw error("ZeroArgument", "corestriction of a zero slot");
    require_unit(ell, "second");
    return class_of_symbol(a, ell.norm());
}

}  // namespace relbr
