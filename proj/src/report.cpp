#include "relbr/report.hpp"

#include <algorithm>
#include <map>

#include "json.hpp"

namespace relbr {

using ordered_json = nlohmann::ordered_json;

namespace {

Rat rat_from_json(const ordered_json& j) {
    if (j.is_number_integer()) return Rat(Int(static_cast<long>(j.get<long long>())));
    if (j.is_string()) {
        try {
            return rat_from_string(j.get<std::string>());
        } catch (const error& e) {
            throw error("ParseError", e.what());
        }
    }
    throw error("ParseError", "expected an integer or a \"p/q\" string");
}

Poly poly_from_json(const ordered_json& j) {
    if (!j.is_array()) throw error("ParseError", "expected a coefficient array");
    std::vector<Rat> c;
    for (const auto& e : j) c.push_back(rat_from_json(e));
    return Poly(std::move(c));
}

DivisorSpec divisor_from_json(const ordered_json& j) {
    if (!j.is_array()) throw error("ParseError", "expected an array of divisor items");
    DivisorSpec d;
    for (const auto& e : j) {
        int mult = e.value("mult", 1);
        if (e.contains("monic"))
            d.items.push_back(DivisorItem::monic(poly_from_json(e.at("monic")), mult));
        else if (e.contains("weierstrass"))
            d.items.push_back(DivisorItem::weierstrass(rat_from_json(e.at("weierstrass")), mult));
        else if (e.contains("infinity"))
            d.items.push_back(DivisorItem::infinity(mult));
        else
            throw error("ParseError", "divisor item needs monic, weierstrass or infinity");
    }
    return d;
}

}  // namespace

ProblemSpec problem_from_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const std::exception& e) {
        throw error("ParseError", e.what());
    }
    ProblemSpec spec;
    try {
        spec.name = j.value("name", "");
        spec.curve = poly_from_json(j.at("curve"));
        spec.ell = poly_from_json(j.at("ell"));
        if (j.contains("n")) {
            spec.has_n = true;
            spec.n = j.at("n").get<int>();
        }
        if (j.contains("assertions"))
            spec.br0_x_trivial = j.at("assertions").value("br0_X_trivial", false);
        int counter = 0;
        for (const char* key : {"generators", "divisors"}) {
            if (!j.contains(key)) continue;
            for (const auto& g : j.at(key)) {
                GeneratorInput in;
                ++counter;
                in.label = g.value("label", "G" + std::to_string(counter));
                if (g.contains("point")) {
                    in.is_point = true;
                    const auto& p = g.at("point");
                    if (p.is_string() && p.get<std::string>() == "infinity")
                        in.point = EllipticPoint::infinity();
                    else if (p.is_array() && p.size() == 2)
                        in.point = EllipticPoint::affine(rat_from_json(p[0]), rat_from_json(p[1]));
                    else
                        throw error("ParseError", "point must be [x, y] or \"infinity\"");
                } else if (g.contains("divisor")) {
                    in.divisor = divisor_from_json(g.at("divisor"));
                } else {
                    throw error("ParseError", "generator needs a point or a divisor");
                }
                spec.generators.push_back(std::move(in));
            }
        }
    } catch (const error&) {
        throw;
    } catch (const std::exception& e) {
        throw error("ParseError", e.what());
    }
    return spec;
}

namespace {

std::vector<BrauerClass2> enumerate_span(const std::vector<BrauerClass2>& basis) {
    std::vector<BrauerClass2> out{BrauerClass2()};
    for (const auto& b : basis) {
        size_t n = out.size();
        for (size_t i = 0; i < n; ++i) out.push_back(out[i] + b);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// reduced echelon basis of {x : sum_i x_i cls_i = 0} over F2
std::vector<std::vector<int>> kernel_of_classes(const std::vector<BrauerClass2>& cls) {
    const int k = static_cast<int>(cls.size());
    std::vector<Place> support;
    for (const auto& c : cls)
        for (const auto& p : c.ramified()) support.push_back(p);
    std::sort(support.begin(), support.end());
    support.erase(std::unique(support.begin(), support.end()), support.end());
    const int m = static_cast<int>(support.size());

    std::vector<std::vector<int>> rows(k, std::vector<int>(m, 0));
    std::vector<std::vector<int>> tr(k, std::vector<int>(k, 0));
    for (int i = 0; i < k; ++i) {
        tr[i][i] = 1;
        for (const auto& p : cls[i].ramified()) {
            int c = static_cast<int>(std::lower_bound(support.begin(), support.end(), p) -
                                     support.begin());
            rows[i][c] = 1;
        }
    }
    int r = 0;
    for (int c = 0; c < m && r < k; ++c) {
        int piv = -1;
        for (int i = r; i < k; ++i)
            if (rows[i][c]) { piv = i; break; }
        if (piv < 0) continue;
        std::swap(rows[piv], rows[r]);
        std::swap(tr[piv], tr[r]);
        for (int i = 0; i < k; ++i) {
            if (i == r || !rows[i][c]) continue;
            for (int t = 0; t < m; ++t) rows[i][t] ^= rows[r][t];
            for (int t = 0; t < k; ++t) tr[i][t] ^= tr[r][t];
        }
        ++r;
    }
    std::vector<std::vector<int>> ker(tr.begin() + r, tr.end());
    // canonical reduced echelon form of the kernel itself
    int kr = 0;
    for (int c = 0; c < k && kr < static_cast<int>(ker.size()); ++c) {
        int piv = -1;
        for (int i = kr; i < static_cast<int>(ker.size()); ++i)
            if (ker[i][c]) { piv = i; break; }
        if (piv < 0) continue;
        std::swap(ker[piv], ker[kr]);
        for (int i = 0; i < static_cast<int>(ker.size()); ++i) {
            if (i == kr || !ker[i][c]) continue;
            for (int t = 0; t < k; ++t) ker[i][t] ^= ker[kr][t];
        }
        ++kr;
    }
    return ker;
}

GeneratorResult evaluate_generator(const HyperCurve& curve, const EtaleElement& ell,
                                   const GeneratorInput& gen) {
    EtaleElement u = gen.is_point ? x_minus_theta(curve, gen.point)
                                  : x_minus_theta(curve, gen.divisor);
    GeneratorResult res;
    res.label = gen.label;
    res.chain = rosset_tate(u, ell);
    res.cls = cor_class(res.chain);
    return res;
}

void fill_span(RelBrReport& rep) {
    std::vector<BrauerClass2> classes;
    for (const auto& g : rep.per_generator) classes.push_back(g.cls);
    SpanResult span = span_and_membership(classes, BrauerClass2());
    rep.br0_basis = span.basis;
    rep.br0_order = 1 << span.dimension;
    rep.br0_elements = enumerate_span(span.basis);
}

}  // namespace

RelBrReport relbr_elliptic(const ProblemSpec& spec) {
    HyperCurve curve(spec.curve);
    if (curve.degree() != 3) throw error("NotCubic", "odd-degree path needs a cubic curve");
    if (curve.lead() != 1) throw error("NotMonic", "cubic curve must be monic");
    EtaleAlgebra algebra = curve.algebra();
    EtaleElement ell(algebra, spec.ell);

    RelBrReport rep;
    rep.name = spec.name;
    rep.degree = 3;
    rep.norm_ell = ell.norm();

    TorsorModel model = build_model_deg3(curve, ell);  // checks N(ell) square
    rep.conic = conic_class(model.conic());

    for (const auto& gen : spec.generators) {
        if (gen.is_point && !on_curve(curve, gen.point))
            throw error("GeneratorOffCurve",
                        "generator " + gen.label + " does not satisfy y^2 = F(x)");
        rep.per_generator.push_back(evaluate_generator(curve, ell, gen));
    }
    fill_span(rep);

    std::vector<BrauerClass2> classes;
    for (const auto& g : rep.per_generator) classes.push_back(g.cls);
    rep.period_equals_index = span_and_membership(classes, *rep.conic).contains;

    rep.br_elements = rep.br0_elements;
    if (!*rep.period_equals_index)
        for (const auto& s : rep.br0_elements) rep.br_elements.push_back(*rep.conic + s);
    std::sort(rep.br_elements.begin(), rep.br_elements.end());
    rep.br_order = static_cast<int>(rep.br_elements.size());
    return rep;
}

RelBrReport relbr_even(const ProblemSpec& spec) {
    HyperCurve curve(spec.curve);
    if (curve.degree() % 2 != 0)
        throw error("NotEvenDegree", "even-degree path needs a quartic or sextic curve");
    int n = spec.has_n ? spec.n : 0;
    if (n != 0 && n != 1) throw error("BadTwist", "twist exponent must be 0 or 1");
    EtaleAlgebra algebra = curve.algebra();
    EtaleElement ell(algebra, spec.ell);
    if (!ell.is_unit()) throw error("NonUnit", "ell must be a unit");
    Rat target = rat_pow(curve.lead(), n) * ell.norm();
    if (!is_square(target))
        throw error("NormConditionFailed", "lc(F)^" + std::to_string(n) +
                                               " * N(ell) = " + to_string(target) +
                                               " is not a rational square");
    if (curve.genus() % 2 == 1 && !spec.br0_x_trivial)
        throw error("AssertionRequired",
                    "the even-degree computation assumes Br(X/Q) = 0; assert "
                    "br0_X_trivial in the problem file");

    RelBrReport rep;
    rep.name = spec.name;
    rep.degree = curve.degree();
    rep.norm_ell = ell.norm();
    rep.n_used = n;

    for (const auto& gen : spec.generators) {
        if (gen.is_point)
            throw error("BadGenerator",
                        "even-degree generators must be degree 0 divisors, not points");
        int deg = gen.divisor.degree(curve);
        if (deg != 0)
            throw error("DegreeNotZero", "divisor " + gen.label + " has degree " +
                                             std::to_string(deg) + ", expected 0");
        rep.per_generator.push_back(evaluate_generator(curve, ell, gen));
    }
    fill_span(rep);

    std::vector<BrauerClass2> classes;
    for (const auto& g : rep.per_generator) classes.push_back(g.cls);
    rep.kernel_basis = kernel_of_classes(classes);

    std::string subgroup;
    for (const auto& vec : rep.kernel_basis) {
        std::string combo;
        for (size_t i = 0; i < vec.size(); ++i)
            if (vec[i]) {
                if (!combo.empty()) combo += "+";
                combo += rep.per_generator[i].label;
            }
        if (combo.empty()) combo = "0";
        if (!subgroup.empty()) subgroup += ", ";
        subgroup += combo;
    }
    if (subgroup.empty()) subgroup = "0";
    rep.represented_iff =
        "a point of J(Q) is represented by a Q-rational divisor on the torsor iff its "
        "image in J(Q)/2J(Q) lies in the subgroup generated by " + subgroup;
    rep.scope_note =
        "classes certify Br0(V/Q), the part of Br(V/Q) visible on degree 0 divisors; "
        "the quotient Br(V/Q)/Br0(V/Q) is not computed here";
    return rep;
}

RelBrReport relbr_auto(const ProblemSpec& spec) {
    Poly f = spec.curve;
    if (f.degree() == 3) return relbr_elliptic(spec);
    return relbr_even(spec);
}

std::vector<std::string> class_to_strings(const BrauerClass2& c) {
    std::vector<std::string> out;
    for (const auto& p : c.ramified()) out.push_back(p.str());
    return out;
}

std::string rat_str(const Rat& r) { return to_string(r); }

namespace {

ordered_json classes_json(const std::vector<BrauerClass2>& v) {
    ordered_json arr = ordered_json::array();
    for (const auto& c : v) arr.push_back(class_to_strings(c));
    return arr;
}

}  // namespace

std::string report_to_json(const RelBrReport& rep) {
    ordered_json j;
    if (!rep.name.empty()) j["name"] = rep.name;
    j["degree"] = rep.degree;
    j["norm_ell"] = rat_str(rep.norm_ell);
    if (rep.n_used) j["n"] = *rep.n_used;
    j["generators_provenance"] = "user-asserted";

    ordered_json gens = ordered_json::array();
    for (const auto& g : rep.per_generator) {
        ordered_json e;
        e["label"] = g.label;
        e["class"] = class_to_strings(g.cls);
        gens.push_back(e);
    }
    j["per_generator"] = gens;

    j["br0_basis"] = classes_json(rep.br0_basis);
    j["br0_order"] = rep.br0_order;
    j["br0_elements"] = classes_json(rep.br0_elements);

    if (rep.conic) {
        j["conic_class"] = class_to_strings(*rep.conic);
        j["period_equals_index"] = *rep.period_equals_index;
        ordered_json bg;
        bg["order"] = *rep.br_order;
        ordered_json gen_list = classes_json(rep.br0_basis);
        if (!*rep.period_equals_index) gen_list.push_back(class_to_strings(*rep.conic));
        bg["generators"] = gen_list;
        bg["elements"] = classes_json(rep.br_elements);
        j["brauer_group"] = bg;
    } else {
        j["kernel_basis"] = rep.kernel_basis;
        j["represented_iff"] = rep.represented_iff;
        j["scope"] = rep.scope_note;
    }

    ordered_json chains = ordered_json::array();
    for (const auto& g : rep.per_generator) {
        ordered_json e;
        e["label"] = g.label;
        ordered_json syms = ordered_json::array();
        for (const auto& s : g.chain.steps)
            syms.push_back(ordered_json::array({rat_str(s.a), rat_str(s.b)}));
        e["symbols"] = syms;
        e["note"] = "normalization-dependent; only the summed class is canonical";
        chains.push_back(e);
    }
    j["chains"] = chains;
    return j.dump(2) + "\n";
}

}  // namespace relbr
