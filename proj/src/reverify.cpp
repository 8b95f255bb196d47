#include "contentlab/reverify.hpp"

#include "contentlab/numeric.hpp"
#include "contentlab/rings.hpp"
#include "contentlab/valgroup.hpp"

#include <cstdlib>
#include <utility>

namespace contentlab {

namespace {

bool miss(std::string *why, const std::string &msg) {
    if (why && why->empty()) *why = msg;
    return false;
}

// Valuation of a nonzero Hahn element, recomputed from its raw support.
// HahnData keeps ascending support, but we take the minimum explicitly so
// the replay does not lean on that invariant.
std::optional<GroupElement> raw_valuation(const RingElement &e) {
    if (e.ring().kind() != RingKind::HahnVal) return std::nullopt;
    const auto &terms = e.as_hahn().terms;
    if (terms.empty()) return std::nullopt;
    GroupElement best = terms.front().first;
    for (const auto &[v, c] : terms)
        if (compare(v, best) == Ordering::LT) best = v;
    return best;
}

int first_nonzero_index(const GroupElement &v) {
    for (std::size_t i = 0; i < v.coords.size(); ++i)
        if (v.coords[i] != 0) return static_cast<int>(i);
    return -1;
}

// ----------------------------------------------------------------
// membership

bool check_member(const MemberCert &c, std::string *why) {
    const RingId &R = c.element.ring();
    if (c.hahn) {
        const HahnMemberData &h = *c.hahn;
        if (R.kind() != RingKind::HahnVal)
            return miss(why, "hahn data on a non-series ring");
        if (h.argmin >= c.gens.size())
            return miss(why, "argmin out of range");
        auto gv = raw_valuation(c.gens[h.argmin]);
        if (!gv || !(*gv == h.min_value))
            return miss(why, "cited generator does not attain min_value");
        // g_argmin = unit * t^min_value over the residue field, so the
        // ideal contains t^min_value; one product closes the claim.
        RingElement mono = hahn_monomial(R, h.min_value);
        if (!(mul(h.cofactor, mono) == c.element))
            return miss(why, "cofactor * t^min_value != element");
        return true;
    }
    if (c.coeffs.size() != c.gens.size())
        return miss(why, "coefficient list does not match generators");
    RingElement acc = ring_zero(R);
    for (std::size_t i = 0; i < c.gens.size(); ++i)
        acc = add(acc, mul(c.coeffs[i], c.gens[i]));
    if (!(acc == c.element))
        return miss(why, "combination does not reproduce the element");
    return true;
}

// ----------------------------------------------------------------
// non-membership witnesses

// Both directions between gens and normal_gen, so (gens) == (normal_gen)
// is forced before the remainder argument runs.
bool check_normal_ties(const std::vector<RingElement> &gens,
                       const RingElement &normal,
                       const std::vector<RingElement> &bezout,
                       const std::vector<RingElement> &quotients,
                       std::string *why) {
    if (bezout.size() != gens.size() || quotients.size() != gens.size())
        return miss(why, "bezout data does not match generators");
    RingElement acc = ring_zero(normal.ring());
    for (std::size_t i = 0; i < gens.size(); ++i)
        acc = add(acc, mul(bezout[i], gens[i]));
    if (!(acc == normal))
        return miss(why, "bezout combination misses the normal generator");
    for (std::size_t i = 0; i < gens.size(); ++i)
        if (!(mul(quotients[i], normal) == gens[i]))
            return miss(why, "generator is not a multiple of the normal form");
    return true;
}

// The remainder refutes membership only when it sits in a range no
// multiple of the normal generator can reach. That range is a ring fact,
// checked here per kind.
bool remainder_escapes(const RingElement &rem, const RingElement &normal,
                       std::string *why) {
    const RingId &R = rem.ring();
    switch (R.kind()) {
    case RingKind::Int: {
        const Int &r = rem.as_int();
        const Int &g = normal.as_int();
        if (r == 0 || g == 0) return miss(why, "degenerate remainder pair");
        if (!(abs(r) < abs(g)))
            return miss(why, "remainder not below the normal generator");
        return true;
    }
    case RingKind::IntMod: {
        const Int &n = R.modulus();
        const Int &r = rem.as_int();
        const Int &d = normal.as_int();
        if (d == 0 || n % d != 0)
            return miss(why, "normal generator does not divide the modulus");
        if (r % d == 0) return miss(why, "remainder is a multiple mod n");
        return true;
    }
    case RingKind::UniPoly: {
        if (!R.base().is_field())
            return miss(why, "division witness needs field coefficients");
        if (is_zero(rem)) return miss(why, "zero remainder");
        if (!(poly_degree(rem) < poly_degree(normal)))
            return miss(why, "remainder degree not reduced");
        return true;
    }
    default:
        return miss(why, "division witness in an unsupported ring");
    }
}

bool check_graded_dual(const NonMemberCert &c, const GradedDualWitness &w,
                       std::string *why) {
    const RingId &R = c.element.ring();
    if (R.kind() != RingKind::BiPolyQ)
        return miss(why, "graded dual outside the two-variable ring");
    auto lambda_at = [&](int i, int j) {
        for (const auto &[mono, v] : w.lambda)
            if (mono.first == i && mono.second == j) return v;
        return Rat(0);
    };
    for (const auto &[mono, v] : w.lambda) {
        (void)v;
        if (mono.first < 0 || mono.second < 0 ||
            mono.first + mono.second != w.degree)
            return miss(why, "functional supported off the stated degree");
    }
    // lambda kills every degree-d shift x^a y^b * g of every generator
    for (const auto &g : c.gens) {
        if (!bipoly_homogeneous(g))
            return miss(why, "inhomogeneous generator");
        int dg = bipoly_total_degree(g);
        if (dg < 0) continue; // zero generator shifts to zero
        if (dg > w.degree)
            return miss(why, "generator degree above the functional degree");
        int shift = w.degree - dg;
        for (int a = 0; a <= shift; ++a) {
            int b = shift - a;
            Rat pairing(0);
            for (const auto &[mono, coef] : g.as_bipoly().terms)
                pairing += coef * lambda_at(mono.first + a, mono.second + b);
            if (pairing != 0)
                return miss(why, "functional does not kill a generator shift");
        }
    }
    Rat on_elem(0);
    for (const auto &[mono, coef] : c.element.as_bipoly().terms)
        if (mono.first + mono.second == w.degree)
            on_elem += coef * lambda_at(mono.first, mono.second);
    if (on_elem == 0)
        return miss(why, "functional vanishes on the element too");
    return true;
}

bool check_non_member(const NonMemberCert &c, std::string *why);

bool check_hom_image(const NonMemberCert &c, const HomImageWitness &w,
                     std::string *why) {
    if (!w.target) return miss(why, "missing image certificate");
    const NonMemberCert &t = *w.target;
    if (!(apply_hom(w.hom, c.element) == t.element))
        return miss(why, "element image mismatch");
    if (t.gens.size() != c.gens.size())
        return miss(why, "generator image count mismatch");
    for (std::size_t i = 0; i < c.gens.size(); ++i)
        if (!(apply_hom(w.hom, c.gens[i]) == t.gens[i]))
            return miss(why, "generator image mismatch");
    return check_non_member(t, why);
}

bool check_non_member(const NonMemberCert &c, std::string *why) {
    if (std::holds_alternative<DivisionWitness>(c.witness)) {
        const auto &w = std::get<DivisionWitness>(c.witness);
        if (!check_normal_ties(c.gens, w.normal_gen, w.bezout,
                               w.gen_quotients, why))
            return false;
        if (!(add(mul(w.quotient, w.normal_gen), w.remainder) == c.element))
            return miss(why, "division identity fails");
        return remainder_escapes(w.remainder, w.normal_gen, why);
    }
    if (std::holds_alternative<ZeroIdealWitness>(c.witness)) {
        for (const auto &g : c.gens)
            if (!is_zero(g)) return miss(why, "nonzero generator");
        if (is_zero(c.element)) return miss(why, "zero element");
        return true;
    }
    if (std::holds_alternative<HahnValuationWitness>(c.witness)) {
        const auto &w = std::get<HahnValuationWitness>(c.witness);
        if (w.argmin >= c.gens.size()) return miss(why, "argmin out of range");
        auto gv = raw_valuation(c.gens[w.argmin]);
        if (!gv || !(*gv == w.min_gen_value))
            return miss(why, "cited generator misses min_gen_value");
        for (const auto &g : c.gens) {
            auto v = raw_valuation(g);
            if (v && compare(*v, w.min_gen_value) == Ordering::LT)
                return miss(why, "a generator sits below min_gen_value");
        }
        auto ev = raw_valuation(c.element);
        if (!ev || !(*ev == w.elem_value))
            return miss(why, "element valuation mismatch");
        if (compare(w.elem_value, w.min_gen_value) != Ordering::LT)
            return miss(why, "element valuation not below the ideal");
        return true;
    }
    if (std::holds_alternative<GradedDualWitness>(c.witness))
        return check_graded_dual(c, std::get<GradedDualWitness>(c.witness),
                                 why);
    return check_hom_image(c, std::get<HomImageWitness>(c.witness), why);
}

// ----------------------------------------------------------------
// radical certificates

bool check_radical_member(const RadicalMemberCert &c, std::string *why) {
    if (c.power < 1) return miss(why, "power below 1");
    if (!(pow_elem(c.element, static_cast<unsigned>(c.power)) ==
          c.cert.element))
        return miss(why, "stored power is not element^power");
    return check_member(c.cert, why);
}

bool check_radical_non_member(const RadicalNonMemberCert &c,
                              std::string *why);

bool check_radical_bezout(const RadicalNonMemberCert &c,
                          const RadicalBezoutWitness &w, std::string *why) {
    if (!check_normal_ties(c.gens, w.normal_gen, w.bezout, w.gen_quotients,
                           why))
        return false;
    if (!(mul(w.factor, w.factor_cof) == w.normal_gen))
        return miss(why, "factor does not divide the normal generator");
    if (is_unit(w.factor)) return miss(why, "factor is a unit");
    const RingId &R = c.element.ring();
    if (!(add(mul(w.u, w.factor), mul(w.v, c.element)) == ring_one(R)))
        return miss(why, "element is not coprime to the factor");
    // mod factor the element stays a unit, so no power reaches the ideal
    return true;
}

bool check_hahn_radical(const RadicalNonMemberCert &c,
                        const HahnRadicalWitness &w, std::string *why) {
    auto ev = raw_valuation(c.element);
    if (!ev || !(*ev == w.elem_value))
        return miss(why, "element valuation mismatch");
    bool found = false;
    GroupElement least = w.ideal_value;
    for (const auto &g : c.gens) {
        auto v = raw_valuation(g);
        if (!v) continue;
        if (!found || compare(*v, least) == Ordering::LT) least = *v;
        found = true;
    }
    if (!found || !(least == w.ideal_value))
        return miss(why, "ideal valuation mismatch");
    if (!is_nonnegative(w.elem_value))
        return miss(why, "element valuation outside the cone");
    // need k*elem_value < ideal_value for every k >= 1
    if (sign_of(w.elem_value) == 0)
        return is_positive(w.ideal_value)
                   ? true
                   : miss(why, "unit element against a trivial ideal value");
    if (w.elem_value.group.kind() != GroupKind::LexTuples)
        return miss(why, "archimedean value admits no uniform bound");
    int ie = first_nonzero_index(w.elem_value);
    int ii = first_nonzero_index(w.ideal_value);
    if (ii < 0 || ie <= ii)
        return miss(why, "element value is not infinitesimal for the ideal");
    if (w.ideal_value.coords[ii] < 0)
        return miss(why, "ideal value not positive at its leading slot");
    // spot check one multiple on top of the positional argument
    if (compare(scale(Int(7), w.elem_value), w.ideal_value) != Ordering::LT)
        return miss(why, "a small multiple already overtakes the ideal");
    return true;
}

bool check_radical_hom_image(const RadicalNonMemberCert &c,
                             const RadicalHomImageWitness &w,
                             std::string *why) {
    if (!w.target) return miss(why, "missing image certificate");
    const RadicalNonMemberCert &t = *w.target;
    if (!(apply_hom(w.hom, c.element) == t.element))
        return miss(why, "element image mismatch");
    if (t.gens.size() != c.gens.size())
        return miss(why, "generator image count mismatch");
    for (std::size_t i = 0; i < c.gens.size(); ++i)
        if (!(apply_hom(w.hom, c.gens[i]) == t.gens[i]))
            return miss(why, "generator image mismatch");
    return check_radical_non_member(t, why);
}

bool check_radical_non_member(const RadicalNonMemberCert &c,
                              std::string *why) {
    if (std::holds_alternative<RadicalBezoutWitness>(c.witness))
        return check_radical_bezout(
            c, std::get<RadicalBezoutWitness>(c.witness), why);
    if (std::holds_alternative<ZeroIdealWitness>(c.witness)) {
        for (const auto &g : c.gens)
            if (!is_zero(g)) return miss(why, "nonzero generator");
        if (is_nilpotent(c.element)) return miss(why, "nilpotent element");
        return true;
    }
    if (std::holds_alternative<HahnRadicalWitness>(c.witness))
        return check_hahn_radical(c, std::get<HahnRadicalWitness>(c.witness),
                                  why);
    return check_radical_hom_image(
        c, std::get<RadicalHomImageWitness>(c.witness), why);
}

} // namespace

bool reverify_member(const MemberCert &c, std::string *why) {
    return check_member(c, why);
}

bool reverify_non_member(const NonMemberCert &c, std::string *why) {
    return check_non_member(c, why);
}

bool reverify_radical_member(const RadicalMemberCert &c, std::string *why) {
    return check_radical_member(c, why);
}

bool reverify_radical_non_member(const RadicalNonMemberCert &c,
                                 std::string *why) {
    return check_radical_non_member(c, why);
}

bool reverify_fact(const CertifiedFact &f, std::string *why) {
    try {
        if (std::holds_alternative<MemberCert>(f.cert))
            return check_member(std::get<MemberCert>(f.cert), why);
        if (std::holds_alternative<NonMemberCert>(f.cert))
            return check_non_member(std::get<NonMemberCert>(f.cert), why);
        if (std::holds_alternative<RadicalMemberCert>(f.cert))
            return check_radical_member(std::get<RadicalMemberCert>(f.cert),
                                        why);
        return check_radical_non_member(
            std::get<RadicalNonMemberCert>(f.cert), why);
    } catch (const std::exception &e) {
        return miss(why, std::string("replay raised: ") + e.what());
    }
}

ReverifyStats reverify_all(const std::vector<CertifiedFact> &facts) {
    ReverifyStats stats;
    for (const auto &f : facts) {
        ++stats.total;
        std::string why;
        if (reverify_fact(f, &why)) {
            ++stats.passed;
        } else {
            stats.failures.push_back(f.context + ": " + why);
        }
    }
    return stats;
}

} // namespace contentlab
