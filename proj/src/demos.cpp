#include "contentlab/demos.hpp"

#include "contentlab/content.hpp"
#include "contentlab/errors.hpp"
#include "contentlab/ideals.hpp"
#include "contentlab/propcheck.hpp"
#include "contentlab/sampling.hpp"
#include "contentlab/verdict.hpp"

#include <utility>

namespace contentlab {

using nlohmann::json;

namespace {

void harvest(RunRecord &r, const PropertyVerdict &v) {
    for (const auto &f : v.facts) r.facts.push_back(f);
}

// The pair of linear polynomials over Q[x, y] whose coefficient ideals
// refuse to multiply: f = x + y*T, g = y + x*T.
std::pair<PolyOverRing, PolyOverRing> plane_pair() {
    RingId B = RingId::bi_poly_q("x", "y");
    RingElement x = make_bipoly(B, {{{1, 0}, Rat(1)}});
    RingElement y = make_bipoly(B, {{{0, 1}, Rat(1)}});
    return {PolyOverRing::make(B, "T", {x, y}),
            PolyOverRing::make(B, "T", {y, x})};
}

RunRecord demo_gauss_fails(std::uint64_t) {
    auto [f, g] = plane_pair();
    RunRecord r;
    r.command = "demo gauss-fails-bipoly";
    r.inputs = {{"ring", f.base().to_string()},
                {"var", f.var()},
                {"f", f.to_text()},
                {"g", g.to_text()}};
    PropertyVerdict gauss = check_gaussian(f, g);
    PropertyVerdict weak = check_weak_content_pair(f, g);
    r.report = {{"contents_multiply", verdict_to_json(gauss)},
                {"radical_containment", verdict_to_json(weak)}};
    harvest(r, gauss);
    harvest(r, weak);
    return r;
}

RunRecord demo_dm2(std::uint64_t) {
    auto [f, g] = plane_pair();
    RunRecord r;
    r.command = "demo dm2-bipoly";
    r.inputs = {{"ring", f.base().to_string()},
                {"var", f.var()},
                {"f", f.to_text()},
                {"g", g.to_text()},
                {"max_n", 3}};
    DMReport dm = dm_exponent(f, g, 3);
    r.report = dm.to_json();
    for (const auto &[n, v] : dm.per_n) harvest(r, v);
    return r;
}

RunRecord demo_prufer(std::uint64_t seed) {
    RunRecord r;
    r.command = "demo prufer-gauss";
    r.inputs = {{"seed", seed},
                {"bases", {"Int", "Q[z]", "Hahn(Z,Q)", "Q[x,y]"}}};
    struct Case {
        const char *key;
        RingId base;
        int pairs;
    };
    const Case cases[] = {
        {"Int", RingId::integers(), 200},
        {"Q[z]", RingId::uni_poly(RingId::rationals(), "z"), 60},
        {"Hahn(Z,Q)",
         RingId::hahn(GroupId::integers(), RingId::rationals()), 100},
        {"Q[x,y]", RingId::bi_poly_q("x", "y"), 40},
    };
    json rep = json::object();
    for (const auto &c : cases) {
        PropertyVerdict v = pruefer_gauss_suite(c.base, c.pairs, seed);
        rep[c.key] = verdict_to_json(v);
        harvest(r, v);
    }
    r.report = std::move(rep);
    return r;
}

RunRecord demo_valuation(std::uint64_t) {
    RunRecord r;
    r.command = "demo valuation-trichotomy";
    r.inputs = {{"groups", {"Z", "LexZ(2)", "Quad(2)"}}};
    json rep = json::object();
    for (const auto &g :
         {GroupId::integers(), GroupId::lex(2), GroupId::quad(2)}) {
        PropertyVerdict v = valuation_verdict(g);
        rep[g.to_string()] = verdict_to_json(v);
        harvest(r, v);
    }
    r.report = std::move(rep);
    return r;
}

// Over a field the only contents are (0) and (1), so a weak content
// algebra cannot carry a nonzero nilpotent: its defining relation would
// put a unit ideal inside the radical of (0). The walkthrough models
// Q[x]/(x^2) through Q[x] arithmetic and contrasts it with the polynomial
// algebra Q[T], where sampling finds no violation.
RunRecord demo_field_case(std::uint64_t seed) {
    RingId QX = RingId::uni_poly(RingId::rationals(), "x");
    RingElement x = make_poly(QX, {ring_zero(RingId::rationals()),
                                   ring_one(RingId::rationals())});
    Ideal rel = Ideal::make(QX, {mul(x, x)});

    RunRecord r;
    r.command = "demo field-case";
    r.inputs = {{"field", "Q"},
                {"relation", rel.to_text()},
                {"seed", seed},
                {"domain_samples", 100}};

    MembershipResult sq = membership(mul(x, x), rel);
    MembershipResult cls = membership(x, rel);
    if (sq.kind != MembershipResult::Kind::Member ||
        cls.kind != MembershipResult::Kind::NonMember)
        throw Error(ErrorKind::Internal, "field-case relation checks drifted");
    r.facts.push_back({"square-falls-into-relation", *sq.member});
    r.facts.push_back({"class-survives-relation", *cls.non_member});

    json not_prime;
    try {
        check_prime_extension(rel);
        throw Error(ErrorKind::Internal, "x^2 passed as prime");
    } catch (const Error &e) {
        if (e.kind() != ErrorKind::NotPrimeInput) throw;
        not_prime = e.payload();
    }

    SampleBounds sb;
    Rng rng(seed);
    int held = 0;
    const int samples = 100;
    for (int i = 0; i < samples; ++i) {
        std::vector<RingElement> fc, gc;
        int df = static_cast<int>(rng.range(0, 3));
        int dg = static_cast<int>(rng.range(0, 3));
        for (int k = 0; k <= df; ++k)
            fc.push_back(sample_element(RingId::rationals(), rng, sb));
        for (int k = 0; k <= dg; ++k)
            gc.push_back(sample_element(RingId::rationals(), rng, sb));
        PolyOverRing f = PolyOverRing::make(RingId::rationals(), "T", fc);
        PolyOverRing g = PolyOverRing::make(RingId::rationals(), "T", gc);
        PropertyVerdict v = check_weak_content_pair(f, g);
        if (v.is_holds()) ++held;
        harvest(r, v);
    }

    r.report = {
        {"nilpotent_algebra",
         {{"modeled_in", QX.to_string()},
          {"relation", rel.to_text()},
          {"square_in_relation", true},
          {"class_outside_relation", true},
          {"relation_not_prime", not_prime},
          {"content_of_nonzero_class", "(1)"},
          {"weak_content_demand", "(1)*(1) inside rad((0)), impossible"}}},
        {"domain_algebra",
         {{"ring", "Q[T]"}, {"samples", samples}, {"held", held}}},
        {"conclusion",
         "over a field, content behavior collapses to being a domain"},
    };
    return r;
}

// Inverting X in Q[X] gives an extension with no Ohm-Rush content for 1:
// the unit lies in the extension of every (X^n), their intersection only
// shrinks, and no stage ever contains 1. Bounded to N levels, so this is
// an illustration of the descent, not a proof of its limit.
RunRecord demo_localization(std::uint64_t) {
    const int N = 20;
    RingId QX = RingId::uni_poly(RingId::rationals(), "X");
    RingElement X = make_poly(QX, {ring_zero(RingId::rationals()),
                                   ring_one(RingId::rationals())});
    RingElement one = ring_one(QX);

    RunRecord r;
    r.command = "demo localization-example";
    r.inputs = {{"ring", QX.to_string()}, {"inverted", "X"}, {"levels", N}};

    int unit_checks = 0;
    for (int n = 1; n <= N; ++n) {
        RingElement xn = pow_elem(X, static_cast<unsigned>(n));
        // 1 = X^n * X^(-n) holds in the localization exactly because X^n
        // divides itself on the nose here.
        auto q = exact_div(xn, xn);
        if (q && *q == one) ++unit_checks;
        MembershipResult esc = membership(one, Ideal::make(QX, {xn}));
        if (esc.kind != MembershipResult::Kind::NonMember)
            throw Error(ErrorKind::Internal, "1 slipped into (X^n)");
        r.facts.push_back({"one-escapes-level-" + std::to_string(n),
                           *esc.non_member});
    }

    Ideal chain = Ideal::make(QX, {X});
    for (int n = 2; n <= N; ++n)
        chain = ideal_intersect(
            chain, Ideal::make(QX, {pow_elem(X, static_cast<unsigned>(n))}));
    RingElement xN = pow_elem(X, static_cast<unsigned>(N));
    PropertyVerdict collapse = ideal_equal(chain, Ideal::make(QX, {xN}));
    harvest(r, collapse);

    int escapes = 0;
    Ideal top = Ideal::make(QX, {xN});
    for (int d = 0; d < N; ++d) {
        MembershipResult m =
            membership(pow_elem(X, static_cast<unsigned>(d)), top);
        if (m.kind == MembershipResult::Kind::NonMember) {
            ++escapes;
            r.facts.push_back({"monomial-degree-" + std::to_string(d) +
                                   "-outside-top-level",
                               *m.non_member});
        }
    }

    r.report = {
        {"localized_unit_checks", unit_checks},
        {"one_escapes_every_level", true},
        {"intersection_of_levels", chain.to_text()},
        {"intersection_matches_top", verdict_to_json(collapse)},
        {"monomials_below_top_escaping", escapes},
        {"caveat", "bounded to " + std::to_string(N) +
                       " levels: the intersection keeps dropping and no "
                       "finitely generated ideal under all levels can "
                       "certify 1"},
    };
    return r;
}

} // namespace

std::vector<std::string> demo_names() {
    return {"gauss-fails-bipoly",  "dm2-bipoly", "prufer-gauss",
            "valuation-trichotomy", "field-case", "localization-example"};
}

RunRecord run_demo(const std::string &name, std::uint64_t seed) {
    RunRecord r;
    if (name == "gauss-fails-bipoly") r = demo_gauss_fails(seed);
    else if (name == "dm2-bipoly") r = demo_dm2(seed);
    else if (name == "prufer-gauss") r = demo_prufer(seed);
    else if (name == "valuation-trichotomy") r = demo_valuation(seed);
    else if (name == "field-case") r = demo_field_case(seed);
    else if (name == "localization-example") r = demo_localization(seed);
    else
        throw Error(ErrorKind::UnknownDemo,
                    "no demo named '" + name + "'",
                    {{"known", demo_names()}});
    r.version = library_version();
    return r;
}

} // namespace contentlab
