#include "contentlab/propcheck.hpp"

#include "contentlab/errors.hpp"
#include "contentlab/factor.hpp"
#include "contentlab/sampling.hpp"

#include <algorithm>
#include <set>

namespace contentlab {

using nlohmann::json;

namespace {

// extension symbol not colliding with any variable of the base
std::string fresh_var(const RingId &r) {
    for (const char *v : {"T", "U", "W", "V", "S"})
        if (!r.variables().count(v))
            return v;
    throw Error(ErrorKind::Internal, "no free extension symbol");
}

// tri-state coefficient test for membership of f in P * base[var]:
// a polynomial lies in the extension exactly when every coefficient lies
// in P
struct CoeffsInIdeal {
    int state; // 1 all in, 0 some coefficient certified out, -1 undecided
    std::size_t out_index;
};

CoeffsInIdeal coeffs_in(const PolyOverRing &f, const Ideal &P, int bound) {
    bool undecided = false;
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        const RingElement &c = f.coeffs()[i];
        if (is_zero(c))
            continue;
        MembershipResult r = membership(c, P, bound);
        if (r.is_non_member())
            return {0, i};
        if (r.is_unknown())
            undecided = true;
    }
    return {undecided ? -1 : 1, 0};
}

PolyOverRing sample_poly_over(const RingId &base, const std::string &var,
                              Rng &rng, const SampleBounds &sb, int max_deg) {
    std::vector<RingElement> cs;
    int deg = static_cast<int>(rng.range(0, max_deg));
    for (int i = 0; i <= deg; ++i)
        cs.push_back(sample_element(base, rng, sb));
    return PolyOverRing::make(base, var, std::move(cs));
}

// sample a polynomial with at least one coefficient certified outside P
std::optional<PolyOverRing> sample_outside(const RingId &base,
                                           const std::string &var, Rng &rng,
                                           const SampleBounds &sb, int max_deg,
                                           const Ideal &P, int bound) {
    for (int tries = 0; tries < 12; ++tries) {
        PolyOverRing f = sample_poly_over(base, var, rng, sb, max_deg);
        if (coeffs_in(f, P, bound).state == 0)
            return f;
    }
    return std::nullopt;
}

json poly_pair_json(const PolyOverRing &f, const PolyOverRing &g) {
    return json{{"base", f.base().to_string()},
                {"f", f.to_text()},
                {"g", g.to_text()}};
}

std::string quotient_model(const Ideal &P) {
    const RingId &R = P.ring();
    if (P.is_zero_ideal())
        return R.to_string() + " itself";
    if (P.has_principal_normal())
        return R.to_string() + " modulo (" + P.normal_gen().to_text() + ")";
    std::string gens;
    for (const auto &g : P.gens())
        gens += (gens.empty() ? "" : ", ") + g.to_text();
    return R.to_string() + " modulo (" + gens + ")";
}

} // namespace

json SearchBounds::to_json() const {
    return json{{"degree", degree},
                {"coeff", coeff},
                {"samples", samples},
                {"powbound", powbound},
                {"bound", bound}};
}

json DMReport::to_json() const {
    json per = json::array();
    for (const auto &[n, v] : per_n)
        per.push_back(json{{"n", n}, {"verdict", verdict_to_json(v)}});
    json out{{"max_tried", max_tried}, {"per_n", per}};
    if (exponent)
        out["exponent"] = *exponent;
    else
        out["exponent"] = nullptr;
    return out;
}

DMReport dm_exponent(const PolyOverRing &f, const PolyOverRing &g, int max_n,
                     const SearchBounds &sb) {
    if (f.base() != g.base())
        throw Error(ErrorKind::RingMismatch,
                    "pair lives over different base rings");
    if (max_n < 1)
        throw Error(ErrorKind::PrecondViolated, "max_n must be at least 1");
    Ideal cf = orc_poly(f);
    Ideal cg = orc_poly(g);
    Ideal cfg = orc_poly(poly_mul(f, g));
    DMReport rep;
    rep.max_tried = max_n;
    for (int n = 1; n <= max_n; ++n) {
        Ideal lhs = ideal_product(ideal_power(cf, n), cg);
        Ideal rhs = ideal_product(ideal_power(cf, n - 1), cfg);
        PropertyVerdict v = ideal_equal(lhs, rhs, sb.bound);
        bool holds = v.is_holds();
        rep.per_n.emplace_back(n, std::move(v));
        if (holds) {
            rep.exponent = n;
            break;
        }
    }
    return rep;
}

PropertyVerdict check_gaussian(const PolyOverRing &f, const PolyOverRing &g,
                               const SearchBounds &sb) {
    if (f.base() != g.base())
        throw Error(ErrorKind::RingMismatch,
                    "pair lives over different base rings");
    Ideal lhs = orc_poly(poly_mul(f, g));
    Ideal rhs = ideal_product(orc_poly(f), orc_poly(g));
    PropertyVerdict v = ideal_equal(lhs, rhs, sb.bound);
    json ev = poly_pair_json(f, g);
    ev["product_content"] = lhs.to_text();
    ev["content_product"] = rhs.to_text();
    ev["detail"] = std::move(v.evidence);
    v.evidence = std::move(ev);
    return v;
}

PropertyVerdict check_weak_content_pair(const PolyOverRing &f,
                                        const PolyOverRing &g,
                                        const SearchBounds &sb) {
    if (f.base() != g.base())
        throw Error(ErrorKind::RingMismatch,
                    "pair lives over different base rings");
    Ideal prod = ideal_product(orc_poly(f), orc_poly(g));
    Ideal cfg = orc_poly(poly_mul(f, g));
    std::vector<CertifiedFact> facts;
    for (const auto &p : prod.gens()) {
        RadicalResult r = radical_membership(p, cfg, sb.powbound, sb.bound);
        if (r.is_member()) {
            facts.push_back(CertifiedFact{"generator-power-in", *r.member});
            continue;
        }
        json ev = poly_pair_json(f, g);
        ev["generator"] = p.to_text();
        ev["radical_of"] = cfg.to_text();
        if (r.is_non_member()) {
            ev["witness"] = cert_to_json(*r.non_member);
            facts.push_back(CertifiedFact{"generator-escapes", *r.non_member});
            return PropertyVerdict::fails(std::move(ev), std::move(facts));
        }
        ev["powbound"] = sb.powbound;
        ev["bound"] = sb.bound;
        return PropertyVerdict::unknown(std::move(ev));
    }
    json ev = poly_pair_json(f, g);
    ev["content_product"] = prod.to_text();
    ev["radical_of"] = cfg.to_text();
    ev["checked"] = prod.gens().size();
    ev["config"] = sb.to_json();
    PropertyVerdict out = PropertyVerdict::holds(std::move(ev));
    out.facts = std::move(facts);
    return out;
}

PropertyVerdict check_prime_extension(const Ideal &P, const SearchBounds &sb,
                                      std::uint64_t seed) {
    PropertyVerdict pv = is_prime(P);
    if (!pv.is_holds())
        throw Error(ErrorKind::NotPrimeInput,
                    "ideal is not prime, polynomial extension not examined",
                    verdict_to_json(pv));
    const RingId &R = P.ring();
    std::string var = fresh_var(R);

    Rng rng(seed);
    SampleBounds sbounds;
    sbounds.degree = std::min(sb.degree, 3);
    sbounds.coeff = sb.coeff;
    int checked = 0, skipped = 0;
    for (int it = 0; it < sb.samples; ++it) {
        auto f = sample_outside(R, var, rng, sbounds, std::min(sb.degree, 4),
                                P, sb.bound);
        auto g = sample_outside(R, var, rng, sbounds, std::min(sb.degree, 4),
                                P, sb.bound);
        if (!f || !g) {
            ++skipped;
            continue;
        }
        PolyOverRing h = poly_mul(*f, *g);
        CoeffsInIdeal st = coeffs_in(h, P, sb.bound);
        if (st.state == 1) {
            // a zero-divisor pair modulo the extension: disproof material
            std::vector<CertifiedFact> facts;
            for (const auto &c : h.coeffs()) {
                if (is_zero(c))
                    continue;
                MembershipResult m = membership(c, P, sb.bound);
                if (m.is_member())
                    facts.push_back(
                        CertifiedFact{"product-coefficient-in", *m.member});
            }
            json ev = poly_pair_json(*f, *g);
            ev["ideal"] = P.to_text();
            ev["product"] = h.to_text();
            ev["rule"] = "product fell into the extension although neither "
                         "factor lies in it";
            return PropertyVerdict::fails(std::move(ev), std::move(facts));
        }
        if (st.state == -1)
            ++skipped;
        else
            ++checked;
    }
    json ev{{"ideal", P.to_text()},
            {"extension", R.to_string() + "[" + var + "]"},
            {"rule", "the quotient by a prime is a domain, and polynomials "
                     "over a domain form a domain"},
            {"quotient_model", quotient_model(P)},
            {"sampled_pairs", checked},
            {"skipped", skipped},
            {"seed", seed},
            {"config", sb.to_json()}};
    return PropertyVerdict::holds(std::move(ev));
}

PropertyVerdict check_primary_extension(const Ideal &Q, const SearchBounds &sb,
                                        std::uint64_t seed) {
    PropertyVerdict pv = is_primary(Q);
    if (!pv.is_holds())
        throw Error(ErrorKind::NotPrimaryInput,
                    "ideal is not primary, polynomial extension not examined",
                    verdict_to_json(pv));
    const RingId &R = Q.ring();
    bool int_base = R.kind() == RingKind::Int;
    bool poly_base = R.kind() == RingKind::UniPoly && R.base().is_field();
    if (!int_base && !poly_base)
        throw Error(ErrorKind::UnsupportedRing,
                    "primary extension is modeled over the integers and "
                    "field polynomial rings");
    std::string var = fresh_var(R);
    Rng rng(seed);
    SampleBounds sbounds;
    sbounds.degree = std::min(sb.degree, 3);
    sbounds.coeff = sb.coeff;

    json ev{{"ideal", Q.to_text()},
            {"extension", R.to_string() + "[" + var + "]"},
            {"seed", seed},
            {"config", sb.to_json()}};

    if (Q.is_zero_ideal()) {
        // over a domain the zero ideal extends to the zero ideal
        int checked = 0;
        for (int it = 0; it < sb.samples; ++it) {
            PolyOverRing f =
                sample_poly_over(R, var, rng, sbounds, std::min(sb.degree, 4));
            PolyOverRing g =
                sample_poly_over(R, var, rng, sbounds, std::min(sb.degree, 4));
            if (f.is_zero() || g.is_zero())
                continue;
            if (poly_mul(f, g).is_zero()) {
                json bad = poly_pair_json(f, g);
                bad["rule"] = "nonzero factors multiplied to zero";
                return PropertyVerdict::fails(std::move(bad), {});
            }
            ++checked;
        }
        ev["rule"] = "the zero ideal of a domain stays primary: no zero "
                     "divisors appear in the polynomial ring";
        ev["sampled_pairs"] = checked;
        return PropertyVerdict::holds(std::move(ev));
    }

    // primary Holds pins the generator to a single prime power
    RingElement gen = Q.normal_gen();
    RingElement prime = gen;
    int power = 1;
    if (int_base) {
        auto fs = factor_int(gen.as_int());
        prime = make_int(fs[0].first);
        power = fs[0].second;
    } else {
        PolyFactorization fs = factor_poly(gen);
        prime = fs.factors[0].first;
        power = fs.factors[0].second;
    }
    Ideal rad = Ideal::make(R, {prime});

    int checked = 0, skipped = 0;
    for (int it = 0; it < sb.samples; ++it) {
        // f outside the radical extension, g outside the extension itself
        auto f = sample_outside(R, var, rng, sbounds, std::min(sb.degree, 4),
                                rad, sb.bound);
        auto g = sample_outside(R, var, rng, sbounds, std::min(sb.degree, 4),
                                Q, sb.bound);
        if (!f || !g) {
            ++skipped;
            continue;
        }
        PolyOverRing h = poly_mul(*f, *g);
        CoeffsInIdeal st = coeffs_in(h, Q, sb.bound);
        if (st.state == 1) {
            std::vector<CertifiedFact> facts;
            for (const auto &c : h.coeffs()) {
                if (is_zero(c))
                    continue;
                MembershipResult m = membership(c, Q, sb.bound);
                if (m.is_member())
                    facts.push_back(
                        CertifiedFact{"product-coefficient-in", *m.member});
            }
            json bad = poly_pair_json(*f, *g);
            bad["ideal"] = Q.to_text();
            bad["product"] = h.to_text();
            bad["rule"] = "product entered the extension with the first "
                          "factor outside the radical and the second outside "
                          "the extension";
            return PropertyVerdict::fails(std::move(bad), std::move(facts));
        }
        if (st.state == -1)
            ++skipped;
        else
            ++checked;
    }
    ev["rule"] = "reduction modulo the prime is a domain, so a product "
                 "divisible by the full prime power with one factor not "
                 "divisible by the prime forces the power onto the cofactor";
    ev["prime"] = prime.to_text();
    ev["power"] = power;
    ev["sampled_pairs"] = checked;
    ev["skipped"] = skipped;
    return PropertyVerdict::holds(std::move(ev));
}

std::optional<RingElement> semicontent_witness(const Ideal &P,
                                               const PolyOverRing &f,
                                               const PolyOverRing &g,
                                               const SearchBounds &sb) {
    const RingId &R = P.ring();
    if (f.base() != R || g.base() != R)
        throw Error(ErrorKind::RingMismatch,
                    "polynomials must live over the ideal's ring");
    Ideal cf = orc_poly(f);
    bool escapes = false;
    for (const auto &c : cf.gens()) {
        if (membership(c, P, sb.bound).is_non_member()) {
            escapes = true;
            break;
        }
    }
    if (!escapes)
        throw Error(ErrorKind::PrecondViolated,
                    "the content of f does not escape P, so f lies in the "
                    "extension of P");

    Ideal cfg = orc_poly(poly_mul(f, g));
    const Ideal cg = orc_poly(g);

    std::vector<RingElement> candidates{ring_one(R)};
    Ideal pw = cf;
    for (int n = 1; n <= 3; ++n) {
        for (const auto &c : pw.gens())
            candidates.push_back(c);
        if (n < 3)
            pw = ideal_product(pw, cf);
    }
    for (long s = 2; s <= sb.coeff; ++s)
        candidates.push_back(from_int(R, Int(s)));

    std::set<std::string> seen;
    for (const auto &t : candidates) {
        if (is_zero(t) || !seen.insert(t.to_text()).second)
            continue;
        if (!membership(t, P, sb.bound).is_non_member())
            continue;
        bool covers = true;
        for (const auto &c : cg.gens()) {
            MembershipResult r = membership(mul(t, c), cfg, sb.bound);
            if (!r.is_member()) {
                covers = false;
                break;
            }
        }
        if (!covers)
            continue;
        // never hand back a multiplier inside P
        if (!membership(t, P, sb.bound).is_non_member())
            throw Error(ErrorKind::Internal, "witness landed inside P");
        return t;
    }
    return std::nullopt;
}

PropertyVerdict valuation_verdict(const GroupId &g) {
    RingId ring = RingId::hahn(g, RingId::rationals());
    switch (g.kind()) {
    case GroupKind::Integers: {
        // sample cover run: an increasing arithmetic family bottoms out
        SeriesDescriptor s = SeriesDescriptor::make(
            ring, SeqDescriptor::affine(group_element(g, {Int(2)}),
                                        group_element(g, {Int(3)})));
        std::optional<Ideal> cover = smallest_fg_cover(s);
        if (!cover)
            throw Error(ErrorKind::Internal,
                        "integer-valued family lost its minimum");
        json ev{{"classification", "ohm-rush-gaussian"},
                {"group", g.to_string()},
                {"rule", "every nonempty set of nonnegative values has a "
                         "least element, so series contents are principal "
                         "at the minimum"},
                {"witness_cover", json{{"descriptor", s.to_text()},
                                       {"cover", cover->to_text()}}}};
        return PropertyVerdict::holds(std::move(ev));
    }
    case GroupKind::LexTuples: {
        int k = g.rank();
        std::vector<Int> start(static_cast<std::size_t>(k), Int(0));
        start[0] = 1;
        std::vector<Int> step(static_cast<std::size_t>(k), Int(0));
        step[static_cast<std::size_t>(k - 1)] = -1;
        SeriesDescriptor s = SeriesDescriptor::make(
            ring, SeqDescriptor::affine(group_element(g, start),
                                        group_element(g, step)));
        if (smallest_fg_cover(s))
            throw Error(ErrorKind::Internal,
                        "staircase family unexpectedly bottomed out");
        json improvements = json::array();
        for (const auto &[lo, hi] : lower_bound_improvements(s.values(), 3))
            improvements.push_back(
                json{{"bound", lo.to_string()}, {"better", hi.to_string()}});
        json ev{{"classification", "not-ohm-rush"},
                {"group", g.to_string()},
                {"rule", "a proper convex subgroup lets generator values "
                         "march down one slice forever"},
                {"obstruction", json{{"descriptor", s.to_text()},
                                     {"cover_exists", false},
                                     {"improving_lower_bounds", improvements}}}};
        return PropertyVerdict::fails(std::move(ev), {});
    }
    case GroupKind::QuadDense: {
        SeriesDescriptor s = SeriesDescriptor::make(
            ring, SeqDescriptor::convergent_quad(g, Rat(0), Rat(1, 2)));
        if (smallest_fg_cover(s))
            throw Error(ErrorKind::Internal,
                        "convergent family unexpectedly bottomed out");
        json improvements = json::array();
        for (const auto &[lo, hi] : lower_bound_improvements(s.values(), 3))
            improvements.push_back(
                json{{"bound", lo.to_string()}, {"better", hi.to_string()}});
        json ev{{"classification", "not-ohm-rush"},
                {"group", g.to_string()},
                {"rule", "the dense group misses the infimum of a strictly "
                         "decreasing value sequence"},
                {"obstruction", json{{"descriptor", s.to_text()},
                                     {"cover_exists", false},
                                     {"improving_lower_bounds", improvements}}}};
        return PropertyVerdict::fails(std::move(ev), {});
    }
    }
    throw Error(ErrorKind::UnsupportedOp, "unrecognized value group kind");
}

PropertyVerdict transitivity_suite(std::uint64_t seed, int n_cases,
                                   const SearchBounds &sb) {
    if (n_cases < 1)
        throw Error(ErrorKind::PrecondViolated, "need at least one case");
    std::vector<RingId> bases{RingId::integers(),
                              RingId::prime_field(Int(5))};
    SampleBounds sbounds;
    sbounds.degree = std::min(sb.degree, 3);
    sbounds.coeff = sb.coeff;

    int compose_checked = 0, gauss_held = 0, routes_agreed = 0;
    for (int i = 0; i < n_cases; ++i) {
        const RingId &base = bases[static_cast<std::size_t>(i) % bases.size()];
        RingId mid = RingId::uni_poly(base, "T");
        TowerId tower = TowerId::make(base, {"T", "U"});
        Rng rng(mix_seed(seed, static_cast<std::uint64_t>(i)));

        auto sample_top = [&] {
            std::vector<RingElement> hs;
            int deg = static_cast<int>(rng.range(0, 2));
            for (int j = 0; j <= deg; ++j)
                hs.push_back(sample_element(mid, rng, sbounds));
            return PolyOverRing::make(mid, "U", std::move(hs));
        };
        PolyOverRing f = sample_top();
        PolyOverRing g = sample_top();
        PolyOverRing fg = poly_mul(f, g);

        std::optional<PropertyVerdict> bad;
        auto both_routes = [&](const PolyOverRing &poly) {
            auto [direct, composed] = compose_content(tower, poly);
            PropertyVerdict v = ideal_equal(direct, composed, sb.bound);
            if (!v.is_holds()) {
                json ev{{"case", i},
                        {"base", base.to_string()},
                        {"element", poly.to_text()},
                        {"direct", direct.to_text()},
                        {"composed", composed.to_text()},
                        {"detail", v.evidence}};
                bad = PropertyVerdict::fails(std::move(ev), std::move(v.facts));
            } else {
                ++compose_checked;
            }
            return std::pair<Ideal, Ideal>{direct, composed};
        };
        auto [direct_f, composed_f] = both_routes(f);
        if (bad)
            return *bad;
        auto [direct_g, composed_g] = both_routes(g);
        if (bad)
            return *bad;

        auto [direct_fg, composed_fg] = compose_content(tower, fg);
        PropertyVerdict flat_route =
            ideal_equal(direct_fg, ideal_product(direct_f, direct_g), sb.bound);
        PropertyVerdict composed_route = ideal_equal(
            composed_fg, ideal_product(composed_f, composed_g), sb.bound);
        if (flat_route.kind != composed_route.kind) {
            json ev{{"case", i},
                    {"base", base.to_string()},
                    {"f", f.to_text()},
                    {"g", g.to_text()},
                    {"flat_route", verdict_name(flat_route.kind)},
                    {"composed_route", verdict_name(composed_route.kind)}};
            return PropertyVerdict::fails(std::move(ev), {});
        }
        ++routes_agreed;
        if (flat_route.is_holds())
            ++gauss_held;
    }

    // prime chain: (p) stays prime one level up, and products of
    // polynomials escaping (p) at the second level keep escaping
    std::vector<long> primes{2, 3, 5, 7};
    SearchBounds level1 = sb;
    level1.samples = std::min(sb.samples, 60);
    RingId zz = RingId::integers();
    RingId zt = RingId::uni_poly(zz, "T");
    int chain_pairs = 0;
    for (long p : primes) {
        Ideal P = Ideal::make(zz, {make_int(Int(p))});
        PropertyVerdict v = check_prime_extension(
            P, level1, mix_seed(seed, 1000 + static_cast<std::uint64_t>(p)));
        if (!v.is_holds())
            return v;
        Rng rng(mix_seed(seed, 2000 + static_cast<std::uint64_t>(p)));
        auto escapesP = [&](const PolyOverRing &F) {
            for (const auto &h : F.coeffs())
                for (const auto &c : poly_coeffs(h))
                    if (c.as_int() % p != 0)
                        return true;
            return false;
        };
        auto sample_escaping = [&]() -> std::optional<PolyOverRing> {
            for (int tries = 0; tries < 12; ++tries) {
                std::vector<RingElement> hs;
                int deg = static_cast<int>(rng.range(0, 2));
                for (int j = 0; j <= deg; ++j)
                    hs.push_back(sample_element(zt, rng, sbounds));
                PolyOverRing cand = PolyOverRing::make(zt, "U", std::move(hs));
                if (escapesP(cand))
                    return cand;
            }
            return std::nullopt;
        };
        for (int it = 0; it < 40; ++it) {
            std::optional<PolyOverRing> F = sample_escaping();
            std::optional<PolyOverRing> G = sample_escaping();
            if (!F || !G)
                continue;
            if (!escapesP(poly_mul(*F, *G))) {
                json ev{{"prime", p},
                        {"F", F->to_text()},
                        {"G", G->to_text()},
                        {"rule", "second-level product fell into the prime "
                                 "extension"}};
                return PropertyVerdict::fails(std::move(ev), {});
            }
            ++chain_pairs;
        }
    }

    json ev{{"seed", seed},
            {"cases", n_cases},
            {"bases", json::array({"Int", "PrimeField(5)"})},
            {"compose_checked", compose_checked},
            {"product_routes_agreed", routes_agreed},
            {"gaussian_held", gauss_held},
            {"prime_chain",
             json{{"primes", primes}, {"second_level_pairs", chain_pairs}}},
            {"config", sb.to_json()}};
    return PropertyVerdict::holds(std::move(ev));
}

PropertyVerdict pruefer_gauss_suite(const RingId &base, int n_pairs,
                                    std::uint64_t seed,
                                    const SearchBounds &sb) {
    bool principal_base =
        base.kind() == RingKind::Int ||
        (base.kind() == RingKind::UniPoly && base.base().is_field()) ||
        base.kind() == RingKind::HahnVal;
    if (base.kind() == RingKind::BiPolyQ) {
        RingElement x = make_bipoly(base, {{{1, 0}, Rat(1)}});
        RingElement y = make_bipoly(base, {{{0, 1}, Rat(1)}});
        PolyOverRing f = PolyOverRing::make(base, "T", {x, y});
        PolyOverRing g = PolyOverRing::make(base, "T", {y, x});
        PropertyVerdict v = check_gaussian(f, g, sb);
        if (!v.is_fails())
            throw Error(ErrorKind::Internal,
                        "canonical pair stopped failing the product rule");
        v.evidence["rule"] = "a base with a non-principal two-generated "
                             "ideal cannot multiply contents exactly";
        v.evidence["canonical_pair"] = true;
        return v;
    }
    if (!principal_base)
        throw Error(ErrorKind::UnsupportedRing,
                    "suite runs over Int, field polynomials, Hahn rings, "
                    "and the two-variable counterexample base");
    if (n_pairs < 1)
        throw Error(ErrorKind::PrecondViolated, "need at least one pair");

    std::string var = fresh_var(base);
    SampleBounds sbounds;
    sbounds.degree = std::min(sb.degree, 3);
    sbounds.coeff = sb.coeff;
    for (int i = 0; i < n_pairs; ++i) {
        Rng rng(mix_seed(seed, static_cast<std::uint64_t>(i)));
        PolyOverRing f =
            sample_poly_over(base, var, rng, sbounds, std::min(sb.degree, 3));
        PolyOverRing g =
            sample_poly_over(base, var, rng, sbounds, std::min(sb.degree, 3));
        PropertyVerdict v = check_gaussian(f, g, sb);
        if (!v.is_holds()) {
            v.evidence["pair_index"] = i;
            return v;
        }
    }
    json ev{{"base", base.to_string()},
            {"pairs", n_pairs},
            {"seed", seed},
            {"rule", "finitely generated ideals of the base are principal, "
                     "so contents multiply"},
            {"config", sb.to_json()}};
    return PropertyVerdict::holds(std::move(ev));
}

} // namespace contentlab
