#include "contentlab/records.hpp"

#include "contentlab/content.hpp"
#include "contentlab/demos.hpp"
#include "contentlab/errors.hpp"
#include "contentlab/ideals.hpp"
#include "contentlab/numeric.hpp"
#include "contentlab/parser.hpp"
#include "contentlab/propcheck.hpp"
#include "contentlab/search.hpp"
#include "contentlab/verdict.hpp"

#include <fstream>
#include <utility>

namespace contentlab {

using nlohmann::json;

const char *library_version() { return "1.0.0"; }

json record_to_json(const RunRecord &r) {
    // wall_ms stays out on purpose: serialized records must not depend on
    // the clock, only on inputs and seed.
    return json{{"command", r.command},
                {"inputs", r.inputs},
                {"report", r.report},
                {"version", r.version}};
}

void append_jsonl(std::ostream &os, const RunRecord &r) {
    os << record_to_json(r).dump() << "\n";
}

namespace {

struct SuiteSink {
    std::ofstream os;
    std::vector<CertifiedFact> *collect = nullptr;
    std::size_t count = 0;

    void put(RunRecord r) {
        if (r.version.empty()) r.version = library_version();
        append_jsonl(os, r);
        if (collect)
            for (auto &f : r.facts) collect->push_back(std::move(f));
        ++count;
    }
};

RunRecord content_record(const std::string &base_text,
                         const std::string &var,
                         const std::string &poly_text) {
    RingId base = parse_ring(base_text);
    PolyOverRing f = parse_poly(poly_text, base, var);
    Ideal c = poly_content(f);
    Ideal o = orc_poly(f);
    PropertyVerdict agree = ideal_equal(c, o);
    RunRecord r;
    r.command = "content";
    r.inputs = {{"base", base_text}, {"var", var}, {"f", poly_text}};
    r.report = {{"content", c.to_json()},
                {"orc", o.to_json()},
                {"maps_agree", verdict_to_json(agree)}};
    r.facts = std::move(agree.facts);
    return r;
}

RunRecord cover_record(const std::string &ring_text,
                       const std::string &descriptor_text) {
    RingId ring = parse_ring(ring_text);
    SeriesDescriptor d = parse_descriptor(descriptor_text, ring);
    auto cover = smallest_fg_cover(d);
    RunRecord r;
    r.command = "cover";
    r.inputs = {{"ring", ring_text}, {"exponents", descriptor_text}};
    r.report = {{"exists", cover.has_value()},
                {"cover", cover ? json(cover->to_text()) : json(nullptr)}};
    return r;
}

RunRecord compose_record() {
    RingId mid = RingId::uni_poly(RingId::integers(), "T");
    TowerId tower = TowerId::make(RingId::integers(), {"T", "U"});
    PolyOverRing f =
        parse_poly("(2 + 4*T) + 6*T*U + 10*U^2", mid, "U");
    auto [direct, staged] = compose_content(tower, f);
    PropertyVerdict agree = ideal_equal(direct, staged);
    RunRecord r;
    r.command = "compose";
    r.inputs = {{"tower", tower.to_text()}, {"f", f.to_text()}};
    r.report = {{"direct", direct.to_json()},
                {"staged", staged.to_json()},
                {"routes_agree", verdict_to_json(agree)}};
    r.facts = std::move(agree.facts);
    return r;
}

RunRecord localize_record(const std::string &poly_text, long p) {
    PolyOverRing f = parse_poly(poly_text, RingId::integers(), "T");
    LocalizedContent lc = localize_content(f, Int(p));
    RunRecord r;
    r.command = "localize";
    r.inputs = {{"f", poly_text}, {"prime", p}};
    r.report = {{"exponent", lc.exponent},
                {"local", lc.local_text()},
                {"global", lc.global.to_json()},
                {"unit", lc.is_unit()}};
    return r;
}

RunRecord verdict_record(const char *command, json inputs,
                         PropertyVerdict v) {
    RunRecord r;
    r.command = command;
    r.inputs = std::move(inputs);
    r.report = verdict_to_json(v);
    r.facts = std::move(v.facts);
    return r;
}

std::pair<PolyOverRing, PolyOverRing> plane_pair() {
    RingId B = RingId::bi_poly_q("x", "y");
    return {parse_poly("x + y*T", B, "T"), parse_poly("y + x*T", B, "T")};
}

} // namespace

std::size_t run_full_suite(std::uint64_t seed, const std::string &out_path,
                           std::vector<CertifiedFact> *collect) {
    SuiteSink sink;
    sink.os.open(out_path, std::ios::trunc);
    if (!sink.os)
        throw Error(ErrorKind::ConfigError,
                    "cannot open '" + out_path + "' for writing");
    sink.collect = collect;

    // content and orc over the main bases
    sink.put(content_record("Int", "T", "6 + 10*T + 15*T^2"));
    sink.put(content_record("Mod(12)", "T", "4 + 8*T"));
    sink.put(content_record("Q[x,y]", "T", "x + y*T"));
    sink.put(content_record("Hahn(Z,Q)", "S", "t^(2) + t^(5)*S"));
    sink.put(content_record("Fp(7)", "T", "3 + 4*T^2"));

    // series covers: principal, unit, and missing
    sink.put(cover_record("Hahn(Z,Q)", "affine((2);(3))"));
    sink.put(cover_record("Hahn(Z,Q)", "finite[(0),(4)]"));
    sink.put(cover_record("Hahn(LexZ(2),Q)", "affine((1,0);(0,-1))"));

    sink.put(compose_record());

    for (long p : {2L, 3L, 5L})
        sink.put(localize_record("12 + 18*T + 30*T^2", p));

    // multiplier exponents and product behavior
    {
        RingId Z = RingId::integers();
        PolyOverRing f = parse_poly("2 + 4*T", Z, "T");
        PolyOverRing g = parse_poly("6 + 3*T^2", Z, "T");
        DMReport dm = dm_exponent(f, g, 4);
        RunRecord r;
        r.command = "dm";
        r.inputs = {{"base", "Int"}, {"f", f.to_text()}, {"g", g.to_text()},
                    {"max_n", 4}};
        r.report = dm.to_json();
        for (auto &[n, v] : dm.per_n)
            for (auto &fact : v.facts) r.facts.push_back(std::move(fact));
        sink.put(std::move(r));

        auto [pf, pg] = plane_pair();
        DMReport dm2 = dm_exponent(pf, pg, 3);
        RunRecord r2;
        r2.command = "dm";
        r2.inputs = {{"base", "Q[x,y]"}, {"f", pf.to_text()},
                     {"g", pg.to_text()}, {"max_n", 3}};
        r2.report = dm2.to_json();
        for (auto &[n, v] : dm2.per_n)
            for (auto &fact : v.facts) r2.facts.push_back(std::move(fact));
        sink.put(std::move(r2));

        sink.put(verdict_record(
            "gaussian",
            {{"base", "Int"}, {"f", f.to_text()}, {"g", g.to_text()}},
            check_gaussian(f, g)));
        sink.put(verdict_record(
            "gaussian",
            {{"base", "Q[x,y]"}, {"f", pf.to_text()}, {"g", pg.to_text()}},
            check_gaussian(pf, pg)));
        sink.put(verdict_record(
            "weak",
            {{"base", "Q[x,y]"}, {"f", pf.to_text()}, {"g", pg.to_text()}},
            check_weak_content_pair(pf, pg)));
    }

    // multiplier witnesses outside a prime
    {
        RingId Z = RingId::integers();
        Ideal P = Ideal::make(Z, {make_int(Int(7))});
        PolyOverRing f = parse_poly("1 + 7*T", Z, "T");
        PolyOverRing g = parse_poly("3 + 5*T", Z, "T");
        auto w = semicontent_witness(P, f, g);
        RunRecord r;
        r.command = "semicontent";
        r.inputs = {{"base", "Int"}, {"P", P.to_text()},
                    {"f", f.to_text()}, {"g", g.to_text()}};
        r.report = {{"found", w.has_value()},
                    {"witness", w ? json(w->to_text()) : json(nullptr)}};
        sink.put(std::move(r));
    }

    // prime and primary stability under one polynomial extension
    {
        RingId Z = RingId::integers();
        for (long p : {0L, 5L}) {
            Ideal P = p == 0 ? Ideal::make(Z, {make_int(Int(0))})
                             : Ideal::make(Z, {make_int(Int(p))});
            sink.put(verdict_record(
                "prime-ext", {{"base", "Int"}, {"P", P.to_text()}},
                check_prime_extension(P, {}, mix_seed(seed, 31))));
        }
        RingId QX = RingId::uni_poly(RingId::rationals(), "x");
        Ideal irr = Ideal::make(QX, {parse_element("1 + x^2", QX)});
        sink.put(verdict_record(
            "prime-ext", {{"base", "Q[x]"}, {"P", irr.to_text()}},
            check_prime_extension(irr, {}, mix_seed(seed, 32))));

        for (long q : {4L, 9L}) {
            Ideal Qi = Ideal::make(Z, {make_int(Int(q))});
            sink.put(verdict_record(
                "primary-ext", {{"base", "Int"}, {"Q", Qi.to_text()}},
                check_primary_extension(Qi, {}, mix_seed(seed, 33))));
        }
        Ideal x2 = Ideal::make(QX, {parse_element("x^2", QX)});
        sink.put(verdict_record(
            "primary-ext", {{"base", "Q[x]"}, {"Q", x2.to_text()}},
            check_primary_extension(x2, {}, mix_seed(seed, 34))));
    }

    // series content over the three group shapes
    for (const auto &g : {GroupId::integers(), GroupId::lex(2),
                          GroupId::lex(3), GroupId::quad(2),
                          GroupId::quad(5)})
        sink.put(verdict_record("valuation-verdict",
                                {{"group", g.to_string()}},
                                valuation_verdict(g)));

    sink.put(verdict_record(
        "transitivity", {{"seed", mix_seed(seed, 40)}, {"cases", 24}},
        transitivity_suite(mix_seed(seed, 40), 24)));

    {
        struct Case {
            const char *base;
            int pairs;
        };
        for (const auto &[base, pairs] :
             {Case{"Int", 200}, Case{"Q[z]", 60}, Case{"Hahn(Z,Q)", 100},
              Case{"Q[x,y]", 40}}) {
            std::uint64_t s = mix_seed(seed, 41);
            sink.put(verdict_record(
                "pruefer-suite",
                {{"base", base}, {"pairs", pairs}, {"seed", s}},
                pruefer_gauss_suite(parse_ring(base), pairs, s)));
        }
    }

    for (const auto &name : demo_names())
        sink.put(run_demo(name, mix_seed(seed, 50)));

    {
        json cfg = {{"base", "Q[x,y]"}, {"pair", "weak-vs-gaussian"},
                    {"degree", 1},    {"coeff", 1},
                    {"samples", 20}};
        std::vector<RunRecord> found = search_pairs(cfg, mix_seed(seed, 60));
        RunRecord summary;
        summary.command = "search-summary";
        summary.inputs = cfg;
        summary.report = {{"found", found.size()}};
        sink.put(std::move(summary));
        for (auto &r : found) sink.put(std::move(r));

        json icfg = {{"base", "Int"}, {"pair", "weak-vs-gaussian"},
                     {"degree", 3}, {"coeff", 9},
                     {"samples", 60}};
        std::vector<RunRecord> none = search_pairs(icfg, mix_seed(seed, 61));
        RunRecord isum;
        isum.command = "search-summary";
        isum.inputs = icfg;
        isum.report = {{"found", none.size()}};
        sink.put(std::move(isum));
        for (auto &r : none) sink.put(std::move(r));
    }

    return sink.count;
}

} // namespace contentlab
