#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "contentlab/demos.hpp"
#include "contentlab/errors.hpp"
#include "contentlab/ideals.hpp"
#include "contentlab/propcheck.hpp"
#include "contentlab/records.hpp"
#include "contentlab/reverify.hpp"
#include "contentlab/search.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

using namespace contentlab;
using nlohmann::json;

namespace {

std::string slurp(const std::string &path) {
    std::ifstream in(path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct TempFile {
    std::string path;
    explicit TempFile(const char *name)
        : path(std::string("cli_test_") + name + ".jsonl") {}
    ~TempFile() { std::remove(path.c_str()); }
};

void check_all_replay(const std::vector<CertifiedFact> &facts) {
    ReverifyStats st = reverify_all(facts);
    CAPTURE(st.failures.empty() ? std::string("none") : st.failures[0]);
    CHECK(st.total == facts.size());
    CHECK(st.passed == st.total);
}

} // namespace

TEST_CASE("records serialize without wall time") {
    RunRecord r;
    r.command = "probe";
    r.inputs = {{"a", 1}};
    r.report = {{"v", "ok"}};
    r.wall_ms = 123.75;
    r.version = library_version();
    json j = record_to_json(r);
    CHECK_FALSE(j.contains("wall_ms"));
    CHECK(j.at("command") == "probe");
    CHECK(j.at("version") == library_version());
    std::ostringstream os;
    append_jsonl(os, r);
    std::string line = os.str();
    REQUIRE_FALSE(line.empty());
    CHECK(line.back() == '\n');
    CHECK(json::parse(line) == j);
}

TEST_CASE("demo walkthroughs reach their verdicts and replay") {
    CHECK(demo_names().size() == 6);

    RunRecord gauss = run_demo("gauss-fails-bipoly");
    CHECK(gauss.report.at("contents_multiply").at("verdict") == "Fails");
    CHECK(gauss.report.at("radical_containment").at("verdict") == "Holds");
    CHECK_FALSE(gauss.facts.empty());
    check_all_replay(gauss.facts);

    RunRecord dm = run_demo("dm2-bipoly");
    CHECK(dm.report.at("exponent") == 2);
    check_all_replay(dm.facts);

    RunRecord pg = run_demo("prufer-gauss", 5);
    CHECK(pg.report.at("Int").at("verdict") == "Holds");
    CHECK(pg.report.at("Q[z]").at("verdict") == "Holds");
    CHECK(pg.report.at("Hahn(Z,Q)").at("verdict") == "Holds");
    CHECK(pg.report.at("Q[x,y]").at("verdict") == "Fails");
    check_all_replay(pg.facts);

    RunRecord tri = run_demo("valuation-trichotomy");
    CHECK(tri.report.at("Z").at("verdict") == "Holds");
    CHECK(tri.report.at("LexZ(2)").at("verdict") == "Fails");
    CHECK(tri.report.at("Quad(2)").at("verdict") == "Fails");

    RunRecord fc = run_demo("field-case", 3);
    CHECK(fc.report.at("domain_algebra").at("held") == 100);
    CHECK(fc.report.at("nilpotent_algebra")
              .at("relation_not_prime")
              .at("verdict") == "Fails");
    CHECK_FALSE(fc.facts.empty());
    check_all_replay(fc.facts);

    RunRecord loc = run_demo("localization-example");
    CHECK(loc.report.at("localized_unit_checks") == 20);
    CHECK(loc.report.at("one_escapes_every_level") == true);
    CHECK(loc.report.at("intersection_matches_top").at("verdict") == "Holds");
    CHECK(loc.report.at("monomials_below_top_escaping") == 20);
    check_all_replay(loc.facts);

    try {
        run_demo("fish");
        FAIL("expected UnknownDemo");
    } catch (const Error &e) {
        CHECK(e.kind() == ErrorKind::UnknownDemo);
    }

    CHECK(record_to_json(run_demo("prufer-gauss", 9)) ==
          record_to_json(run_demo("prufer-gauss", 9)));
    CHECK(record_to_json(run_demo("field-case", 4)) ==
          record_to_json(run_demo("field-case", 4)));
}

TEST_CASE("search validates its config and finds the plane family") {
    auto bad = [](json cfg) {
        try {
            search_pairs(cfg, 1);
            return false;
        } catch (const Error &e) {
            return e.kind() == ErrorKind::ConfigError;
        }
    };
    CHECK(bad(json::array()));
    CHECK(bad(json::object()));
    CHECK(bad({{"base", "Int"}, {"pair", "weak-vs-gaussian"},
               {"degree", 1}, {"coeff", 1}}));
    CHECK(bad({{"base", "Int"}, {"pair", "weak-vs-gaussian"},
               {"degree", 1}, {"coeff", 1}, {"samples", 1},
               {"extra", true}}));
    CHECK(bad({{"base", "Z/6"}, {"pair", "weak-vs-gaussian"},
               {"degree", 1}, {"coeff", 1}, {"samples", 1}}));
    CHECK(bad({{"base", "Int"}, {"pair", "gauss-vs-gauss"},
               {"degree", 1}, {"coeff", 1}, {"samples", 1}}));
    CHECK(bad({{"base", "Int"}, {"pair", "weak-vs-gaussian"},
               {"degree", 0}, {"coeff", 1}, {"samples", 1}}));
    CHECK(bad({{"base", "Int"}, {"pair", "weak-vs-gaussian"},
               {"degree", 1}, {"coeff", 1}, {"samples", "many"}}));

    json icfg = {{"base", "Int"}, {"pair", "weak-vs-gaussian"},
                 {"degree", 3}, {"coeff", 9}, {"samples", 80}};
    CHECK(search_pairs(icfg, 7).empty());

    json pcfg = {{"base", "Q[x,y]"}, {"pair", "weak-vs-gaussian"},
                 {"degree", 1}, {"coeff", 1}, {"samples", 10}};
    std::vector<RunRecord> found = search_pairs(pcfg, 7);
    REQUIRE_FALSE(found.empty());
    bool canonical = false;
    for (const auto &r : found) {
        CHECK(r.report.at("contents_multiply").at("verdict") == "Fails");
        CHECK(r.report.at("radical_containment").at("verdict") == "Holds");
        check_all_replay(r.facts);
        if (r.inputs.at("f") == "x + y*T" && r.inputs.at("g") == "y + x*T") {
            canonical = true;
            CHECK(r.inputs.at("phase") == "structured");
        }
    }
    CHECK(canonical);
}

TEST_CASE("full suite output is deterministic and every fact replays") {
    TempFile a("suite_a"), b("suite_b"), c("suite_c");
    std::vector<CertifiedFact> facts;
    std::size_t n1 = run_full_suite(11, a.path, &facts);
    std::size_t n2 = run_full_suite(11, b.path);
    CHECK(n1 == n2);
    CHECK(n1 > 30);
    std::string ta = slurp(a.path), tb = slurp(b.path);
    REQUIRE_FALSE(ta.empty());
    CHECK(ta == tb);

    std::size_t n3 = run_full_suite(12, c.path);
    CHECK(n3 > 30);
    CHECK(ta != slurp(c.path));

    std::istringstream lines(ta);
    std::string line;
    std::size_t parsed = 0;
    while (std::getline(lines, line)) {
        json j = json::parse(line);
        CHECK(j.contains("command"));
        CHECK(j.contains("inputs"));
        CHECK(j.contains("report"));
        CHECK(j.contains("version"));
        ++parsed;
    }
    CHECK(parsed == n1);

    CHECK_FALSE(facts.empty());
    check_all_replay(facts);
}

TEST_CASE("doctored certificates are rejected") {
    RingId Z = RingId::integers();
    Ideal I = Ideal::make(Z, {make_int(Int(2)), make_int(Int(3))});
    MembershipResult in = membership(make_int(Int(7)), I);
    REQUIRE(in.kind == MembershipResult::Kind::Member);
    MemberCert good = *in.member;
    CHECK(reverify_member(good));
    MemberCert tampered = good;
    tampered.element = make_int(Int(8));
    std::string why;
    CHECK_FALSE(reverify_member(tampered, &why));
    CHECK_FALSE(why.empty());

    Ideal I4 = Ideal::make(Z, {make_int(Int(4)), make_int(Int(6))});
    MembershipResult out = membership(make_int(Int(7)), I4);
    REQUIRE(out.kind == MembershipResult::Kind::NonMember);
    NonMemberCert ngood = *out.non_member;
    CHECK(reverify_non_member(ngood));
    {
        NonMemberCert bad = ngood;
        auto &w = std::get<DivisionWitness>(bad.witness);
        w.remainder = ring_zero(Z);
        CHECK_FALSE(reverify_non_member(bad));
    }
    {
        NonMemberCert bad = ngood;
        auto &w = std::get<DivisionWitness>(bad.witness);
        w.remainder = make_int(Int(4)); // above the normal generator 2
        CHECK_FALSE(reverify_non_member(bad));
    }
    {
        NonMemberCert bad = ngood;
        auto &w = std::get<DivisionWitness>(bad.witness);
        w.normal_gen = make_int(Int(1)); // bezout ties must now fail
        CHECK_FALSE(reverify_non_member(bad));
    }

    RadicalResult rad =
        radical_membership(make_int(Int(6)), Ideal::make(Z, {make_int(Int(12))}));
    REQUIRE(rad.kind == RadicalResult::Kind::Member);
    RadicalMemberCert rgood = *rad.member;
    CHECK(reverify_radical_member(rgood));
    RadicalMemberCert rbad = rgood;
    rbad.power += 1;
    CHECK_FALSE(reverify_radical_member(rbad));

    RadicalResult rout =
        radical_membership(make_int(Int(5)), Ideal::make(Z, {make_int(Int(12))}));
    REQUIRE(rout.kind == RadicalResult::Kind::NonMember);
    RadicalNonMemberCert rngood = *rout.non_member;
    CHECK(reverify_radical_non_member(rngood));
    {
        RadicalNonMemberCert bad = rngood;
        bad.element = make_int(Int(6)); // no longer coprime to the factor
        CHECK_FALSE(reverify_radical_non_member(bad));
    }

    // series side: shift the claimed minimum value
    RingId H = RingId::hahn(GroupId::integers(), RingId::rationals());
    RingElement t2 = hahn_monomial(H, group_element(GroupId::integers(), {Int(2)}));
    RingElement t3 = hahn_monomial(H, group_element(GroupId::integers(), {Int(3)}));
    MembershipResult hm = membership(t3, Ideal::make(H, {t2}));
    REQUIRE(hm.kind == MembershipResult::Kind::Member);
    MemberCert hgood = *hm.member;
    REQUIRE(hgood.hahn.has_value());
    CHECK(reverify_member(hgood));
    MemberCert hbad = hgood;
    hbad.hahn->min_value = group_element(GroupId::integers(), {Int(1)});
    CHECK_FALSE(reverify_member(hbad));

    // plane side: damage the separating functional
    RunRecord rec = run_demo("gauss-fails-bipoly");
    bool tampered_dual = false;
    for (const auto &f : rec.facts) {
        if (!std::holds_alternative<NonMemberCert>(f.cert)) continue;
        NonMemberCert c = std::get<NonMemberCert>(f.cert);
        if (!std::holds_alternative<GradedDualWitness>(c.witness)) continue;
        CHECK(reverify_non_member(c));
        auto &w = std::get<GradedDualWitness>(c.witness);
        REQUIRE_FALSE(w.lambda.empty());
        w.lambda[0].second += 1;
        CHECK_FALSE(reverify_non_member(c));
        tampered_dual = true;
        break;
    }
    CHECK(tampered_dual);
}
