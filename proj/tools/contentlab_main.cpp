#include <CLI11.hpp>

#include "contentlab/content.hpp"
#include "contentlab/demos.hpp"
#include "contentlab/errors.hpp"
#include "contentlab/ideals.hpp"
#include "contentlab/parser.hpp"
#include "contentlab/propcheck.hpp"
#include "contentlab/records.hpp"
#include "contentlab/search.hpp"
#include "contentlab/verdict.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace contentlab;
using nlohmann::json;

namespace {

// Exit codes: 0 clean, 1 when any reported verdict is Fails (so CI can gate
// on outcomes; demos built around failing examples exit 1 on purpose),
// 2 for unusable input, 3 for internal trouble.
constexpr int kExitFails = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

bool has_fails(const json &j) {
    if (j.is_object()) {
        auto it = j.find("verdict");
        if (it != j.end() && it->is_string() && *it == "Fails") return true;
        for (const auto &[key, value] : j.items()) {
            (void)key;
            if (has_fails(value)) return true;
        }
        return false;
    }
    if (j.is_array()) {
        for (const auto &value : j)
            if (has_fails(value)) return true;
    }
    return false;
}

struct Emitter {
    std::string out_path;
    int exit_code = 0;

    void put(RunRecord r, double wall_ms) {
        r.wall_ms = wall_ms;
        if (r.version.empty()) r.version = library_version();
        json j = record_to_json(r);
        std::cout << j.dump(2) << "\n";
        std::cout << "# wall_ms " << wall_ms << "\n";
        if (!out_path.empty()) {
            std::ofstream os(out_path, std::ios::app);
            if (!os)
                throw Error(ErrorKind::ConfigError,
                            "cannot open '" + out_path + "' for append");
            append_jsonl(os, r);
        }
        if (has_fails(j.at("report"))) exit_code = kExitFails;
    }
};

struct Timer {
    std::chrono::steady_clock::time_point start =
        std::chrono::steady_clock::now();
    double ms() const {
        return std::chrono::duration<double, std::milli>(
                   std::chrono::steady_clock::now() - start)
            .count();
    }
};

// Per-invocation knobs; only what a subcommand declares gets parsed into it.
struct Opts {
    std::string ring = "Int";
    std::string base = "Int";
    std::string var = "T";
    std::string group = "Z";
    std::string expr;
    std::string expr2;
    std::string name;
    std::string config;
    std::vector<std::string> gens;
    std::vector<std::string> pgens;
    std::string vars = "T,U";
    std::uint64_t seed = 1;
    int max_n = 6;
    long prime = 2;
    int cases = 24;
    int pairs = 100;
    SearchBounds sb;
};

void add_bounds(CLI::App *cmd, Opts &o) {
    cmd->add_option("--degree", o.sb.degree, "sampled degree bound");
    cmd->add_option("--coeff", o.sb.coeff, "scalar coefficient bound");
    cmd->add_option("--samples", o.sb.samples, "sampled cases per check");
    cmd->add_option("--powbound", o.sb.powbound, "radical power bound");
    cmd->add_option("--bound", o.sb.bound, "cofactor degree bound");
}

json bounds_json(const Opts &o) { return o.sb.to_json(); }

Ideal parse_ideal(const std::string &ring_text,
                  const std::vector<std::string> &gen_texts) {
    RingId R = parse_ring(ring_text);
    std::vector<RingElement> gens;
    for (const auto &g : gen_texts) gens.push_back(parse_element(g, R));
    return Ideal::make(R, gens);
}

json search_config(const std::string &spec) {
    std::string text = spec;
    if (!spec.empty() && spec[0] != '{') {
        std::ifstream in(spec);
        if (!in)
            throw Error(ErrorKind::ConfigError,
                        "cannot read config file '" + spec + "'");
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    json cfg = json::parse(text, nullptr, false);
    if (cfg.is_discarded())
        throw Error(ErrorKind::ConfigError, "config is not valid JSON");
    return cfg;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"content ideals and their multiplication laws over a "
                 "tower of exact rings"};
    app.require_subcommand(1);
    app.fallthrough();

    Emitter emit;
    Opts o;
    app.add_option("--out", emit.out_path,
                   "append the serialized record to this JSONL file")
        ->capture_default_str();

    auto *eval = app.add_subcommand("eval", "normalize an element");
    eval->add_option("--ring", o.ring, "ring name")->capture_default_str();
    eval->add_option("expr", o.expr, "element text")->required();
    eval->callback([&] {
        Timer t;
        RingElement e = parse_element(o.expr, parse_ring(o.ring));
        RunRecord r;
        r.command = "eval";
        r.inputs = {{"ring", o.ring}, {"expr", o.expr}};
        r.report = {{"element", e.to_text()}, {"zero", is_zero(e)}};
        emit.put(std::move(r), t.ms());
    });

    for (const char *name : {"content", "orc"}) {
        auto *cmd = app.add_subcommand(
            name, std::string(name) == "content"
                      ? "coefficient ideal of a polynomial"
                      : "content in its normal presentation");
        cmd->add_option("--base", o.base, "coefficient ring")
            ->capture_default_str();
        cmd->add_option("--var", o.var, "extension symbol")
            ->capture_default_str();
        cmd->add_option("poly", o.expr, "polynomial text")->required();
        std::string cmd_name = name;
        cmd->callback([&, cmd_name] {
            Timer t;
            PolyOverRing f = parse_poly(o.expr, parse_ring(o.base), o.var);
            RunRecord r;
            r.command = cmd_name;
            r.inputs = {{"base", o.base}, {"var", o.var}, {"f", o.expr}};
            if (cmd_name == "content") {
                Ideal c = poly_content(f);
                Ideal orc = orc_poly(f);
                PropertyVerdict agree = ideal_equal(c, orc);
                r.report = {{"content", c.to_json()},
                            {"orc", orc.to_json()},
                            {"maps_agree", verdict_to_json(agree)}};
                r.facts = std::move(agree.facts);
            } else {
                r.report = {{"orc", orc_poly(f).to_json()}};
            }
            emit.put(std::move(r), t.ms());
        });
    }

    auto *cover = app.add_subcommand(
        "cover", "smallest finitely generated cover of a series family");
    cover->add_option("--ring", o.ring, "Hahn series ring")
        ->capture_default_str();
    cover->add_option("exponents", o.expr, "descriptor text")->required();
    cover->callback([&] {
        Timer t;
        RingId R = parse_ring(o.ring);
        auto c = smallest_fg_cover(parse_descriptor(o.expr, R));
        RunRecord r;
        r.command = "cover";
        r.inputs = {{"ring", o.ring}, {"exponents", o.expr}};
        r.report = {{"exists", c.has_value()},
                    {"cover", c ? json(c->to_text()) : json(nullptr)}};
        emit.put(std::move(r), t.ms());
    });

    auto *compose = app.add_subcommand(
        "compose", "two-stage content against the flattened content");
    compose->add_option("--base", o.base, "tower base ring")
        ->capture_default_str();
    compose->add_option("--vars", o.vars, "the two adjoined symbols, comma separated")
        ->capture_default_str();
    compose->add_option("poly", o.expr, "polynomial in the outer symbol")
        ->required();
    compose->callback([&] {
        Timer t;
        auto comma = o.vars.find(',');
        if (comma == std::string::npos)
            throw Error(ErrorKind::ConfigError,
                        "--vars needs two comma separated symbols");
        std::string v1 = o.vars.substr(0, comma);
        std::string v2 = o.vars.substr(comma + 1);
        RingId base = parse_ring(o.base);
        TowerId tower = TowerId::make(base, {v1, v2});
        PolyOverRing f =
            parse_poly(o.expr, RingId::uni_poly(base, v1), v2);
        auto [direct, staged] = compose_content(tower, f);
        PropertyVerdict agree = ideal_equal(direct, staged);
        RunRecord r;
        r.command = "compose";
        r.inputs = {{"tower", tower.to_text()}, {"f", o.expr}};
        r.report = {{"direct", direct.to_json()},
                    {"staged", staged.to_json()},
                    {"routes_agree", verdict_to_json(agree)}};
        r.facts = std::move(agree.facts);
        emit.put(std::move(r), t.ms());
    });

    auto *localize = app.add_subcommand(
        "localize", "content of an integer polynomial at one prime");
    localize->add_option("--prime", o.prime, "prime, or 0 for the fraction field")
        ->capture_default_str();
    localize->add_option("--var", o.var, "extension symbol")
        ->capture_default_str();
    localize->add_option("poly", o.expr, "polynomial over Int")->required();
    localize->callback([&] {
        Timer t;
        PolyOverRing f = parse_poly(o.expr, RingId::integers(), o.var);
        LocalizedContent lc = localize_content(f, Int(o.prime));
        RunRecord r;
        r.command = "localize";
        r.inputs = {{"f", o.expr}, {"prime", o.prime}, {"var", o.var}};
        r.report = {{"exponent", lc.exponent},
                    {"local", lc.local_text()},
                    {"global", lc.global.to_json()},
                    {"unit", lc.is_unit()}};
        emit.put(std::move(r), t.ms());
    });

    auto *dm = app.add_subcommand(
        "dm", "least multiplier exponent for a polynomial pair");
    dm->add_option("--base", o.base)->capture_default_str();
    dm->add_option("--var", o.var)->capture_default_str();
    dm->add_option("--max-n", o.max_n, "largest exponent tried")
        ->capture_default_str();
    dm->add_option("f", o.expr, "first polynomial")->required();
    dm->add_option("g", o.expr2, "second polynomial")->required();
    add_bounds(dm, o);
    dm->callback([&] {
        Timer t;
        RingId base = parse_ring(o.base);
        DMReport rep = dm_exponent(parse_poly(o.expr, base, o.var),
                                   parse_poly(o.expr2, base, o.var),
                                   o.max_n, o.sb);
        RunRecord r;
        r.command = "dm";
        r.inputs = {{"base", o.base},   {"var", o.var}, {"f", o.expr},
                    {"g", o.expr2},     {"max_n", o.max_n},
                    {"bounds", bounds_json(o)}};
        r.report = rep.to_json();
        for (auto &[n, v] : rep.per_n)
            for (auto &fact : v.facts) r.facts.push_back(std::move(fact));
        emit.put(std::move(r), t.ms());
    });

    for (const char *name : {"gaussian", "weak"}) {
        auto *cmd = app.add_subcommand(
            name, std::string(name) == "gaussian"
                      ? "do the contents of a pair multiply exactly"
                      : "do content products reach the product's radical");
        cmd->add_option("--base", o.base)->capture_default_str();
        cmd->add_option("--var", o.var)->capture_default_str();
        cmd->add_option("f", o.expr)->required();
        cmd->add_option("g", o.expr2)->required();
        add_bounds(cmd, o);
        std::string cmd_name = name;
        cmd->callback([&, cmd_name] {
            Timer t;
            RingId base = parse_ring(o.base);
            PolyOverRing f = parse_poly(o.expr, base, o.var);
            PolyOverRing g = parse_poly(o.expr2, base, o.var);
            PropertyVerdict v = cmd_name == "gaussian"
                                    ? check_gaussian(f, g, o.sb)
                                    : check_weak_content_pair(f, g, o.sb);
            RunRecord r;
            r.command = cmd_name;
            r.inputs = {{"base", o.base}, {"var", o.var}, {"f", o.expr},
                        {"g", o.expr2},   {"bounds", bounds_json(o)}};
            r.report = verdict_to_json(v);
            r.facts = std::move(v.facts);
            emit.put(std::move(r), t.ms());
        });
    }

    auto *semi = app.add_subcommand(
        "semicontent", "multiplier outside a prime pushing one content into "
                       "the product content");
    semi->add_option("--base", o.base)->capture_default_str();
    semi->add_option("--var", o.var)->capture_default_str();
    semi->add_option("--pgen", o.pgens, "generator of the prime, repeatable")
        ->required();
    semi->add_option("f", o.expr)->required();
    semi->add_option("g", o.expr2)->required();
    add_bounds(semi, o);
    semi->callback([&] {
        Timer t;
        RingId base = parse_ring(o.base);
        Ideal P = parse_ideal(o.base, o.pgens);
        auto w = semicontent_witness(P, parse_poly(o.expr, base, o.var),
                                     parse_poly(o.expr2, base, o.var), o.sb);
        RunRecord r;
        r.command = "semicontent";
        r.inputs = {{"base", o.base}, {"var", o.var},
                    {"P", json(o.pgens)}, {"f", o.expr}, {"g", o.expr2},
                    {"bounds", bounds_json(o)}};
        r.report = {{"found", w.has_value()},
                    {"witness", w ? json(w->to_text()) : json(nullptr)}};
        emit.put(std::move(r), t.ms());
    });

    for (const char *name : {"prime-ext", "primary-ext"}) {
        auto *cmd = app.add_subcommand(
            name, std::string(name) == "prime-ext"
                      ? "does a prime stay prime after adjoining a variable"
                      : "does a primary ideal stay primary after adjoining "
                        "a variable");
        cmd->add_option("--ring", o.ring)->capture_default_str();
        cmd->add_option("--seed", o.seed)->capture_default_str();
        cmd->add_option("gens", o.gens, "ideal generators")->required();
        add_bounds(cmd, o);
        std::string cmd_name = name;
        cmd->callback([&, cmd_name] {
            Timer t;
            Ideal I = parse_ideal(o.ring, o.gens);
            PropertyVerdict v =
                cmd_name == "prime-ext"
                    ? check_prime_extension(I, o.sb, o.seed)
                    : check_primary_extension(I, o.sb, o.seed);
            RunRecord r;
            r.command = cmd_name;
            r.inputs = {{"ring", o.ring}, {"gens", json(o.gens)},
                        {"seed", o.seed}, {"bounds", bounds_json(o)}};
            r.report = verdict_to_json(v);
            r.facts = std::move(v.facts);
            emit.put(std::move(r), t.ms());
        });
    }

    auto *vv = app.add_subcommand(
        "valuation-verdict", "series content classification for a value group");
    vv->add_option("--group", o.group)->capture_default_str();
    vv->callback([&] {
        Timer t;
        PropertyVerdict v = valuation_verdict(parse_group(o.group));
        RunRecord r;
        r.command = "valuation-verdict";
        r.inputs = {{"group", o.group}};
        r.report = verdict_to_json(v);
        r.facts = std::move(v.facts);
        emit.put(std::move(r), t.ms());
    });

    auto *trans = app.add_subcommand(
        "transitivity", "two-stage towers against flattened contents");
    trans->add_option("--seed", o.seed)->capture_default_str();
    trans->add_option("--cases", o.cases)->capture_default_str();
    add_bounds(trans, o);
    trans->callback([&] {
        Timer t;
        PropertyVerdict v = transitivity_suite(o.seed, o.cases, o.sb);
        RunRecord r;
        r.command = "transitivity";
        r.inputs = {{"seed", o.seed}, {"cases", o.cases},
                    {"bounds", bounds_json(o)}};
        r.report = verdict_to_json(v);
        r.facts = std::move(v.facts);
        emit.put(std::move(r), t.ms());
    });

    auto *pruefer = app.add_subcommand(
        "pruefer-suite", "content multiplication over gcd-style bases");
    pruefer->add_option("--ring", o.ring)->capture_default_str();
    pruefer->add_option("--pairs", o.pairs)->capture_default_str();
    pruefer->add_option("--seed", o.seed)->capture_default_str();
    add_bounds(pruefer, o);
    pruefer->callback([&] {
        Timer t;
        PropertyVerdict v =
            pruefer_gauss_suite(parse_ring(o.ring), o.pairs, o.seed, o.sb);
        RunRecord r;
        r.command = "pruefer-suite";
        r.inputs = {{"ring", o.ring}, {"pairs", o.pairs}, {"seed", o.seed},
                    {"bounds", bounds_json(o)}};
        r.report = verdict_to_json(v);
        r.facts = std::move(v.facts);
        emit.put(std::move(r), t.ms());
    });

    auto *demo = app.add_subcommand("demo", "run a named walkthrough");
    demo->add_option("name", o.name, "demo name")->required();
    demo->add_option("--seed", o.seed)->capture_default_str();
    demo->callback([&] {
        Timer t;
        RunRecord r = run_demo(o.name, o.seed);
        emit.put(std::move(r), t.ms());
    });

    auto *search = app.add_subcommand(
        "search", "look for pairs separating two content properties");
    search->add_option("--config", o.config,
                       "JSON config file, or inline JSON starting with {")
        ->required();
    search->add_option("--seed", o.seed)->capture_default_str();
    search->callback([&] {
        Timer t;
        std::vector<RunRecord> found =
            search_pairs(search_config(o.config), o.seed);
        RunRecord summary;
        summary.command = "search-summary";
        summary.inputs = search_config(o.config);
        summary.inputs["seed"] = o.seed;
        summary.report = {{"found", found.size()}};
        for (auto &r : found) emit.put(std::move(r), 0.0);
        emit.put(std::move(summary), t.ms());
    });

    auto *suite = app.add_subcommand(
        "suite", "deterministic sweep over the whole library surface");
    suite->add_option("--seed", o.seed)->capture_default_str();
    std::string suite_out;
    suite->add_option("--out", suite_out, "JSONL output path")->required();
    suite->callback([&] {
        Timer t;
        std::size_t n = run_full_suite(o.seed, suite_out);
        RunRecord r;
        r.command = "suite";
        r.inputs = {{"seed", o.seed}, {"out", suite_out}};
        bool fails = false;
        {
            std::ifstream in(suite_out);
            std::string line;
            while (std::getline(in, line))
                if (!line.empty() && has_fails(json::parse(line)))
                    fails = true;
        }
        r.report = {{"records", n}, {"fails_present", fails}};
        emit.put(std::move(r), t.ms());
        if (fails) emit.exit_code = kExitFails;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    } catch (const Error &e) {
        json err{{"error", error_kind_name(e.kind())},
                 {"message", e.what()}};
        if (!e.payload().is_null()) err["payload"] = e.payload();
        std::cout << err.dump(2) << "\n";
        return e.kind() == ErrorKind::Internal ? kExitInternal : kExitUsage;
    } catch (const std::exception &e) {
        json err{{"error", "Unexpected"}, {"message", e.what()}};
        std::cout << err.dump(2) << "\n";
        return kExitInternal;
    }
    return emit.exit_code;
}
