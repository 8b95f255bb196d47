#include "contentlab/search.hpp"

#include "contentlab/content.hpp"
#include "contentlab/errors.hpp"
#include "contentlab/propcheck.hpp"
#include "contentlab/sampling.hpp"
#include "contentlab/verdict.hpp"

#include <string>
#include <utility>
#include <vector>

namespace contentlab {

using nlohmann::json;

namespace {

struct SearchConfig {
    RingId base = RingId::integers();
    std::string pair;
    int degree = 1;
    long coeff = 1;
    int samples = 1;
};

[[noreturn]] void bad_config(const std::string &msg) {
    throw Error(ErrorKind::ConfigError, msg);
}

SearchConfig read_config(const json &cfg) {
    if (!cfg.is_object() || cfg.empty())
        bad_config("config must be a non-empty object");
    for (const char *key : {"base", "pair", "degree", "coeff", "samples"})
        if (!cfg.contains(key))
            bad_config(std::string("config is missing '") + key + "'");
    for (const auto &[key, value] : cfg.items()) {
        (void)value;
        if (key != "base" && key != "pair" && key != "degree" &&
            key != "coeff" && key != "samples")
            bad_config("unknown config key '" + key + "'");
    }
    SearchConfig sc;
    if (!cfg.at("base").is_string()) bad_config("'base' must be a string");
    std::string base = cfg.at("base").get<std::string>();
    if (base == "Int")
        sc.base = RingId::integers();
    else if (base == "Q[x,y]" || base == "BiPolyQ")
        sc.base = RingId::bi_poly_q("x", "y");
    else
        bad_config("'base' must be Int or Q[x,y], got '" + base + "'");
    if (!cfg.at("pair").is_string()) bad_config("'pair' must be a string");
    sc.pair = cfg.at("pair").get<std::string>();
    if (sc.pair != "weak-vs-gaussian")
        bad_config("unknown property pair '" + sc.pair + "'");
    if (!cfg.at("degree").is_number_integer() ||
        cfg.at("degree").get<int>() < 1)
        bad_config("'degree' must be an integer >= 1");
    sc.degree = cfg.at("degree").get<int>();
    if (!cfg.at("coeff").is_number_integer() ||
        cfg.at("coeff").get<long>() < 1)
        bad_config("'coeff' must be an integer >= 1");
    sc.coeff = cfg.at("coeff").get<long>();
    if (!cfg.at("samples").is_number_integer() ||
        cfg.at("samples").get<int>() < 1)
        bad_config("'samples' must be an integer >= 1");
    sc.samples = cfg.at("samples").get<int>();
    return sc;
}

// A separation holds for the pair when contents refuse to multiply while
// every product of content generators still reaches the radical.
bool separates(const PolyOverRing &f, const PolyOverRing &g,
               PropertyVerdict &gauss, PropertyVerdict &weak) {
    gauss = check_gaussian(f, g);
    if (!gauss.is_fails()) return false;
    weak = check_weak_content_pair(f, g);
    return weak.is_holds();
}

RunRecord found_record(const SearchConfig &sc, std::uint64_t seed,
                       const char *phase, const PolyOverRing &f,
                       const PolyOverRing &g, PropertyVerdict gauss,
                       PropertyVerdict weak) {
    RunRecord r;
    r.command = "search weak-vs-gaussian";
    r.inputs = {{"base", sc.base.to_string()}, {"pair", sc.pair},
                {"degree", sc.degree},         {"coeff", sc.coeff},
                {"samples", sc.samples},       {"seed", seed},
                {"phase", phase},              {"f", f.to_text()},
                {"g", g.to_text()}};
    r.report = {{"contents_multiply", verdict_to_json(gauss)},
                {"radical_containment", verdict_to_json(weak)},
                {"note", "one pair splitting the properties inside the "
                         "search box; no claim beyond it"}};
    for (auto &fact : gauss.facts) r.facts.push_back(std::move(fact));
    for (auto &fact : weak.facts) r.facts.push_back(std::move(fact));
    r.version = library_version();
    return r;
}

// Linear coefficient rows over the plane variables. The family is tiny and
// ordered, and it contains the pair (x + y*T, y + x*T) early on.
std::vector<RingElement> plane_atoms(const RingId &B) {
    RingElement x = make_bipoly(B, {{{1, 0}, Rat(1)}});
    RingElement y = make_bipoly(B, {{{0, 1}, Rat(1)}});
    return {x, y, add(x, y)};
}

PolyOverRing sample_pair_poly(const RingId &base, Rng &rng, int degree,
                              long coeff) {
    SampleBounds sb;
    sb.coeff = coeff;
    sb.degree = 2;
    std::vector<RingElement> cs;
    int d = static_cast<int>(rng.range(0, degree));
    for (int k = 0; k <= d; ++k)
        cs.push_back(sample_element(base, rng, sb));
    return PolyOverRing::make(base, "T", cs);
}

} // namespace

std::vector<RunRecord> search_pairs(const json &config, std::uint64_t seed) {
    SearchConfig sc = read_config(config);
    std::vector<RunRecord> out;

    if (sc.base.kind() == RingKind::BiPolyQ) {
        std::vector<RingElement> atoms = plane_atoms(sc.base);
        for (std::size_t a0 = 0; a0 < atoms.size(); ++a0)
            for (std::size_t a1 = 0; a1 < atoms.size(); ++a1)
                for (std::size_t b0 = 0; b0 < atoms.size(); ++b0)
                    for (std::size_t b1 = 0; b1 < atoms.size(); ++b1) {
                        PolyOverRing f = PolyOverRing::make(
                            sc.base, "T", {atoms[a0], atoms[a1]});
                        PolyOverRing g = PolyOverRing::make(
                            sc.base, "T", {atoms[b0], atoms[b1]});
                        PropertyVerdict gauss, weak;
                        if (separates(f, g, gauss, weak))
                            out.push_back(found_record(
                                sc, seed, "structured", f, g,
                                std::move(gauss), std::move(weak)));
                    }
    }

    Rng rng(seed);
    for (int i = 0; i < sc.samples; ++i) {
        PolyOverRing f = sample_pair_poly(sc.base, rng, sc.degree, sc.coeff);
        PolyOverRing g = sample_pair_poly(sc.base, rng, sc.degree, sc.coeff);
        PropertyVerdict gauss, weak;
        if (separates(f, g, gauss, weak))
            out.push_back(found_record(sc, seed, "sampled", f, g,
                                       std::move(gauss), std::move(weak)));
    }
    return out;
}

} // namespace contentlab
