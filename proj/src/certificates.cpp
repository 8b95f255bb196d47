#include "contentlab/certificates.hpp"

#include "contentlab/verdict.hpp"

#include <variant>

namespace contentlab {

namespace {

using nlohmann::json;

json elem_json(const RingElement &e) { return e.to_text(); }

json elems_json(const std::vector<RingElement> &v) {
    json out = json::array();
    for (const auto &e : v)
        out.push_back(e.to_text());
    return out;
}

template <class... Ts> struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts> overloaded(Ts...) -> overloaded<Ts...>;

} // namespace

json cert_to_json(const MemberCert &c) {
    json j;
    j["type"] = "member";
    j["element"] = elem_json(c.element);
    j["gens"] = elems_json(c.gens);
    j["coeffs"] = elems_json(c.coeffs);
    if (c.hahn) {
        j["hahn"] = {{"min_value", c.hahn->min_value.to_string()},
                     {"argmin", c.hahn->argmin},
                     {"cofactor", elem_json(c.hahn->cofactor)}};
    }
    return j;
}

json cert_to_json(const NonMemberCert &c) {
    json j;
    j["type"] = "nonmember";
    j["element"] = elem_json(c.element);
    j["gens"] = elems_json(c.gens);
    j["witness"] = std::visit(
        overloaded{
            [](const DivisionWitness &w) {
                return json{{"kind", "division"},
                            {"normal_gen", elem_json(w.normal_gen)},
                            {"bezout", elems_json(w.bezout)},
                            {"gen_quotients", elems_json(w.gen_quotients)},
                            {"quotient", elem_json(w.quotient)},
                            {"remainder", elem_json(w.remainder)}};
            },
            [](const ZeroIdealWitness &) {
                return json{{"kind", "zero-ideal"}};
            },
            [](const HahnValuationWitness &w) {
                return json{{"kind", "valuation"},
                            {"min_gen_value", w.min_gen_value.to_string()},
                            {"argmin", w.argmin},
                            {"elem_value", w.elem_value.to_string()}};
            },
            [](const GradedDualWitness &w) {
                json lam = json::array();
                for (const auto &[mono, c2] : w.lambda)
                    lam.push_back({mono.first, mono.second, rat_to_string(c2)});
                return json{{"kind", "graded-dual"},
                            {"degree", w.degree},
                            {"lambda", lam}};
            },
            [](const HomImageWitness &w) {
                return json{{"kind", "hom-image"},
                            {"hom", w.hom.describe()},
                            {"target", cert_to_json(*w.target)}};
            },
        },
        c.witness);
    return j;
}

json cert_to_json(const RadicalMemberCert &c) {
    json j;
    j["type"] = "radical-member";
    j["element"] = elem_json(c.element);
    j["power"] = c.power;
    j["cert"] = cert_to_json(c.cert);
    return j;
}

json cert_to_json(const RadicalNonMemberCert &c) {
    json j;
    j["type"] = "radical-nonmember";
    j["element"] = elem_json(c.element);
    j["gens"] = elems_json(c.gens);
    j["witness"] = std::visit(
        overloaded{
            [](const RadicalBezoutWitness &w) {
                return json{{"kind", "coprime-factor"},
                            {"normal_gen", elem_json(w.normal_gen)},
                            {"bezout", elems_json(w.bezout)},
                            {"gen_quotients", elems_json(w.gen_quotients)},
                            {"factor", elem_json(w.factor)},
                            {"factor_cof", elem_json(w.factor_cof)},
                            {"u", elem_json(w.u)},
                            {"v", elem_json(w.v)}};
            },
            [](const ZeroIdealWitness &) {
                return json{{"kind", "zero-ideal"}};
            },
            [](const HahnRadicalWitness &w) {
                return json{{"kind", "value-gap"},
                            {"ideal_value", w.ideal_value.to_string()},
                            {"elem_value", w.elem_value.to_string()}};
            },
            [](const RadicalHomImageWitness &w) {
                return json{{"kind", "hom-image"},
                            {"hom", w.hom.describe()},
                            {"target", cert_to_json(*w.target)}};
            },
        },
        c.witness);
    return j;
}

json fact_to_json(const CertifiedFact &f) {
    json j;
    j["context"] = f.context;
    j["cert"] = std::visit([](const auto &c) { return cert_to_json(c); }, f.cert);
    return j;
}

PropertyVerdict PropertyVerdict::holds(nlohmann::json evidence) {
    PropertyVerdict v;
    v.kind = Kind::Holds;
    v.evidence = std::move(evidence);
    return v;
}

PropertyVerdict PropertyVerdict::fails(nlohmann::json evidence,
                                       std::vector<CertifiedFact> facts) {
    PropertyVerdict v;
    v.kind = Kind::Fails;
    v.evidence = std::move(evidence);
    v.facts = std::move(facts);
    return v;
}

PropertyVerdict PropertyVerdict::unknown(nlohmann::json evidence) {
    PropertyVerdict v;
    v.kind = Kind::Unknown;
    v.evidence = std::move(evidence);
    return v;
}

const char *verdict_name(PropertyVerdict::Kind k) {
    switch (k) {
    case PropertyVerdict::Kind::Holds:
        return "Holds";
    case PropertyVerdict::Kind::Fails:
        return "Fails";
    case PropertyVerdict::Kind::Unknown:
        return "Unknown";
    }
    return "Unknown";
}

json verdict_to_json(const PropertyVerdict &v) {
    json facts = json::array();
    for (const auto &f : v.facts)
        facts.push_back(fact_to_json(f));
    return json{{"verdict", verdict_name(v.kind)},
                {"evidence", v.evidence},
                {"facts", facts}};
}

} // namespace contentlab
