#pragma once

#include "contentlab/certificates.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace contentlab {

// Three-valued outcome of a property check. Fails always carries enough
// certificates in `facts` to replay the counterexample; Holds records how
// the claim was established (structural argument, exhaustion, sampling).
struct PropertyVerdict {
    enum class Kind { Holds, Fails, Unknown };

    Kind kind = Kind::Unknown;
    nlohmann::json evidence = nlohmann::json::object();
    std::vector<CertifiedFact> facts;

    static PropertyVerdict holds(nlohmann::json evidence);
    static PropertyVerdict fails(nlohmann::json evidence,
                                 std::vector<CertifiedFact> facts);
    static PropertyVerdict unknown(nlohmann::json evidence);

    bool is_holds() const { return kind == Kind::Holds; }
    bool is_fails() const { return kind == Kind::Fails; }
    bool is_unknown() const { return kind == Kind::Unknown; }
};

const char *verdict_name(PropertyVerdict::Kind k);
nlohmann::json verdict_to_json(const PropertyVerdict &v);

} // namespace contentlab
