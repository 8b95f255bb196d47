#pragma once

#include "contentlab/rings.hpp"
#include "contentlab/valgroup.hpp"

#include <json.hpp>

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace contentlab {

// Certificates are self-contained: a checker needs ring arithmetic and
// nothing else to replay them. Every field that a check depends on is
// stored explicitly, including data the producer could recompute.

// element == sum of coeffs[i] * gens[i].
// Over Hahn rings finite-support cofactors against the original generators
// need not exist, so the combination is recorded against the value-monomial
// normal form instead (hahn field set, coeffs empty).
struct HahnMemberData {
    GroupElement min_value;  // least generator value, attained at argmin
    std::size_t argmin = 0;
    RingElement cofactor;    // element == cofactor * t^min_value
};

struct MemberCert {
    RingElement element;
    std::vector<RingElement> gens;
    std::vector<RingElement> coeffs;
    std::optional<HahnMemberData> hahn;
};

// Single-generator rings: the normal generator is tied to the original
// generators in both directions (bezout, gen_quotients), and the element
// leaves a nonzero canonically reduced remainder on division by it.
struct DivisionWitness {
    RingElement normal_gen;
    std::vector<RingElement> bezout;         // normal_gen == sum bezout[i]*gens[i]
    std::vector<RingElement> gen_quotients;  // gens[i] == gen_quotients[i]*normal_gen
    RingElement quotient;                    // element == quotient*normal_gen + remainder
    RingElement remainder;                   // nonzero; reduced range checked per ring
};

// Every generator is zero and the element is not (for radicals: the element
// is not even nilpotent).
struct ZeroIdealWitness {};

struct HahnValuationWitness {
    GroupElement min_gen_value;  // least generator value, attained at argmin
    std::size_t argmin = 0;
    GroupElement elem_value;     // strictly below min_gen_value
};

// All generators homogeneous. lambda is a linear functional on the degree-d
// coefficient space that kills every degree-d multiple of every generator
// but not the degree-d part of the element.
struct GradedDualWitness {
    int degree = 0;
    std::vector<std::pair<std::pair<int, int>, Rat>> lambda;
};

struct NonMemberCert;

// Image of the membership question under a ring map fails in the target.
struct HomImageWitness {
    RingHom hom;
    std::shared_ptr<NonMemberCert> target;
};

struct NonMemberCert {
    RingElement element;
    std::vector<RingElement> gens;
    std::variant<DivisionWitness, ZeroIdealWitness, HahnValuationWitness,
                 GradedDualWitness, HomImageWitness>
        witness;
};

// element^power lands in the ideal; cert.element is the computed power.
struct RadicalMemberCert {
    RingElement element;
    int power = 1;
    MemberCert cert;
};

// factor is a non-unit divisor of the normal generator while
// u*factor + v*element == 1, so every power of the element stays a unit
// modulo factor and can never enter the ideal.
struct RadicalBezoutWitness {
    RingElement normal_gen;
    std::vector<RingElement> bezout;
    std::vector<RingElement> gen_quotients;
    RingElement factor;
    RingElement factor_cof;  // normal_gen == factor * factor_cof
    RingElement u;
    RingElement v;
};

// k*elem_value < ideal_value for every k >= 1, checkable from the leading
// coordinate positions (lexicographic groups) or from elem_value == 0.
struct HahnRadicalWitness {
    GroupElement ideal_value;
    GroupElement elem_value;
};

struct RadicalNonMemberCert;

struct RadicalHomImageWitness {
    RingHom hom;
    std::shared_ptr<RadicalNonMemberCert> target;
};

struct RadicalNonMemberCert {
    RingElement element;
    std::vector<RingElement> gens;
    std::variant<RadicalBezoutWitness, ZeroIdealWitness, HahnRadicalWitness,
                 RadicalHomImageWitness>
        witness;
};

// Anything a suite emits that an independent checker can replay.
struct CertifiedFact {
    std::string context;
    std::variant<MemberCert, NonMemberCert, RadicalMemberCert,
                 RadicalNonMemberCert>
        cert;
};

nlohmann::json cert_to_json(const MemberCert &c);
nlohmann::json cert_to_json(const NonMemberCert &c);
nlohmann::json cert_to_json(const RadicalMemberCert &c);
nlohmann::json cert_to_json(const RadicalNonMemberCert &c);
nlohmann::json fact_to_json(const CertifiedFact &f);

} // namespace contentlab
