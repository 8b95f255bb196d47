#pragma once

#include "contentlab/certificates.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace contentlab {

// Independent certificate replay. Everything here runs on ring arithmetic
// alone (add, mul, valuations, hom application); none of the ideal or
// membership machinery that produced the certificates is consulted, so a
// pass means the claimed fact is forced by recomputed identities. A false
// return leaves the first discrepancy in *why when given.
bool reverify_member(const MemberCert &c, std::string *why = nullptr);
bool reverify_non_member(const NonMemberCert &c, std::string *why = nullptr);
bool reverify_radical_member(const RadicalMemberCert &c,
                             std::string *why = nullptr);
bool reverify_radical_non_member(const RadicalNonMemberCert &c,
                                 std::string *why = nullptr);
bool reverify_fact(const CertifiedFact &f, std::string *why = nullptr);

struct ReverifyStats {
    std::size_t total = 0;
    std::size_t passed = 0;
    std::vector<std::string> failures; // "context: discrepancy" per miss

    bool all_passed() const { return passed == total; }
};

ReverifyStats reverify_all(const std::vector<CertifiedFact> &facts);

} // namespace contentlab
