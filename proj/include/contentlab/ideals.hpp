#pragma once

#include "contentlab/certificates.hpp"
#include "contentlab/rings.hpp"
#include "contentlab/verdict.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace contentlab {

// Finitely generated ideal given by an explicit generator list. Construction
// canonicalizes the list (zero generators dropped unless the ideal is zero)
// and computes a normal form where the ring admits one:
//   Int, IntMod, PrimeField, Rationals, UniPoly over a field
//       single generator (nonnegative / monic), with bezout coefficients
//       and generator quotients tying it to the original list
//   HahnVal
//       single value monomial t^v at the least generator value
//   BiPolyQ
//       scalar-normalized, deduplicated, sorted list (no canonicity claim)
// UniPoly over a non-field keeps the raw list.
// Both directions of the normal-form exchange are verified at construction.
class Ideal {
  public:
    static Ideal make(const RingId &ring, std::vector<RingElement> gens);

    const RingId &ring() const { return ring_; }
    const std::vector<RingElement> &gens() const { return gens_; }

    bool has_normal() const { return !normal_.empty(); }
    const std::vector<RingElement> &normal_gens() const;
    // Rings whose normal form is a single generator.
    bool has_principal_normal() const { return normal_.size() == 1; }
    const RingElement &normal_gen() const;

    // normal_gen == sum bezout()[i] * gens()[i]; empty for BiPolyQ/HahnVal.
    const std::vector<RingElement> &bezout() const { return bezout_; }
    // gens()[i] == gen_quotients()[i] * normal_gen; empty for BiPolyQ.
    const std::vector<RingElement> &gen_quotients() const { return quotients_; }
    // HahnVal: index of a generator attaining the least value.
    std::size_t hahn_argmin() const { return hahn_argmin_; }

    bool is_zero_ideal() const;

    std::string to_text() const;
    nlohmann::json to_json() const;

  private:
    Ideal() = default;

    RingId ring_ = RingId::integers();
    std::vector<RingElement> gens_;
    std::vector<RingElement> normal_;
    std::vector<RingElement> bezout_;
    std::vector<RingElement> quotients_;
    std::size_t hahn_argmin_ = 0;
};

enum class IdealOp { Sum, Product, Power, Intersect };

Ideal ideal_sum(const Ideal &A, const Ideal &B);
Ideal ideal_product(const Ideal &A, const Ideal &B);
Ideal ideal_power(const Ideal &A, int n);
// Intersections need a principal normal form on both sides; BiPolyQ and
// UniPoly over a non-field raise UnsupportedOp.
Ideal ideal_intersect(const Ideal &A, const Ideal &B);
// Dispatcher; n is read only by Power (B is ignored there).
Ideal ideal_op(IdealOp op, const Ideal &A, const Ideal &B, int n = 1);

struct MembershipResult {
    enum class Kind { Member, NonMember, Unknown };

    Kind kind = Kind::Unknown;
    std::optional<MemberCert> member;
    std::optional<NonMemberCert> non_member;
    // Cofactor degree bound that was exhausted when kind == Unknown.
    int bound = 0;

    bool is_member() const { return kind == Kind::Member; }
    bool is_non_member() const { return kind == Kind::NonMember; }
    bool is_unknown() const { return kind == Kind::Unknown; }
};

// Decides e in A where the ring allows it. Principal-normal rings and
// HahnVal are always decided. Over BiPolyQ: exact graded linear algebra
// when all generators are homogeneous, otherwise a bounded cofactor search
// for membership and a fixed family of evaluation maps for refutation;
// `bound` caps the cofactor total degree.
MembershipResult membership(const RingElement &e, const Ideal &A,
                            int bound = 6);

struct RadicalResult {
    enum class Kind { Member, NonMember, Unknown };

    Kind kind = Kind::Unknown;
    std::optional<RadicalMemberCert> member;
    std::optional<RadicalNonMemberCert> non_member;
    int powbound = 0;

    bool is_member() const { return kind == Kind::Member; }
    bool is_non_member() const { return kind == Kind::NonMember; }
    bool is_unknown() const { return kind == Kind::Unknown; }
};

// Decides e in rad(A) exactly over factorizable principal-normal rings and
// HahnVal; over BiPolyQ tries powers e^1..e^powbound and the evaluation
// family before giving up.
RadicalResult radical_membership(const RingElement &e, const Ideal &A,
                                 int powbound = 6, int bound = 6);

// Mutual inclusion generator by generator. Fails carries the offending
// generator and its refutation; Unknown reports the first undecided side.
PropertyVerdict ideal_equal(const Ideal &A, const Ideal &B, int bound = 6);

// Supported rings: Int, IntMod, PrimeField, Rationals, UniPoly over a
// field, HahnVal, and a monomial/linear fragment of BiPolyQ. Fails comes
// with a replayable witness pair (product inside, factors outside).
PropertyVerdict is_prime(const Ideal &A);
PropertyVerdict is_primary(const Ideal &A);

// Int, IntMod, UniPoly over a field. The zero ideal is rejected unless the
// ring is a domain. The unit ideal decomposes into the empty list.
std::vector<Ideal> primary_decomposition(const Ideal &A);

} // namespace contentlab
