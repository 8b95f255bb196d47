#pragma once

#include "contentlab/numeric.hpp"
#include "contentlab/valgroup.hpp"

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace contentlab {

enum class RingKind { Int, IntMod, PrimeField, Rationals, UniPoly, BiPolyQ, HahnVal };

// Identifier for a ring in the supported tower:
//   Int             integers
//   IntMod(n)       Z/n, n >= 2
//   PrimeField(p)   Z/p, p prime
//   Rationals       Q
//   UniPoly(B, v)   B[v], B one of the above or UniPoly, nesting depth <= 3
//   BiPolyQ(x, y)   Q[x, y] as a single sparse kind
//   HahnVal(G, k)   finite-support Hahn series over residue field k with
//                   exponents in the nonnegative part of G
class RingId {
  public:
    static RingId integers();
    static RingId integers_mod(const Int &n);
    static RingId prime_field(const Int &p);
    static RingId rationals();
    static RingId uni_poly(const RingId &base, const std::string &var);
    static RingId bi_poly_q(const std::string &x, const std::string &y);
    static RingId hahn(const GroupId &group, const RingId &residue);

    RingKind kind() const;
    const Int &modulus() const;      // IntMod, PrimeField
    const RingId &base() const;      // UniPoly
    const std::string &var() const;  // UniPoly
    const std::string &var_x() const; // BiPolyQ
    const std::string &var_y() const; // BiPolyQ
    const GroupId &group() const;    // HahnVal
    const RingId &residue() const;   // HahnVal

    bool operator==(const RingId &o) const;
    bool operator!=(const RingId &o) const { return !(*this == o); }

    bool is_field() const;
    // Exact for every supported kind (IntMod(n) is a domain iff n is prime).
    bool is_domain() const;
    int poly_depth() const;
    std::set<std::string> variables() const;

    std::string to_string() const;

    struct Impl; // opaque

  private:
    explicit RingId(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
    std::shared_ptr<const Impl> impl_;
};

class RingElement;

struct UniPolyData {
    // Dense coefficients, ascending degree, trailing zeros trimmed.
    std::vector<RingElement> coeffs;
    bool operator==(const UniPolyData &o) const;
};

struct BiPolyData {
    // exponent pair (on var_x, var_y) -> nonzero rational coefficient
    std::map<std::pair<int, int>, Rat> terms;
    bool operator==(const BiPolyData &o) const = default;
};

struct HahnData {
    // ascending support, nonzero residue coefficients, exponents >= 0
    std::vector<std::pair<GroupElement, RingElement>> terms;
    bool operator==(const HahnData &o) const;
};

class RingElement {
  public:
    using Payload = std::variant<Int, Rat, UniPolyData, BiPolyData, HahnData>;

    RingElement(); // zero of Int, so containers have a sane default

    const RingId &ring() const { return ring_; }
    const Payload &payload() const { return payload_; }

    const Int &as_int() const;
    const Rat &as_rat() const;
    const UniPolyData &as_poly() const;
    const BiPolyData &as_bipoly() const;
    const HahnData &as_hahn() const;

    bool operator==(const RingElement &o) const;
    bool operator!=(const RingElement &o) const { return !(*this == o); }

    std::string to_text() const;

  private:
    friend RingElement make_element(RingId ring, RingElement::Payload payload);
    RingElement(RingId ring, Payload payload)
        : ring_(std::move(ring)), payload_(std::move(payload)) {}
    RingId ring_;
    Payload payload_;
};

// Canonicalizing constructor used by all factories.
RingElement make_element(RingId ring, RingElement::Payload payload);

RingElement ring_zero(const RingId &r);
RingElement ring_one(const RingId &r);
// Canonical image of an integer under Z -> R.
RingElement from_int(const RingId &r, const Int &n);
// Image of a rational; requires a ring containing Q.
RingElement from_rat(const RingId &r, const Rat &q);

RingElement make_int(const Int &n);
RingElement make_rat(const Rat &q);
RingElement make_mod(const RingId &r, const Int &n);
RingElement make_poly(const RingId &polyring, std::vector<RingElement> coeffs);
RingElement make_bipoly(const RingId &r, std::map<std::pair<int, int>, Rat> terms);
RingElement make_hahn(const RingId &r,
                      std::vector<std::pair<GroupElement, RingElement>> terms);

enum class ArithOp { Add, Sub, Mul, Neg };

RingElement arith(ArithOp op, const RingElement &a, const RingElement &b);
RingElement add(const RingElement &a, const RingElement &b);
RingElement sub(const RingElement &a, const RingElement &b);
RingElement mul(const RingElement &a, const RingElement &b);
RingElement neg(const RingElement &a);
RingElement pow_elem(const RingElement &a, unsigned e);

bool is_zero(const RingElement &a);
bool is_one(const RingElement &a);

// Units: IntMod by coprimality; polynomials need a unit constant term and
// nilpotent higher coefficients; Hahn series are units of the modeled
// valuation ring exactly when their valuation is zero.
bool is_unit(const RingElement &a);
bool is_nilpotent(const RingElement &a);

// Min support exponent over HahnVal; nullopt for zero. Throws WrongRingKind
// for every other ring kind.
std::optional<GroupElement> valuation(const RingElement &a);

// UniPoly degree, -1 for the zero polynomial.
int poly_degree(const RingElement &a);
const std::vector<RingElement> &poly_coeffs(const RingElement &a);
RingElement poly_coeff(const RingElement &a, int i);
RingElement poly_leading(const RingElement &a);

int bipoly_total_degree(const RingElement &a); // -1 for zero
bool bipoly_homogeneous(const RingElement &a); // zero counts as homogeneous

// Exact quotient where the base supports it (fields, Int, polynomials with
// exactly dividing coefficients). nullopt when b does not divide a.
std::optional<RingElement> exact_div(const RingElement &a, const RingElement &b);

// Quotient and remainder over a field-coefficient UniPoly; b != 0.
std::pair<RingElement, RingElement> poly_divmod(const RingElement &a,
                                                const RingElement &b);

RingElement field_inv(const RingElement &a);

// Hahn series divided by the monomial t^v; nullopt unless all support >= v.
std::optional<RingElement> hahn_shift_down(const RingElement &a, const GroupElement &v);
RingElement hahn_monomial(const RingId &r, const GroupElement &v);

// Ring homomorphisms with a seeded structural self-test at construction.
class RingHom {
  public:
    enum class Rule { QuotientModInt, CoeffMod, Subst, Inclusion };

    // Int -> IntMod(n) or PrimeField(p)
    static RingHom quotient_mod(const RingId &source, const RingId &target);
    // UniPoly(Int, v) -> UniPoly(IntMod(n) or PrimeField(p), v)
    static RingHom coeff_mod(const RingId &source, const RingId &target);
    // Polynomial substitution: every source variable gets an image in the
    // target; ground scalars embed canonically.
    static RingHom subst(const RingId &source, const RingId &target,
                         std::map<std::string, RingElement> images);
    static RingHom inclusion(const RingId &source, const RingId &target);

    const RingId &source() const { return source_; }
    const RingId &target() const { return target_; }
    Rule rule() const { return rule_; }
    const std::map<std::string, RingElement> &images() const { return images_; }

    RingElement apply(const RingElement &a) const;
    std::string describe() const;

  private:
    RingHom(Rule rule, RingId source, RingId target,
            std::map<std::string, RingElement> images);
    void self_test() const;

    Rule rule_;
    RingId source_;
    RingId target_;
    std::map<std::string, RingElement> images_;
};

RingElement apply_hom(const RingHom &h, const RingElement &a);

} // namespace contentlab
