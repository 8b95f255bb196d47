#pragma once

#include "contentlab/numeric.hpp"

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace contentlab {

enum class GroupKind { Integers, LexTuples, QuadDense };

// Totally ordered abelian group identifier. Three families:
//   Z           rank 1 integers
//   LexZ(k)     Z^k under lexicographic order, k >= 2
//   Quad(d)     Z + Z*sqrt(d) as a dense subgroup of R, d >= 2 squarefree
class GroupId {
  public:
    static GroupId integers();
    static GroupId lex(int rank);
    static GroupId quad(long d);

    GroupKind kind() const { return kind_; }
    int rank() const { return rank_; }
    long d() const { return d_; }

    bool operator==(const GroupId &o) const = default;

    std::string to_string() const;

  private:
    GroupId(GroupKind k, int rank, long d) : kind_(k), rank_(rank), d_(d) {}
    GroupKind kind_;
    int rank_; // coordinate count (2 for Quad: the pair (a, b) means a + b*sqrt(d))
    long d_;
};

struct GroupElement {
    GroupId group;
    std::vector<Int> coords;

    bool operator==(const GroupElement &o) const = default;
    std::string to_string() const;
};

enum class Ordering { LT = -1, EQ = 0, GT = 1 };

GroupElement group_zero(const GroupId &g);
GroupElement group_element(const GroupId &g, std::vector<Int> coords);
GroupElement add(const GroupElement &a, const GroupElement &b);
GroupElement sub(const GroupElement &a, const GroupElement &b);
GroupElement neg(const GroupElement &a);
GroupElement scale(const Int &m, const GroupElement &a);

// Exact order comparison. For Quad(d) the sign of a + b*sqrt(d) is decided
// by the signs of a, b and the comparison a^2 vs b^2*d; equality of the
// squares would make sqrt(d) rational, so it cannot occur off zero.
Ordering compare(const GroupElement &a, const GroupElement &b);
bool is_positive(const GroupElement &a);
bool is_nonnegative(const GroupElement &a);
int sign_of(const GroupElement &a);

// Value of a rational combination p + q*sqrt(d); used for ConvergentQuad
// limits and interval endpoints.
struct QuadValue {
    Rat p;
    Rat q;
};

// sign(p + q*sqrt(d))
int quad_value_sign(const QuadValue &v, long d);
// compare element (a, b) against value p + q*sqrt(d)
Ordering compare_quad(const GroupElement &a, const QuadValue &v);

// Countable subset descriptors.
//   Finite          explicit element list (nonempty)
//   Affine(u, w)    { u + m*w : m in N }, w != 0
//   ConvergentQuad  a strictly decreasing sequence in Quad(d) whose infimum
//                   is p + q*sqrt(d); the limit need not lie in the group
class SeqDescriptor {
  public:
    struct Finite {
        std::vector<GroupElement> elems;
    };
    struct Affine {
        GroupElement start;
        GroupElement step;
    };
    struct ConvergentQuad {
        GroupId group;
        QuadValue limit;
    };

    static SeqDescriptor finite(std::vector<GroupElement> elems);
    static SeqDescriptor affine(GroupElement start, GroupElement step);
    static SeqDescriptor convergent_quad(GroupId group, Rat p, Rat q);

    const GroupId &group() const { return group_; }
    bool is_finite() const { return std::holds_alternative<Finite>(body_); }
    bool is_affine() const { return std::holds_alternative<Affine>(body_); }
    bool is_convergent() const { return std::holds_alternative<ConvergentQuad>(body_); }
    const Finite &as_finite() const { return std::get<Finite>(body_); }
    const Affine &as_affine() const { return std::get<Affine>(body_); }
    const ConvergentQuad &as_convergent() const { return std::get<ConvergentQuad>(body_); }

    std::string to_string() const;

  private:
    SeqDescriptor(GroupId g, std::variant<Finite, Affine, ConvergentQuad> b)
        : group_(std::move(g)), body_(std::move(b)) {}
    GroupId group_;
    std::variant<Finite, Affine, ConvergentQuad> body_;
};

// Throws MalformedDescriptor unless every described element is > 0.
// Decidable in closed form for all three descriptor kinds.
void require_positive(const SeqDescriptor &s);

// Greatest lower bound of the described set within the group, or nullopt
// when every lower bound admits a strictly larger lower bound.
// Requires all described elements positive.
std::optional<GroupElement> glb(const SeqDescriptor &s);

// First n described elements in description order. For Finite descriptors
// shorter than n the whole list is returned.
std::vector<GroupElement> materialize(const SeqDescriptor &s, int n);

// Exact test: is x a lower bound of the entire described set.
bool is_lower_bound(const SeqDescriptor &s, const GroupElement &x);

// For descriptors with no glb: `count` pairs (g, g') of lower bounds with
// g < g', demonstrating that no candidate is greatest.
std::vector<std::pair<GroupElement, GroupElement>>
lower_bound_improvements(const SeqDescriptor &s, int count);

// A group element strictly inside (lo, hi), deterministic in the endpoints,
// found by stepping with powers of the fundamental Pell unit of d.
// Requires lo < hi.
GroupElement quad_element_in_interval(const GroupId &g, const QuadValue &lo,
                                      const QuadValue &hi);

// Fundamental solution of x^2 - d*y^2 = +-1 with x, y > 0.
struct PellSolution {
    Int x;
    Int y;
    int norm; // +1 or -1
};
PellSolution pell_fundamental(long d);

} // namespace contentlab
