#include "contentlab/valgroup.hpp"

#include "contentlab/errors.hpp"

#include <algorithm>
#include <sstream>

namespace contentlab {

namespace {

bool squarefree(long d) {
    for (long p = 2; p * p <= d; ++p) {
        if (d % (p * p) == 0) return false;
    }
    return true;
}

// sign(a + b*sqrt(d)) for integers a, b. Squarefree d >= 2 keeps sqrt(d)
// irrational, so a^2 == b^2*d can only happen at a == b == 0.
int quad_sign(const Int &a, const Int &b, long d) {
    int sa = a.sign(), sb = b.sign();
    if (sa == 0 && sb == 0) return 0;
    if (sa >= 0 && sb >= 0) return 1;
    if (sa <= 0 && sb <= 0) return -1;
    Int lhs = a * a;
    Int rhs = b * b * d;
    if (lhs == rhs)
        throw Error(ErrorKind::Internal, "quad_sign: a^2 == b^2*d off zero");
    if (sa > 0) return lhs > rhs ? 1 : -1;
    return lhs > rhs ? -1 : 1;
}

void require_same_group(const GroupElement &a, const GroupElement &b) {
    if (!(a.group == b.group))
        throw Error(ErrorKind::GroupMismatch, "elements from different groups");
}

int first_nonzero_index(const std::vector<Int> &v) {
    for (size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) return static_cast<int>(i);
    return -1;
}

} // namespace

GroupId GroupId::integers() { return GroupId(GroupKind::Integers, 1, 0); }

GroupId GroupId::lex(int rank) {
    if (rank < 2)
        throw Error(ErrorKind::MalformedDescriptor, "LexZ rank must be >= 2");
    if (rank > 8)
        throw Error(ErrorKind::MalformedDescriptor, "LexZ rank too large");
    return GroupId(GroupKind::LexTuples, rank, 0);
}

GroupId GroupId::quad(long d) {
    if (d < 2 || !squarefree(d))
        throw Error(ErrorKind::MalformedDescriptor,
                    "Quad(d) requires squarefree d >= 2");
    return GroupId(GroupKind::QuadDense, 2, d);
}

std::string GroupId::to_string() const {
    switch (kind_) {
    case GroupKind::Integers: return "Z";
    case GroupKind::LexTuples: return "LexZ(" + std::to_string(rank_) + ")";
    case GroupKind::QuadDense: return "Quad(" + std::to_string(d_) + ")";
    }
    return "?";
}

std::string GroupElement::to_string() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < coords.size(); ++i) {
        if (i) os << ",";
        os << coords[i];
    }
    os << ")";
    return os.str();
}

GroupElement group_zero(const GroupId &g) {
    return GroupElement{g, std::vector<Int>(static_cast<size_t>(g.rank()), Int(0))};
}

GroupElement group_element(const GroupId &g, std::vector<Int> coords) {
    if (static_cast<int>(coords.size()) != g.rank())
        throw Error(ErrorKind::GroupMismatch,
                    "coordinate count does not match group rank");
    return GroupElement{g, std::move(coords)};
}

GroupElement add(const GroupElement &a, const GroupElement &b) {
    require_same_group(a, b);
    GroupElement r = a;
    for (size_t i = 0; i < r.coords.size(); ++i) r.coords[i] += b.coords[i];
    return r;
}

GroupElement sub(const GroupElement &a, const GroupElement &b) {
    require_same_group(a, b);
    GroupElement r = a;
    for (size_t i = 0; i < r.coords.size(); ++i) r.coords[i] -= b.coords[i];
    return r;
}

GroupElement neg(const GroupElement &a) {
    GroupElement r = a;
    for (auto &c : r.coords) c = -c;
    return r;
}

GroupElement scale(const Int &m, const GroupElement &a) {
    GroupElement r = a;
    for (auto &c : r.coords) c *= m;
    return r;
}

int sign_of(const GroupElement &a) {
    switch (a.group.kind()) {
    case GroupKind::Integers:
        return a.coords[0].sign();
    case GroupKind::LexTuples: {
        int j = first_nonzero_index(a.coords);
        return j < 0 ? 0 : a.coords[static_cast<size_t>(j)].sign();
    }
    case GroupKind::QuadDense:
        return quad_sign(a.coords[0], a.coords[1], a.group.d());
    }
    return 0;
}

Ordering compare(const GroupElement &a, const GroupElement &b) {
    require_same_group(a, b);
    int s = sign_of(sub(a, b));
    return s < 0 ? Ordering::LT : (s > 0 ? Ordering::GT : Ordering::EQ);
}

bool is_positive(const GroupElement &a) { return sign_of(a) > 0; }
bool is_nonnegative(const GroupElement &a) { return sign_of(a) >= 0; }

int quad_value_sign(const QuadValue &v, long d) {
    // p/pd + (q/qd)*sqrt(d): scale by the positive common denominator.
    Int a = rat_num(v.p) * rat_den(v.q);
    Int b = rat_num(v.q) * rat_den(v.p);
    return quad_sign(a, b, d);
}

Ordering compare_quad(const GroupElement &a, const QuadValue &v) {
    if (a.group.kind() != GroupKind::QuadDense)
        throw Error(ErrorKind::GroupMismatch, "compare_quad needs a Quad group");
    QuadValue diff{Rat(a.coords[0]) - v.p, Rat(a.coords[1]) - v.q};
    int s = quad_value_sign(diff, a.group.d());
    return s < 0 ? Ordering::LT : (s > 0 ? Ordering::GT : Ordering::EQ);
}

SeqDescriptor SeqDescriptor::finite(std::vector<GroupElement> elems) {
    if (elems.empty())
        throw Error(ErrorKind::MalformedDescriptor, "finite descriptor is empty");
    GroupId g = elems.front().group;
    for (const auto &e : elems)
        if (!(e.group == g))
            throw Error(ErrorKind::GroupMismatch,
                        "finite descriptor mixes groups");
    return SeqDescriptor(g, Finite{std::move(elems)});
}

SeqDescriptor SeqDescriptor::affine(GroupElement start, GroupElement step) {
    require_same_group(start, step);
    if (sign_of(step) == 0)
        throw Error(ErrorKind::MalformedDescriptor, "affine step must be nonzero");
    GroupId g = start.group;
    return SeqDescriptor(g, Affine{std::move(start), std::move(step)});
}

SeqDescriptor SeqDescriptor::convergent_quad(GroupId group, Rat p, Rat q) {
    if (group.kind() != GroupKind::QuadDense)
        throw Error(ErrorKind::MalformedDescriptor,
                    "convergent descriptor requires a Quad group");
    return SeqDescriptor(group, ConvergentQuad{group, QuadValue{std::move(p), std::move(q)}});
}

std::string SeqDescriptor::to_string() const {
    std::ostringstream os;
    if (is_finite()) {
        os << "finite[";
        const auto &f = as_finite();
        for (size_t i = 0; i < f.elems.size(); ++i) {
            if (i) os << ",";
            os << f.elems[i].to_string();
        }
        os << "]";
    } else if (is_affine()) {
        const auto &a = as_affine();
        os << "affine(" << a.start.to_string() << ";" << a.step.to_string() << ")";
    } else {
        const auto &c = as_convergent();
        os << "conv(" << rat_to_string(c.limit.p);
        if (c.limit.q != 0) {
            Rat aq = c.limit.q < 0 ? Rat(-c.limit.q) : c.limit.q;
            os << (c.limit.q < 0 ? " - " : " + ") << rat_to_string(aq)
               << "*sqrt(" << group_.d() << ")";
        }
        os << ")";
    }
    return os.str();
}

void require_positive(const SeqDescriptor &s) {
    if (s.is_finite()) {
        for (const auto &e : s.as_finite().elems)
            if (!is_positive(e))
                throw Error(ErrorKind::MalformedDescriptor,
                            "finite descriptor contains a nonpositive element");
        return;
    }
    if (s.is_affine()) {
        const auto &a = s.as_affine();
        if (!is_positive(a.start))
            throw Error(ErrorKind::MalformedDescriptor, "affine start not positive");
        if (sign_of(a.step) > 0) return; // increasing from a positive start
        // Decreasing: over an archimedean group the set leaves the positives.
        if (s.group().kind() != GroupKind::LexTuples)
            throw Error(ErrorKind::MalformedDescriptor,
                        "decreasing affine descriptor leaves the positives");
        // LexZ: stays positive iff the start's prefix strictly before the
        // step's leading coordinate is already lex-positive.
        int j = first_nonzero_index(a.step.coords);
        int i = first_nonzero_index(a.start.coords);
        if (i < 0 || i >= j)
            throw Error(ErrorKind::MalformedDescriptor,
                        "decreasing affine descriptor leaves the positives");
        return;
    }
    const auto &c = s.as_convergent();
    if (quad_value_sign(c.limit, s.group().d()) < 0)
        throw Error(ErrorKind::MalformedDescriptor,
                    "convergent descriptor limit below zero");
}

std::optional<GroupElement> glb(const SeqDescriptor &s) {
    require_positive(s);
    if (s.is_finite()) {
        const auto &elems = s.as_finite().elems;
        GroupElement best = elems.front();
        for (const auto &e : elems)
            if (compare(e, best) == Ordering::LT) best = e;
        return best;
    }
    if (s.is_affine()) {
        const auto &a = s.as_affine();
        if (sign_of(a.step) > 0) return a.start;
        // Valid decreasing descriptors exist only over LexZ. Every lower
        // bound has a strictly smaller prefix than the start, and bumping a
        // trailing coordinate of any such bound yields a larger one.
        return std::nullopt;
    }
    const auto &c = s.as_convergent();
    if (rat_den(c.limit.p) == 1 && rat_den(c.limit.q) == 1) {
        return group_element(s.group(), {rat_num(c.limit.p), rat_num(c.limit.q)});
    }
    // The infimum is outside the group; density supplies a better lower
    // bound above any candidate.
    return std::nullopt;
}

namespace {

// Multiplication in Z[sqrt(d)] on integer coordinate pairs.
std::pair<Int, Int> quad_mul(const std::pair<Int, Int> &a,
                             const std::pair<Int, Int> &b, long d) {
    return {a.first * b.first + a.second * b.second * d,
            a.first * b.second + a.second * b.first};
}

// Largest integer n with n <= p + q*sqrt(d).
Int floor_quad(const QuadValue &v, long d) {
    Int bound = abs(rat_floor(v.p)) + abs(rat_floor(v.q)) * d + 2;
    Int lo = -bound, hi = bound; // invariant: lo <= floor(v) < hi + 1
    while (lo < hi) {
        Int mid = lo + (hi - lo + 1) / 2;
        QuadValue diff{v.p - Rat(mid), v.q};
        if (quad_value_sign(diff, d) >= 0)
            lo = mid;
        else
            hi = mid - 1;
    }
    return lo;
}

} // namespace

PellSolution pell_fundamental(long d) {
    // Continued fraction expansion of sqrt(d); convergents h/k are tested
    // for h^2 - d*k^2 = +-1. Guaranteed to terminate within the period.
    Int a0 = isqrt(Int(d));
    if (a0 * a0 == d)
        throw Error(ErrorKind::Internal, "pell_fundamental on a square");
    Int m = 0, den = 1, a = a0;
    Int h_prev = 1, h = a0;
    Int k_prev = 0, k = 1;
    for (int iter = 0; iter < 100000; ++iter) {
        Int t = h * h - d * k * k;
        if (t == 1) return {h, k, 1};
        if (t == -1) return {h, k, -1};
        m = den * a - m;
        den = (d - m * m) / den;
        a = (a0 + m) / den;
        Int h_next = a * h + h_prev;
        Int k_next = a * k + k_prev;
        h_prev = h; h = h_next;
        k_prev = k; k = k_next;
    }
    throw Error(ErrorKind::Internal, "pell_fundamental did not converge");
}

GroupElement quad_element_in_interval(const GroupId &g, const QuadValue &lo,
                                      const QuadValue &hi) {
    if (g.kind() != GroupKind::QuadDense)
        throw Error(ErrorKind::GroupMismatch, "interval search needs a Quad group");
    long d = g.d();
    QuadValue width{hi.p - lo.p, hi.q - lo.q};
    if (quad_value_sign(width, d) <= 0)
        throw Error(ErrorKind::PrecondViolated, "empty interval");

    PellSolution pell = pell_fundamental(d);
    // eps = |x - y*sqrt(d)| as a coordinate pair; 0 < eps < 1.
    std::pair<Int, Int> eps{pell.x, -pell.y};
    if (pell.norm == -1) eps = quad_mul(eps, eps, d);

    // Smallest power eps^k below the interval width.
    std::pair<Int, Int> step = eps;
    for (int k = 1; k <= 4096; ++k) {
        QuadValue diff{width.p - Rat(step.first), width.q - Rat(step.second)};
        if (quad_value_sign(diff, d) > 0) {
            // Norm of step is +-1, so its inverse is (A - B*sqrt(d))/norm.
            Int norm = step.first * step.first - Int(d) * step.second * step.second;
            Rat pa = (lo.p * Rat(step.first) - lo.q * Rat(step.second) * d) / Rat(norm);
            Rat qa = (lo.q * Rat(step.first) - lo.p * Rat(step.second)) / Rat(norm);
            Int mfloor = floor_quad(QuadValue{pa, qa}, d);
            Int mm = mfloor + 1;
            GroupElement out = group_element(g, {mm * step.first, mm * step.second});
            if (!(compare_quad(out, lo) == Ordering::GT &&
                  compare_quad(out, hi) == Ordering::LT))
                throw Error(ErrorKind::Internal, "interval search landed outside");
            return out;
        }
        step = quad_mul(step, eps, d);
    }
    throw Error(ErrorKind::Internal, "interval search exhausted");
}

std::vector<GroupElement> materialize(const SeqDescriptor &s, int n) {
    if (n < 1)
        throw Error(ErrorKind::PrecondViolated, "materialize needs n >= 1");
    std::vector<GroupElement> out;
    if (s.is_finite()) {
        const auto &elems = s.as_finite().elems;
        for (int i = 0; i < n && i < static_cast<int>(elems.size()); ++i)
            out.push_back(elems[static_cast<size_t>(i)]);
        return out;
    }
    if (s.is_affine()) {
        const auto &a = s.as_affine();
        GroupElement cur = a.start;
        for (int i = 0; i < n; ++i) {
            out.push_back(cur);
            cur = add(cur, a.step);
        }
        return out;
    }
    const auto &c = s.as_convergent();
    QuadValue ub{c.limit.p + 1, c.limit.q};
    for (int i = 0; i < n; ++i) {
        GroupElement e = quad_element_in_interval(s.group(), c.limit, ub);
        out.push_back(e);
        ub = QuadValue{Rat(e.coords[0]), Rat(e.coords[1])};
    }
    return out;
}

bool is_lower_bound(const SeqDescriptor &s, const GroupElement &x) {
    if (!(x.group == s.group()))
        throw Error(ErrorKind::GroupMismatch, "candidate from a different group");
    if (s.is_finite()) {
        for (const auto &e : s.as_finite().elems)
            if (compare(x, e) == Ordering::GT) return false;
        return true;
    }
    if (s.is_affine()) {
        const auto &a = s.as_affine();
        if (sign_of(a.step) > 0) return compare(x, a.start) != Ordering::GT;
        if (s.group().kind() != GroupKind::LexTuples) return false;
        // x bounds every u + m*w iff its prefix before the step's leading
        // coordinate is strictly below the start's prefix.
        int j = first_nonzero_index(a.step.coords);
        for (int i = 0; i < j; ++i) {
            const Int &xi = x.coords[static_cast<size_t>(i)];
            const Int &ui = a.start.coords[static_cast<size_t>(i)];
            if (xi < ui) return true;
            if (xi > ui) return false;
        }
        return false; // equal prefix loses against m -> infinity
    }
    return compare_quad(x, s.as_convergent().limit) != Ordering::GT;
}

std::vector<std::pair<GroupElement, GroupElement>>
lower_bound_improvements(const SeqDescriptor &s, int count) {
    std::vector<std::pair<GroupElement, GroupElement>> out;
    if (s.is_finite()) return out;
    if (s.is_affine()) {
        const auto &a = s.as_affine();
        if (sign_of(a.step) > 0) return out;
        if (s.group().kind() != GroupKind::LexTuples) return out;
        int j = first_nonzero_index(a.step.coords);
        if (j < 1) return out;
        GroupElement g = group_zero(s.group());
        for (int i = 0; i < j; ++i)
            g.coords[static_cast<size_t>(i)] = a.start.coords[static_cast<size_t>(i)];
        g.coords[static_cast<size_t>(j - 1)] -= 1;
        size_t last = g.coords.size() - 1;
        for (int i = 0; i < count; ++i) {
            GroupElement better = g;
            better.coords[last] += 1;
            out.emplace_back(g, better);
            g = better;
        }
        return out;
    }
    const auto &c = s.as_convergent();
    if (rat_den(c.limit.p) == 1 && rat_den(c.limit.q) == 1) return out;
    long d = s.group().d();
    GroupElement g = group_element(s.group(), {floor_quad(c.limit, d), Int(0)});
    for (int i = 0; i < count; ++i) {
        GroupElement better = quad_element_in_interval(
            s.group(), QuadValue{Rat(g.coords[0]), Rat(g.coords[1])}, c.limit);
        out.emplace_back(g, better);
        g = better;
    }
    return out;
}

} // namespace contentlab
