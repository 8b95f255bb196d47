#include "contentlab/ideals.hpp"

#include "contentlab/errors.hpp"
#include "contentlab/factor.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <sstream>
#include <tuple>
#include <utility>

namespace contentlab {

namespace {

using nlohmann::json;

// ------------------------------------------------------------------
// shared helpers

// Int, IntMod and PrimeField all carry Int payloads (canonical residues).
Int lift_int(const RingElement &e) { return e.as_int(); }

CertifiedFact fact(std::string context, MemberCert c) {
    return CertifiedFact{std::move(context), std::move(c)};
}
CertifiedFact fact(std::string context, NonMemberCert c) {
    return CertifiedFact{std::move(context), std::move(c)};
}
CertifiedFact fact(std::string context, RadicalNonMemberCert c) {
    return CertifiedFact{std::move(context), std::move(c)};
}

// extended euclid over B[v] with field B; s*a + t*b == g, g monic or zero
struct PolyXgcd {
    RingElement g, s, t;
};

PolyXgcd poly_xgcd(const RingElement &a, const RingElement &b) {
    const RingId &R = a.ring();
    RingElement r0 = a, r1 = b;
    RingElement s0 = ring_one(R), s1 = ring_zero(R);
    RingElement t0 = ring_zero(R), t1 = ring_one(R);
    while (!is_zero(r1)) {
        auto [q, r] = poly_divmod(r0, r1);
        RingElement s2 = sub(s0, mul(q, s1));
        RingElement t2 = sub(t0, mul(q, t1));
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s2;
        t0 = t1;
        t1 = t2;
    }
    if (!is_zero(r0)) {
        RingElement c = make_poly(R, {field_inv(poly_leading(r0))});
        r0 = mul(r0, c);
        s0 = mul(s0, c);
        t0 = mul(t0, c);
    }
    return {r0, s0, t0};
}

struct IntFold {
    Int g;
    std::vector<Int> bez; // g == sum bez[i]*vals[i]
};

IntFold fold_int_gcd(const std::vector<Int> &vals) {
    IntFold out{Int(0), std::vector<Int>(vals.size(), Int(0))};
    for (std::size_t i = 0; i < vals.size(); ++i) {
        Xgcd x = xgcd(out.g, vals[i]);
        for (std::size_t j = 0; j < i; ++j)
            out.bez[j] = Int(out.bez[j] * x.u);
        out.bez[i] = x.v;
        out.g = x.g;
    }
    return out;
}

struct PolyFold {
    RingElement g;
    std::vector<RingElement> bez;
};

PolyFold fold_poly_gcd(const RingId &R, const std::vector<RingElement> &gens) {
    PolyFold out{ring_zero(R), std::vector<RingElement>(gens.size(), ring_zero(R))};
    for (std::size_t i = 0; i < gens.size(); ++i) {
        PolyXgcd x = poly_xgcd(out.g, gens[i]);
        for (std::size_t j = 0; j < i; ++j)
            out.bez[j] = mul(out.bez[j], x.s);
        out.bez[i] = x.t;
        out.g = x.g;
    }
    return out;
}

// index of the first nonzero coordinate; coords past the end mean zero
std::size_t lex_leading_pos(const GroupElement &v) {
    for (std::size_t i = 0; i < v.coords.size(); ++i)
        if (v.coords[i] != 0)
            return i;
    return v.coords.size();
}

RingElement bipoly_const(const RingId &R, const Rat &c) {
    std::map<std::pair<int, int>, Rat> t;
    if (c != 0)
        t[{0, 0}] = c;
    return make_bipoly(R, t);
}

std::vector<std::pair<int, int>> monomials_of_degree(int d) {
    std::vector<std::pair<int, int>> out;
    for (int i = d; i >= 0; --i)
        out.push_back({i, d - i});
    return out;
}

// ------------------------------------------------------------------
// exact linear algebra over Q with an infeasibility functional

struct LinSolve {
    std::optional<std::vector<Rat>> solution;
    // lambda with lambda^T A == 0 and lambda^T b != 0
    std::optional<std::vector<Rat>> dual;
};

LinSolve solve_linear(std::vector<std::vector<Rat>> A, std::vector<Rat> b) {
    const std::size_t m = A.size();
    const std::size_t k = m ? A[0].size() : 0;
    // T tracks row operations so current rows stay combinations of originals
    std::vector<std::vector<Rat>> T(m, std::vector<Rat>(m, Rat(0)));
    for (std::size_t i = 0; i < m; ++i)
        T[i][i] = 1;

    std::vector<std::pair<std::size_t, std::size_t>> pivots; // (row, col)
    std::size_t rank = 0;
    for (std::size_t col = 0; col < k && rank < m; ++col) {
        std::size_t pr = m;
        for (std::size_t r = rank; r < m; ++r)
            if (A[r][col] != 0) {
                pr = r;
                break;
            }
        if (pr == m)
            continue;
        std::swap(A[rank], A[pr]);
        std::swap(b[rank], b[pr]);
        std::swap(T[rank], T[pr]);
        Rat p = A[rank][col];
        for (auto &x : A[rank])
            x /= p;
        b[rank] /= p;
        for (auto &x : T[rank])
            x /= p;
        for (std::size_t r = 0; r < m; ++r) {
            if (r == rank || A[r][col] == 0)
                continue;
            Rat f = A[r][col];
            for (std::size_t c = 0; c < k; ++c)
                A[r][c] -= Rat(f * A[rank][c]);
            b[r] -= Rat(f * b[rank]);
            for (std::size_t c = 0; c < m; ++c)
                T[r][c] -= Rat(f * T[rank][c]);
        }
        pivots.push_back({rank, col});
        ++rank;
    }
    for (std::size_t r = rank; r < m; ++r) {
        if (b[r] != 0)
            return {std::nullopt, T[r]};
    }
    std::vector<Rat> x(k, Rat(0));
    for (auto [row, col] : pivots)
        x[col] = b[row];
    return {x, std::nullopt};
}

// ------------------------------------------------------------------
// evaluation maps used to refute membership where no division exists

const RingId &ground_ring(const RingId &r) {
    const RingId *p = &r;
    while (p->kind() == RingKind::UniPoly)
        p = &p->base();
    return *p;
}

const std::vector<RingHom> &hom_family(const RingId &R) {
    static std::map<std::string, std::vector<RingHom>> cache;
    auto it = cache.find(R.to_string());
    if (it != cache.end())
        return it->second;

    std::vector<RingHom> fam;
    if (R.kind() == RingKind::BiPolyQ) {
        RingId Q = RingId::rationals();
        RingId Rx = RingId::uni_poly(Q, R.var_x());
        RingId Ry = RingId::uni_poly(Q, R.var_y());
        RingElement gx = make_poly(Rx, {ring_zero(Q), ring_one(Q)});
        RingElement gy = make_poly(Ry, {ring_zero(Q), ring_one(Q)});
        fam.push_back(RingHom::subst(R, Ry, {{R.var_x(), ring_zero(Ry)}, {R.var_y(), gy}}));
        fam.push_back(RingHom::subst(R, Rx, {{R.var_x(), gx}, {R.var_y(), ring_zero(Rx)}}));
        fam.push_back(RingHom::subst(R, Ry, {{R.var_x(), gy}, {R.var_y(), gy}}));
        for (int a = -2; a <= 2; ++a)
            for (int b = -2; b <= 2; ++b)
                fam.push_back(RingHom::subst(
                    R, Q, {{R.var_x(), make_rat(Rat(a))}, {R.var_y(), make_rat(Rat(b))}}));
    } else if (R.kind() == RingKind::UniPoly) {
        const RingId &G = ground_ring(R);
        std::vector<std::string> vars(R.variables().begin(), R.variables().end());
        std::vector<int> tuple(vars.size(), -2);
        bool done = vars.empty();
        while (!done) {
            std::map<std::string, RingElement> images;
            for (std::size_t i = 0; i < vars.size(); ++i)
                images.emplace(vars[i], from_int(G, Int(tuple[i])));
            fam.push_back(RingHom::subst(R, G, std::move(images)));
            std::size_t i = 0;
            for (; i < tuple.size(); ++i) {
                if (tuple[i] < 2) {
                    ++tuple[i];
                    break;
                }
                tuple[i] = -2;
            }
            done = (i == tuple.size());
        }
        if (R.base().kind() == RingKind::Int) {
            for (long p : {2L, 3L, 5L, 7L, 11L, 13L})
                fam.push_back(RingHom::coeff_mod(
                    R, RingId::uni_poly(RingId::prime_field(Int(p)), R.var())));
        }
    }
    auto [pos, fresh] = cache.emplace(R.to_string(), std::move(fam));
    (void)fresh;
    return pos->second;
}

// ------------------------------------------------------------------
// per-ring membership

MembershipResult member_result(MemberCert c) {
    MembershipResult r;
    r.kind = MembershipResult::Kind::Member;
    r.member = std::move(c);
    return r;
}

MembershipResult nonmember_result(NonMemberCert c) {
    MembershipResult r;
    r.kind = MembershipResult::Kind::NonMember;
    r.non_member = std::move(c);
    return r;
}

MembershipResult unknown_result(int bound) {
    MembershipResult r;
    r.kind = MembershipResult::Kind::Unknown;
    r.bound = bound;
    return r;
}

MemberCert zero_member(const RingElement &e, const Ideal &A) {
    std::vector<RingElement> coeffs(A.gens().size(), ring_zero(A.ring()));
    return MemberCert{e, A.gens(), std::move(coeffs), std::nullopt};
}

std::optional<NonMemberCert> hom_refute(const RingElement &e, const Ideal &A,
                                        int bound);

MembershipResult principal_membership(const RingElement &e, const Ideal &A) {
    const RingId &R = A.ring();
    const RingElement &g = A.normal_gen();
    if (is_zero(g)) {
        if (is_zero(e))
            return member_result(zero_member(e, A));
        return nonmember_result(NonMemberCert{e, A.gens(), ZeroIdealWitness{}});
    }
    RingElement q = ring_zero(R);
    RingElement r = ring_zero(R);
    switch (R.kind()) {
    case RingKind::Int: {
        Int gi = g.as_int();
        Int rem = Int(e.as_int() % gi);
        if (rem < 0)
            rem += gi;
        q = make_int(Int((e.as_int() - rem) / gi));
        r = make_int(rem);
        break;
    }
    case RingKind::IntMod: {
        Int gi = lift_int(g);
        Int el = lift_int(e);
        Int rem = Int(el % gi);
        q = make_mod(R, Int((el - rem) / gi));
        r = make_mod(R, rem);
        break;
    }
    case RingKind::PrimeField:
    case RingKind::Rationals:
        // normal generator is 1
        q = e;
        break;
    case RingKind::UniPoly: {
        auto qr = poly_divmod(e, g);
        q = qr.first;
        r = qr.second;
        break;
    }
    default:
        throw Error(ErrorKind::Internal, "principal membership on wrong kind");
    }
    if (is_zero(r)) {
        std::vector<RingElement> coeffs;
        coeffs.reserve(A.gens().size());
        for (const auto &b : A.bezout())
            coeffs.push_back(mul(q, b));
        return member_result(MemberCert{e, A.gens(), std::move(coeffs), std::nullopt});
    }
    return nonmember_result(NonMemberCert{
        e, A.gens(),
        DivisionWitness{g, A.bezout(), A.gen_quotients(), q, r}});
}

MembershipResult hahn_membership(const RingElement &e, const Ideal &A) {
    if (A.is_zero_ideal()) {
        if (is_zero(e))
            return member_result(zero_member(e, A));
        return nonmember_result(NonMemberCert{e, A.gens(), ZeroIdealWitness{}});
    }
    const RingElement &g = A.normal_gen();
    GroupElement vmin = valuation(g).value();
    if (is_zero(e)) {
        MemberCert c{e, A.gens(), {}, HahnMemberData{vmin, A.hahn_argmin(), e}};
        return member_result(std::move(c));
    }
    GroupElement ve = valuation(e).value();
    if (compare(ve, vmin) != Ordering::LT) {
        RingElement cof = hahn_shift_down(e, vmin).value();
        MemberCert c{e, A.gens(), {}, HahnMemberData{vmin, A.hahn_argmin(), cof}};
        return member_result(std::move(c));
    }
    return nonmember_result(NonMemberCert{
        e, A.gens(), HahnValuationWitness{vmin, A.hahn_argmin(), ve}});
}

MembershipResult graded_membership(const RingElement &e, const Ideal &A) {
    const RingId &R = A.ring();
    const auto &gens = A.gens();
    std::map<int, std::map<std::pair<int, int>, Rat>> parts;
    for (const auto &[mono, c] : e.as_bipoly().terms)
        parts[mono.first + mono.second][mono] = c;

    std::vector<std::map<std::pair<int, int>, Rat>> cof(gens.size());
    for (const auto &[d, rhs] : parts) {
        struct Col {
            std::size_t gen;
            std::pair<int, int> mono;
        };
        std::vector<Col> cols;
        for (std::size_t i = 0; i < gens.size(); ++i) {
            int dg = bipoly_total_degree(gens[i]);
            if (dg > d)
                continue;
            for (auto m : monomials_of_degree(d - dg))
                cols.push_back({i, m});
        }
        auto rows = monomials_of_degree(d);
        std::map<std::pair<int, int>, std::size_t> row_of;
        for (std::size_t r = 0; r < rows.size(); ++r)
            row_of[rows[r]] = r;

        std::vector<std::vector<Rat>> M(rows.size(),
                                        std::vector<Rat>(cols.size(), Rat(0)));
        for (std::size_t c = 0; c < cols.size(); ++c) {
            for (const auto &[t, tc] : gens[cols[c].gen].as_bipoly().terms) {
                std::pair<int, int> p{cols[c].mono.first + t.first,
                                      cols[c].mono.second + t.second};
                M[row_of.at(p)][c] += tc;
            }
        }
        std::vector<Rat> b(rows.size(), Rat(0));
        for (const auto &[mono, c] : rhs)
            b[row_of.at(mono)] = c;

        LinSolve s = solve_linear(std::move(M), std::move(b));
        if (s.dual) {
            GradedDualWitness w;
            w.degree = d;
            for (std::size_t r = 0; r < rows.size(); ++r)
                if ((*s.dual)[r] != 0)
                    w.lambda.push_back({rows[r], (*s.dual)[r]});
            return nonmember_result(NonMemberCert{e, gens, std::move(w)});
        }
        for (std::size_t c = 0; c < cols.size(); ++c)
            if ((*s.solution)[c] != 0)
                cof[cols[c].gen][cols[c].mono] += (*s.solution)[c];
    }
    std::vector<RingElement> coeffs;
    coeffs.reserve(gens.size());
    for (auto &m : cof) {
        std::erase_if(m, [](const auto &kv) { return kv.second == 0; });
        coeffs.push_back(make_bipoly(R, m));
    }
    return member_result(MemberCert{e, gens, std::move(coeffs), std::nullopt});
}

MembershipResult bipoly_membership(const RingElement &e, const Ideal &A,
                                   int bound) {
    const RingId &R = A.ring();
    const auto &gens = A.gens();
    if (is_zero(e))
        return member_result(zero_member(e, A));
    if (A.is_zero_ideal())
        return nonmember_result(NonMemberCert{e, gens, ZeroIdealWitness{}});

    bool homogeneous = true;
    for (const auto &g : gens)
        homogeneous = homogeneous && bipoly_homogeneous(g);
    if (homogeneous)
        return graded_membership(e, A);

    int maxg = 0;
    for (const auto &g : gens)
        maxg = std::max(maxg, bipoly_total_degree(g));
    int D = bound + maxg;
    if (bipoly_total_degree(e) <= D) {
        struct Col {
            std::size_t gen;
            std::pair<int, int> mono;
        };
        std::vector<Col> cols;
        for (std::size_t i = 0; i < gens.size(); ++i)
            for (int d = 0; d <= bound; ++d)
                for (auto m : monomials_of_degree(d))
                    cols.push_back({i, m});
        std::vector<std::pair<int, int>> rows;
        for (int d = 0; d <= D; ++d)
            for (auto m : monomials_of_degree(d))
                rows.push_back(m);
        std::map<std::pair<int, int>, std::size_t> row_of;
        for (std::size_t r = 0; r < rows.size(); ++r)
            row_of[rows[r]] = r;

        std::vector<std::vector<Rat>> M(rows.size(),
                                        std::vector<Rat>(cols.size(), Rat(0)));
        for (std::size_t c = 0; c < cols.size(); ++c) {
            for (const auto &[t, tc] : gens[cols[c].gen].as_bipoly().terms) {
                std::pair<int, int> p{cols[c].mono.first + t.first,
                                      cols[c].mono.second + t.second};
                M[row_of.at(p)][c] += tc;
            }
        }
        std::vector<Rat> b(rows.size(), Rat(0));
        for (const auto &[mono, c] : e.as_bipoly().terms)
            b[row_of.at(mono)] = c;

        LinSolve s = solve_linear(std::move(M), std::move(b));
        if (s.solution) {
            std::vector<std::map<std::pair<int, int>, Rat>> cof(gens.size());
            for (std::size_t c = 0; c < cols.size(); ++c)
                if ((*s.solution)[c] != 0)
                    cof[cols[c].gen][cols[c].mono] += (*s.solution)[c];
            std::vector<RingElement> coeffs;
            for (auto &m : cof) {
                std::erase_if(m, [](const auto &kv) { return kv.second == 0; });
                coeffs.push_back(make_bipoly(R, m));
            }
            return member_result(MemberCert{e, gens, std::move(coeffs), std::nullopt});
        }
    }
    if (auto c = hom_refute(e, A, bound))
        return nonmember_result(std::move(*c));
    return unknown_result(bound);
}

MembershipResult general_poly_membership(const RingElement &e, const Ideal &A,
                                         int bound) {
    if (is_zero(e))
        return member_result(zero_member(e, A));
    if (A.is_zero_ideal())
        return nonmember_result(NonMemberCert{e, A.gens(), ZeroIdealWitness{}});
    const auto &gens = A.gens();
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (auto c = exact_div(e, gens[i])) {
            std::vector<RingElement> coeffs(gens.size(), ring_zero(A.ring()));
            coeffs[i] = *c;
            return member_result(MemberCert{e, gens, std::move(coeffs), std::nullopt});
        }
    }
    if (auto c = hom_refute(e, A, bound))
        return nonmember_result(std::move(*c));
    return unknown_result(bound);
}

std::optional<NonMemberCert> hom_refute(const RingElement &e, const Ideal &A,
                                        int bound) {
    for (const auto &h : hom_family(A.ring())) {
        std::vector<RingElement> img;
        img.reserve(A.gens().size());
        for (const auto &g : A.gens())
            img.push_back(apply_hom(h, g));
        Ideal B = Ideal::make(h.target(), std::move(img));
        MembershipResult r = membership(apply_hom(h, e), B, bound);
        if (r.is_non_member()) {
            return NonMemberCert{
                e, A.gens(),
                HomImageWitness{h, std::make_shared<NonMemberCert>(
                                       std::move(*r.non_member))}};
        }
    }
    return std::nullopt;
}

} // namespace

// ------------------------------------------------------------------
// Ideal

Ideal Ideal::make(const RingId &ring, std::vector<RingElement> gens) {
    Ideal A;
    A.ring_ = ring;

    std::vector<RingElement> kept;
    for (auto &g : gens) {
        if (g.ring() != ring)
            throw Error(ErrorKind::RingMismatch,
                        "ideal generator from a different ring");
        if (is_zero(g))
            continue;
        bool dup = false;
        for (const auto &k : kept)
            dup = dup || k == g;
        if (!dup)
            kept.push_back(std::move(g));
    }
    if (kept.empty())
        kept.push_back(ring_zero(ring));
    A.gens_ = std::move(kept);

    const std::size_t n = A.gens_.size();
    if (A.is_zero_ideal()) {
        A.normal_ = {ring_zero(ring)};
        if (ring.kind() != RingKind::BiPolyQ) {
            A.bezout_.assign(n, ring_zero(ring));
            A.quotients_.assign(n, ring_zero(ring));
        }
        if (ring.kind() == RingKind::HahnVal)
            A.bezout_.clear();
    } else {
        switch (ring.kind()) {
        case RingKind::Int: {
            std::vector<Int> vals;
            for (const auto &g : A.gens_)
                vals.push_back(g.as_int());
            IntFold f = fold_int_gcd(vals);
            A.normal_ = {make_int(f.g)};
            for (std::size_t i = 0; i < n; ++i) {
                A.bezout_.push_back(make_int(f.bez[i]));
                A.quotients_.push_back(make_int(Int(vals[i] / f.g)));
            }
            break;
        }
        case RingKind::IntMod: {
            const Int &mod = ring.modulus();
            std::vector<Int> vals;
            for (const auto &g : A.gens_)
                vals.push_back(lift_int(g));
            IntFold f = fold_int_gcd(vals);
            Xgcd x = xgcd(f.g, mod);
            Int gamma = x.g;
            A.normal_ = {make_mod(ring, gamma)};
            for (std::size_t i = 0; i < n; ++i) {
                A.bezout_.push_back(make_mod(ring, Int(x.u * f.bez[i])));
                A.quotients_.push_back(make_mod(ring, Int(vals[i] / gamma)));
            }
            break;
        }
        case RingKind::PrimeField:
        case RingKind::Rationals: {
            A.normal_ = {ring_one(ring)};
            A.bezout_.assign(n, ring_zero(ring));
            A.bezout_[0] = field_inv(A.gens_[0]);
            A.quotients_ = A.gens_;
            break;
        }
        case RingKind::UniPoly: {
            if (!ring.base().is_field())
                break;
            PolyFold f = fold_poly_gcd(ring, A.gens_);
            A.normal_ = {f.g};
            A.bezout_ = f.bez;
            for (const auto &g : A.gens_)
                A.quotients_.push_back(poly_divmod(g, f.g).first);
            break;
        }
        case RingKind::BiPolyQ: {
            std::vector<RingElement> norm;
            for (const auto &g : A.gens_) {
                const Rat &lead = g.as_bipoly().terms.rbegin()->second;
                RingElement scaled = mul(g, bipoly_const(ring, Rat(1) / lead));
                bool dup = false;
                for (const auto &k : norm)
                    dup = dup || k == scaled;
                if (!dup)
                    norm.push_back(scaled);
            }
            std::sort(norm.begin(), norm.end(),
                      [](const RingElement &a, const RingElement &b) {
                          auto la = a.as_bipoly().terms.rbegin()->first;
                          auto lb = b.as_bipoly().terms.rbegin()->first;
                          return std::tuple(bipoly_total_degree(a),
                                            -la.first, -la.second, a.to_text()) <
                                 std::tuple(bipoly_total_degree(b),
                                            -lb.first, -lb.second, b.to_text());
                      });
            A.normal_ = std::move(norm);
            break;
        }
        case RingKind::HahnVal: {
            GroupElement vmin = valuation(A.gens_[0]).value();
            A.hahn_argmin_ = 0;
            for (std::size_t i = 1; i < n; ++i) {
                GroupElement v = valuation(A.gens_[i]).value();
                if (compare(v, vmin) == Ordering::LT) {
                    vmin = v;
                    A.hahn_argmin_ = i;
                }
            }
            A.normal_ = {hahn_monomial(ring, vmin)};
            for (const auto &g : A.gens_)
                A.quotients_.push_back(hahn_shift_down(g, vmin).value());
            break;
        }
        }
    }

    // both directions of the normal-form exchange must replay exactly
    if (!A.bezout_.empty()) {
        RingElement s = ring_zero(ring);
        for (std::size_t i = 0; i < n; ++i)
            s = add(s, mul(A.bezout_[i], A.gens_[i]));
        if (!(s == A.normal_[0]))
            throw Error(ErrorKind::Internal, "normal form bezout check failed");
    }
    if (!A.quotients_.empty()) {
        for (std::size_t i = 0; i < n; ++i)
            if (!(mul(A.quotients_[i], A.normal_[0]) == A.gens_[i]))
                throw Error(ErrorKind::Internal,
                            "normal form quotient check failed");
    }
    if (ring.kind() == RingKind::HahnVal && A.normal_.size() != 1)
        throw Error(ErrorKind::Internal, "hahn ideal normal form not principal");
    return A;
}

const std::vector<RingElement> &Ideal::normal_gens() const {
    if (normal_.empty())
        throw Error(ErrorKind::UnsupportedOp,
                    "no normal form over " + ring_.to_string());
    return normal_;
}

const RingElement &Ideal::normal_gen() const {
    if (normal_.size() != 1)
        throw Error(ErrorKind::UnsupportedOp,
                    "no principal normal form over " + ring_.to_string());
    return normal_[0];
}

bool Ideal::is_zero_ideal() const {
    return gens_.size() == 1 && is_zero(gens_[0]);
}

std::string Ideal::to_text() const {
    std::string out = "(";
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        if (i)
            out += ", ";
        out += gens_[i].to_text();
    }
    out += ")";
    return out;
}

json Ideal::to_json() const {
    json j;
    j["ring"] = ring_.to_string();
    json g = json::array();
    for (const auto &e : gens_)
        g.push_back(e.to_text());
    j["gens"] = g;
    if (!normal_.empty()) {
        json nrm = json::array();
        for (const auto &e : normal_)
            nrm.push_back(e.to_text());
        j["normal"] = nrm;
    } else {
        j["normal"] = nullptr;
    }
    return j;
}

// ------------------------------------------------------------------
// operations

namespace {
void require_same_ring(const Ideal &A, const Ideal &B) {
    if (A.ring() != B.ring())
        throw Error(ErrorKind::RingMismatch, "ideals over different rings");
}
} // namespace

Ideal ideal_sum(const Ideal &A, const Ideal &B) {
    require_same_ring(A, B);
    std::vector<RingElement> gens = A.gens();
    gens.insert(gens.end(), B.gens().begin(), B.gens().end());
    return Ideal::make(A.ring(), std::move(gens));
}

Ideal ideal_product(const Ideal &A, const Ideal &B) {
    require_same_ring(A, B);
    std::vector<RingElement> gens;
    for (const auto &a : A.gens())
        for (const auto &b : B.gens())
            gens.push_back(mul(a, b));
    return Ideal::make(A.ring(), std::move(gens));
}

Ideal ideal_power(const Ideal &A, int n) {
    if (n < 0)
        throw Error(ErrorKind::PrecondViolated, "ideal power needs n >= 0");
    if (n == 0)
        return Ideal::make(A.ring(), {ring_one(A.ring())});
    Ideal out = A;
    for (int i = 1; i < n; ++i)
        out = ideal_product(out, A);
    return out;
}

Ideal ideal_intersect(const Ideal &A, const Ideal &B) {
    require_same_ring(A, B);
    const RingId &R = A.ring();
    switch (R.kind()) {
    case RingKind::Int: {
        Int l = lcm(A.normal_gen().as_int(), B.normal_gen().as_int());
        return Ideal::make(R, {make_int(l)});
    }
    case RingKind::IntMod: {
        const Int &n = R.modulus();
        Int a = A.is_zero_ideal() ? n : lift_int(A.normal_gen());
        Int b = B.is_zero_ideal() ? n : lift_int(B.normal_gen());
        return Ideal::make(R, {make_mod(R, lcm(a, b))});
    }
    case RingKind::PrimeField:
    case RingKind::Rationals: {
        if (A.is_zero_ideal() || B.is_zero_ideal())
            return Ideal::make(R, {ring_zero(R)});
        return Ideal::make(R, {ring_one(R)});
    }
    case RingKind::UniPoly: {
        if (!R.base().is_field())
            throw Error(ErrorKind::UnsupportedOp,
                        "intersection needs a principal normal form over " +
                            R.to_string());
        if (A.is_zero_ideal() || B.is_zero_ideal())
            return Ideal::make(R, {ring_zero(R)});
        const RingElement &a = A.normal_gen();
        const RingElement &b = B.normal_gen();
        RingElement g = poly_xgcd(a, b).g;
        RingElement l = exact_div(mul(a, b), g).value();
        return Ideal::make(R, {l});
    }
    case RingKind::HahnVal: {
        if (A.is_zero_ideal() || B.is_zero_ideal())
            return Ideal::make(R, {ring_zero(R)});
        GroupElement va = valuation(A.normal_gen()).value();
        GroupElement vb = valuation(B.normal_gen()).value();
        GroupElement vmax = compare(va, vb) == Ordering::LT ? vb : va;
        return Ideal::make(R, {hahn_monomial(R, vmax)});
    }
    default:
        throw Error(ErrorKind::UnsupportedOp,
                    "intersection needs a principal normal form over " +
                        R.to_string());
    }
}

Ideal ideal_op(IdealOp op, const Ideal &A, const Ideal &B, int n) {
    switch (op) {
    case IdealOp::Sum:
        return ideal_sum(A, B);
    case IdealOp::Product:
        return ideal_product(A, B);
    case IdealOp::Power:
        return ideal_power(A, n);
    case IdealOp::Intersect:
        return ideal_intersect(A, B);
    }
    throw Error(ErrorKind::Internal, "bad ideal op");
}

// ------------------------------------------------------------------
// membership

MembershipResult membership(const RingElement &e, const Ideal &A, int bound) {
    if (e.ring() != A.ring())
        throw Error(ErrorKind::RingMismatch,
                    "membership test across different rings");
    switch (A.ring().kind()) {
    case RingKind::BiPolyQ:
        return bipoly_membership(e, A, bound);
    case RingKind::HahnVal:
        return hahn_membership(e, A);
    case RingKind::UniPoly:
        if (!A.ring().base().is_field())
            return general_poly_membership(e, A, bound);
        return principal_membership(e, A);
    default:
        return principal_membership(e, A);
    }
}

PropertyVerdict ideal_equal(const Ideal &A, const Ideal &B, int bound) {
    require_same_ring(A, B);
    std::vector<CertifiedFact> facts;
    struct Side {
        const Ideal *from;
        const Ideal *into;
        const char *name;
    };
    for (Side side : {Side{&A, &B, "left-in-right"}, Side{&B, &A, "right-in-left"}}) {
        for (const auto &g : side.from->gens()) {
            MembershipResult r = membership(g, *side.into, bound);
            if (r.is_member()) {
                facts.push_back(fact(side.name, std::move(*r.member)));
                continue;
            }
            json ev{{"direction", side.name},
                    {"generator", g.to_text()},
                    {"left", A.to_text()},
                    {"right", B.to_text()}};
            if (r.is_non_member()) {
                facts.push_back(fact(std::string(side.name) + "-refuted",
                                     *r.non_member));
                ev["witness"] = cert_to_json(*r.non_member);
                return PropertyVerdict::fails(std::move(ev), std::move(facts));
            }
            ev["bound"] = r.bound;
            return PropertyVerdict::unknown(std::move(ev));
        }
    }
    json ev{{"left", A.to_text()},
            {"right", B.to_text()},
            {"checked", facts.size()}};
    PropertyVerdict v = PropertyVerdict::holds(std::move(ev));
    v.facts = std::move(facts);
    return v;
}

// ------------------------------------------------------------------
// radical membership

namespace {

RadicalResult rad_member(RadicalMemberCert c) {
    RadicalResult r;
    r.kind = RadicalResult::Kind::Member;
    r.member = std::move(c);
    return r;
}

RadicalResult rad_nonmember(RadicalNonMemberCert c) {
    RadicalResult r;
    r.kind = RadicalResult::Kind::NonMember;
    r.non_member = std::move(c);
    return r;
}

RadicalResult rad_unknown(int powbound) {
    RadicalResult r;
    r.kind = RadicalResult::Kind::Unknown;
    r.powbound = powbound;
    return r;
}

// strip every factor shared with `val` out of `g`; what survives is a
// non-unit divisor of g coprime to val (present iff val misses a factor)
Int int_strip(Int g, const Int &val) {
    Int d = gcd(g, val);
    while (d > 1) {
        g = Int(g / d);
        d = gcd(g, val);
    }
    return g;
}

RadicalResult int_like_radical(const RingElement &e, const Ideal &A,
                               int bound) {
    const RingId &R = A.ring();
    bool modular = R.kind() == RingKind::IntMod;
    Int g = lift_int(A.normal_gen());
    Int el = lift_int(e);

    // every prime of g divides el iff g divides some small power of el
    int maxk = 1;
    for (Int t = g; t > 1; t = Int(t / 2))
        ++maxk;
    for (int k = 2; k <= maxk; ++k) {
        MembershipResult m = membership(pow_elem(e, static_cast<unsigned>(k)),
                                        A, bound);
        if (m.is_member())
            return rad_member(RadicalMemberCert{e, k, std::move(*m.member)});
    }
    Int m = int_strip(g, el);
    if (m <= 1)
        throw Error(ErrorKind::Internal, "radical strip left a unit");
    Xgcd x = xgcd(m, el);
    auto mk = [&](const Int &v) {
        return modular ? make_mod(R, v) : make_int(v);
    };
    RadicalBezoutWitness w{A.normal_gen(), A.bezout(),     A.gen_quotients(),
                           mk(m),          mk(Int(g / m)), mk(x.u),
                           mk(x.v)};
    return rad_nonmember(RadicalNonMemberCert{e, A.gens(), std::move(w)});
}

RadicalResult poly_field_radical(const RingElement &e, const Ideal &A,
                                 int bound) {
    const RingElement &g = A.normal_gen();
    int maxk = std::max(1, poly_degree(g));
    for (int k = 2; k <= maxk; ++k) {
        MembershipResult m = membership(pow_elem(e, static_cast<unsigned>(k)),
                                        A, bound);
        if (m.is_member())
            return rad_member(RadicalMemberCert{e, k, std::move(*m.member)});
    }
    RingElement m = g;
    RingElement d = poly_xgcd(m, e).g;
    while (poly_degree(d) >= 1) {
        m = exact_div(m, d).value();
        d = poly_xgcd(m, e).g;
    }
    if (poly_degree(m) < 1)
        throw Error(ErrorKind::Internal, "radical strip left a unit");
    PolyXgcd x = poly_xgcd(m, e);
    if (!is_one(x.g))
        throw Error(ErrorKind::Internal, "radical strip not coprime");
    RadicalBezoutWitness w{g,
                           A.bezout(),
                           A.gen_quotients(),
                           m,
                           exact_div(g, m).value(),
                           x.s,
                           x.t};
    return rad_nonmember(RadicalNonMemberCert{e, A.gens(), std::move(w)});
}

RadicalResult nil_radical(const RingElement &e, const Ideal &A) {
    // radical of the zero ideal: nilpotency decides
    if (is_nilpotent(e)) {
        RingElement p = e;
        int k = 1;
        while (!is_zero(p)) {
            p = mul(p, e);
            ++k;
        }
        std::vector<RingElement> coeffs(A.gens().size(), ring_zero(A.ring()));
        MemberCert c{pow_elem(e, static_cast<unsigned>(k)), A.gens(),
                     std::move(coeffs), std::nullopt};
        return rad_member(RadicalMemberCert{e, k, std::move(c)});
    }
    return rad_nonmember(RadicalNonMemberCert{e, A.gens(), ZeroIdealWitness{}});
}

std::optional<RadicalNonMemberCert> rad_hom_refute(const RingElement &e,
                                                   const Ideal &A,
                                                   int powbound, int bound) {
    for (const auto &h : hom_family(A.ring())) {
        std::vector<RingElement> img;
        img.reserve(A.gens().size());
        for (const auto &g : A.gens())
            img.push_back(apply_hom(h, g));
        Ideal B = Ideal::make(h.target(), std::move(img));
        RadicalResult r = radical_membership(apply_hom(h, e), B, powbound, bound);
        if (r.is_non_member()) {
            return RadicalNonMemberCert{
                e, A.gens(),
                RadicalHomImageWitness{h, std::make_shared<RadicalNonMemberCert>(
                                              std::move(*r.non_member))}};
        }
    }
    return std::nullopt;
}

RadicalResult hahn_radical(const RingElement &e, const Ideal &A, int bound) {
    const GroupElement v = valuation(A.normal_gen()).value();
    GroupElement ve = valuation(e).value(); // e nonzero here
    const GroupId &G = A.ring().group();
    auto witness = [&] {
        return rad_nonmember(
            RadicalNonMemberCert{e, A.gens(), HahnRadicalWitness{v, ve}});
    };
    if (sign_of(ve) == 0)
        return witness();
    int k = -1;
    if (G.kind() == GroupKind::LexTuples) {
        std::size_t pe = lex_leading_pos(ve);
        std::size_t pv = lex_leading_pos(v);
        if (pe > pv)
            return witness();
        // same leading position (earlier would already be a member at k = 1)
        Int a = ve.coords[pe];
        Int b = v.coords[pv];
        k = Int(b / a).convert_to<int>() + 1;
    } else {
        GroupElement acc = ve;
        k = 1;
        while (compare(acc, v) == Ordering::LT) {
            acc = add(acc, ve);
            ++k;
            if (k > 100000)
                throw Error(ErrorKind::Internal, "radical power runaway");
        }
    }
    MembershipResult m =
        membership(pow_elem(e, static_cast<unsigned>(k)), A, bound);
    if (!m.is_member())
        throw Error(ErrorKind::Internal, "hahn radical power not a member");
    return rad_member(RadicalMemberCert{e, k, std::move(*m.member)});
}

} // namespace

RadicalResult radical_membership(const RingElement &e, const Ideal &A,
                                 int powbound, int bound) {
    if (e.ring() != A.ring())
        throw Error(ErrorKind::RingMismatch,
                    "radical membership across different rings");
    MembershipResult m0 = membership(e, A, bound);
    if (m0.is_member())
        return rad_member(RadicalMemberCert{e, 1, std::move(*m0.member)});

    const RingId &R = A.ring();
    switch (R.kind()) {
    case RingKind::Int:
    case RingKind::IntMod:
        if (A.is_zero_ideal())
            return nil_radical(e, A);
        return int_like_radical(e, A, bound);
    case RingKind::PrimeField:
    case RingKind::Rationals:
        // proper ideals are only (0); units never enter its radical
        return nil_radical(e, A);
    case RingKind::UniPoly:
        if (!R.base().is_field()) {
            for (int k = 2; k <= powbound; ++k) {
                MembershipResult m =
                    membership(pow_elem(e, static_cast<unsigned>(k)), A, bound);
                if (m.is_member())
                    return rad_member(RadicalMemberCert{e, k, std::move(*m.member)});
            }
            if (auto c = rad_hom_refute(e, A, powbound, bound))
                return rad_nonmember(std::move(*c));
            return rad_unknown(powbound);
        }
        if (A.is_zero_ideal())
            return nil_radical(e, A);
        return poly_field_radical(e, A, bound);
    case RingKind::BiPolyQ: {
        if (A.is_zero_ideal())
            return nil_radical(e, A);
        for (int k = 2; k <= powbound; ++k) {
            MembershipResult m =
                membership(pow_elem(e, static_cast<unsigned>(k)), A, bound);
            if (m.is_member())
                return rad_member(RadicalMemberCert{e, k, std::move(*m.member)});
        }
        if (auto c = rad_hom_refute(e, A, powbound, bound))
            return rad_nonmember(std::move(*c));
        return rad_unknown(powbound);
    }
    case RingKind::HahnVal:
        if (A.is_zero_ideal())
            return nil_radical(e, A);
        return hahn_radical(e, A, bound);
    }
    throw Error(ErrorKind::Internal, "bad ring kind");
}

// ------------------------------------------------------------------
// prime and primary tests

namespace {

// witness bundle: a*b in A while a, b stay outside
PropertyVerdict prime_fails(const Ideal &A, const RingElement &a,
                            const RingElement &b, json extra) {
    std::vector<CertifiedFact> facts;
    MembershipResult in = membership(mul(a, b), A);
    MembershipResult oa = membership(a, A);
    MembershipResult ob = membership(b, A);
    if (!in.is_member() || !oa.is_non_member() || !ob.is_non_member())
        throw Error(ErrorKind::Internal, "prime witness failed to certify");
    facts.push_back(fact("product-in", std::move(*in.member)));
    facts.push_back(fact("factor-a-out", std::move(*oa.non_member)));
    facts.push_back(fact("factor-b-out", std::move(*ob.non_member)));
    json ev{{"ideal", A.to_text()},
            {"factor_a", a.to_text()},
            {"factor_b", b.to_text()}};
    ev.update(extra);
    return PropertyVerdict::fails(std::move(ev), std::move(facts));
}

// witness bundle: a*b in A, a outside A, b outside rad(A)
PropertyVerdict primary_fails(const Ideal &A, const RingElement &a,
                              const RingElement &b, json extra) {
    std::vector<CertifiedFact> facts;
    MembershipResult in = membership(mul(a, b), A);
    MembershipResult oa = membership(a, A);
    RadicalResult rb = radical_membership(b, A);
    if (!in.is_member() || !oa.is_non_member() || !rb.is_non_member())
        throw Error(ErrorKind::Internal, "primary witness failed to certify");
    facts.push_back(fact("product-in", std::move(*in.member)));
    facts.push_back(fact("factor-out", std::move(*oa.non_member)));
    facts.push_back(fact("cofactor-out-of-radical", std::move(*rb.non_member)));
    json ev{{"ideal", A.to_text()},
            {"factor", a.to_text()},
            {"cofactor", b.to_text()}};
    ev.update(extra);
    return PropertyVerdict::fails(std::move(ev), std::move(facts));
}

PropertyVerdict unit_ideal_fails(const Ideal &A, const char *which) {
    MembershipResult in = membership(ring_one(A.ring()), A);
    if (!in.is_member())
        throw Error(ErrorKind::Internal, "unit ideal without unit membership");
    std::vector<CertifiedFact> facts;
    facts.push_back(fact("one-in", std::move(*in.member)));
    return PropertyVerdict::fails(
        json{{"ideal", A.to_text()},
             {"rule", std::string("the unit ideal is not ") + which}},
        std::move(facts));
}

PropertyVerdict zero_ideal_holds(const Ideal &A, const char *which) {
    return PropertyVerdict::holds(
        json{{"ideal", A.to_text()},
             {"rule", std::string("zero ideal in a domain is ") + which}});
}

// g factored as p^k (positive k) or split p1^e1 * rest with rest coprime
struct IntSplit {
    bool prime_power;
    Int head;     // p1^e1
    Int rest;     // coprime cofactor, 1 if prime power
    Int p1;       // least prime
};

IntSplit int_split(const Int &g) {
    auto fs = factor_int(g);
    IntSplit s;
    s.p1 = fs[0].first;
    s.head = pow_int(fs[0].first, fs[0].second);
    s.rest = Int(g / s.head);
    s.prime_power = (fs.size() == 1);
    return s;
}

PropertyVerdict int_like_prime(const Ideal &A) {
    const RingId &R = A.ring();
    bool modular = R.kind() == RingKind::IntMod;
    // the quotient by (g) only sees gcd(g, n); for the zero ideal that is n
    Int g = lift_int(A.normal_gen());
    if (!modular && g == 0)
        return zero_ideal_holds(A, "prime");
    if (modular && g == 0)
        g = R.modulus();
    auto mk = [&](const Int &v) {
        return modular ? make_mod(R, v) : make_int(v);
    };
    if (g == 1)
        return unit_ideal_fails(A, "prime");
    if (is_prime_int(g))
        return PropertyVerdict::holds(json{
            {"ideal", A.to_text()},
            {"rule", "principal generator is a prime integer"},
            {"generator", g.str()}});
    IntSplit s = int_split(g);
    return prime_fails(A, mk(s.p1), mk(Int(g / s.p1)),
                       json{{"rule", "composite generator"}});
}

PropertyVerdict int_like_primary(const Ideal &A) {
    const RingId &R = A.ring();
    bool modular = R.kind() == RingKind::IntMod;
    Int g = lift_int(A.normal_gen());
    if (!modular && g == 0)
        return zero_ideal_holds(A, "primary");
    if (modular && g == 0)
        g = R.modulus();
    auto mk = [&](const Int &v) {
        return modular ? make_mod(R, v) : make_int(v);
    };
    if (g == 1)
        return unit_ideal_fails(A, "primary");
    IntSplit s = int_split(g);
    if (s.prime_power)
        return PropertyVerdict::holds(json{
            {"ideal", A.to_text()},
            {"rule", "principal generator is a prime power"},
            {"prime", s.p1.str()}});
    return primary_fails(A, mk(s.head), mk(s.rest),
                         json{{"rule", "generator has two coprime parts"}});
}

PropertyVerdict poly_field_prime(const Ideal &A) {
    const RingElement &g = A.normal_gen();
    if (is_zero(g))
        return zero_ideal_holds(A, "prime");
    if (poly_degree(g) == 0)
        return unit_ideal_fails(A, "prime");
    if (poly_irreducible(g))
        return PropertyVerdict::holds(json{
            {"ideal", A.to_text()},
            {"rule", "monic generator is irreducible"},
            {"generator", g.to_text()}});
    PolyFactorization f = factor_poly(g);
    const RingElement &a = f.factors[0].first;
    RingElement b = exact_div(g, a).value();
    return prime_fails(A, a, b, json{{"rule", "generator factors"}});
}

PropertyVerdict poly_field_primary(const Ideal &A) {
    const RingElement &g = A.normal_gen();
    if (is_zero(g))
        return zero_ideal_holds(A, "primary");
    if (poly_degree(g) == 0)
        return unit_ideal_fails(A, "primary");
    PolyFactorization f = factor_poly(g);
    if (f.factors.size() == 1)
        return PropertyVerdict::holds(json{
            {"ideal", A.to_text()},
            {"rule", "monic generator is an irreducible power"},
            {"prime", f.factors[0].first.to_text()},
            {"multiplicity", f.factors[0].second}});
    RingElement head = pow_elem(f.factors[0].first,
                                static_cast<unsigned>(f.factors[0].second));
    RingElement rest = exact_div(g, head).value();
    return primary_fails(A, head, rest,
                         json{{"rule", "generator has two coprime parts"}});
}

// value v admits a split v = u + w with 0 < u, w and u, w < v exactly when
// v is not the least positive lexicographic unit; density gives a split for
// every positive v over quadratic groups
PropertyVerdict hahn_prime(const Ideal &A) {
    const RingId &R = A.ring();
    const GroupId &G = R.group();
    if (A.is_zero_ideal())
        return zero_ideal_holds(A, "prime");
    GroupElement v = valuation(A.normal_gen()).value();
    if (sign_of(v) == 0)
        return unit_ideal_fails(A, "prime");
    auto split_fails = [&](const GroupElement &u, const GroupElement &w) {
        return prime_fails(A, hahn_monomial(R, u), hahn_monomial(R, w),
                           json{{"rule", "value splits below the generator"},
                                {"u", u.to_string()},
                                {"w", w.to_string()}});
    };
    switch (G.kind()) {
    case GroupKind::Integers: {
        if (v.coords[0] == 1)
            return PropertyVerdict::holds(
                json{{"ideal", A.to_text()},
                     {"rule", "generator sits at the least positive value"}});
        GroupElement u = group_element(G, {Int(1)});
        return split_fails(u, sub(v, u));
    }
    case GroupKind::LexTuples: {
        std::size_t rank = static_cast<std::size_t>(G.rank());
        std::vector<Int> unit(rank, Int(0));
        unit[rank - 1] = 1;
        GroupElement ek = group_element(G, unit);
        if (v == ek)
            return PropertyVerdict::holds(
                json{{"ideal", A.to_text()},
                     {"rule", "generator sits at the least infinitesimal unit"}});
        return split_fails(ek, sub(v, ek));
    }
    case GroupKind::QuadDense: {
        QuadValue hi{Rat(v.coords[0]), Rat(v.coords[1])};
        QuadValue lo{Rat(v.coords[0]) / 2, Rat(v.coords[1]) / 2};
        GroupElement u = quad_element_in_interval(G, lo, hi);
        return split_fails(u, u);
    }
    }
    throw Error(ErrorKind::Internal, "bad group kind");
}

PropertyVerdict hahn_primary(const Ideal &A) {
    const RingId &R = A.ring();
    const GroupId &G = R.group();
    if (A.is_zero_ideal())
        return zero_ideal_holds(A, "primary");
    GroupElement v = valuation(A.normal_gen()).value();
    if (sign_of(v) == 0)
        return unit_ideal_fails(A, "primary");
    if (G.kind() != GroupKind::LexTuples)
        return PropertyVerdict::holds(
            json{{"ideal", A.to_text()},
                 {"rule", "archimedean value group: every positive value has "
                          "a power above the generator"}});
    std::size_t rank = static_cast<std::size_t>(G.rank());
    if (lex_leading_pos(v) == rank - 1)
        return PropertyVerdict::holds(
            json{{"ideal", A.to_text()},
                 {"rule", "generator value lies in the least convex slice"}});
    std::vector<Int> unit(rank, Int(0));
    unit[rank - 1] = 1;
    GroupElement ek = group_element(G, unit);
    return primary_fails(
        A, hahn_monomial(R, sub(v, ek)), hahn_monomial(R, ek),
        json{{"rule", "an infinitesimal escapes every power of the radical"}});
}

bool bipoly_single_monomial(const RingElement &e) {
    return e.as_bipoly().terms.size() == 1;
}

PropertyVerdict bipoly_prime(const Ideal &A) {
    const RingId &R = A.ring();
    if (A.is_zero_ideal())
        return zero_ideal_holds(A, "prime");
    const auto &ng = A.normal_gens();
    RingElement x = make_bipoly(R, {{{1, 0}, Rat(1)}});
    RingElement y = make_bipoly(R, {{{0, 1}, Rat(1)}});
    if (ng.size() == 1) {
        const RingElement &g = ng[0];
        if (bipoly_total_degree(g) == 0)
            return unit_ideal_fails(A, "prime");
        if (bipoly_total_degree(g) == 1)
            return PropertyVerdict::holds(
                json{{"ideal", A.to_text()},
                     {"rule", "generator is linear, hence irreducible"}});
        if (bipoly_single_monomial(g)) {
            auto [a, b] = g.as_bipoly().terms.begin()->first;
            RingElement f = a >= 1 ? x : y;
            RingElement rest = make_bipoly(
                R, {{{a >= 1 ? a - 1 : a, a >= 1 ? b : b - 1}, Rat(1)}});
            return prime_fails(A, f, rest,
                               json{{"rule", "composite monomial generator"}});
        }
        throw Error(ErrorKind::UnsupportedOp,
                    "primality over " + R.to_string() +
                        " covers monomial, linear, and maximal-power inputs");
    }
    if (ng.size() == 2 && bipoly_total_degree(ng[0]) == 1 &&
        bipoly_total_degree(ng[1]) == 1) {
        auto lin = [](const RingElement &e, int i, int j) {
            auto it = e.as_bipoly().terms.find({i, j});
            return it == e.as_bipoly().terms.end() ? Rat(0) : it->second;
        };
        Rat det = Rat(lin(ng[0], 1, 0) * lin(ng[1], 0, 1)) -
                  Rat(lin(ng[0], 0, 1) * lin(ng[1], 1, 0));
        if (det != 0)
            return PropertyVerdict::holds(
                json{{"ideal", A.to_text()},
                     {"rule", "two independent affine lines cut a point"}});
    }
    // powers of the coordinate maximal ideal
    bool homog = true;
    int deg = bipoly_total_degree(ng[0]);
    for (const auto &g : ng)
        homog = homog && bipoly_homogeneous(g) && bipoly_total_degree(g) == deg;
    if (homog && deg >= 2) {
        Ideal M = Ideal::make(R, {x, y});
        PropertyVerdict eq = ideal_equal(A, ideal_power(M, deg));
        if (eq.is_holds())
            return prime_fails(
                A, pow_elem(x, static_cast<unsigned>(deg - 1)), x,
                json{{"rule", "a proper power of a maximal ideal"}});
    }
    throw Error(ErrorKind::UnsupportedOp,
                "primality over " + R.to_string() +
                    " covers monomial, linear, and maximal-power inputs");
}

PropertyVerdict bipoly_primary(const Ideal &A) {
    const RingId &R = A.ring();
    if (A.is_zero_ideal())
        return zero_ideal_holds(A, "primary");
    const auto &ng = A.normal_gens();
    RingElement x = make_bipoly(R, {{{1, 0}, Rat(1)}});
    RingElement y = make_bipoly(R, {{{0, 1}, Rat(1)}});
    if (ng.size() == 1) {
        const RingElement &g = ng[0];
        if (bipoly_total_degree(g) == 0)
            return unit_ideal_fails(A, "primary");
        if (bipoly_total_degree(g) == 1)
            return PropertyVerdict::holds(
                json{{"ideal", A.to_text()},
                     {"rule", "a prime ideal is primary"}});
        if (bipoly_single_monomial(g)) {
            auto [a, b] = g.as_bipoly().terms.begin()->first;
            if (a == 0 || b == 0)
                return PropertyVerdict::holds(
                    json{{"ideal", A.to_text()},
                         {"rule", "pure power of a coordinate prime"}});
            return primary_fails(
                A, make_bipoly(R, {{{a, 0}, Rat(1)}}),
                make_bipoly(R, {{{0, b}, Rat(1)}}),
                json{{"rule", "mixed monomial splits into coprime parts"}});
        }
        throw Error(ErrorKind::UnsupportedOp,
                    "primary test over " + R.to_string() +
                        " covers monomial, linear, and maximal-power inputs");
    }
    if (ng.size() == 2 && bipoly_total_degree(ng[0]) == 1 &&
        bipoly_total_degree(ng[1]) == 1) {
        PropertyVerdict p = bipoly_prime(A);
        if (p.is_holds())
            return PropertyVerdict::holds(
                json{{"ideal", A.to_text()},
                     {"rule", "a maximal ideal is primary"}});
    }
    bool homog = true;
    int deg = bipoly_total_degree(ng[0]);
    for (const auto &g : ng)
        homog = homog && bipoly_homogeneous(g) && bipoly_total_degree(g) == deg;
    if (homog && deg >= 1) {
        Ideal M = Ideal::make(R, {x, y});
        PropertyVerdict eq = ideal_equal(A, ideal_power(M, deg));
        if (eq.is_holds())
            return PropertyVerdict::holds(
                json{{"ideal", A.to_text()},
                     {"rule", "power of the coordinate maximal ideal"},
                     {"exponent", deg}});
    }
    throw Error(ErrorKind::UnsupportedOp,
                "primary test over " + R.to_string() +
                    " covers monomial, linear, and maximal-power inputs");
}

PropertyVerdict field_prime_or_primary(const Ideal &A, const char *which) {
    if (A.is_zero_ideal())
        return zero_ideal_holds(A, which);
    return unit_ideal_fails(A, which);
}

} // namespace

PropertyVerdict is_prime(const Ideal &A) {
    switch (A.ring().kind()) {
    case RingKind::Int:
    case RingKind::IntMod:
        return int_like_prime(A);
    case RingKind::PrimeField:
    case RingKind::Rationals:
        return field_prime_or_primary(A, "prime");
    case RingKind::UniPoly:
        if (!A.ring().base().is_field())
            throw Error(ErrorKind::UnsupportedRing,
                        "primality needs factorization over " +
                            A.ring().to_string());
        return poly_field_prime(A);
    case RingKind::BiPolyQ:
        return bipoly_prime(A);
    case RingKind::HahnVal:
        return hahn_prime(A);
    }
    throw Error(ErrorKind::Internal, "bad ring kind");
}

PropertyVerdict is_primary(const Ideal &A) {
    switch (A.ring().kind()) {
    case RingKind::Int:
    case RingKind::IntMod:
        return int_like_primary(A);
    case RingKind::PrimeField:
    case RingKind::Rationals:
        return field_prime_or_primary(A, "primary");
    case RingKind::UniPoly:
        if (!A.ring().base().is_field())
            throw Error(ErrorKind::UnsupportedRing,
                        "primary test needs factorization over " +
                            A.ring().to_string());
        return poly_field_primary(A);
    case RingKind::BiPolyQ:
        return bipoly_primary(A);
    case RingKind::HahnVal:
        return hahn_primary(A);
    }
    throw Error(ErrorKind::Internal, "bad ring kind");
}

// ------------------------------------------------------------------
// primary decomposition

std::vector<Ideal> primary_decomposition(const Ideal &A) {
    const RingId &R = A.ring();
    if (A.is_zero_ideal() && !R.is_domain())
        throw Error(ErrorKind::PrecondViolated,
                    "zero ideal decomposes only over a domain");

    // components sorted by descending multiplicity, ties in factor order
    switch (R.kind()) {
    case RingKind::Int:
    case RingKind::IntMod: {
        bool modular = R.kind() == RingKind::IntMod;
        Int g = lift_int(A.normal_gen());
        if (g == 0 && !modular)
            return {A};
        if (g == 0)
            g = R.modulus();
        if (g == 1)
            return {};
        auto fs = factor_int(g);
        std::stable_sort(fs.begin(), fs.end(),
                         [](const auto &a, const auto &b) {
                             return a.second > b.second;
                         });
        std::vector<Ideal> out;
        for (const auto &[p, k] : fs) {
            Int q = pow_int(p, k);
            out.push_back(
                Ideal::make(R, {modular ? make_mod(R, q) : make_int(q)}));
        }
        return out;
    }
    case RingKind::UniPoly: {
        if (!R.base().is_field())
            throw Error(ErrorKind::UnsupportedRing,
                        "decomposition needs factorization over " +
                            R.to_string());
        const RingElement &g = A.normal_gen();
        if (is_zero(g))
            return {A};
        if (poly_degree(g) == 0)
            return {};
        PolyFactorization f = factor_poly(g);
        std::stable_sort(f.factors.begin(), f.factors.end(),
                         [](const auto &a, const auto &b) {
                             return a.second > b.second;
                         });
        std::vector<Ideal> out;
        for (const auto &[p, k] : f.factors)
            out.push_back(Ideal::make(
                R, {pow_elem(p, static_cast<unsigned>(k))}));
        return out;
    }
    default:
        throw Error(ErrorKind::UnsupportedRing,
                    "decomposition over " + R.to_string() + " not supported");
    }
}

} // namespace contentlab
