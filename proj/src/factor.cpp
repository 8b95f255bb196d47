#include "contentlab/factor.hpp"

#include "contentlab/errors.hpp"

#include <algorithm>
#include <map>

namespace contentlab {

std::vector<std::pair<Int, int>> factor_int(const Int &n) {
    if (n == 0)
        throw Error(ErrorKind::PrecondViolated, "factor_int(0)");
    Int m = abs(n);
    std::vector<std::pair<Int, int>> out;
    auto strip = [&](const Int &p) {
        int e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        if (e) out.emplace_back(p, e);
    };
    strip(Int(2));
    strip(Int(3));
    for (Int i = 5; i * i <= m; i += 6) {
        strip(i);
        strip(Int(i + 2));
    }
    if (m > 1) out.emplace_back(m, 1);
    return out;
}

std::vector<Int> divisors_of(const Int &n) {
    std::vector<Int> divs{Int(1)};
    for (const auto &[p, e] : factor_int(n)) {
        size_t base = divs.size();
        Int pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (size_t i = 0; i < base; ++i) divs.push_back(Int(divs[i] * pk));
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

namespace {

// ---- integer polynomial helpers (dense, ascending, trimmed) ----

using ZPoly = std::vector<Int>;

void ztrim(ZPoly &p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

int zdeg(const ZPoly &p) { return static_cast<int>(p.size()) - 1; }

Int zeval(const ZPoly &p, const Int &x) {
    Int acc = 0;
    for (size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
    return acc;
}

// quotient when b divides a exactly over Z, otherwise nullopt
std::optional<ZPoly> z_exact_div(ZPoly rem, const ZPoly &b) {
    int db = zdeg(b);
    ZPoly quot(rem.size() >= b.size() ? rem.size() - b.size() + 1 : 0, Int(0));
    while (zdeg(rem) >= db) {
        ztrim(rem);
        if (zdeg(rem) < db) break;
        if (rem.back() % b.back() != 0) return std::nullopt;
        Int q = rem.back() / b.back();
        int shift = zdeg(rem) - db;
        quot[static_cast<size_t>(shift)] = q;
        for (int i = 0; i <= db; ++i)
            rem[static_cast<size_t>(i + shift)] -= q * b[static_cast<size_t>(i)];
    }
    for (const Int &c : rem)
        if (c != 0) return std::nullopt;
    return quot;
}

void z_normalize_sign(ZPoly &p) {
    if (!p.empty() && p.back() < 0)
        for (Int &c : p) c = -c;
}

// signed divisor candidates for a nonzero value
std::vector<Int> signed_divisors(const Int &v, bool positive_only) {
    std::vector<Int> out;
    for (const Int &d : divisors_of(v)) {
        out.push_back(d);
        if (!positive_only) out.push_back(Int(-d));
    }
    return out;
}

// Interpolation through (x_i, y_i) as exact rationals; integer result or
// nullopt when some coefficient is fractional.
std::optional<ZPoly> interpolate_integral(const std::vector<Int> &xs,
                                          const std::vector<Int> &ys) {
    size_t n = xs.size();
    std::vector<Rat> acc(n, Rat(0));
    for (size_t i = 0; i < n; ++i) {
        // Lagrange basis polynomial for node i, scaled by y_i
        std::vector<Rat> basis{Rat(1)};
        Rat denom(1);
        for (size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            std::vector<Rat> next(basis.size() + 1, Rat(0));
            for (size_t k = 0; k < basis.size(); ++k) {
                next[k] += basis[k] * Rat(-xs[j]);
                next[k + 1] += basis[k];
            }
            basis = std::move(next);
            denom *= Rat(xs[i] - xs[j]);
        }
        Rat scale = Rat(ys[i]) / denom;
        for (size_t k = 0; k < basis.size(); ++k) acc[k] += basis[k] * scale;
    }
    ZPoly out;
    for (const Rat &c : acc) {
        if (rat_den(c) != 1) return std::nullopt;
        out.push_back(rat_num(c));
    }
    ztrim(out);
    return out;
}

// sample nodes 0, 1, -1, 2, -2, ...
Int node(int i) {
    if (i == 0) return 0;
    int half = (i + 1) / 2;
    return i % 2 ? Int(half) : Int(-half);
}

// Recursive factorization of a primitive squarefree-or-not integer
// polynomial with positive leading coefficient. Finds a nontrivial divisor
// of degree <= deg/2 by divisor-tuple interpolation, or reports the input
// irreducible. Returns the flat multiset of irreducible factors.
void z_factor(ZPoly g, std::vector<ZPoly> &out) {
    ztrim(g);
    z_normalize_sign(g);
    int deg = zdeg(g);
    if (deg <= 0) return;
    if (deg == 1) {
        out.push_back(g);
        return;
    }
    for (int d = 1; 2 * d <= deg; ++d) {
        std::vector<Int> xs;
        std::vector<Int> vals;
        for (int i = 0; i <= d; ++i) {
            Int x = node(i);
            Int v = zeval(g, x);
            if (v == 0) {
                // x is an integer root; split off the linear factor
                ZPoly lin{Int(-x), Int(1)};
                auto quot = z_exact_div(g, lin);
                out.push_back(lin);
                z_factor(std::move(*quot), out);
                return;
            }
            xs.push_back(x);
            vals.push_back(v);
        }
        // enumerate divisor tuples; the first coordinate is kept positive
        // because a factor and its negation split the polynomial equally
        std::vector<std::vector<Int>> choices;
        for (int i = 0; i <= d; ++i)
            choices.push_back(signed_divisors(vals[static_cast<size_t>(i)], i == 0));
        std::vector<size_t> idx(static_cast<size_t>(d) + 1, 0);
        std::vector<Int> ys(static_cast<size_t>(d) + 1);
        while (true) {
            for (int i = 0; i <= d; ++i)
                ys[static_cast<size_t>(i)] = choices[static_cast<size_t>(i)][idx[static_cast<size_t>(i)]];
            auto cand = interpolate_integral(xs, ys);
            if (cand && zdeg(*cand) == d) {
                z_normalize_sign(*cand);
                auto quot = z_exact_div(g, *cand);
                if (quot) {
                    z_factor(std::move(*cand), out);
                    z_factor(std::move(*quot), out);
                    return;
                }
            }
            // odometer step
            size_t pos = 0;
            while (pos < idx.size()) {
                if (++idx[pos] < choices[pos].size()) break;
                idx[pos] = 0;
                ++pos;
            }
            if (pos == idx.size()) break;
        }
    }
    out.push_back(g);
}

RingElement monic_from_zpoly(const RingId &ring, const ZPoly &p) {
    std::vector<RingElement> cs;
    Rat lead(p.back());
    for (const Int &c : p)
        cs.push_back(make_rat(Rat(Rat(c) / lead)));
    return make_poly(ring, std::move(cs));
}

PolyFactorization factor_poly_q(const RingElement &f) {
    const RingId &ring = f.ring();
    PolyFactorization out{make_poly(ring, {poly_leading(f)}), {}};
    if (poly_degree(f) == 0) return out;

    // monic rational coefficients, then clear denominators and content
    Rat lead = poly_leading(f).as_rat();
    Int den = 1;
    for (const auto &c : poly_coeffs(f))
        den = lcm(den, rat_den(Rat(c.as_rat() / lead)));
    ZPoly zp;
    for (const auto &c : poly_coeffs(f))
        zp.push_back(rat_num(Rat(c.as_rat() / lead * Rat(den))));
    Int content = 0;
    for (const Int &c : zp) content = gcd(content, c);
    for (Int &c : zp) c /= content;
    z_normalize_sign(zp);

    std::vector<ZPoly> flat;
    z_factor(std::move(zp), flat);
    std::vector<RingElement> monic;
    for (const ZPoly &p : flat) monic.push_back(monic_from_zpoly(ring, p));
    std::sort(monic.begin(), monic.end(), [](const RingElement &a, const RingElement &b) {
        if (poly_degree(a) != poly_degree(b)) return poly_degree(a) < poly_degree(b);
        return a.to_text() < b.to_text();
    });
    for (const RingElement &m : monic) {
        if (!out.factors.empty() && out.factors.back().first == m)
            ++out.factors.back().second;
        else
            out.factors.emplace_back(m, 1);
    }
    return out;
}

PolyFactorization factor_poly_fp(const RingElement &f) {
    const RingId &ring = f.ring();
    const RingId &fp = ring.base();
    const Int &p = fp.modulus();
    if (p > 1000)
        throw Error(ErrorKind::UnsupportedOp,
                    "polynomial factorization only for small prime fields");
    long pl = p.convert_to<long>();

    PolyFactorization out{make_poly(ring, {poly_leading(f)}), {}};
    if (poly_degree(f) == 0) return out;
    RingElement cur = mul(f, make_poly(ring, {field_inv(poly_leading(f))}));

    std::map<std::string, std::pair<RingElement, int>> found;
    for (int d = 1; 2 * d <= poly_degree(cur); ++d) {
        // monic candidates of degree d in lexicographic coefficient order
        long total = 1;
        for (int i = 0; i < d; ++i) {
            total *= pl;
            if (total > 200000)
                throw Error(ErrorKind::UnsupportedOp,
                            "degree too large for divisor enumeration");
        }
        for (long code = 0; code < total && 2 * d <= poly_degree(cur); ++code) {
            std::vector<RingElement> cs;
            long c = code;
            for (int i = 0; i < d; ++i) {
                cs.push_back(make_mod(fp, Int(c % pl)));
                c /= pl;
            }
            cs.push_back(ring_one(fp));
            RingElement g = make_poly(ring, std::move(cs));
            while (true) {
                auto q = exact_div(cur, g);
                if (!q) break;
                cur = *q;
                auto it = found.emplace(g.to_text(), std::make_pair(g, 0)).first;
                ++it->second.second;
            }
        }
    }
    if (poly_degree(cur) >= 1)
        found.emplace(cur.to_text(), std::make_pair(cur, 1));

    std::vector<std::pair<RingElement, int>> facs;
    for (auto &[k, v] : found) facs.push_back(v);
    std::sort(facs.begin(), facs.end(), [](const auto &a, const auto &b) {
        if (poly_degree(a.first) != poly_degree(b.first))
            return poly_degree(a.first) < poly_degree(b.first);
        return a.first.to_text() < b.first.to_text();
    });
    out.factors = std::move(facs);
    return out;
}

} // namespace

PolyFactorization factor_poly(const RingElement &f) {
    if (f.ring().kind() != RingKind::UniPoly || !f.ring().base().is_field())
        throw Error(ErrorKind::WrongRingKind,
                    "factor_poly needs a univariate polynomial over a field");
    if (is_zero(f))
        throw Error(ErrorKind::PrecondViolated, "factor_poly(0)");
    if (f.ring().base().kind() == RingKind::Rationals) return factor_poly_q(f);
    return factor_poly_fp(f);
}

bool poly_irreducible(const RingElement &f) {
    if (poly_degree(f) < 1) return false;
    PolyFactorization fac = factor_poly(f);
    return fac.factors.size() == 1 && fac.factors[0].second == 1;
}

} // namespace contentlab
