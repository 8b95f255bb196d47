#include "contentlab/content.hpp"

#include "contentlab/errors.hpp"
#include "contentlab/numeric.hpp"

#include <algorithm>

namespace contentlab {

using nlohmann::json;

namespace {

std::string wrap(const std::string &s) {
    return s.find(' ') == std::string::npos ? s : "(" + s + ")";
}

// Re-express an ideal by its normal generators when the ring computes one.
Ideal normal_presentation(const Ideal &C) {
    if (!C.has_normal())
        return C;
    return Ideal::make(C.ring(), C.normal_gens());
}

bool scalar_or_uni(const RingId &r) {
    switch (r.kind()) {
    case RingKind::Int:
    case RingKind::IntMod:
    case RingKind::PrimeField:
    case RingKind::Rationals:
    case RingKind::UniPoly:
        return true;
    default:
        return false;
    }
}

int padic_val(Int n, const Int &p) {
    // n != 0
    int k = 0;
    while (n % p == 0) {
        n /= p;
        ++k;
    }
    return k;
}

} // namespace

PolyOverRing PolyOverRing::make(RingId base, std::string var,
                                std::vector<RingElement> coeffs) {
    if (var.empty())
        throw Error(ErrorKind::PrecondViolated, "empty extension symbol");
    if (base.variables().count(var))
        throw Error(ErrorKind::PrecondViolated,
                    "extension symbol '" + var +
                        "' is already a variable of " + base.to_string());
    for (const auto &c : coeffs)
        if (c.ring() != base)
            throw Error(ErrorKind::RingMismatch,
                        "coefficient " + c.to_text() + " is not in " +
                            base.to_string());
    while (!coeffs.empty() && contentlab::is_zero(coeffs.back()))
        coeffs.pop_back();
    return PolyOverRing(std::move(base), std::move(var), std::move(coeffs));
}

std::string PolyOverRing::to_text() const {
    std::vector<std::string> terms;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (contentlab::is_zero(coeffs_[i]))
            continue;
        if (i == 0) {
            terms.push_back(coeffs_[i].to_text());
            continue;
        }
        std::string mono =
            i == 1 ? var_ : var_ + "^" + std::to_string(i);
        terms.push_back(is_one(coeffs_[i])
                            ? mono
                            : wrap(coeffs_[i].to_text()) + "*" + mono);
    }
    if (terms.empty())
        return "0";
    std::string out = terms.front();
    for (std::size_t i = 1; i < terms.size(); ++i)
        out += " + " + terms[i];
    return out;
}

SeriesDescriptor SeriesDescriptor::make(RingId base, SeqDescriptor values) {
    if (base.kind() != RingKind::HahnVal)
        throw Error(ErrorKind::MalformedDescriptor,
                    "series content is defined over Hahn rings, not " +
                        base.to_string());
    if (values.group() != base.group())
        throw Error(ErrorKind::MalformedDescriptor,
                    "value sequence ranges over the wrong group");
    if (values.is_finite()) {
        for (const auto &v : values.as_finite().elems)
            if (sign_of(v) < 0)
                throw Error(ErrorKind::MalformedDescriptor,
                            "negative exponent " + v.to_string());
    } else {
        // infinite families must stay strictly inside the positive cone
        require_positive(values);
    }
    return SeriesDescriptor(std::move(base), std::move(values));
}

std::string SeriesDescriptor::to_text() const {
    return base_.to_string() + " with exponents " + values_.to_string();
}

TowerId TowerId::make(RingId base, std::vector<std::string> vars) {
    if (vars.empty() || vars.size() > 2)
        throw Error(ErrorKind::MalformedTower,
                    "a tower adjoins one or two symbols");
    if (!scalar_or_uni(base))
        throw Error(ErrorKind::MalformedTower,
                    base.to_string() + " cannot be extended by a polynomial level");
    if (base.poly_depth() + static_cast<int>(vars.size()) > 3)
        throw Error(ErrorKind::MalformedTower, "tower exceeds nesting depth 3");
    std::set<std::string> seen = base.variables();
    for (const auto &v : vars) {
        if (v.empty())
            throw Error(ErrorKind::MalformedTower, "empty extension symbol");
        if (!seen.insert(v).second)
            throw Error(ErrorKind::MalformedTower,
                        "symbol '" + v + "' appears twice in the tower");
    }
    return TowerId(std::move(base), std::move(vars));
}

RingId TowerId::level(std::size_t i) const {
    if (i > vars_.size())
        throw Error(ErrorKind::MalformedTower,
                    "tower has no level " + std::to_string(i));
    RingId r = base_;
    for (std::size_t k = 0; k < i; ++k)
        r = RingId::uni_poly(r, vars_[k]);
    return r;
}

std::string TowerId::to_text() const {
    std::string out = base_.to_string();
    for (std::size_t i = 1; i <= vars_.size(); ++i)
        out += " -> " + level(i).to_string();
    return out;
}

namespace {

void require_same_extension(const PolyOverRing &f, const PolyOverRing &g) {
    if (f.base() != g.base() || f.var() != g.var())
        throw Error(ErrorKind::RingMismatch,
                    "polynomials extend different rings: " + f.base().to_string() +
                        "[" + f.var() + "] vs " + g.base().to_string() + "[" +
                        g.var() + "]");
}

} // namespace

PolyOverRing poly_add(const PolyOverRing &f, const PolyOverRing &g) {
    require_same_extension(f, g);
    std::vector<RingElement> cs;
    std::size_t n = std::max(f.coeffs().size(), g.coeffs().size());
    for (std::size_t i = 0; i < n; ++i) {
        RingElement a = i < f.coeffs().size() ? f.coeffs()[i] : ring_zero(f.base());
        RingElement b = i < g.coeffs().size() ? g.coeffs()[i] : ring_zero(f.base());
        cs.push_back(add(a, b));
    }
    return PolyOverRing::make(f.base(), f.var(), std::move(cs));
}

PolyOverRing poly_mul(const PolyOverRing &f, const PolyOverRing &g) {
    require_same_extension(f, g);
    if (f.is_zero() || g.is_zero())
        return PolyOverRing::make(f.base(), f.var(), {});
    std::vector<RingElement> cs(f.coeffs().size() + g.coeffs().size() - 1,
                                ring_zero(f.base()));
    for (std::size_t i = 0; i < f.coeffs().size(); ++i)
        for (std::size_t j = 0; j < g.coeffs().size(); ++j)
            cs[i + j] = add(cs[i + j], mul(f.coeffs()[i], g.coeffs()[j]));
    return PolyOverRing::make(f.base(), f.var(), std::move(cs));
}

PolyOverRing poly_scale(const RingElement &r, const PolyOverRing &f) {
    if (r.ring() != f.base())
        throw Error(ErrorKind::RingMismatch, "scalar is not in the base ring");
    std::vector<RingElement> cs;
    for (const auto &c : f.coeffs())
        cs.push_back(mul(r, c));
    return PolyOverRing::make(f.base(), f.var(), std::move(cs));
}

Ideal poly_content(const PolyOverRing &f) {
    return Ideal::make(f.base(), f.coeffs());
}

Ideal orc_poly(const PolyOverRing &f) {
    switch (f.base().kind()) {
    case RingKind::Int:
    case RingKind::IntMod:
    case RingKind::PrimeField:
    case RingKind::Rationals:
    case RingKind::UniPoly:
    case RingKind::BiPolyQ:
    case RingKind::HahnVal:
        return normal_presentation(poly_content(f));
    }
    throw Error(ErrorKind::UnsupportedRing, "no content map for this base");
}

std::optional<Ideal> smallest_fg_cover(const SeriesDescriptor &s) {
    const SeqDescriptor &vals = s.values();
    std::optional<GroupElement> bound;
    if (vals.is_finite()) {
        // a finite set always attains its minimum
        for (const auto &v : vals.as_finite().elems)
            if (!bound || compare(v, *bound) == Ordering::LT)
                bound = v;
    } else {
        bound = glb(vals);
    }
    if (!bound)
        return std::nullopt;
    return Ideal::make(s.base(), {hahn_monomial(s.base(), *bound)});
}

std::string LocalizedContent::local_text() const {
    if (zero)
        return "(0)";
    if (exponent == 0)
        return "(1)";
    return "(" + pow_int(prime, static_cast<unsigned>(exponent)).str() + ")";
}

LocalizedContent localize_content(const PolyOverRing &f, const Int &P) {
    if (f.base().kind() != RingKind::Int)
        throw Error(ErrorKind::WrongRingKind,
                    "localization data is modeled over the integers only");
    if (P != 0 && !is_prime_int(P))
        throw Error(ErrorKind::NotPrimeInput,
                    "cannot localize at composite " + P.str());
    LocalizedContent out{P, 0, false, orc_poly(f)};
    out.zero = out.global.is_zero_ideal();
    if (out.zero || P == 0)
        return out;
    Int g = out.global.normal_gen().as_int();
    out.exponent = padic_val(g, P);
    // the same exponent must fall out of the coefficient-wise local data
    // (p-power, unit part); min of the p-powers is the local content
    int min_coeff_val = -1;
    for (const auto &c : f.coeffs()) {
        if (is_zero(c))
            continue;
        int k = padic_val(c.as_int(), P);
        if (min_coeff_val < 0 || k < min_coeff_val)
            min_coeff_val = k;
    }
    if (min_coeff_val != out.exponent)
        throw Error(ErrorKind::Internal,
                    "local content disagrees with coefficient valuations",
                    json{{"poly", f.to_text()},
                         {"prime", P.str()},
                         {"from_generator", out.exponent},
                         {"from_coefficients", min_coeff_val}});
    return out;
}

std::pair<Ideal, Ideal> compose_content(const TowerId &tower,
                                        const PolyOverRing &f) {
    if (tower.height() != 3)
        throw Error(ErrorKind::MalformedTower,
                    "content composition needs a three-level tower");
    RingId mid = tower.level(1);
    if (f.base() != mid)
        throw Error(ErrorKind::MalformedTower,
                    "polynomial coefficients live in " + f.base().to_string() +
                        ", expected " + mid.to_string());
    if (f.var() != tower.vars()[1])
        throw Error(ErrorKind::MalformedTower,
                    "polynomial extends by '" + f.var() + "', tower by '" +
                        tower.vars()[1] + "'");
    const RingId &R = tower.base();
    const std::string &t = tower.vars()[0];

    std::vector<RingElement> flat;
    Ideal composed = Ideal::make(R, {});
    bool any = false;
    for (const auto &h : f.coeffs()) {
        std::vector<RingElement> cs = poly_coeffs(h);
        flat.insert(flat.end(), cs.begin(), cs.end());
        if (is_zero(h))
            continue;
        Ideal stage = orc_poly(PolyOverRing::make(R, t, cs));
        composed = any ? ideal_sum(composed, stage) : stage;
        any = true;
    }
    Ideal direct = normal_presentation(Ideal::make(R, flat));
    return {direct, normal_presentation(composed)};
}

} // namespace contentlab
