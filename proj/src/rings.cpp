#include "contentlab/rings.hpp"

#include "contentlab/errors.hpp"
#include "contentlab/sampling.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace contentlab {

struct RingId::Impl {
    RingKind kind;
    Int modulus{};
    std::optional<RingId> base;
    std::string var;
    std::string var2;
    std::optional<GroupId> group;
    std::optional<RingId> residue;
};

namespace {

bool valid_var_name(const std::string &v) {
    if (v.empty() || v == "t" || v == "sqrt") return false;
    if (!std::isalpha(static_cast<unsigned char>(v[0]))) return false;
    for (char c : v)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
}

std::shared_ptr<const RingId::Impl> leaf(RingKind k) {
    auto impl = std::make_shared<RingId::Impl>();
    impl->kind = k;
    return impl;
}

bool payload_matches(RingKind k, const RingElement::Payload &p) {
    switch (k) {
    case RingKind::Int:
    case RingKind::IntMod:
    case RingKind::PrimeField:
        return std::holds_alternative<Int>(p);
    case RingKind::Rationals:
        return std::holds_alternative<Rat>(p);
    case RingKind::UniPoly:
        return std::holds_alternative<UniPolyData>(p);
    case RingKind::BiPolyQ:
        return std::holds_alternative<BiPolyData>(p);
    case RingKind::HahnVal:
        return std::holds_alternative<HahnData>(p);
    }
    return false;
}

} // namespace

RingId RingId::integers() { return RingId(leaf(RingKind::Int)); }
RingId RingId::rationals() { return RingId(leaf(RingKind::Rationals)); }

RingId RingId::integers_mod(const Int &n) {
    if (n < 2)
        throw Error(ErrorKind::PrecondViolated, "IntMod modulus must be >= 2");
    auto impl = std::make_shared<Impl>();
    impl->kind = RingKind::IntMod;
    impl->modulus = n;
    return RingId(std::move(impl));
}

RingId RingId::prime_field(const Int &p) {
    if (!is_prime_int(p))
        throw Error(ErrorKind::NotPrimeModulus,
                    "PrimeField modulus must be prime, got " + p.str());
    auto impl = std::make_shared<Impl>();
    impl->kind = RingKind::PrimeField;
    impl->modulus = p;
    return RingId(std::move(impl));
}

RingId RingId::uni_poly(const RingId &base, const std::string &var) {
    switch (base.kind()) {
    case RingKind::Int:
    case RingKind::IntMod:
    case RingKind::PrimeField:
    case RingKind::Rationals:
    case RingKind::UniPoly:
        break;
    default:
        throw Error(ErrorKind::UnsupportedRing,
                    "UniPoly base must be Int, IntMod, PrimeField, Rationals or UniPoly");
    }
    if (base.poly_depth() >= 3)
        throw Error(ErrorKind::UnsupportedRing, "UniPoly nesting depth exceeds 3");
    if (!valid_var_name(var))
        throw Error(ErrorKind::PrecondViolated, "invalid variable name '" + var + "'");
    if (base.variables().count(var))
        throw Error(ErrorKind::PrecondViolated,
                    "variable '" + var + "' already used in the base ring");
    auto impl = std::make_shared<Impl>();
    impl->kind = RingKind::UniPoly;
    impl->base = base;
    impl->var = var;
    return RingId(std::move(impl));
}

RingId RingId::bi_poly_q(const std::string &x, const std::string &y) {
    if (!valid_var_name(x) || !valid_var_name(y) || x == y)
        throw Error(ErrorKind::PrecondViolated, "BiPolyQ needs two distinct variables");
    auto impl = std::make_shared<Impl>();
    impl->kind = RingKind::BiPolyQ;
    impl->var = x;
    impl->var2 = y;
    return RingId(std::move(impl));
}

RingId RingId::hahn(const GroupId &group, const RingId &residue) {
    if (residue.kind() != RingKind::PrimeField && residue.kind() != RingKind::Rationals)
        throw Error(ErrorKind::UnsupportedRing,
                    "Hahn residue field must be PrimeField or Rationals");
    auto impl = std::make_shared<Impl>();
    impl->kind = RingKind::HahnVal;
    impl->group = group;
    impl->residue = residue;
    return RingId(std::move(impl));
}

RingKind RingId::kind() const { return impl_->kind; }

const Int &RingId::modulus() const {
    if (kind() != RingKind::IntMod && kind() != RingKind::PrimeField)
        throw Error(ErrorKind::WrongRingKind, "modulus() on a non-modular ring");
    return impl_->modulus;
}

const RingId &RingId::base() const {
    if (!impl_->base)
        throw Error(ErrorKind::WrongRingKind, "base() on a non-polynomial ring");
    return *impl_->base;
}

const std::string &RingId::var() const {
    if (kind() != RingKind::UniPoly && kind() != RingKind::BiPolyQ)
        throw Error(ErrorKind::WrongRingKind, "var() on a non-polynomial ring");
    return impl_->var;
}

const std::string &RingId::var_x() const {
    if (kind() != RingKind::BiPolyQ)
        throw Error(ErrorKind::WrongRingKind, "var_x() on a non-bivariate ring");
    return impl_->var;
}

const std::string &RingId::var_y() const {
    if (kind() != RingKind::BiPolyQ)
        throw Error(ErrorKind::WrongRingKind, "var_y() on a non-bivariate ring");
    return impl_->var2;
}

const GroupId &RingId::group() const {
    if (!impl_->group)
        throw Error(ErrorKind::WrongRingKind, "group() on a non-Hahn ring");
    return *impl_->group;
}

const RingId &RingId::residue() const {
    if (!impl_->residue)
        throw Error(ErrorKind::WrongRingKind, "residue() on a non-Hahn ring");
    return *impl_->residue;
}

bool RingId::operator==(const RingId &o) const {
    if (impl_ == o.impl_) return true;
    if (impl_->kind != o.impl_->kind) return false;
    switch (impl_->kind) {
    case RingKind::Int:
    case RingKind::Rationals:
        return true;
    case RingKind::IntMod:
    case RingKind::PrimeField:
        return impl_->modulus == o.impl_->modulus;
    case RingKind::UniPoly:
        return impl_->var == o.impl_->var && *impl_->base == *o.impl_->base;
    case RingKind::BiPolyQ:
        return impl_->var == o.impl_->var && impl_->var2 == o.impl_->var2;
    case RingKind::HahnVal:
        return *impl_->group == *o.impl_->group && *impl_->residue == *o.impl_->residue;
    }
    return false;
}

bool RingId::is_field() const {
    return kind() == RingKind::PrimeField || kind() == RingKind::Rationals;
}

bool RingId::is_domain() const {
    switch (kind()) {
    case RingKind::Int:
    case RingKind::PrimeField:
    case RingKind::Rationals:
    case RingKind::BiPolyQ:
    case RingKind::HahnVal:
        return true;
    case RingKind::IntMod:
        return is_prime_int(modulus());
    case RingKind::UniPoly:
        return base().is_domain();
    }
    return false;
}

int RingId::poly_depth() const {
    int d = 0;
    RingId cur = *this;
    while (cur.kind() == RingKind::UniPoly) {
        ++d;
        cur = cur.base();
    }
    return d;
}

std::set<std::string> RingId::variables() const {
    switch (kind()) {
    case RingKind::UniPoly: {
        auto v = base().variables();
        v.insert(var());
        return v;
    }
    case RingKind::BiPolyQ:
        return {var_x(), var_y()};
    case RingKind::HahnVal:
        return {"t"};
    default:
        return {};
    }
}

std::string RingId::to_string() const {
    switch (kind()) {
    case RingKind::Int: return "Int";
    case RingKind::Rationals: return "Q";
    case RingKind::IntMod: return "Mod(" + modulus().str() + ")";
    case RingKind::PrimeField: return "Fp(" + modulus().str() + ")";
    case RingKind::UniPoly: return base().to_string() + "[" + var() + "]";
    case RingKind::BiPolyQ: return "Q[" + var_x() + "," + var_y() + "]";
    case RingKind::HahnVal:
        return "Hahn(" + group().to_string() + "," + residue().to_string() + ")";
    }
    return "?";
}

bool UniPolyData::operator==(const UniPolyData &o) const { return coeffs == o.coeffs; }
bool HahnData::operator==(const HahnData &o) const { return terms == o.terms; }

RingElement::RingElement() : ring_(RingId::integers()), payload_(Int(0)) {}

const Int &RingElement::as_int() const {
    if (!std::holds_alternative<Int>(payload_))
        throw Error(ErrorKind::WrongRingKind, "element payload is not an integer");
    return std::get<Int>(payload_);
}

const Rat &RingElement::as_rat() const {
    if (!std::holds_alternative<Rat>(payload_))
        throw Error(ErrorKind::WrongRingKind, "element payload is not a rational");
    return std::get<Rat>(payload_);
}

const UniPolyData &RingElement::as_poly() const {
    if (!std::holds_alternative<UniPolyData>(payload_))
        throw Error(ErrorKind::WrongRingKind, "element payload is not a polynomial");
    return std::get<UniPolyData>(payload_);
}

const BiPolyData &RingElement::as_bipoly() const {
    if (!std::holds_alternative<BiPolyData>(payload_))
        throw Error(ErrorKind::WrongRingKind, "element payload is not bivariate");
    return std::get<BiPolyData>(payload_);
}

const HahnData &RingElement::as_hahn() const {
    if (!std::holds_alternative<HahnData>(payload_))
        throw Error(ErrorKind::WrongRingKind, "element payload is not a Hahn series");
    return std::get<HahnData>(payload_);
}

bool RingElement::operator==(const RingElement &o) const {
    return ring_ == o.ring_ && payload_ == o.payload_;
}

RingElement make_element(RingId ring, RingElement::Payload payload) {
    if (!payload_matches(ring.kind(), payload))
        throw Error(ErrorKind::WrongRingKind, "payload does not match ring kind");
    switch (ring.kind()) {
    case RingKind::Int:
        break;
    case RingKind::IntMod:
    case RingKind::PrimeField: {
        Int v = std::get<Int>(payload) % ring.modulus();
        if (v < 0) v += ring.modulus();
        payload = v;
        break;
    }
    case RingKind::Rationals:
        break;
    case RingKind::UniPoly: {
        auto &data = std::get<UniPolyData>(payload);
        for (const auto &c : data.coeffs)
            if (c.ring() != ring.base())
                throw Error(ErrorKind::RingMismatch,
                            "polynomial coefficient from the wrong ring");
        while (!data.coeffs.empty() && is_zero(data.coeffs.back()))
            data.coeffs.pop_back();
        break;
    }
    case RingKind::BiPolyQ: {
        auto &data = std::get<BiPolyData>(payload);
        for (auto it = data.terms.begin(); it != data.terms.end();) {
            if (it->first.first < 0 || it->first.second < 0)
                throw Error(ErrorKind::PrecondViolated, "negative exponent");
            if (it->second == 0)
                it = data.terms.erase(it);
            else
                ++it;
        }
        break;
    }
    case RingKind::HahnVal: {
        auto &data = std::get<HahnData>(payload);
        for (auto &[g, c] : data.terms) {
            if (!(g.group == ring.group()))
                throw Error(ErrorKind::GroupMismatch, "Hahn exponent from the wrong group");
            if (!is_nonnegative(g))
                throw Error(ErrorKind::PrecondViolated, "Hahn exponent below zero");
            if (c.ring() != ring.residue())
                throw Error(ErrorKind::RingMismatch, "Hahn coefficient from the wrong field");
        }
        std::stable_sort(data.terms.begin(), data.terms.end(),
                         [](const auto &a, const auto &b) {
                             return compare(a.first, b.first) == Ordering::LT;
                         });
        // merge equal exponents, then drop zero coefficients
        std::vector<std::pair<GroupElement, RingElement>> merged;
        for (auto &[g, c] : data.terms) {
            if (!merged.empty() && merged.back().first == g)
                merged.back().second = add(merged.back().second, c);
            else
                merged.emplace_back(g, c);
        }
        merged.erase(std::remove_if(merged.begin(), merged.end(),
                                    [](const auto &t) { return is_zero(t.second); }),
                     merged.end());
        data.terms = std::move(merged);
        break;
    }
    }
    return RingElement(std::move(ring), std::move(payload));
}

RingElement ring_zero(const RingId &r) {
    switch (r.kind()) {
    case RingKind::Int:
    case RingKind::IntMod:
    case RingKind::PrimeField:
        return make_element(r, Int(0));
    case RingKind::Rationals:
        return make_element(r, Rat(0));
    case RingKind::UniPoly:
        return make_element(r, UniPolyData{});
    case RingKind::BiPolyQ:
        return make_element(r, BiPolyData{});
    case RingKind::HahnVal:
        return make_element(r, HahnData{});
    }
    throw Error(ErrorKind::Internal, "ring_zero");
}

RingElement ring_one(const RingId &r) { return from_int(r, Int(1)); }

RingElement from_int(const RingId &r, const Int &n) {
    switch (r.kind()) {
    case RingKind::Int:
    case RingKind::IntMod:
    case RingKind::PrimeField:
        return make_element(r, n);
    case RingKind::Rationals:
        return make_element(r, Rat(n));
    case RingKind::UniPoly:
        return make_element(r, UniPolyData{{from_int(r.base(), n)}});
    case RingKind::BiPolyQ: {
        BiPolyData d;
        d.terms[{0, 0}] = Rat(n);
        return make_element(r, std::move(d));
    }
    case RingKind::HahnVal: {
        HahnData d;
        d.terms.emplace_back(group_zero(r.group()), from_int(r.residue(), n));
        return make_element(r, std::move(d));
    }
    }
    throw Error(ErrorKind::Internal, "from_int");
}

RingElement from_rat(const RingId &r, const Rat &q) {
    if (rat_den(q) == 1) return from_int(r, rat_num(q));
    switch (r.kind()) {
    case RingKind::Rationals:
        return make_element(r, q);
    case RingKind::UniPoly:
        return make_element(r, UniPolyData{{from_rat(r.base(), q)}});
    case RingKind::BiPolyQ: {
        BiPolyData d;
        d.terms[{0, 0}] = q;
        return make_element(r, std::move(d));
    }
    case RingKind::HahnVal: {
        HahnData d;
        d.terms.emplace_back(group_zero(r.group()), from_rat(r.residue(), q));
        return make_element(r, std::move(d));
    }
    default:
        throw Error(ErrorKind::WrongRingKind,
                    "no rational image in " + r.to_string());
    }
}

RingElement make_int(const Int &n) { return make_element(RingId::integers(), n); }
RingElement make_rat(const Rat &q) { return make_element(RingId::rationals(), q); }

RingElement make_mod(const RingId &r, const Int &n) {
    if (r.kind() != RingKind::IntMod && r.kind() != RingKind::PrimeField)
        throw Error(ErrorKind::WrongRingKind, "make_mod needs a modular ring");
    return make_element(r, n);
}

RingElement make_poly(const RingId &polyring, std::vector<RingElement> coeffs) {
    if (polyring.kind() != RingKind::UniPoly)
        throw Error(ErrorKind::WrongRingKind, "make_poly needs a UniPoly ring");
    return make_element(polyring, UniPolyData{std::move(coeffs)});
}

RingElement make_bipoly(const RingId &r, std::map<std::pair<int, int>, Rat> terms) {
    if (r.kind() != RingKind::BiPolyQ)
        throw Error(ErrorKind::WrongRingKind, "make_bipoly needs a BiPolyQ ring");
    return make_element(r, BiPolyData{std::move(terms)});
}

RingElement make_hahn(const RingId &r,
                      std::vector<std::pair<GroupElement, RingElement>> terms) {
    if (r.kind() != RingKind::HahnVal)
        throw Error(ErrorKind::WrongRingKind, "make_hahn needs a HahnVal ring");
    return make_element(r, HahnData{std::move(terms)});
}

namespace {

void require_same_ring(const RingElement &a, const RingElement &b) {
    if (a.ring() != b.ring())
        throw Error(ErrorKind::RingMismatch, "elements from different rings");
}

} // namespace

RingElement add(const RingElement &a, const RingElement &b) {
    require_same_ring(a, b);
    const RingId &r = a.ring();
    switch (r.kind()) {
    case RingKind::Int:
    case RingKind::IntMod:
    case RingKind::PrimeField:
        return make_element(r, Int(a.as_int() + b.as_int()));
    case RingKind::Rationals:
        return make_element(r, Rat(a.as_rat() + b.as_rat()));
    case RingKind::UniPoly: {
        const auto &ca = a.as_poly().coeffs;
        const auto &cb = b.as_poly().coeffs;
        std::vector<RingElement> out(std::max(ca.size(), cb.size()),
                                     ring_zero(r.base()));
        for (size_t i = 0; i < ca.size(); ++i) out[i] = ca[i];
        for (size_t i = 0; i < cb.size(); ++i) out[i] = add(out[i], cb[i]);
        return make_element(r, UniPolyData{std::move(out)});
    }
    case RingKind::BiPolyQ: {
        BiPolyData d = a.as_bipoly();
        for (const auto &[e, c] : b.as_bipoly().terms) d.terms[e] += c;
        return make_element(r, std::move(d));
    }
    case RingKind::HahnVal: {
        HahnData d = a.as_hahn();
        for (const auto &t : b.as_hahn().terms) d.terms.push_back(t);
        return make_element(r, std::move(d));
    }
    }
    throw Error(ErrorKind::Internal, "add");
}

RingElement neg(const RingElement &a) {
    const RingId &r = a.ring();
    switch (r.kind()) {
    case RingKind::Int:
    case RingKind::IntMod:
    case RingKind::PrimeField:
        return make_element(r, Int(-a.as_int()));
    case RingKind::Rationals:
        return make_element(r, Rat(-a.as_rat()));
    case RingKind::UniPoly: {
        UniPolyData d = a.as_poly();
        for (auto &c : d.coeffs) c = neg(c);
        return make_element(r, std::move(d));
    }
    case RingKind::BiPolyQ: {
        BiPolyData d = a.as_bipoly();
        for (auto &[e, c] : d.terms) c = -c;
        return make_element(r, std::move(d));
    }
    case RingKind::HahnVal: {
        HahnData d = a.as_hahn();
        for (auto &[g, c] : d.terms) c = neg(c);
        return make_element(r, std::move(d));
    }
    }
    throw Error(ErrorKind::Internal, "neg");
}

RingElement sub(const RingElement &a, const RingElement &b) { return add(a, neg(b)); }

RingElement mul(const RingElement &a, const RingElement &b) {
    require_same_ring(a, b);
    const RingId &r = a.ring();
    switch (r.kind()) {
    case RingKind::Int:
    case RingKind::IntMod:
    case RingKind::PrimeField:
        return make_element(r, Int(a.as_int() * b.as_int()));
    case RingKind::Rationals:
        return make_element(r, Rat(a.as_rat() * b.as_rat()));
    case RingKind::UniPoly: {
        const auto &ca = a.as_poly().coeffs;
        const auto &cb = b.as_poly().coeffs;
        if (ca.empty() || cb.empty()) return ring_zero(r);
        std::vector<RingElement> out(ca.size() + cb.size() - 1, ring_zero(r.base()));
        for (size_t i = 0; i < ca.size(); ++i)
            for (size_t j = 0; j < cb.size(); ++j)
                out[i + j] = add(out[i + j], mul(ca[i], cb[j]));
        return make_element(r, UniPolyData{std::move(out)});
    }
    case RingKind::BiPolyQ: {
        BiPolyData d;
        for (const auto &[ea,ca] : a.as_bipoly().terms)
            for (const auto &[eb, cb] : b.as_bipoly().terms)
                d.terms[{ea.first + eb.first, ea.second + eb.second}] += ca * cb;
        return make_element(r, std::move(d));
    }
    case RingKind::HahnVal: {
        HahnData d;
        for (const auto &[ga, ca] : a.as_hahn().terms)
            for (const auto &[gb, cb] : b.as_hahn().terms)
                d.terms.emplace_back(contentlab::add(ga, gb), mul(ca, cb));
        return make_element(r, std::move(d));
    }
    }
    throw Error(ErrorKind::Internal, "mul");
}

RingElement arith(ArithOp op, const RingElement &a, const RingElement &b) {
    switch (op) {
    case ArithOp::Add: return add(a, b);
    case ArithOp::Sub: return sub(a, b);
    case ArithOp::Mul: return mul(a, b);
    case ArithOp::Neg: return neg(a);
    }
    throw Error(ErrorKind::Internal, "arith");
}

RingElement pow_elem(const RingElement &a, unsigned e) {
    RingElement r = ring_one(a.ring());
    RingElement b = a;
    while (e) {
        if (e & 1u) r = mul(r, b);
        b = mul(b, b);
        e >>= 1u;
    }
    return r;
}

bool is_zero(const RingElement &a) {
    switch (a.ring().kind()) {
    case RingKind::Int:
    case RingKind::IntMod:
    case RingKind::PrimeField:
        return a.as_int() == 0;
    case RingKind::Rationals:
        return a.as_rat() == 0;
    case RingKind::UniPoly:
        return a.as_poly().coeffs.empty();
    case RingKind::BiPolyQ:
        return a.as_bipoly().terms.empty();
    case RingKind::HahnVal:
        return a.as_hahn().terms.empty();
    }
    return false;
}

bool is_one(const RingElement &a) { return a == ring_one(a.ring()); }

bool is_nilpotent(const RingElement &a) {
    switch (a.ring().kind()) {
    case RingKind::Int:
    case RingKind::PrimeField:
    case RingKind::Rationals:
    case RingKind::BiPolyQ:
    case RingKind::HahnVal:
        return is_zero(a);
    case RingKind::IntMod: {
        // Nilpotent iff every prime of n divides a; the exponent never needs
        // to exceed the bit length of n.
        const Int &n = a.ring().modulus();
        unsigned bits = boost::multiprecision::msb(n) + 1;
        return pow_mod(a.as_int(), Int(bits), n) == 0;
    }
    case RingKind::UniPoly: {
        for (const auto &c : a.as_poly().coeffs)
            if (!is_nilpotent(c)) return false;
        return true;
    }
    }
    return false;
}

bool is_unit(const RingElement &a) {
    switch (a.ring().kind()) {
    case RingKind::Int:
        return a.as_int() == 1 || a.as_int() == -1;
    case RingKind::IntMod:
        return gcd(a.as_int(), a.ring().modulus()) == 1;
    case RingKind::PrimeField:
        return a.as_int() != 0;
    case RingKind::Rationals:
        return a.as_rat() != 0;
    case RingKind::UniPoly: {
        const auto &cs = a.as_poly().coeffs;
        if (cs.empty()) return false;
        if (!is_unit(cs[0])) return false;
        for (size_t i = 1; i < cs.size(); ++i)
            if (!is_nilpotent(cs[i])) return false;
        return true;
    }
    case RingKind::BiPolyQ: {
        const auto &terms = a.as_bipoly().terms;
        return terms.size() == 1 && terms.begin()->first == std::make_pair(0, 0);
    }
    case RingKind::HahnVal: {
        const auto &terms = a.as_hahn().terms;
        return !terms.empty() && sign_of(terms.front().first) == 0;
    }
    }
    return false;
}

std::optional<GroupElement> valuation(const RingElement &a) {
    if (a.ring().kind() != RingKind::HahnVal)
        throw Error(ErrorKind::WrongRingKind, "valuation needs a HahnVal element");
    const auto &terms = a.as_hahn().terms;
    if (terms.empty()) return std::nullopt;
    return terms.front().first;
}

int poly_degree(const RingElement &a) {
    if (a.ring().kind() != RingKind::UniPoly)
        throw Error(ErrorKind::WrongRingKind, "poly_degree needs a UniPoly element");
    return static_cast<int>(a.as_poly().coeffs.size()) - 1;
}

const std::vector<RingElement> &poly_coeffs(const RingElement &a) {
    return a.as_poly().coeffs;
}

RingElement poly_coeff(const RingElement &a, int i) {
    const auto &cs = a.as_poly().coeffs;
    if (i < 0 || i >= static_cast<int>(cs.size()))
        return ring_zero(a.ring().base());
    return cs[static_cast<size_t>(i)];
}

RingElement poly_leading(const RingElement &a) {
    const auto &cs = a.as_poly().coeffs;
    if (cs.empty())
        throw Error(ErrorKind::PrecondViolated, "leading coefficient of zero");
    return cs.back();
}

int bipoly_total_degree(const RingElement &a) {
    int d = -1;
    for (const auto &[e, c] : a.as_bipoly().terms)
        d = std::max(d, e.first + e.second);
    return d;
}

bool bipoly_homogeneous(const RingElement &a) {
    int d = -1;
    for (const auto &[e, c] : a.as_bipoly().terms) {
        int t = e.first + e.second;
        if (d < 0) d = t;
        if (t != d) return false;
    }
    return true;
}

std::optional<RingElement> exact_div(const RingElement &a, const RingElement &b) {
    require_same_ring(a, b);
    const RingId &r = a.ring();
    if (is_zero(b)) return is_zero(a) ? std::optional<RingElement>(a) : std::nullopt;
    switch (r.kind()) {
    case RingKind::Int: {
        if (a.as_int() % b.as_int() != 0) return std::nullopt;
        return make_element(r, Int(a.as_int() / b.as_int()));
    }
    case RingKind::Rationals:
        return make_element(r, Rat(a.as_rat() / b.as_rat()));
    case RingKind::PrimeField:
        return mul(a, field_inv(b));
    case RingKind::IntMod: {
        // Any x with x*b = a; the smallest lift is returned when one exists.
        const Int &n = r.modulus();
        Int g = gcd(b.as_int(), n);
        if (a.as_int() % g != 0) return std::nullopt;
        Int n1 = n / g;
        Xgcd e = xgcd(b.as_int() / g, n1);
        Int x = ((a.as_int() / g) % n1) * (e.u % n1) % n1;
        if (x < 0) x += n1;
        return make_element(r, x);
    }
    case RingKind::UniPoly: {
        // Top-down long division with exact coefficient quotients.
        const RingId &base = r.base();
        std::vector<RingElement> rem = a.as_poly().coeffs;
        const auto &div = b.as_poly().coeffs;
        int db = static_cast<int>(div.size()) - 1;
        if (static_cast<int>(rem.size()) - 1 < db && !rem.empty()) return std::nullopt;
        std::vector<RingElement> quot(
            rem.size() >= div.size() ? rem.size() - div.size() + 1 : 0,
            ring_zero(base));
        while (static_cast<int>(rem.size()) - 1 >= db) {
            while (!rem.empty() && is_zero(rem.back())) rem.pop_back();
            if (static_cast<int>(rem.size()) - 1 < db) break;
            auto q = exact_div(rem.back(), div.back());
            if (!q) return std::nullopt;
            int shift = static_cast<int>(rem.size()) - 1 - db;
            quot[static_cast<size_t>(shift)] = *q;
            for (int i = 0; i <= db; ++i) {
                size_t idx = static_cast<size_t>(i + shift);
                rem[idx] = sub(rem[idx], mul(*q, div[static_cast<size_t>(i)]));
            }
        }
        for (const auto &c : rem)
            if (!is_zero(c)) return std::nullopt;
        return make_element(r, UniPolyData{std::move(quot)});
    }
    case RingKind::BiPolyQ: {
        const auto &bt = b.as_bipoly().terms;
        if (bt.size() != 1) return std::nullopt; // monomial divisors only
        auto [be, bc] = *bt.begin();
        BiPolyData d;
        for (const auto &[e, c] : a.as_bipoly().terms) {
            int ex = e.first - be.first, ey = e.second - be.second;
            if (ex < 0 || ey < 0) return std::nullopt;
            d.terms[{ex, ey}] = c / bc;
        }
        return make_element(r, std::move(d));
    }
    case RingKind::HahnVal: {
        const auto &bt = b.as_hahn().terms;
        if (bt.size() != 1) return std::nullopt; // single-term divisors only
        auto shifted = hahn_shift_down(a, bt.front().first);
        if (!shifted) return std::nullopt;
        HahnData d = shifted->as_hahn();
        RingElement inv = field_inv(bt.front().second);
        for (auto &[g, c] : d.terms) c = mul(c, inv);
        return make_element(r, std::move(d));
    }
    }
    return std::nullopt;
}

std::pair<RingElement, RingElement> poly_divmod(const RingElement &a,
                                                const RingElement &b) {
    require_same_ring(a, b);
    const RingId &r = a.ring();
    if (r.kind() != RingKind::UniPoly || !r.base().is_field())
        throw Error(ErrorKind::WrongRingKind,
                    "poly_divmod needs field coefficients");
    if (is_zero(b))
        throw Error(ErrorKind::PrecondViolated, "division by zero polynomial");
    std::vector<RingElement> rem = a.as_poly().coeffs;
    const auto &div = b.as_poly().coeffs;
    int db = static_cast<int>(div.size()) - 1;
    RingElement lead_inv = field_inv(div.back());
    std::vector<RingElement> quot(
        rem.size() >= div.size() ? rem.size() - div.size() + 1 : 0,
        ring_zero(r.base()));
    while (static_cast<int>(rem.size()) - 1 >= db) {
        if (is_zero(rem.back())) {
            rem.pop_back();
            continue;
        }
        RingElement q = mul(rem.back(), lead_inv);
        int shift = static_cast<int>(rem.size()) - 1 - db;
        quot[static_cast<size_t>(shift)] = q;
        for (int i = 0; i <= db; ++i) {
            size_t idx = static_cast<size_t>(i + shift);
            rem[idx] = sub(rem[idx], mul(q, div[static_cast<size_t>(i)]));
        }
        rem.pop_back();
    }
    return {make_element(r, UniPolyData{std::move(quot)}),
            make_element(r, UniPolyData{std::move(rem)})};
}

RingElement field_inv(const RingElement &a) {
    if (is_zero(a))
        throw Error(ErrorKind::PrecondViolated, "inverse of zero");
    switch (a.ring().kind()) {
    case RingKind::Rationals:
        return make_element(a.ring(), Rat(Rat(1) / a.as_rat()));
    case RingKind::PrimeField: {
        Xgcd e = xgcd(a.as_int(), a.ring().modulus());
        return make_element(a.ring(), e.u);
    }
    default:
        throw Error(ErrorKind::WrongRingKind, "field_inv needs a field element");
    }
}

RingElement hahn_monomial(const RingId &r, const GroupElement &v) {
    if (r.kind() != RingKind::HahnVal)
        throw Error(ErrorKind::WrongRingKind, "hahn_monomial needs a HahnVal ring");
    HahnData d;
    d.terms.emplace_back(v, ring_one(r.residue()));
    return make_element(r, std::move(d));
}

std::optional<RingElement> hahn_shift_down(const RingElement &a,
                                           const GroupElement &v) {
    if (a.ring().kind() != RingKind::HahnVal)
        throw Error(ErrorKind::WrongRingKind, "hahn_shift_down needs a HahnVal element");
    HahnData d;
    for (const auto &[g, c] : a.as_hahn().terms) {
        if (compare(g, v) == Ordering::LT) return std::nullopt;
        d.terms.emplace_back(sub(g, v), c);
    }
    return make_element(a.ring(), std::move(d));
}

// ---- printing ----

namespace {

bool atomic_text(const std::string &s) { return s.find(' ') == std::string::npos; }

std::string wrap_composite(const std::string &s) {
    return atomic_text(s) ? s : "(" + s + ")";
}

std::string join_terms(const std::vector<std::string> &terms) {
    if (terms.empty()) return "0";
    std::string out = terms.front();
    for (size_t i = 1; i < terms.size(); ++i) {
        const std::string &t = terms[i];
        if (t.size() > 1 && t[0] == '-')
            out += " - " + t.substr(1);
        else
            out += " + " + t;
    }
    return out;
}

bool is_minus_one(const RingElement &c) {
    return c == neg(ring_one(c.ring()));
}

std::string poly_term_text(const RingElement &c, const std::string &var, int k) {
    if (k == 0) return wrap_composite(c.to_text());
    std::string vp = k == 1 ? var : var + "^" + std::to_string(k);
    if (is_one(c)) return vp;
    if (is_minus_one(c)) return "-" + vp;
    return wrap_composite(c.to_text()) + "*" + vp;
}

std::string monomial_text(const std::string &x, int ex, const std::string &y, int ey) {
    std::string out;
    if (ex > 0) out += ex == 1 ? x : x + "^" + std::to_string(ex);
    if (ey > 0) {
        if (!out.empty()) out += "*";
        out += ey == 1 ? y : y + "^" + std::to_string(ey);
    }
    return out;
}

} // namespace

std::string RingElement::to_text() const {
    switch (ring_.kind()) {
    case RingKind::Int:
    case RingKind::IntMod:
    case RingKind::PrimeField:
        return as_int().str();
    case RingKind::Rationals:
        return rat_to_string(as_rat());
    case RingKind::UniPoly: {
        const auto &cs = as_poly().coeffs;
        std::vector<std::string> terms;
        for (size_t i = 0; i < cs.size(); ++i) {
            if (is_zero(cs[i])) continue;
            terms.push_back(poly_term_text(cs[i], ring_.var(), static_cast<int>(i)));
        }
        return join_terms(terms);
    }
    case RingKind::BiPolyQ: {
        std::vector<std::string> terms;
        const auto &m = as_bipoly().terms;
        for (auto it = m.rbegin(); it != m.rend(); ++it) {
            const auto &[e, c] = *it;
            std::string mono = monomial_text(ring_.var_x(), e.first,
                                             ring_.var_y(), e.second);
            if (mono.empty())
                terms.push_back(rat_to_string(c));
            else if (c == 1)
                terms.push_back(mono);
            else if (c == -1)
                terms.push_back("-" + mono);
            else
                terms.push_back(rat_to_string(c) + "*" + mono);
        }
        return join_terms(terms);
    }
    case RingKind::HahnVal: {
        std::vector<std::string> terms;
        for (const auto &[g, c] : as_hahn().terms) {
            if (sign_of(g) == 0) {
                terms.push_back(c.to_text());
                continue;
            }
            std::string mono = "t^" + g.to_string();
            if (is_one(c))
                terms.push_back(mono);
            else if (is_minus_one(c))
                terms.push_back("-" + mono);
            else
                terms.push_back(c.to_text() + "*" + mono);
        }
        return join_terms(terms);
    }
    }
    return "?";
}

// ---- homomorphisms ----

namespace {

RingElement embed_ground(const RingId &target, const RingElement &scalar) {
    switch (scalar.ring().kind()) {
    case RingKind::Int:
    case RingKind::IntMod:
    case RingKind::PrimeField:
        return from_int(target, scalar.as_int());
    case RingKind::Rationals:
        return from_rat(target, scalar.as_rat());
    default:
        throw Error(ErrorKind::UnsupportedOp, "cannot embed non-scalar coefficient");
    }
}

std::uint64_t fnv1a(const std::string &s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

} // namespace

RingHom::RingHom(Rule rule, RingId source, RingId target,
                 std::map<std::string, RingElement> images)
    : rule_(rule), source_(std::move(source)), target_(std::move(target)),
      images_(std::move(images)) {
    self_test();
}

RingHom RingHom::quotient_mod(const RingId &source, const RingId &target) {
    if (source.kind() != RingKind::Int)
        throw Error(ErrorKind::WrongRingKind, "quotient_mod source must be Int");
    if (target.kind() != RingKind::IntMod && target.kind() != RingKind::PrimeField)
        throw Error(ErrorKind::WrongRingKind, "quotient_mod target must be modular");
    return RingHom(Rule::QuotientModInt, source, target, {});
}

RingHom RingHom::coeff_mod(const RingId &source, const RingId &target) {
    if (source.kind() != RingKind::UniPoly || target.kind() != RingKind::UniPoly ||
        source.base().kind() != RingKind::Int ||
        (target.base().kind() != RingKind::IntMod &&
         target.base().kind() != RingKind::PrimeField) ||
        source.var() != target.var())
        throw Error(ErrorKind::WrongRingKind,
                    "coeff_mod maps Int[v] onto a modular coefficient ring in the same variable");
    return RingHom(Rule::CoeffMod, source, target, {});
}

RingHom RingHom::subst(const RingId &source, const RingId &target,
                       std::map<std::string, RingElement> images) {
    if (source.kind() != RingKind::UniPoly && source.kind() != RingKind::BiPolyQ)
        throw Error(ErrorKind::WrongRingKind, "subst source must be polynomial");
    for (const auto &v : source.variables()) {
        auto it = images.find(v);
        if (it == images.end())
            throw Error(ErrorKind::PrecondViolated, "missing image for variable " + v);
        if (it->second.ring() != target)
            throw Error(ErrorKind::RingMismatch, "variable image outside the target ring");
    }
    return RingHom(Rule::Subst, source, target, std::move(images));
}

namespace {

RingId ground_ring(const RingId &r) {
    RingId cur = r;
    while (cur.kind() == RingKind::UniPoly) cur = cur.base();
    return cur;
}

} // namespace

RingHom RingHom::inclusion(const RingId &source, const RingId &target) {
    bool ok = source == target ||
              source.kind() == RingKind::Int ||
              (source.kind() == RingKind::Rationals &&
               (target.kind() == RingKind::BiPolyQ ||
                (target.kind() == RingKind::HahnVal &&
                 target.residue().kind() == RingKind::Rationals) ||
                (target.kind() == RingKind::UniPoly &&
                 ground_ring(target).kind() == RingKind::Rationals))) ||
              (target.kind() == RingKind::UniPoly && source == target.base());
    if (!ok)
        throw Error(ErrorKind::UnsupportedOp, "no canonical inclusion for these rings");
    return RingHom(Rule::Inclusion, source, target, {});
}

RingElement RingHom::apply(const RingElement &a) const {
    if (a.ring() != source_)
        throw Error(ErrorKind::RingMismatch, "hom applied outside its source");
    switch (rule_) {
    case Rule::QuotientModInt:
        return from_int(target_, a.as_int());
    case Rule::CoeffMod: {
        std::vector<RingElement> cs;
        for (const auto &c : a.as_poly().coeffs)
            cs.push_back(from_int(target_.base(), c.as_int()));
        return make_poly(target_, std::move(cs));
    }
    case Rule::Subst: {
        // recursive evaluation over the variable tower
        struct Eval {
            const RingHom &h;
            RingElement operator()(const RingElement &e) const {
                switch (e.ring().kind()) {
                case RingKind::UniPoly: {
                    const RingElement &img = h.images_.at(e.ring().var());
                    RingElement acc = ring_zero(h.target_);
                    const auto &cs = e.as_poly().coeffs;
                    for (size_t i = cs.size(); i-- > 0;)
                        acc = add(mul(acc, img), (*this)(cs[i]));
                    return acc;
                }
                case RingKind::BiPolyQ: {
                    const RingElement &ix = h.images_.at(e.ring().var_x());
                    const RingElement &iy = h.images_.at(e.ring().var_y());
                    RingElement acc = ring_zero(h.target_);
                    for (const auto &[ee, c] : e.as_bipoly().terms) {
                        RingElement term = from_rat(h.target_, c);
                        term = mul(term, pow_elem(ix, static_cast<unsigned>(ee.first)));
                        term = mul(term, pow_elem(iy, static_cast<unsigned>(ee.second)));
                        acc = add(acc, term);
                    }
                    return acc;
                }
                default:
                    return embed_ground(h.target_, e);
                }
            }
        };
        return Eval{*this}(a);
    }
    case Rule::Inclusion: {
        if (source_ == target_) return a;
        if (target_.kind() == RingKind::UniPoly && source_ == target_.base())
            return make_poly(target_, {a});
        if (source_.kind() == RingKind::Int) return from_int(target_, a.as_int());
        return from_rat(target_, a.as_rat());
    }
    }
    throw Error(ErrorKind::Internal, "apply");
}

std::string RingHom::describe() const {
    std::ostringstream os;
    os << source_.to_string() << " -> " << target_.to_string();
    switch (rule_) {
    case Rule::QuotientModInt: os << " (mod " << target_.modulus().str() << ")"; break;
    case Rule::CoeffMod: os << " (coefficients mod " << target_.base().modulus().str() << ")"; break;
    case Rule::Subst: {
        os << " (";
        bool first = true;
        for (const auto &[v, img] : images_) {
            if (!first) os << ", ";
            first = false;
            os << v << " -> " << img.to_text();
        }
        os << ")";
        break;
    }
    case Rule::Inclusion: os << " (inclusion)"; break;
    }
    return os.str();
}

void RingHom::self_test() const {
    SampleBounds bounds;
    bounds.degree = 2;
    bounds.coeff = 4;
    bounds.terms = 2;
    Rng rng(fnv1a(describe()) | 1u);
    RingElement z = apply(ring_zero(source_));
    RingElement o = apply(ring_one(source_));
    if (!is_zero(z) || !is_one(o))
        throw Error(ErrorKind::PrecondViolated,
                    "hom self-test failed on constants: " + describe());
    for (int i = 0; i < 200; ++i) {
        RingElement a = sample_element(source_, rng, bounds);
        RingElement b = sample_element(source_, rng, bounds);
        if (apply(add(a, b)) != add(apply(a), apply(b)) ||
            apply(mul(a, b)) != mul(apply(a), apply(b)))
            throw Error(ErrorKind::PrecondViolated,
                        "hom self-test failed: " + describe());
    }
}

RingElement apply_hom(const RingHom &h, const RingElement &a) { return h.apply(a); }

} // namespace contentlab
