#include "contentlab/sampling.hpp"

#include "contentlab/errors.hpp"

namespace contentlab {

namespace {

Int sample_mod_value(const Int &n, Rng &rng) {
    if (n <= (1LL << 62))
        return Int(rng.range(0, n.convert_to<long long>() - 1));
    return Int(rng.next()) % n;
}

} // namespace

GroupElement sample_nonneg_group_elem(const GroupId &group, Rng &rng, long bound) {
    switch (group.kind()) {
    case GroupKind::Integers:
        return group_element(group, {Int(rng.range(0, bound))});
    case GroupKind::LexTuples: {
        // First coordinate nonnegative keeps the tuple lex-nonnegative.
        std::vector<Int> coords;
        coords.push_back(Int(rng.range(0, bound)));
        for (int i = 1; i < group.rank(); ++i)
            coords.push_back(Int(coords[0] == 0 ? rng.range(0, bound)
                                                : rng.range(-bound, bound)));
        return group_element(group, std::move(coords));
    }
    case GroupKind::QuadDense:
        // Both coordinates nonnegative is a sufficient positivity condition.
        return group_element(group, {Int(rng.range(0, bound)),
                                     Int(rng.range(0, bound))});
    }
    throw Error(ErrorKind::Internal, "sample_nonneg_group_elem");
}

RingElement sample_element(const RingId &ring, Rng &rng, const SampleBounds &bounds) {
    switch (ring.kind()) {
    case RingKind::Int:
        return make_element(ring, Int(rng.range(-bounds.coeff, bounds.coeff)));
    case RingKind::IntMod:
    case RingKind::PrimeField:
        return make_element(ring, sample_mod_value(ring.modulus(), rng));
    case RingKind::Rationals: {
        Int num(rng.range(-bounds.coeff, bounds.coeff));
        Int den(rng.range(1, std::max(1L, bounds.coeff)));
        return make_element(ring, Rat(num, den));
    }
    case RingKind::UniPoly: {
        int deg = static_cast<int>(rng.range(0, bounds.degree));
        std::vector<RingElement> cs;
        for (int i = 0; i <= deg; ++i)
            cs.push_back(sample_element(ring.base(), rng, bounds));
        return make_poly(ring, std::move(cs));
    }
    case RingKind::BiPolyQ: {
        int k = static_cast<int>(rng.range(0, bounds.terms));
        std::map<std::pair<int, int>, Rat> terms;
        for (int i = 0; i < k; ++i) {
            int ex = static_cast<int>(rng.range(0, bounds.degree));
            int ey = static_cast<int>(rng.range(0, bounds.degree));
            Int num(rng.range(-bounds.coeff, bounds.coeff));
            Int den(rng.range(1, 3));
            terms[{ex, ey}] += Rat(num, den);
        }
        return make_bipoly(ring, std::move(terms));
    }
    case RingKind::HahnVal: {
        int k = static_cast<int>(rng.range(0, bounds.terms));
        std::vector<std::pair<GroupElement, RingElement>> terms;
        for (int i = 0; i < k; ++i) {
            GroupElement g = sample_nonneg_group_elem(ring.group(), rng, bounds.coeff);
            terms.emplace_back(std::move(g),
                               sample_nonzero(ring.residue(), rng, bounds));
        }
        return make_hahn(ring, std::move(terms));
    }
    }
    throw Error(ErrorKind::Internal, "sample_element");
}

RingElement sample_nonzero(const RingId &ring, Rng &rng, const SampleBounds &bounds) {
    for (int i = 0; i < 64; ++i) {
        RingElement e = sample_element(ring, rng, bounds);
        if (!is_zero(e)) return e;
    }
    return ring_one(ring);
}

} // namespace contentlab
