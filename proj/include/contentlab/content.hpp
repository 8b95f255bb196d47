#pragma once

#include "contentlab/ideals.hpp"
#include "contentlab/rings.hpp"
#include "contentlab/valgroup.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace contentlab {

// A polynomial f = sum a_i X^i over a named base ring, kept as plain
// coefficient data. The extension ring base[X] is never materialized; the
// content maps below only look at the coefficient list, and finite support
// means the same data also reads as a series.
class PolyOverRing {
  public:
    // Trims trailing zeros. Throws RingMismatch if a coefficient lives in
    // a different ring and PrecondViolated if `var` collides with a
    // variable of the base ring.
    static PolyOverRing make(RingId base, std::string var,
                             std::vector<RingElement> coeffs);

    const RingId &base() const { return base_; }
    const std::string &var() const { return var_; }
    const std::vector<RingElement> &coeffs() const { return coeffs_; }

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    std::string to_text() const;

  private:
    PolyOverRing(RingId b, std::string v, std::vector<RingElement> c)
        : base_(std::move(b)), var_(std::move(v)), coeffs_(std::move(c)) {}
    RingId base_;
    std::string var_;
    std::vector<RingElement> coeffs_;
};

// A countably generated monomial ideal of a Hahn ring, recorded by the
// valuation sequence of its generators. Infinite families must be strictly
// positive; finite lists may include zero exponents.
class SeriesDescriptor {
  public:
    // Throws MalformedDescriptor unless `base` is a Hahn ring, the
    // descriptor ranges over its value group, and the values qualify as
    // exponents of ring elements.
    static SeriesDescriptor make(RingId base, SeqDescriptor values);

    const RingId &base() const { return base_; }
    const SeqDescriptor &values() const { return values_; }

    std::string to_text() const;

  private:
    SeriesDescriptor(RingId b, SeqDescriptor v)
        : base_(std::move(b)), values_(std::move(v)) {}
    RingId base_;
    SeqDescriptor values_;
};

// A chain R, R[T], R[T][U] of polynomial extensions named by its base ring
// and the list of adjoined symbols (one or two).
class TowerId {
  public:
    // Throws MalformedTower on an empty or oversized symbol list, repeated
    // symbols, or symbols already used by the base ring.
    static TowerId make(RingId base, std::vector<std::string> vars);

    const RingId &base() const { return base_; }
    const std::vector<std::string> &vars() const { return vars_; }
    std::size_t height() const { return vars_.size() + 1; }

    // level(0) = base, level(i) adjoins the first i symbols.
    RingId level(std::size_t i) const;

    std::string to_text() const;

  private:
    TowerId(RingId b, std::vector<std::string> v)
        : base_(std::move(b)), vars_(std::move(v)) {}
    RingId base_;
    std::vector<std::string> vars_;
};

// Coefficient arithmetic in base[var]. Throws RingMismatch when the two
// operands disagree on base or symbol.
PolyOverRing poly_add(const PolyOverRing &f, const PolyOverRing &g);
PolyOverRing poly_mul(const PolyOverRing &f, const PolyOverRing &g);
PolyOverRing poly_scale(const RingElement &r, const PolyOverRing &f);

// Ideal of the base ring generated by the coefficients; (0) for f = 0.
Ideal poly_content(const PolyOverRing &f);

// Content re-expressed by its normal generators where the base ring has a
// normal form (gcd, monic gcd, value monomial, reduced generator list);
// returns the plain coefficient ideal elsewhere. Agrees with poly_content
// as an ideal in every case.
Ideal orc_poly(const PolyOverRing &f);

// Smallest finitely generated ideal of the Hahn ring containing the
// described monomial family. Exists iff the value sequence has a greatest
// lower bound in the value group, and is then principal at that bound.
std::optional<Ideal> smallest_fg_cover(const SeriesDescriptor &s);

// Content of an integer polynomial viewed at one prime: the p-part
// p^exponent of the content generator, the rest being units locally.
struct LocalizedContent {
    Int prime;      // 0 means the field of fractions
    int exponent;   // localized content = (prime^exponent); 0 when unit
    bool zero;      // f = 0, localized content is the zero ideal
    Ideal global;   // content over the integers, principal normal form

    bool is_unit() const { return !zero && exponent == 0; }
    std::string local_text() const;
};

// Throws WrongRingKind unless f is over the integers and NotPrimeInput
// unless P is zero or a prime. Recomputes the exponent from per-coefficient
// p-adic valuations as an internal consistency check.
LocalizedContent localize_content(const PolyOverRing &f, const Int &P);

// For a three-level tower and f = sum h_i U^i with h_i in R[T]: the content
// of f taken directly over R (all R-coefficients of all h_i) and the content
// taken in two stages (sum over i of the R-content of h_i). Both are ideals
// of the tower base and are expected to coincide.
std::pair<Ideal, Ideal> compose_content(const TowerId &tower,
                                        const PolyOverRing &f);

} // namespace contentlab
