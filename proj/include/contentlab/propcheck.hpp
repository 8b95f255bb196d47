#pragma once

#include "contentlab/content.hpp"
#include "contentlab/ideals.hpp"
#include "contentlab/verdict.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace contentlab {

// Search and sampling limits for the property checkers. Every verdict that
// sampled or searched under these limits records them in its evidence, so a
// report always states the box it was produced in.
struct SearchBounds {
    int degree = 6;    // max polynomial degree for sampled/searched elements
    long coeff = 9;    // scalar coefficients drawn from [-coeff, coeff]
    int samples = 500; // sampled cases per check
    int powbound = 6;  // radical membership power limit
    int bound = 6;     // cofactor degree limit for two-variable membership

    nlohmann::json to_json() const;
};

// Trace of the search for the least n with
//   content(f)^n * content(g) = content(f)^(n-1) * content(fg).
// `exponent` is empty when no n <= max_tried settles it; per_n keeps the
// equality verdict for each n that was examined.
struct DMReport {
    std::optional<int> exponent;
    int max_tried = 0;
    std::vector<std::pair<int, PropertyVerdict>> per_n;

    nlohmann::json to_json() const;
};

// Least multiplier exponent for the pair, testing each n in turn. Throws
// RingMismatch when f and g disagree on the base ring.
DMReport dm_exponent(const PolyOverRing &f, const PolyOverRing &g, int max_n,
                     const SearchBounds &sb = {});

// Does content(fg) = content(f) * content(g) hold for this pair.
PropertyVerdict check_gaussian(const PolyOverRing &f, const PolyOverRing &g,
                               const SearchBounds &sb = {});

// Does every generator of content(f) * content(g) lie in the radical of
// content(fg), with powers searched up to sb.powbound.
PropertyVerdict check_weak_content_pair(const PolyOverRing &f,
                                        const PolyOverRing &g,
                                        const SearchBounds &sb = {});

// For prime P in a base ring R: does P extended to R[T] stay prime. The
// structural argument (the quotient stays a domain) is recorded, and a
// sampled search for a zero-divisor pair cross-checks it. Throws
// NotPrimeInput carrying the disproof when P is not prime.
PropertyVerdict check_prime_extension(const Ideal &P, const SearchBounds &sb = {},
                                      std::uint64_t seed = 1);

// For primary Q over Int or a field polynomial ring: does Q extended to
// base[T] stay primary. Sampled pairs look for fg in the extension with f
// outside its radical and g outside the extension. Throws NotPrimaryInput
// carrying the disproof when Q is not primary.
PropertyVerdict check_primary_extension(const Ideal &Q,
                                        const SearchBounds &sb = {},
                                        std::uint64_t seed = 1);

// A multiplier t outside P with t * content(g) inside content(fg), searched
// among 1, generators of powers of content(f), and small scalars. Empty
// only when the search box is exhausted; never a disproof. Throws
// PrecondViolated when content(f) lies inside P.
std::optional<RingElement> semicontent_witness(const Ideal &P,
                                               const PolyOverRing &f,
                                               const PolyOverRing &g,
                                               const SearchBounds &sb = {});

// Classification of series content over the value group: Holds means every
// finite-support content is as small as possible (the group is order-
// isomorphic to the integers), Fails carries a concrete generator family
// whose smallest finitely generated cover does not exist.
PropertyVerdict valuation_verdict(const GroupId &g);

// Random towers R -> R[T] -> R[T][U] over Int and PrimeField(5): two-stage
// contents agree with flattened contents, product contents agree along both
// routes, and prime extensions survive both levels.
PropertyVerdict transitivity_suite(std::uint64_t seed, int n_cases,
                                   const SearchBounds &sb = {});

// Gaussian behavior of base[T] over bases with principal finitely generated
// ideals (Int, field polynomials, Hahn rings): every sampled pair must
// multiply contents exactly. Over the two-variable base the suite returns
// the canonical failing pair instead.
PropertyVerdict pruefer_gauss_suite(const RingId &base, int n_pairs,
                                    std::uint64_t seed,
                                    const SearchBounds &sb = {});

} // namespace contentlab
