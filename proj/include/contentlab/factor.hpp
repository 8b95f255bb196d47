#pragma once

#include "contentlab/rings.hpp"

#include <utility>
#include <vector>

namespace contentlab {

// Prime powers of |n|, ascending primes; n must be nonzero.
std::vector<std::pair<Int, int>> factor_int(const Int &n);

// Positive divisors of |n|, ascending; n must be nonzero.
std::vector<Int> divisors_of(const Int &n);

// Factorization of a nonzero univariate polynomial over a field base
// (Rationals via integer interpolation, PrimeField by bounded enumeration
// of monic divisors). The factors are monic and irreducible, sorted by
// degree then text; the scalar in front makes the product exact.
struct PolyFactorization {
    RingElement constant;
    std::vector<std::pair<RingElement, int>> factors;
};

PolyFactorization factor_poly(const RingElement &f);

bool poly_irreducible(const RingElement &f);

} // namespace contentlab
