#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace contentlab {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int gcd(const Int &a, const Int &b) { return boost::multiprecision::gcd(a, b); }
inline Int lcm(const Int &a, const Int &b) { return boost::multiprecision::lcm(a, b); }
inline Int abs(const Int &a) { return boost::multiprecision::abs(a); }

struct Xgcd {
    Int g; // gcd(a, b), nonnegative
    Int u; // u*a + v*b = g
    Int v;
};

Xgcd xgcd(const Int &a, const Int &b);

// Largest s with s*s <= n. Requires n >= 0.
Int isqrt(const Int &n);

Int pow_int(const Int &base, unsigned exp);

// a^e mod m, m >= 2, e >= 0.
Int pow_mod(Int a, Int e, const Int &m);

// Deterministic trial-division primality, adequate for desk-scale inputs.
bool is_prime_int(const Int &n);

std::string rat_to_string(const Rat &r);
Rat num(const Rat &r);
Rat den(const Rat &r);
Int rat_num(const Rat &r);
Int rat_den(const Rat &r);

// Floor of a rational as an integer.
Int rat_floor(const Rat &r);

// Deterministic 64-bit mix used to derive per-case seeds.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index);

// Small deterministic generator (xorshift-star family). Distribution code
// in <random> is not byte-stable across platforms, so bounded draws are
// done by hand everywhere determinism matters.
class Rng {
  public:
    explicit Rng(std::uint64_t seed);
    std::uint64_t next();
    // Uniform in [lo, hi], inclusive. Requires lo <= hi.
    long long range(long long lo, long long hi);

  private:
    std::uint64_t state_;
};

} // namespace contentlab
