#include "contentlab/numeric.hpp"

#include <stdexcept>

namespace contentlab {

Xgcd xgcd(const Int &a, const Int &b) {
    // Invariant: r0 = s0*a + t0*b and r1 = s1*a + t1*b.
    Int r0 = a, r1 = b;
    Int s0 = 1, s1 = 0;
    Int t0 = 0, t1 = 1;
    while (r1 != 0) {
        Int q = r0 / r1;
        Int r2 = r0 - q * r1;
        Int s2 = s0 - q * s1;
        Int t2 = t0 - q * t1;
        r0 = r1; r1 = r2;
        s0 = s1; s1 = s2;
        t0 = t1; t1 = t2;
    }
    if (r0 < 0) { r0 = -r0; s0 = -s0; t0 = -t0; }
    return {r0, s0, t0};
}

Int isqrt(const Int &n) {
    if (n < 0) throw std::invalid_argument("isqrt of negative");
    if (n < 2) return n;
    Int x = n, y = (x + 1) / 2;
    while (y < x) {
        x = y;
        y = (x + n / x) / 2;
    }
    return x;
}

Int pow_int(const Int &base, unsigned exp) {
    Int r = 1, b = base;
    while (exp) {
        if (exp & 1u) r *= b;
        b *= b;
        exp >>= 1u;
    }
    return r;
}

Int pow_mod(Int a, Int e, const Int &m) {
    a %= m;
    if (a < 0) a += m;
    Int r = 1 % m;
    while (e > 0) {
        if ((e & 1) != 0) r = (r * a) % m;
        a = (a * a) % m;
        e >>= 1;
    }
    return r;
}

bool is_prime_int(const Int &n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    if (n % 3 == 0) return n == 3;
    Int i = 5;
    while (i * i <= n) {
        if (n % i == 0 || n % (i + 2) == 0) return false;
        i += 6;
    }
    return true;
}

std::string rat_to_string(const Rat &r) {
    Int n = boost::multiprecision::numerator(r);
    Int d = boost::multiprecision::denominator(r);
    if (d == 1) return n.str();
    return n.str() + "/" + d.str();
}

Int rat_num(const Rat &r) { return boost::multiprecision::numerator(r); }
Int rat_den(const Rat &r) { return boost::multiprecision::denominator(r); }

Int rat_floor(const Rat &r) {
    Int n = rat_num(r), d = rat_den(r);
    Int q = n / d;
    if (n % d != 0 && n < 0) q -= 1;
    return q;
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
    // splitmix64 finalizer over the combined word.
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

Rng::Rng(std::uint64_t seed) : state_(seed ? seed : 0x853c49e6748fea9bULL) {}

std::uint64_t Rng::next() {
    // xorshift64*
    std::uint64_t x = state_;
    x ^= x >> 12;
    x ^= x << 25;
    x ^= x >> 27;
    state_ = x;
    return x * 0x2545f4914f6cdd1dULL;
}

long long Rng::range(long long lo, long long hi) {
    if (lo > hi) throw std::invalid_argument("Rng::range: empty interval");
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1u;
    return lo + static_cast<long long>(next() % span);
}

} // namespace contentlab
