#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "contentlab/errors.hpp"
#include "contentlab/factor.hpp"
#include "contentlab/sampling.hpp"

using namespace contentlab;

namespace {

RingId QX() { return RingId::uni_poly(RingId::rationals(), "x"); }
RingId FPX(long p) { return RingId::uni_poly(RingId::prime_field(Int(p)), "x"); }

RingElement qpoly(std::vector<Rat> cs) {
    std::vector<RingElement> coeffs;
    for (const Rat &c : cs) coeffs.push_back(make_rat(c));
    return make_poly(QX(), std::move(coeffs));
}

RingElement fpoly(long p, std::vector<long> cs) {
    RingId r = FPX(p);
    std::vector<RingElement> coeffs;
    for (long c : cs) coeffs.push_back(make_mod(r.base(), Int(c)));
    return make_poly(r, std::move(coeffs));
}

// Re-multiplication oracle: the factorization data must reproduce the input
// exactly.
void check_product(const RingElement &f, const PolyFactorization &fac) {
    RingElement prod = fac.constant;
    for (const auto &[h, m] : fac.factors) {
        CHECK(poly_degree(h) >= 1);
        CHECK(is_one(poly_leading(h)));
        CHECK(m >= 1);
        prod = mul(prod, pow_elem(h, static_cast<unsigned>(m)));
    }
    CHECK(prod == f);
}

// Independent root test for monic rational polynomials of degree 2 or 3:
// reducible over Q exactly when a rational root exists, and candidate roots
// are read off the primitive integer form.
bool has_rational_root(const RingElement &f) {
    Int den = 1;
    for (const auto &c : poly_coeffs(f)) den = lcm(den, rat_den(c.as_rat()));
    std::vector<Int> zs;
    for (const auto &c : poly_coeffs(f)) zs.push_back(rat_num(Rat(c.as_rat() * Rat(den))));
    Int g = 0;
    for (const Int &c : zs) g = gcd(g, c);
    for (Int &c : zs) c /= g;
    if (zs.front() == 0) return true;
    auto eval = [&](const Rat &x) {
        Rat acc(0);
        for (size_t i = zs.size(); i-- > 0;) acc = acc * x + Rat(zs[i]);
        return acc == 0;
    };
    for (const Int &p : divisors_of(zs.front()))
        for (const Int &q : divisors_of(zs.back())) {
            if (eval(Rat(p, q)) || eval(Rat(-p, q))) return true;
        }
    return false;
}

// Independent irreducibility check over a small prime field by direct
// remainder tests against every smaller monic divisor candidate.
bool fp_irreducible_brute(const RingElement &h) {
    const RingId &ring = h.ring();
    long p = ring.base().modulus().convert_to<long>();
    int deg = poly_degree(h);
    for (int d = 1; 2 * d <= deg; ++d) {
        long total = 1;
        for (int i = 0; i < d; ++i) total *= p;
        for (long code = 0; code < total; ++code) {
            std::vector<RingElement> cs;
            long c = code;
            for (int i = 0; i < d; ++i) {
                cs.push_back(make_mod(ring.base(), Int(c % p)));
                c /= p;
            }
            cs.push_back(ring_one(ring.base()));
            auto [q, rem] = poly_divmod(h, make_poly(ring, cs));
            if (is_zero(rem)) return false;
        }
    }
    return true;
}

} // namespace

TEST_CASE("integer factorization and divisor listing") {
    auto f360 = factor_int(Int(360));
    REQUIRE(f360.size() == 3);
    CHECK(f360[0] == std::make_pair(Int(2), 3));
    CHECK(f360[1] == std::make_pair(Int(3), 2));
    CHECK(f360[2] == std::make_pair(Int(5), 1));
    CHECK(factor_int(Int(97)) == std::vector<std::pair<Int, int>>{{Int(97), 1}});
    CHECK(factor_int(Int(1)).empty());
    auto fm12 = factor_int(Int(-12));
    REQUIRE(fm12.size() == 2);
    CHECK(fm12[0] == std::make_pair(Int(2), 2));
    CHECK(fm12[1] == std::make_pair(Int(3), 1));
    CHECK(divisors_of(Int(12)) ==
          std::vector<Int>{Int(1), Int(2), Int(3), Int(4), Int(6), Int(12)});
    CHECK_THROWS_AS(factor_int(Int(0)), Error);

    // product and primality invariants on a random stream
    Rng rng(0xFAC70001);
    for (int i = 0; i < 200; ++i) {
        Int n(rng.range(2, 100000));
        Int prod = 1;
        for (const auto &[p, e] : factor_int(n)) {
            CHECK(is_prime_int(p));
            for (int k = 0; k < e; ++k) prod *= p;
        }
        CHECK(prod == n);
    }
}

TEST_CASE("rational polynomial factorization matches hand results") {
    RingElement x2m1 = qpoly({Rat(-1), Rat(0), Rat(1)});
    auto fac = factor_poly(x2m1);
    check_product(x2m1, fac);
    REQUIRE(fac.factors.size() == 2);
    CHECK(fac.factors[0].first == qpoly({Rat(-1), Rat(1)}));
    CHECK(fac.factors[1].first == qpoly({Rat(1), Rat(1)}));

    RingElement x2p1 = qpoly({Rat(1), Rat(0), Rat(1)});
    auto fac2 = factor_poly(x2p1);
    check_product(x2p1, fac2);
    REQUIRE(fac2.factors.size() == 1);
    CHECK(fac2.factors[0].second == 1);
    CHECK(poly_irreducible(x2p1));
    CHECK_FALSE(poly_irreducible(x2m1));
    CHECK_FALSE(poly_irreducible(qpoly({Rat(5)})));

    // x^2 * (x - 1) keeps its multiplicities
    RingElement f3 = qpoly({Rat(0), Rat(0), Rat(-1), Rat(1)});
    auto fac3 = factor_poly(f3);
    check_product(f3, fac3);
    REQUIRE(fac3.factors.size() == 2);
    // ties in degree break by text, and "-1 + x" sorts before "x"
    CHECK(fac3.factors[0].first == qpoly({Rat(-1), Rat(1)}));
    CHECK(fac3.factors[0].second == 1);
    CHECK(fac3.factors[1].first == qpoly({Rat(0), Rat(1)}));
    CHECK(fac3.factors[1].second == 2);

    // 6x^2 + 7x + 2 = 6 (x + 1/2)(x + 2/3)
    RingElement f4 = qpoly({Rat(2), Rat(7), Rat(6)});
    auto fac4 = factor_poly(f4);
    check_product(f4, fac4);
    REQUIRE(fac4.factors.size() == 2);
    CHECK(fac4.constant == qpoly({Rat(6)}));
    CHECK(fac4.factors[0].first == qpoly({Rat(1, 2), Rat(1)}));
    CHECK(fac4.factors[1].first == qpoly({Rat(2, 3), Rat(1)}));

    // (x^2 + x + 1)^2
    RingElement base = qpoly({Rat(1), Rat(1), Rat(1)});
    RingElement f5 = mul(base, base);
    auto fac5 = factor_poly(f5);
    check_product(f5, fac5);
    REQUIRE(fac5.factors.size() == 1);
    CHECK(fac5.factors[0].first == base);
    CHECK(fac5.factors[0].second == 2);

    CHECK_THROWS_AS(factor_poly(ring_zero(QX())), Error);
    RingId zt = RingId::uni_poly(RingId::integers(), "T");
    CHECK_THROWS_AS(factor_poly(ring_one(zt)), Error);
}

TEST_CASE("prime field factorization matches hand results") {
    RingElement a = fpoly(2, {1, 1, 1});
    CHECK(poly_irreducible(a));
    RingElement b = fpoly(2, {1, 0, 1}); // x^2 + 1 = (x + 1)^2 over F2
    auto facb = factor_poly(b);
    check_product(b, facb);
    REQUIRE(facb.factors.size() == 1);
    CHECK(facb.factors[0].first == fpoly(2, {1, 1}));
    CHECK(facb.factors[0].second == 2);

    RingElement c = fpoly(2, {0, 1, 0, 0, 1}); // x^4 + x = x(x+1)(x^2+x+1)
    auto facc = factor_poly(c);
    check_product(c, facc);
    REQUIRE(facc.factors.size() == 3);
    CHECK(facc.factors[0].first == fpoly(2, {1, 1}));
    CHECK(facc.factors[1].first == fpoly(2, {0, 1}));
    CHECK(facc.factors[2].first == fpoly(2, {1, 1, 1}));

    CHECK(poly_irreducible(fpoly(5, {3, 0, 1}))); // x^2 - 2, 2 is not a square mod 5
    auto fac5 = factor_poly(fpoly(5, {4, 0, 1})); // x^2 - 1 = (x+1)(x+4)
    check_product(fpoly(5, {4, 0, 1}), fac5);
    REQUIRE(fac5.factors.size() == 2);
    CHECK(fac5.factors[0].first == fpoly(5, {1, 1}));
    CHECK(fac5.factors[1].first == fpoly(5, {4, 1}));
}

TEST_CASE("random rational polynomials factor into irreducibles") {
    SampleBounds bounds;
    bounds.degree = 5;
    bounds.coeff = 8;
    Rng rng(0xFAC70002);
    for (int i = 0; i < 200; ++i) {
        RingElement f = sample_nonzero(QX(), rng, bounds);
        auto fac = factor_poly(f);
        check_product(f, fac);
        for (const auto &[h, m] : fac.factors) {
            int d = poly_degree(h);
            if (d == 2 || d == 3)
                CHECK_FALSE(has_rational_root(h));
        }
    }
    // random polynomials are usually irreducible, so force composite
    // inputs to exercise the splitting path
    SampleBounds small;
    small.degree = 2;
    small.coeff = 5;
    for (int i = 0; i < 80; ++i) {
        RingElement g = sample_nonzero(QX(), rng, small);
        RingElement h = sample_nonzero(QX(), rng, small);
        while (poly_degree(g) < 1) g = sample_nonzero(QX(), rng, small);
        while (poly_degree(h) < 1) h = sample_nonzero(QX(), rng, small);
        RingElement f = mul(g, h);
        auto fac = factor_poly(f);
        check_product(f, fac);
        int count = 0;
        for (const auto &[fc, m] : fac.factors) count += m;
        CHECK(count >= 2);
    }
}

TEST_CASE("random prime field polynomials factor into irreducibles") {
    SampleBounds bounds;
    bounds.degree = 4;
    bounds.coeff = 9;
    for (long p : {2L, 3L, 5L}) {
        Rng rng(0xFAC70003 + static_cast<unsigned long long>(p));
        for (int i = 0; i < 150; ++i) {
            RingElement f = sample_nonzero(FPX(p), rng, bounds);
            auto fac = factor_poly(f);
            check_product(f, fac);
            for (const auto &[h, m] : fac.factors)
                CHECK(fp_irreducible_brute(h));
        }
    }
}
