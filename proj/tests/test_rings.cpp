#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "contentlab/errors.hpp"
#include "contentlab/rings.hpp"
#include "contentlab/sampling.hpp"

using namespace contentlab;

namespace {

RingId ZT() { return RingId::uni_poly(RingId::integers(), "T"); }
RingId ZTU() { return RingId::uni_poly(ZT(), "U"); }
RingId QX() { return RingId::uni_poly(RingId::rationals(), "x"); }
RingId QXY() { return RingId::bi_poly_q("x", "y"); }

RingElement ipoly(const RingId &r, std::vector<long> cs) {
    std::vector<RingElement> coeffs;
    for (long c : cs) coeffs.push_back(from_int(r.base(), Int(c)));
    return make_poly(r, std::move(coeffs));
}

std::vector<RingId> all_rings() {
    return {RingId::integers(),
            RingId::rationals(),
            RingId::integers_mod(Int(6)),
            RingId::integers_mod(Int(4)),
            RingId::prime_field(Int(5)),
            ZT(),
            RingId::uni_poly(RingId::integers_mod(Int(4)), "T"),
            QX(),
            ZTU(),
            QXY(),
            RingId::hahn(GroupId::integers(), RingId::rationals()),
            RingId::hahn(GroupId::lex(2), RingId::prime_field(Int(5))),
            RingId::hahn(GroupId::quad(2), RingId::rationals())};
}

} // namespace

TEST_CASE("ring ids validate their parameters and print stable names") {
    CHECK_THROWS_AS(RingId::integers_mod(Int(1)), Error);
    CHECK_THROWS_AS(RingId::prime_field(Int(6)), Error);
    CHECK_THROWS_AS(RingId::uni_poly(QXY(), "z"), Error);
    CHECK_THROWS_AS(RingId::uni_poly(ZT(), "T"), Error);
    CHECK_THROWS_AS(RingId::uni_poly(RingId::integers(), "t"), Error);
    CHECK_THROWS_AS(RingId::uni_poly(RingId::integers(), "2x"), Error);
    CHECK_THROWS_AS(RingId::bi_poly_q("x", "x"), Error);
    CHECK_THROWS_AS(RingId::hahn(GroupId::integers(), RingId::integers()), Error);
    // nesting depth tops out at 3
    RingId d3 = RingId::uni_poly(ZTU(), "V");
    CHECK_THROWS_AS(RingId::uni_poly(d3, "W"), Error);

    CHECK(RingId::integers().to_string() == "Int");
    CHECK(RingId::rationals().to_string() == "Q");
    CHECK(RingId::integers_mod(Int(6)).to_string() == "Mod(6)");
    CHECK(RingId::prime_field(Int(5)).to_string() == "Fp(5)");
    CHECK(ZTU().to_string() == "Int[T][U]");
    CHECK(QXY().to_string() == "Q[x,y]");
    CHECK(RingId::hahn(GroupId::integers(), RingId::rationals()).to_string() ==
          "Hahn(Z,Q)");
    CHECK(RingId::hahn(GroupId::lex(2), RingId::prime_field(Int(5))).to_string() ==
          "Hahn(LexZ(2),Fp(5))");

    CHECK(ZT() == ZT());
    CHECK(ZT() != RingId::uni_poly(RingId::integers(), "U"));
    CHECK(RingId::integers_mod(Int(6)) != RingId::integers_mod(Int(7)));
    CHECK(RingId::integers_mod(Int(7)) != RingId::prime_field(Int(7)));

    CHECK(RingId::integers().is_domain());
    CHECK(RingId::integers_mod(Int(7)).is_domain());
    CHECK_FALSE(RingId::integers_mod(Int(6)).is_domain());
    CHECK(QX().is_domain());
    CHECK_FALSE(RingId::uni_poly(RingId::integers_mod(Int(4)), "T").is_domain());
    CHECK(RingId::prime_field(Int(5)).is_field());
    CHECK_FALSE(RingId::integers_mod(Int(6)).is_field());
}

TEST_CASE("ring axioms hold on random triples in every supported ring") {
    SampleBounds bounds;
    bounds.degree = 3;
    bounds.coeff = 7;
    bounds.terms = 3;
    for (const RingId &r : all_rings()) {
        Rng rng(0x5EED0001);
        RingElement zero = ring_zero(r);
        RingElement one = ring_one(r);
        CHECK(is_zero(zero));
        CHECK(is_one(one));
        for (int i = 0; i < 200; ++i) {
            RingElement a = sample_element(r, rng, bounds);
            RingElement b = sample_element(r, rng, bounds);
            RingElement c = sample_element(r, rng, bounds);
            CHECK(add(a, b) == add(b, a));
            CHECK(add(add(a, b), c) == add(a, add(b, c)));
            CHECK(add(a, zero) == a);
            CHECK(is_zero(add(a, neg(a))));
            CHECK(mul(a, b) == mul(b, a));
            CHECK(mul(mul(a, b), c) == mul(a, mul(b, c)));
            CHECK(mul(a, one) == a);
            CHECK(mul(a, add(b, c)) == add(mul(a, b), mul(a, c)));
            CHECK(sub(a, b) == add(a, neg(b)));
        }
    }
}

TEST_CASE("construction canonicalizes payloads") {
    // trailing zero coefficients are trimmed
    RingId zt = ZT();
    CHECK(ipoly(zt, {1, 2, 0, 0}) == ipoly(zt, {1, 2}));
    CHECK(poly_degree(ipoly(zt, {1, 2, 0, 0})) == 1);
    CHECK(poly_degree(ring_zero(zt)) == -1);
    CHECK(is_zero(ipoly(zt, {0, 0})));

    // modular values land in [0, n)
    RingId m6 = RingId::integers_mod(Int(6));
    CHECK(make_mod(m6, Int(-5)) == make_mod(m6, Int(1)));
    CHECK(make_mod(m6, Int(13)) == make_mod(m6, Int(1)));

    // bivariate zero coefficients disappear
    RingId qxy = QXY();
    std::map<std::pair<int, int>, Rat> tz;
    tz[{1, 1}] = 0;
    CHECK(is_zero(make_bipoly(qxy, tz)));
    std::map<std::pair<int, int>, Rat> tneg;
    tneg[{-1, 0}] = 1;
    CHECK_THROWS_AS(make_bipoly(qxy, tneg), Error);

    // Hahn terms merge, sort, and drop zeros
    RingId hz = RingId::hahn(GroupId::integers(), RingId::rationals());
    GroupElement g0 = group_zero(GroupId::integers());
    GroupElement g2 = group_element(GroupId::integers(), {Int(2)});
    RingElement half = make_rat(Rat(1, 2));
    RingElement merged = make_hahn(hz, {{g0, half}, {g2, make_rat(Rat(3))},
                                        {g0, half}});
    CHECK(merged == make_hahn(hz, {{g2, make_rat(Rat(3))}, {g0, make_rat(Rat(1))}}));
    RingElement cancel = make_hahn(hz, {{g2, make_rat(Rat(1))},
                                        {g2, make_rat(Rat(-1))}});
    CHECK(is_zero(cancel));

    // exponents below zero and mismatched component rings are rejected
    GroupElement gneg = group_element(GroupId::integers(), {Int(-1)});
    CHECK_THROWS_AS(make_hahn(hz, {{gneg, make_rat(Rat(1))}}), Error);
    CHECK_THROWS_AS(make_hahn(hz, {{g0, make_int(Int(1))}}), Error);
    GroupElement wrong = group_element(GroupId::lex(2), {Int(1), Int(0)});
    CHECK_THROWS_AS(make_hahn(hz, {{wrong, make_rat(Rat(1))}}), Error);
    CHECK_THROWS_AS(make_poly(zt, {make_rat(Rat(1))}), Error);
}

TEST_CASE("canonical text forms") {
    CHECK(make_int(Int(-12)).to_text() == "-12");
    CHECK(make_rat(Rat(3, 4)).to_text() == "3/4");
    CHECK(make_rat(Rat(-3, 4)).to_text() == "-3/4");

    RingId zt = ZT();
    CHECK(ipoly(zt, {2, 4}).to_text() == "2 + 4*T");
    CHECK(ipoly(zt, {1, -1}).to_text() == "1 - T");
    CHECK(ipoly(zt, {0, 0, -1}).to_text() == "-T^2");
    CHECK(ring_zero(zt).to_text() == "0");
    CHECK(ipoly(zt, {0, 3}).to_text() == "3*T");

    // nested coefficients with inner structure get wrapped
    RingId ztu = ZTU();
    RingElement c0 = ipoly(zt, {-2, 1});          // -2 + T
    RingElement c1 = ipoly(zt, {0, 1});           // T
    RingElement f = make_poly(ztu, {c0, c1});
    CHECK(f.to_text() == "(-2 + T) + T*U");

    RingId qxy = QXY();
    std::map<std::pair<int, int>, Rat> t1;
    t1[{2, 0}] = 1;
    t1[{1, 1}] = 1;
    CHECK(make_bipoly(qxy, t1).to_text() == "x^2 + x*y");
    std::map<std::pair<int, int>, Rat> t2;
    t2[{1, 1}] = Rat(1, 2);
    t2[{0, 0}] = -2;
    CHECK(make_bipoly(qxy, t2).to_text() == "1/2*x*y - 2");

    RingId hlex = RingId::hahn(GroupId::lex(2), RingId::rationals());
    GroupElement e03 = group_element(GroupId::lex(2), {Int(0), Int(3)});
    GroupElement e10 = group_element(GroupId::lex(2), {Int(1), Int(0)});
    RingElement h = make_hahn(hlex, {{e10, make_rat(Rat(1))},
                                     {e03, make_rat(Rat(2))}});
    CHECK(h.to_text() == "2*t^(0,3) + t^(1,0)");

    RingId hz = RingId::hahn(GroupId::integers(), RingId::rationals());
    GroupElement g0 = group_zero(GroupId::integers());
    GroupElement g2 = group_element(GroupId::integers(), {Int(2)});
    RingElement h2 = make_hahn(hz, {{g0, make_rat(Rat(3))},
                                    {g2, make_rat(Rat(-1))}});
    CHECK(h2.to_text() == "3 - t^(2)");

    // printed form only depends on the value, not on construction order
    RingElement h3 = add(make_hahn(hz, {{g2, make_rat(Rat(-1))}}),
                         make_hahn(hz, {{g0, make_rat(Rat(3))}}));
    CHECK(h3.to_text() == h2.to_text());
}

TEST_CASE("units and nilpotents") {
    CHECK(is_unit(make_int(Int(1))));
    CHECK(is_unit(make_int(Int(-1))));
    CHECK_FALSE(is_unit(make_int(Int(2))));
    CHECK_FALSE(is_unit(make_int(Int(0))));

    RingId m6 = RingId::integers_mod(Int(6));
    CHECK(is_unit(make_mod(m6, Int(5))));
    CHECK_FALSE(is_unit(make_mod(m6, Int(2))));
    CHECK_FALSE(is_nilpotent(make_mod(m6, Int(2))));
    CHECK_FALSE(is_nilpotent(make_mod(m6, Int(3))));

    RingId m8 = RingId::integers_mod(Int(8));
    CHECK(is_nilpotent(make_mod(m8, Int(2))));
    CHECK(is_nilpotent(make_mod(m8, Int(6))));
    CHECK_FALSE(is_nilpotent(make_mod(m8, Int(3))));
    RingId m12 = RingId::integers_mod(Int(12));
    CHECK(is_nilpotent(make_mod(m12, Int(6))));
    CHECK_FALSE(is_nilpotent(make_mod(m12, Int(2))));

    // over Z/4 the polynomial 1 + 2T is its own inverse
    RingId m4t = RingId::uni_poly(RingId::integers_mod(Int(4)), "T");
    RingElement u = ipoly(m4t, {1, 2});
    CHECK(is_unit(u));
    CHECK(mul(u, u) == ring_one(m4t));
    CHECK(is_nilpotent(ipoly(m4t, {0, 2})));
    CHECK_FALSE(is_unit(ipoly(m4t, {1, 1})));
    CHECK_FALSE(is_unit(ipoly(ZT(), {1, 1})));

    RingId qx = QX();
    CHECK(is_unit(from_int(qx, Int(5))));
    CHECK_FALSE(is_unit(add(from_int(qx, Int(5)),
                            make_poly(qx, {ring_zero(RingId::rationals()),
                                           ring_one(RingId::rationals())}))));

    RingId qxy = QXY();
    CHECK(is_unit(from_rat(qxy, Rat(3, 2))));
    std::map<std::pair<int, int>, Rat> tx;
    tx[{1, 0}] = 1;
    CHECK_FALSE(is_unit(make_bipoly(qxy, tx)));
}

TEST_CASE("a Hahn unit admits geometric series approximate inverses") {
    // 1/(2+t) = sum (-1)^i t^i / 2^(i+1); the truncation at degree k leaves
    // an error term of valuation exactly k+1. This pins down both the unit
    // test and series multiplication.
    RingId hz = RingId::hahn(GroupId::integers(), RingId::rationals());
    GroupId z = GroupId::integers();
    RingElement two_plus_t =
        make_hahn(hz, {{group_zero(z), make_rat(Rat(2))},
                       {group_element(z, {Int(1)}), make_rat(Rat(1))}});
    CHECK(is_unit(two_plus_t));
    CHECK_FALSE(is_unit(hahn_monomial(hz, group_element(z, {Int(1)}))));
    CHECK_FALSE(is_unit(ring_zero(hz)));

    for (int k = 0; k <= 6; ++k) {
        std::vector<std::pair<GroupElement, RingElement>> terms;
        Rat c(1, 2);
        for (int i = 0; i <= k; ++i) {
            terms.emplace_back(group_element(z, {Int(i)}), make_rat(c));
            c = -c / 2;
        }
        RingElement approx = make_hahn(hz, terms);
        RingElement err = sub(mul(two_plus_t, approx), ring_one(hz));
        auto v = valuation(err);
        REQUIRE(v.has_value());
        CHECK(*v == group_element(z, {Int(k + 1)}));
        CHECK(err.as_hahn().terms.size() == 1);
    }
}

TEST_CASE("valuation is additive and ultrametric") {
    std::vector<RingId> hahns = {
        RingId::hahn(GroupId::integers(), RingId::rationals()),
        RingId::hahn(GroupId::lex(2), RingId::prime_field(Int(7))),
        RingId::hahn(GroupId::quad(2), RingId::rationals())};
    SampleBounds bounds;
    bounds.coeff = 5;
    bounds.terms = 4;
    for (const RingId &r : hahns) {
        Rng rng(0x5EED0002);
        int nontrivial = 0;
        for (int i = 0; i < 500; ++i) {
            RingElement f = sample_nonzero(r, rng, bounds);
            RingElement g = sample_nonzero(r, rng, bounds);
            auto vf = valuation(f), vg = valuation(g), vfg = valuation(mul(f, g));
            REQUIRE(vf.has_value());
            REQUIRE(vg.has_value());
            REQUIRE(vfg.has_value());
            CHECK(*vfg == add(*vf, *vg));
            RingElement s = add(f, g);
            if (!is_zero(s)) {
                GroupElement lo = compare(*vf, *vg) == Ordering::LT ? *vf : *vg;
                CHECK(compare(*valuation(s), lo) != Ordering::LT);
                if (compare(*vf, *vg) != Ordering::EQ) {
                    CHECK(*valuation(s) == lo);
                    ++nontrivial;
                }
            }
        }
        CHECK(nontrivial > 100);
    }
    CHECK_THROWS_AS(valuation(make_int(Int(3))), Error);
    CHECK_FALSE(valuation(ring_zero(hahns[0])).has_value());
}

TEST_CASE("degrees add over domain coefficients") {
    std::vector<RingId> rings = {ZT(), QX(),
                                 RingId::uni_poly(RingId::prime_field(Int(5)), "T")};
    SampleBounds bounds;
    for (const RingId &r : rings) {
        Rng rng(0x5EED0003);
        for (int i = 0; i < 300; ++i) {
            RingElement f = sample_nonzero(r, rng, bounds);
            RingElement g = sample_nonzero(r, rng, bounds);
            CHECK(poly_degree(mul(f, g)) == poly_degree(f) + poly_degree(g));
        }
    }
    // with zero divisors in the coefficients the degree can collapse
    RingId m4t = RingId::uni_poly(RingId::integers_mod(Int(4)), "T");
    CHECK(poly_degree(mul(ipoly(m4t, {0, 2}), ipoly(m4t, {0, 2}))) == -1);
}

TEST_CASE("exact division inverts multiplication and certifies its output") {
    SampleBounds bounds;
    bounds.degree = 3;
    bounds.coeff = 6;
    // in domains, (a*b)/b recovers a
    std::vector<RingId> domains = {RingId::integers(), RingId::rationals(),
                                   RingId::prime_field(Int(7)), ZT(), QX(), ZTU()};
    for (const RingId &r : domains) {
        Rng rng(0x5EED0004);
        for (int i = 0; i < 150; ++i) {
            RingElement a = sample_element(r, rng, bounds);
            RingElement b = sample_nonzero(r, rng, bounds);
            auto q = exact_div(mul(a, b), b);
            REQUIRE(q.has_value());
            CHECK(*q == a);
        }
    }
    // whenever a quotient comes back, multiplying back gives the dividend
    for (const RingId &r : all_rings()) {
        Rng rng(0x5EED0005);
        int successes = 0;
        for (int i = 0; i < 150; ++i) {
            RingElement a = sample_element(r, rng, bounds);
            RingElement b = sample_element(r, rng, bounds);
            auto q = exact_div(a, b);
            if (q) {
                CHECK(mul(*q, b) == a);
                ++successes;
            }
        }
        CHECK(successes > 0);
    }
    // known non-divisible pairs
    CHECK_FALSE(exact_div(make_int(Int(7)), make_int(Int(2))).has_value());
    CHECK_FALSE(exact_div(ipoly(ZT(), {1, 0, 1}), ipoly(ZT(), {0, 1})).has_value());
    CHECK_FALSE(exact_div(ipoly(ZT(), {0, 1}), ipoly(ZT(), {0, 2})).has_value());
    // Z/6: 2x = 4 is solvable even though 2 is a zero divisor
    RingId m6 = RingId::integers_mod(Int(6));
    auto qm = exact_div(make_mod(m6, Int(4)), make_mod(m6, Int(2)));
    REQUIRE(qm.has_value());
    CHECK(mul(*qm, make_mod(m6, Int(2))) == make_mod(m6, Int(4)));
    CHECK_FALSE(exact_div(make_mod(m6, Int(3)), make_mod(m6, Int(2))).has_value());

    // Hahn division by a monomial is a support shift
    RingId hq = RingId::hahn(GroupId::quad(2), RingId::rationals());
    Rng rng(0x5EED0006);
    for (int i = 0; i < 100; ++i) {
        RingElement f = sample_element(hq, rng, bounds);
        GroupElement v = sample_nonneg_group_elem(GroupId::quad(2), rng, 4);
        RingElement m = hahn_monomial(hq, v);
        auto q = exact_div(mul(f, m), m);
        REQUIRE(q.has_value());
        CHECK(*q == f);
    }
    GroupElement one_exp = group_element(GroupId::quad(2), {Int(1), Int(0)});
    CHECK_FALSE(hahn_shift_down(ring_one(hq), one_exp).has_value());
}

TEST_CASE("polynomial division over fields leaves a smaller remainder") {
    std::vector<RingId> rings = {QX(),
                                 RingId::uni_poly(RingId::prime_field(Int(5)), "T")};
    SampleBounds bounds;
    for (const RingId &r : rings) {
        Rng rng(0x5EED0007);
        for (int i = 0; i < 200; ++i) {
            RingElement a = sample_element(r, rng, bounds);
            RingElement b = sample_nonzero(r, rng, bounds);
            auto [q, rem] = poly_divmod(a, b);
            CHECK(add(mul(q, b), rem) == a);
            CHECK(poly_degree(rem) < poly_degree(b));
        }
    }
    CHECK_THROWS_AS(poly_divmod(ipoly(ZT(), {1}), ipoly(ZT(), {2})), Error);
    CHECK_THROWS_AS(poly_divmod(ring_one(QX()), ring_zero(QX())), Error);
}

TEST_CASE("powers expand binomially") {
    RingElement p = pow_elem(ipoly(ZT(), {1, 1}), 5);
    CHECK(p == ipoly(ZT(), {1, 5, 10, 10, 5, 1}));
    CHECK(is_one(pow_elem(ipoly(ZT(), {0, 3}), 0)));
}

TEST_CASE("canonical scalar images") {
    RingId m6 = RingId::integers_mod(Int(6));
    CHECK(from_int(m6, Int(13)) == make_mod(m6, Int(1)));
    CHECK(from_int(ZTU(), Int(-3)).to_text() == "-3");
    CHECK(from_rat(QXY(), Rat(1, 2)).to_text() == "1/2");
    CHECK(from_rat(ZT(), Rat(4, 2)) == ipoly(ZT(), {2}));
    CHECK_THROWS_AS(from_rat(RingId::integers(), Rat(1, 2)), Error);
    CHECK_THROWS_AS(from_rat(ZT(), Rat(1, 2)), Error);
    RingId hz5 = RingId::hahn(GroupId::integers(), RingId::prime_field(Int(5)));
    CHECK(from_int(hz5, Int(7)).to_text() == "2");
}

TEST_CASE("homomorphisms apply by rule and refuse bad wiring") {
    RingId f7 = RingId::prime_field(Int(7));
    RingHom redmod = RingHom::quotient_mod(RingId::integers(), f7);
    CHECK(redmod.apply(make_int(Int(23))) == make_mod(f7, Int(2)));
    CHECK(redmod.apply(make_int(Int(-3))) == make_mod(f7, Int(4)));

    RingId m6t = RingId::uni_poly(RingId::integers_mod(Int(6)), "T");
    RingHom cmod = RingHom::coeff_mod(ZT(), m6t);
    CHECK(cmod.apply(ipoly(ZT(), {7, 8})) == ipoly(m6t, {1, 2}));

    // substitution x -> w, y -> w^2 sends x^2 + x*y to w^2 + w^3
    RingId qw = RingId::uni_poly(RingId::rationals(), "w");
    RingElement w = make_poly(qw, {ring_zero(RingId::rationals()),
                                   ring_one(RingId::rationals())});
    std::map<std::string, RingElement> im;
    im["x"] = w;
    im["y"] = mul(w, w);
    RingHom sub2 = RingHom::subst(QXY(), qw, im);
    std::map<std::pair<int, int>, Rat> t1;
    t1[{2, 0}] = 1;
    t1[{1, 1}] = 1;
    CHECK(sub2.apply(make_bipoly(QXY(), t1)) == ipoly(qw, {0, 0, 1, 1}));

    std::map<std::string, RingElement> ev;
    ev["T"] = make_int(Int(3));
    RingHom at3 = RingHom::subst(ZT(), RingId::integers(), ev);
    CHECK(at3.apply(ipoly(ZT(), {2, 1, 1})) == make_int(Int(14)));

    // nested tower evaluation T -> 2, U -> 5
    std::map<std::string, RingElement> ev2;
    ev2["T"] = make_int(Int(2));
    ev2["U"] = make_int(Int(5));
    RingHom flat = RingHom::subst(ZTU(), RingId::integers(), ev2);
    RingElement tpoly = make_poly(ZTU(), {ipoly(ZT(), {0, 1}), ipoly(ZT(), {0, 1})});
    CHECK(flat.apply(tpoly) == make_int(Int(12))); // T + T*U at (2, 5)

    RingId hz = RingId::hahn(GroupId::integers(), RingId::rationals());
    RingHom inc = RingHom::inclusion(RingId::integers(), hz);
    CHECK(inc.apply(make_int(Int(5))) == from_int(hz, Int(5)));
    RingHom constpoly = RingHom::inclusion(ZT(), ZTU());
    CHECK(constpoly.apply(ipoly(ZT(), {0, 1})) == make_poly(ZTU(), {ipoly(ZT(), {0, 1})}));

    CHECK_THROWS_AS(RingHom::quotient_mod(RingId::rationals(), f7), Error);
    CHECK_THROWS_AS(RingHom::coeff_mod(ZT(), RingId::uni_poly(
                        RingId::integers_mod(Int(6)), "U")), Error);
    CHECK_THROWS_AS(RingHom::subst(ZT(), RingId::integers(), {}), Error);
    CHECK_THROWS_AS(RingHom::inclusion(f7, RingId::rationals()), Error);
    CHECK_THROWS_AS(redmod.apply(make_rat(Rat(1))), Error);

    // a substitution image in the wrong ring is refused up front
    std::map<std::string, RingElement> bad;
    bad["T"] = make_rat(Rat(1));
    CHECK_THROWS_AS(RingHom::subst(ZT(), RingId::integers(), bad), Error);
}

TEST_CASE("hom structural checks hold on fresh samples") {
    // beyond the construction-time self test, spot check additivity and
    // multiplicativity on an independent stream
    RingId f7 = RingId::prime_field(Int(7));
    RingHom redmod = RingHom::quotient_mod(RingId::integers(), f7);
    std::map<std::string, RingElement> ev;
    ev["T"] = make_int(Int(-2));
    RingHom at = RingHom::subst(ZT(), RingId::integers(), ev);
    SampleBounds bounds;
    Rng rng(0x5EED0008);
    for (int i = 0; i < 300; ++i) {
        RingElement a = sample_element(RingId::integers(), rng, bounds);
        RingElement b = sample_element(RingId::integers(), rng, bounds);
        CHECK(redmod.apply(mul(a, b)) == mul(redmod.apply(a), redmod.apply(b)));
        RingElement f = sample_element(ZT(), rng, bounds);
        RingElement g = sample_element(ZT(), rng, bounds);
        CHECK(at.apply(mul(f, g)) == mul(at.apply(f), at.apply(g)));
        CHECK(at.apply(add(f, g)) == add(at.apply(f), at.apply(g)));
    }
}
