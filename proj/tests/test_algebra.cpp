/*
 * Copyright 2026 The drinfeld-heights Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <map>
#include <random>

#include "doctest.h"
#include "drinfeld/factor.hpp"
#include "drinfeld/parse.hpp"
#include "drinfeld/place.hpp"
#include "test_util.hpp"

using namespace drinfeld;
using namespace testutil;

TEST_CASE("finite fields satisfy x^q = x and have inverses")
{
    for (const FieldPtr& F : {F2(), F3(), F4(), FiniteField::prime(7), FiniteField::extension(3, {2, 2, 1}),
                              FiniteField::extension(2, {1, 1, 0, 1})}) {
        for (std::uint32_t a = 0; a < F->q(); ++a) {
            CHECK(F->pow(Fq{a}, F->q()) == Fq{a});
            if (a != 0) CHECK(F->mul(Fq{a}, F->inv(Fq{a})) == F->one());
            CHECK(F->pow(F->pth_root(Fq{a}), F->p()) == Fq{a});
        }
    }
    CHECK_THROWS_AS(FiniteField::extension(2, {1, 0, 1}), DomainError);  // g^2+1 = (g+1)^2
    CHECK_THROWS_AS(FiniteField::prime(6), DomainError);
}

TEST_CASE("factor: small examples")
{
    const FieldPtr F = F2();
    auto f1 = factor(P(F, {0, 1, 1}));
    REQUIRE(f1.factors.size() == 2);
    CHECK(f1.factors[0].first == P(F, {0, 1}));
    CHECK(f1.factors[1].first == P(F, {1, 1}));
    CHECK(f1.lead == F->one());

    auto f2 = factor(P(F, {0, 1}));
    REQUIRE(f2.factors.size() == 1);
    CHECK(f2.factors[0].second == 1u);

    // t^4 + t^2 + 1 = (t^2 + t + 1)^2; oracle is trial division.
    const Poly f = P(F, {1, 0, 1, 0, 1});
    auto f3 = factor(f);
    REQUIRE(f3.factors.size() == 1);
    CHECK(f3.factors[0].first == P(F, {1, 1, 1}));
    CHECK(f3.factors[0].second == 2u);
    CHECK(f3.factors == brute_factor(f));

    CHECK_THROWS_AS(factor(Poly(F)), DomainError);
}

TEST_CASE("factor agrees with trial division and is multiplicative")
{
    std::mt19937_64 rng(11);
    for (const FieldPtr& F : {F2(), F3(), F4(), FiniteField::prime(5)}) {
        for (int it = 0; it < 40; ++it) {
            const Poly f = random_nonzero_poly(F, 9, rng);
            const Poly g = random_nonzero_poly(F, 7, rng);
            auto ff = factor(f, it);
            CHECK(ff.product(F) == f);
            if (f.degree() >= 1) CHECK(ff.factors == brute_factor(f));
            for (const auto& [p, m] : ff.factors) {
                CHECK(p.is_monic());
                CHECK(brute_irreducible(p));
            }
            // factor(fg) is the multiset union of factor(f) and factor(g).
            std::map<Poly, unsigned> expect;
            for (const auto& [p, m] : ff.factors) expect[p] += m;
            for (const auto& [p, m] : factor(g, it).factors) expect[p] += m;
            std::map<Poly, unsigned> got;
            for (const auto& [p, m] : factor(f * g, it + 1).factors) got[p] += m;
            CHECK(got == expect);
        }
    }
}

TEST_CASE("irreducible enumeration matches the necklace count")
{
    // Number of monic irreducibles of degree n over F_q: (1/n) sum_{k|n} mu(k) q^(n/k).
    CHECK(monic_irreducibles(F2(), 1).size() == 2);
    CHECK(monic_irreducibles(F2(), 4).size() == 3);
    CHECK(monic_irreducibles(F2(), 8).size() == 30);
    CHECK(monic_irreducibles(F3(), 3).size() == 8);
    CHECK(monic_irreducibles(F4(), 2).size() == 6);
    for (const Poly& p : monic_irreducibles(F3(), 4)) CHECK(brute_irreducible(p));
}

TEST_CASE("ord and log_abs examples")
{
    const FieldPtr F = F2();
    const Place pt = Place::finite(P(F, {0, 1}));
    const Place pt1 = Place::finite(P(F, {1, 1}));
    const Place inf = Place::infinity(F);
    const RatFunc x = R(F, {0, 1}, {1, 1});
    CHECK(ord(x, pt) == 1);
    CHECK(ord(x, inf) == 0);
    CHECK(ord(R(F, {1, 0, 1}, {0, 0, 1}), pt1) == 2);
    CHECK(log_abs(x, pt) == LogUnits(-1));
    CHECK(log_abs(R(F, {1}, {0, 1}), pt) == LogUnits(1));
    CHECK(log_abs(x, pt) + log_abs(x, pt1) + log_abs(x, inf) == LogUnits(0));
    CHECK_THROWS_AS(ord(RatFunc(F), pt), DomainError);
    CHECK_THROWS_AS(log_abs(RatFunc(F), inf), DomainError);
}

TEST_CASE("support examples")
{
    const FieldPtr F = F2();
    auto s1 = support(RatFunc::t(F));
    REQUIRE(s1.size() == 2);
    CHECK(s1[0] == Place::finite(P(F, {0, 1})));
    CHECK(s1[1].is_infinite());
    CHECK(support(RatFunc::from_int(F, 1)).empty());
    auto s3 = support(R(F, {1, 0, 1}, {0, 0, 1}));
    REQUIRE(s3.size() == 2);
    CHECK(s3[0] == Place::finite(P(F, {0, 1})));
    CHECK(s3[1] == Place::finite(P(F, {1, 1})));
}

TEST_CASE("weil_height examples, oracle is the sum of positive local parts")
{
    const FieldPtr F = F2();
    auto positive_sum = [](const RatFunc& x) {
        LogUnits s(0);
        std::vector<Place> places = support(x);
        for (const Place& v : places) s += max(log_abs(x, v), LogUnits(0));
        return s;
    };
    const RatFunc x = R(F, {0, 0, 1}, {1, 1});
    CHECK(weil_height(x) == LogUnits(2));
    CHECK(positive_sum(x) == LogUnits(2));
    CHECK(weil_height(RatFunc::from_int(FiniteField::prime(7), 5)) == LogUnits(0));
    CHECK(weil_height(R(F, {1}, {0, 1})) == LogUnits(1));
    CHECK(weil_height(RatFunc(F)) == LogUnits(0));

    std::mt19937_64 rng(5);
    for (int i = 0; i < 100; ++i) {
        const RatFunc y = random_nonzero_ratfunc(F3(), 6, rng);
        CHECK(weil_height(y) == positive_sum(y));
        CHECK(weil_height(y) == weil_height(y.inverse()));
    }
}

TEST_CASE("product formula on random elements")
{
    std::mt19937_64 rng(2026);
    for (const FieldPtr& F : {F2(), F3()}) {
        for (int i = 0; i < 250; ++i) {
            const RatFunc x = random_nonzero_ratfunc(F, 8, rng);
            LogUnits s(0);
            std::vector<Place> places = support(x);
            bool has_inf = false;
            for (const Place& v : places) {
                s += log_abs(x, v);
                has_inf = has_inf || v.is_infinite();
            }
            if (!has_inf) s += log_abs(x, Place::infinity(F));
            CHECK(s.is_zero());
        }
    }
}

TEST_CASE("ord is a valuation")
{
    std::mt19937_64 rng(77);
    const FieldPtr F = F3();
    const std::vector<Place> places = finite_places_up_to(F, 2);
    for (int i = 0; i < 200; ++i) {
        const RatFunc x = random_nonzero_ratfunc(F, 5, rng);
        const RatFunc y = random_nonzero_ratfunc(F, 5, rng);
        for (const Place& v : places) {
            CHECK(ord(x, v) == brute_ord(x, v.poly()));
            CHECK(ord(x * y, v) == ord(x, v) + ord(y, v));
            const RatFunc s = x + y;
            if (s.is_zero()) continue;
            CHECK(ord(s, v) >= std::min(ord(x, v), ord(y, v)));
            if (ord(x, v) != ord(y, v)) CHECK(ord(s, v) == std::min(ord(x, v), ord(y, v)));
        }
        const Place inf = Place::infinity(F);
        CHECK(ord(x * y, inf) == ord(x, inf) + ord(y, inf));
    }
}

TEST_CASE("field axioms for RatFunc on random samples")
{
    std::mt19937_64 rng(3);
    const FieldPtr F = F4();
    for (int i = 0; i < 100; ++i) {
        const RatFunc a = random_ratfunc(F, 4, rng);
        const RatFunc b = random_ratfunc(F, 4, rng);
        const RatFunc c = random_ratfunc(F, 4, rng);
        CHECK((a + b) * c == a * c + b * c);
        CHECK(a - a == RatFunc(F));
        if (!a.is_zero()) CHECK(a * a.inverse() == RatFunc::from_int(F, 1));
        CHECK(a.frobenius(1) == a.pow(4));
        CHECK(a.den().is_monic());
        CHECK(gcd(a.num(), a.den()).is_one());
    }
}

TEST_CASE("parser round trips printed values")
{
    std::mt19937_64 rng(9);
    for (const FieldPtr& F : {F2(), F3(), F4(), FiniteField::extension(3, {2, 2, 1})}) {
        for (int i = 0; i < 100; ++i) {
            const RatFunc x = random_ratfunc(F, 5, rng);
            CHECK(parse_ratfunc(F, x.to_string()) == x);
        }
    }
    const FieldPtr F = F2();
    CHECK(parse_ratfunc(F, "t^2 + t") == R(F, {0, 1, 1}));
    CHECK(parse_ratfunc(F, "(t+1)^2/t^2") == R(F, {1, 0, 1}, {0, 0, 1}));
    CHECK(parse_ratfunc(F, "1/t") == R(F, {1}, {0, 1}));
    CHECK(parse_ratfunc(F3(), "2*t - 1") == R(F3(), {2, 2}));
    CHECK(parse_ratfunc(F4(), "(g+1)*t + g") == RatFunc(Poly(F4(), {Fq{2}, Fq{3}})));
    CHECK(parse_place(F, "inf").is_infinite());
    CHECK(parse_place(F, "t^2+t+1").poly() == P(F, {1, 1, 1}));
    CHECK_THROWS_AS(parse_place(F, "t^2+1"), ParseError);
    CHECK_THROWS_AS(parse_ratfunc(F, "t +* 1"), ParseError);
    CHECK_THROWS_AS(parse_ratfunc(F, "1/(t+t)"), ParseError);
    CHECK_THROWS_AS(parse_ratfunc(F, "g"), ParseError);
    try {
        parse_ratfunc(F, "t + $");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.position() == 4);
    }
    auto places = parse_places(F, "{t, inf, t+1}");
    REQUIRE(places.size() == 3);
    CHECK(places.back().is_infinite());
    CHECK(parse_modulus(2, "g^2+g+1") == std::vector<std::uint32_t>{1, 1, 1});
}
