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

#include <random>

#include "doctest.h"
#include "drinfeld/drinfeld.hpp"
#include "drinfeld/parse.hpp"
#include "test_util.hpp"

using namespace drinfeld;
using namespace testutil;

TEST_CASE("tw_mul examples")
{
    const FieldPtr F = F2();
    const RatFunc a = R(F, {1, 1}, {0, 0, 1});
    const TwistedPoly tau = TwistedPoly::monomial(RatFunc::from_int(F, 1), 1);
    CHECK(tw_mul(tau, TwistedPoly::scalar(a)) == TwistedPoly::monomial(a.pow(2), 1));

    const DrinfeldModule C = DrinfeldModule::carlitz(F);
    // (t x + x^2) composed with itself: t^2 x + (t + t^2) x^2 + x^4.
    const TwistedPoly expect(F, {R(F, {0, 0, 1}), R(F, {0, 1, 1}), R(F, {1})});
    CHECK(tw_mul(C.phi_t(), C.phi_t()) == expect);
    const TwistedPoly one = TwistedPoly::scalar(RatFunc::from_int(F, 1));
    CHECK(tw_mul(C.phi_t(), one) == C.phi_t());
    CHECK(tw_mul(one, C.phi_t()) == C.phi_t());
}

TEST_CASE("phi_of examples")
{
    const FieldPtr F = F2();
    const DrinfeldModule C = DrinfeldModule::carlitz(F);
    CHECK(phi_of(C, P(F, {0, 0, 1})) == tw_mul(C.phi_t(), C.phi_t()));
    CHECK(phi_of(C, P(F, {1})) == TwistedPoly::scalar(RatFunc::from_int(F, 1)));
    CHECK(phi_of(C, P(F, {1, 1})) == C.phi_t() + TwistedPoly::scalar(RatFunc::from_int(F, 1)));
    CHECK(phi_of(C, Poly(F)).is_zero());

    const FieldPtr G = F3();
    const DrinfeldModule C3 = DrinfeldModule::carlitz(G);
    CHECK(phi_of(C3, P(G, {2})) == TwistedPoly::scalar(RatFunc::from_int(G, 2)));
}

TEST_CASE("gamma examples")
{
    const FieldPtr F = F2();
    const DrinfeldModule C = DrinfeldModule::carlitz(F);
    CHECK(gamma(C, P(F, {1, 1, 0, 1})) == RatFunc::from_int(F, 1));
    const DrinfeldModule M(F, {RatFunc::t(F), RatFunc::t(F), R(F, {1, 1})});
    const Poly Q = P(F, {0, 0, 1});
    CHECK(gamma(M, Q) == R(F, {1, 1}).pow(5));
    CHECK(gamma(M, Q) == phi_of(M, Q).lead());
    CHECK(gamma_exponent(2, 2, 2) == 5);
    CHECK(gamma(M, P(F, {1})) == RatFunc::from_int(F, 1));
    const FieldPtr G = F3();
    CHECK(gamma(DrinfeldModule::carlitz(G), P(G, {1, 2})) == RatFunc::from_int(G, 2));
    CHECK_THROWS_AS(gamma(C, Poly(F)), DomainError);
}

TEST_CASE("evaluate examples")
{
    const FieldPtr F = F2();
    const DrinfeldModule C = DrinfeldModule::carlitz(F);
    CHECK(C.phi_t().evaluate(RatFunc::t(F)).is_zero());
    CHECK(C.phi_t().evaluate(R(F, {1}, {0, 1})) == R(F, {1, 0, 1}, {0, 0, 1}));
    CHECK(C.phi_t().evaluate(RatFunc(F)).is_zero());
}

TEST_CASE("module construction validates a_0 = t")
{
    const FieldPtr F = F2();
    CHECK_THROWS_AS(DrinfeldModule(F, {R(F, {1, 1}), R(F, {1})}), DomainError);
    CHECK_THROWS_AS(DrinfeldModule(F, {RatFunc::t(F)}), DomainError);
    CHECK_THROWS_AS(DrinfeldModule(F, {RatFunc::t(F), R(F, {1}), RatFunc(F)}), DomainError);
    const DrinfeldModule M(F, {RatFunc::t(F), R(F, {1}, {1, 1}), R(F, {0, 1})});
    REQUIRE(M.bad_places().size() == 2);
    CHECK(M.bad_places()[0].poly() == P(F, {0, 1}));
    CHECK(M.bad_places()[1].poly() == P(F, {1, 1}));
}

TEST_CASE("normalize_integral")
{
    const FieldPtr F = F2();
    const DrinfeldModule C = DrinfeldModule::carlitz(F);
    auto n0 = normalize_integral(C);
    CHECK(n0.conjugator.is_one());
    CHECK(n0.module == C);
    CHECK(n0.module.normalized());

    const DrinfeldModule M(F, {RatFunc::t(F), R(F, {1}, {0, 1})});
    auto n1 = normalize_integral(M);
    CHECK(n1.conjugator == RatFunc::t(F));
    CHECK(n1.module.coeff(1) == RatFunc::from_int(F, 1));
    CHECK(n1.module.is_integral());

    // Conjugation intertwines: psi_Q(gamma^-1 x) = gamma^-1 phi_Q(x), and k is minimal.
    std::mt19937_64 rng(4);
    for (int it = 0; it < 30; ++it) {
        const FieldPtr G = it % 2 ? F3() : F2();
        const DrinfeldModule N = random_module(G, 1 + it % 2, 2, true, rng);
        auto nn = normalize_integral(N);
        CHECK(nn.module.is_integral());
        const RatFunc x = random_ratfunc(G, 3, rng);
        const Poly Q = random_monic(G, 2, rng);
        CHECK(apply(nn.module, Q, x / nn.conjugator) == apply(N, Q, x) / nn.conjugator);
        if (!nn.conjugator.is_one()) {
            // One fewer power of B leaves something non-integral.
            Poly B = Poly::constant(G, G->one());
            for (const auto& [p, m] : factor(nn.conjugator.num()).factors) B *= p;
            const RatFunc smaller = nn.conjugator / RatFunc(B);
            bool all_integral = true;
            for (unsigned i = 1; i <= N.rank(); ++i) {
                const RatFunc c = N.coeff(i) * smaller.frobenius(i) / smaller;
                all_integral = all_integral && c.is_polynomial();
            }
            CHECK_FALSE(all_integral);
        }
    }
}

TEST_CASE("good_reduction examples")
{
    const FieldPtr F = F2();
    const DrinfeldModule C = DrinfeldModule::carlitz(F);
    const Place pt = Place::finite(P(F, {0, 1}));
    const Place pt1 = Place::finite(P(F, {1, 1}));
    CHECK(good_reduction(C, pt));
    const DrinfeldModule M(F, {RatFunc::t(F), RatFunc::t(F)});
    CHECK_FALSE(good_reduction(M, pt));
    CHECK(good_reduction(M, pt1));
    CHECK(good_reduction(M, Place::finite(P(F, {1, 1, 1}))));
    const DrinfeldModule N(F, {RatFunc::t(F), R(F, {1}, {1, 1}), R(F, {1})});
    CHECK_FALSE(good_reduction(N, pt1));
    CHECK_THROWS_AS(good_reduction(C, Place::infinity(F)), DomainError);
}

TEST_CASE("reduce examples")
{
    const FieldPtr F = F2();
    const DrinfeldModule C = DrinfeldModule::carlitz(F);
    const ResidueModule R1 = reduce(C, Place::finite(P(F, {1, 1})));
    CHECK(R1.degree() == 1u);
    CHECK(R1.coeffs()[0] == P(F, {1}));
    CHECK(R1.coeffs()[1] == P(F, {1}));
    const ResidueModule R2 = reduce(C, Place::finite(P(F, {1, 1, 1})));
    CHECK(R2.degree() == 2u);
    CHECK(R2.coeffs()[0] == P(F, {0, 1}));
    CHECK(R2.coeffs()[1] == P(F, {1}));
    const DrinfeldModule M(F, {RatFunc::t(F), RatFunc::t(F)});
    CHECK_THROWS_AS(reduce(M, Place::finite(P(F, {0, 1}))), DomainError);
    const FieldPtr G = F3();
    const DrinfeldModule K(G, {RatFunc::t(G), RatFunc::from_int(G, 2), RatFunc::from_int(G, 1)});
    const ResidueModule R3 = reduce(K, Place::finite(P(G, {1, 1})));
    CHECK(R3.coeffs()[1] == P(G, {2}));
}

TEST_CASE("homomorphism, additivity and gamma on random modules")
{
    std::mt19937_64 rng(100);
    for (int it = 0; it < 40; ++it) {
        const FieldPtr F = it % 3 == 0 ? F2() : (it % 3 == 1 ? F3() : F4());
        const unsigned d = 1 + static_cast<unsigned>(it % 2);
        const DrinfeldModule M = random_module(F, d, 2, true, rng);
        const Poly A = random_monic(F, 1, rng);
        const Poly B = random_monic(F, 1, rng);
        CHECK(phi_of(M, A * B) == tw_mul(phi_of(M, A), phi_of(M, B)));
        CHECK(phi_of(M, A + B) == phi_of(M, A) + phi_of(M, B));
        CHECK(phi_of(M, A * B).degree() == static_cast<int>(d * 2));
        CHECK(phi_of(M, A * B).coeff(0) == RatFunc(A * B));
        CHECK(gamma(M, A * B) == phi_of(M, A * B).lead());
        const RatFunc x = random_ratfunc(F, 2, rng);
        const RatFunc y = random_ratfunc(F, 2, rng);
        const Fq c = random_fq(F, rng);
        const TwistedPoly f = phi_of(M, A);
        CHECK(f.evaluate(x + y) == f.evaluate(x) + f.evaluate(y));
        CHECK(f.evaluate(RatFunc::constant(F, c) * x) == RatFunc::constant(F, c) * f.evaluate(x));
        CHECK(f.evaluate(x) == naive_phi(M, A, x));
        CHECK(apply(M, A, x) == f.evaluate(x));
    }
}

TEST_CASE("reduction commutes with evaluation")
{
    std::mt19937_64 rng(8);
    for (int it = 0; it < 40; ++it) {
        const FieldPtr F = it % 2 ? F3() : F2();
        const DrinfeldModule M = random_module(F, 1 + static_cast<unsigned>(it % 2), 2, true, rng);
        for (const Place& v : finite_places_up_to(F, 2)) {
            if (!good_reduction(M, v)) continue;
            const ResidueModule Rv = reduce(M, v);
            const RatFunc x = RatFunc(random_poly(F, 4, rng));
            const Poly Q = random_monic(F, 2, rng);
            CHECK(Rv.reduce(apply(M, Q, x)) == Rv.apply(Q, Rv.reduce(x)));
        }
    }
}

TEST_CASE("module literals parse")
{
    const FieldPtr F = F4();
    const DrinfeldModule M(F, {parse_ratfunc(F, "t"), parse_ratfunc(F, "g*t"), parse_ratfunc(F, "1/(t+g)")});
    CHECK(M.rank() == 2u);
    REQUIRE(M.bad_places().size() == 1);
    CHECK(M.bad_places()[0] == parse_place(F, "t+g"));
}
