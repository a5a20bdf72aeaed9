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

#include "drinfeld/factor.hpp"

#include <algorithm>
#include <map>
#include <random>

namespace drinfeld {

namespace {

std::vector<unsigned> prime_divisors(unsigned n)
{
    std::vector<unsigned> out;
    for (unsigned d = 2; d * d <= n; ++d) {
        if (n % d) continue;
        out.push_back(d);
        while (n % d == 0) n /= d;
    }
    if (n > 1) out.push_back(n);
    return out;
}

// x^(q^k) mod f by k successive q-th powers.
Poly frobenius_mod(const Poly& x, unsigned k, const Poly& f)
{
    Poly r = x % f;
    const mpz_class q = f.field().q();
    for (unsigned i = 0; i < k; ++i) r = pow_mod(r, q, f);
    return r;
}

void trial_division(const Poly& f, std::map<Poly, unsigned>& out)
{
    Poly rest = f;
    const FieldPtr& F = f.field_ptr();
    for (unsigned k = 1; 2 * k <= static_cast<unsigned>(rest.degree()); ++k) {
        for (const Poly& d : monic_polys_of_degree(F, k)) {
            while (rest.degree() >= static_cast<int>(k)) {
                auto [qt, r] = divmod(rest, d);
                if (!r.is_zero()) break;
                out[d] += 1;
                rest = std::move(qt);
            }
        }
    }
    if (rest.degree() > 0) out[rest.monic()] += 1;
}

std::vector<std::pair<Poly, unsigned>> distinct_degree(const Poly& f)
{
    std::vector<std::pair<Poly, unsigned>> out;
    const FieldPtr& F = f.field_ptr();
    const Poly t = Poly::t(F);
    Poly rest = f;
    Poly h = t % rest;
    for (unsigned i = 1; 2 * i <= static_cast<unsigned>(rest.degree()); ++i) {
        h = frobenius_mod(h, 1, rest);
        Poly g = gcd(h - t, rest);
        if (!g.is_one()) {
            out.emplace_back(g, i);
            rest = rest / g;
            h = h % rest;
        }
    }
    if (rest.degree() > 0) out.emplace_back(rest.monic(), static_cast<unsigned>(rest.degree()));
    return out;
}

Poly random_poly(const FieldPtr& F, int below_degree, std::mt19937_64& rng)
{
    std::uniform_int_distribution<std::uint32_t> dist(0, F->q() - 1);
    std::vector<Fq> c(static_cast<std::size_t>(below_degree));
    for (auto& x : c) x = Fq{dist(rng)};
    return Poly(F, std::move(c));
}

void equal_degree(const Poly& g, unsigned k, std::mt19937_64& rng, std::vector<Poly>& out)
{
    if (g.degree() == static_cast<int>(k)) {
        out.push_back(g.monic());
        return;
    }
    const FieldPtr& F = g.field_ptr();
    const bool even = F->p() == 2;
    mpz_class q = F->q();
    mpz_class qk;
    mpz_pow_ui(qk.get_mpz_t(), q.get_mpz_t(), k);
    const mpz_class half = (qk - 1) / 2;
    const Poly one = Poly::constant(F, F->one());
    for (;;) {
        Poly a = random_poly(F, g.degree(), rng);
        if (a.degree() < 1) continue;
        Poly b(F);
        if (even) {
            // Absolute trace to F_2 of the degree-k residue ring.
            const unsigned steps = F->e() * k;
            Poly term = a % g;
            b = term;
            for (unsigned i = 1; i < steps; ++i) {
                term = mul_mod(term, term, g);
                b += term;
            }
        } else {
            b = pow_mod(a, half, g) - one;
        }
        Poly d = gcd(b, g);
        if (d.degree() > 0 && d.degree() < g.degree()) {
            equal_degree(d, k, rng, out);
            equal_degree(g / d, k, rng, out);
            return;
        }
    }
}

}  // namespace

Poly Factorization::product(const FieldPtr& field) const
{
    Poly r = Poly::constant(field, lead);
    for (const auto& [P, m] : factors) r = r * pow(P, m);
    return r;
}

std::vector<std::pair<Poly, unsigned>> squarefree_decomposition(const Poly& f)
{
    std::vector<std::pair<Poly, unsigned>> out;
    if (f.degree() <= 0) return out;
    const unsigned p = f.field().p();
    Poly c = gcd(f, f.derivative());
    Poly w = f.monic() / c;
    unsigned i = 1;
    while (!w.is_one()) {
        Poly y = gcd(w, c);
        Poly fac = w / y;
        if (fac.degree() > 0) out.emplace_back(fac.monic(), i);
        w = y;
        c = c / y;
        ++i;
    }
    if (c.degree() > 0) {
        for (auto& [g, j] : squarefree_decomposition(c.monic().pth_root())) out.emplace_back(g, j * p);
    }
    return out;
}

Factorization factor(const Poly& f, std::uint64_t seed)
{
    if (f.is_zero()) throw DomainError("cannot factor the zero polynomial");
    Factorization res{f.lead(), {}};
    if (f.degree() == 0) return res;
    std::map<Poly, unsigned> acc;
    const Poly m = f.monic();
    if (m.degree() < 4) {
        trial_division(m, acc);
    } else {
        std::mt19937_64 rng(seed);
        for (const auto& [g, mult] : squarefree_decomposition(m)) {
            for (const auto& [h, k] : distinct_degree(g)) {
                std::vector<Poly> parts;
                equal_degree(h, k, rng, parts);
                for (auto& P : parts) acc[P] += mult;
            }
        }
    }
    for (auto& [P, mult] : acc) res.factors.emplace_back(P, mult);
    return res;
}

bool is_irreducible(const Poly& f)
{
    const int n = f.degree();
    if (n <= 0) return false;
    if (n == 1) return true;
    const Poly g = f.monic();
    const Poly t = Poly::t(f.field_ptr());
    if (!(frobenius_mod(t, static_cast<unsigned>(n), g) - t).is_zero()) return false;
    for (unsigned r : prime_divisors(static_cast<unsigned>(n))) {
        Poly h = frobenius_mod(t, static_cast<unsigned>(n) / r, g);
        if (!gcd(h - t, g).is_one()) return false;
    }
    return true;
}

std::vector<Poly> monic_irreducibles(const FieldPtr& field, unsigned n)
{
    std::vector<Poly> out;
    for (Poly& P : monic_polys_of_degree(field, n))
        if (is_irreducible(P)) out.push_back(std::move(P));
    return out;
}

}  // namespace drinfeld
