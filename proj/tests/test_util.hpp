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

// Shared helpers for the test suites: random generators and brute-force
// oracles that do not go through the library's fast paths.

#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <ostream>
#include <random>
#include <vector>

#include "drinfeld/drinfeld.hpp"
#include "drinfeld/factor.hpp"
#include "drinfeld/place.hpp"

namespace drinfeld {
inline std::ostream& operator<<(std::ostream& os, const LogUnits& x) { return os << x.to_string(); }
inline std::ostream& operator<<(std::ostream& os, const Poly& x) { return os << x.to_string(); }
inline std::ostream& operator<<(std::ostream& os, const RatFunc& x) { return os << x.to_string(); }
inline std::ostream& operator<<(std::ostream& os, const Place& x) { return os << x.to_string(); }
}  // namespace drinfeld

namespace testutil {

using namespace drinfeld;

inline FieldPtr F2() { return FiniteField::prime(2); }
inline FieldPtr F3() { return FiniteField::prime(3); }
/// F_4 = F_2[g]/(g^2+g+1).
inline FieldPtr F4() { return FiniteField::extension(2, {1, 1, 1}); }

inline Poly P(const FieldPtr& F, std::vector<std::int64_t> c) { return Poly::from_ints(F, c); }
inline RatFunc R(const FieldPtr& F, std::vector<std::int64_t> n, std::vector<std::int64_t> d = {1})
{
    return RatFunc(Poly::from_ints(F, n), Poly::from_ints(F, d));
}

inline Fq random_fq(const FieldPtr& F, std::mt19937_64& rng)
{
    return Fq{static_cast<std::uint32_t>(rng() % F->q())};
}

inline Poly random_poly(const FieldPtr& F, int max_deg, std::mt19937_64& rng)
{
    std::vector<Fq> c(static_cast<std::size_t>(rng() % (max_deg + 1)) + 1);
    for (auto& x : c) x = random_fq(F, rng);
    return Poly(F, c);
}

inline Poly random_nonzero_poly(const FieldPtr& F, int max_deg, std::mt19937_64& rng)
{
    for (;;) {
        Poly p = random_poly(F, max_deg, rng);
        if (!p.is_zero()) return p;
    }
}

inline Poly random_monic(const FieldPtr& F, int deg, std::mt19937_64& rng)
{
    std::vector<Fq> c(static_cast<std::size_t>(deg) + 1);
    for (auto& x : c) x = random_fq(F, rng);
    c.back() = F->one();
    return Poly(F, c);
}

inline RatFunc random_ratfunc(const FieldPtr& F, int max_deg, std::mt19937_64& rng)
{
    Poly d = random_nonzero_poly(F, max_deg, rng);
    return RatFunc(random_poly(F, max_deg, rng), d);
}

inline RatFunc random_nonzero_ratfunc(const FieldPtr& F, int max_deg, std::mt19937_64& rng)
{
    for (;;) {
        RatFunc x = random_ratfunc(F, max_deg, rng);
        if (!x.is_zero()) return x;
    }
}

/// Every monic polynomial of degree exactly n, by counting in base q.
inline std::vector<Poly> all_monic(const FieldPtr& F, unsigned n)
{
    std::vector<Poly> out;
    std::uint64_t count = 1;
    for (unsigned i = 0; i < n; ++i) count *= F->q();
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        std::vector<Fq> c(n + 1);
        std::uint64_t r = idx;
        for (unsigned i = 0; i < n; ++i) {
            c[i] = Fq{static_cast<std::uint32_t>(r % F->q())};
            r /= F->q();
        }
        c[n] = F->one();
        out.emplace_back(F, c);
    }
    return out;
}

/// Irreducibility by trial division against every monic polynomial of degree <= n/2.
inline bool brute_irreducible(const Poly& f)
{
    if (f.degree() < 1) return false;
    for (unsigned k = 1; 2 * k <= static_cast<unsigned>(f.degree()); ++k)
        for (const Poly& g : all_monic(f.field_ptr(), k))
            if ((f % g).is_zero()) return false;
    return true;
}

/// Monic irreducible factorization by repeated trial division, smallest factors first.
inline std::vector<std::pair<Poly, unsigned>> brute_factor(Poly f)
{
    std::vector<std::pair<Poly, unsigned>> out;
    f = f.monic();
    for (unsigned k = 1; f.degree() >= static_cast<int>(2 * k); ++k) {
        for (const Poly& g : all_monic(f.field_ptr(), k)) {
            unsigned m = 0;
            while ((f % g).is_zero()) {
                f = f / g;
                ++m;
            }
            if (m > 0) out.emplace_back(g, m);
        }
    }
    if (f.degree() >= 1) out.emplace_back(f, 1);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

/// Valuation at P by repeated division, independent of strip_factor.
inline std::int64_t brute_ord(const RatFunc& x, const Poly& P)
{
    std::int64_t k = 0;
    Poly n = x.num();
    Poly d = x.den();
    while ((n % P).is_zero()) {
        n = n / P;
        ++k;
    }
    while ((d % P).is_zero()) {
        d = d / P;
        --k;
    }
    return k;
}

/// phi_t(x) computed term by term with explicit repeated powering.
inline RatFunc naive_phi_t(const DrinfeldModule& M, const RatFunc& x)
{
    RatFunc acc(M.field_ptr());
    RatFunc xp = x;
    for (unsigned i = 0; i <= M.rank(); ++i) {
        if (i > 0) xp = xp.pow(M.q());
        acc = acc + M.coeff(i) * xp;
    }
    return acc;
}

/// phi_Q(x) as sum_k c_k phi_t^k(x) with the naive phi_t.
inline RatFunc naive_phi(const DrinfeldModule& M, const Poly& Q, const RatFunc& x)
{
    RatFunc acc(M.field_ptr());
    RatFunc xk = x;
    for (int k = 0; k <= Q.degree(); ++k) {
        if (k > 0) xk = naive_phi_t(M, xk);
        acc = acc + RatFunc::constant(M.field_ptr(), Q.coeff(static_cast<std::size_t>(k))) * xk;
    }
    return acc;
}

/// A random module of the given rank with small polynomial or rational coefficients.
inline DrinfeldModule random_module(const FieldPtr& F, unsigned d, int coeff_deg, bool rational, std::mt19937_64& rng)
{
    std::vector<RatFunc> c{RatFunc::t(F)};
    for (unsigned i = 1; i <= d; ++i) {
        RatFunc a = RatFunc(random_poly(F, coeff_deg, rng));
        if (rational && rng() % 3 == 0) a = a / RatFunc(random_monic(F, static_cast<int>(rng() % 2) + 1, rng));
        if (i == d)
            while (a.is_zero()) a = RatFunc(random_nonzero_poly(F, coeff_deg, rng));
        c.push_back(a);
    }
    return DrinfeldModule(F, c);
}

/// A module phi_t = t x + a x^q in which c is an eigenvector, phi_t(c) = alpha c.
inline DrinfeldModule module_with_eigenpoint(const FieldPtr& F, const RatFunc& c, Fq alpha)
{
    // t c + a c^q = alpha c  =>  a = (alpha - t) c / c^q.
    const RatFunc a = (RatFunc::constant(F, alpha) - RatFunc::t(F)) * c / c.pow(F->q());
    return DrinfeldModule(F, {RatFunc::t(F), a});
}

/// Rank-2 variant with a free middle coefficient.
inline DrinfeldModule rank2_with_eigenpoint(const FieldPtr& F, const RatFunc& c, Fq alpha, const RatFunc& a1)
{
    const std::uint32_t q = F->q();
    const RatFunc a2 = ((RatFunc::constant(F, alpha) - RatFunc::t(F)) * c - a1 * c.pow(q)) / c.pow(std::int64_t{q} * q);
    return DrinfeldModule(F, {RatFunc::t(F), a1, a2});
}

/// log_q|x|_v by trial division (nullopt for x = 0). P empty means infinity.
inline std::optional<std::int64_t> brute_log(const RatFunc& x, const std::optional<Poly>& P)
{
    if (x.is_zero()) return std::nullopt;
    if (!P) return x.num().degree() - x.den().degree();
    return -brute_ord(x, *P) * P->degree();
}

/// The conjugate-case definition evaluated at infinity, at every place of degree
/// <= max_deg and at every trial-division factor of alpha, beta and alpha - beta.
inline bool brute_S_integral(const RatFunc& beta, const RatFunc& alpha, const std::vector<Place>& S, unsigned max_deg)
{
    const FieldPtr& F = beta.num().field_ptr();
    std::vector<std::optional<Poly>> places{std::nullopt};
    for (unsigned n = 1; n <= max_deg; ++n)
        for (const Poly& P : all_monic(F, n))
            if (brute_irreducible(P)) places.emplace_back(P);
    for (const RatFunc& x : {alpha, beta, alpha - beta}) {
        if (x.is_zero()) continue;
        for (const Poly& f : {x.num(), x.den()})
            if (f.degree() > 0)
                for (const auto& [P, m] : brute_factor(f)) places.emplace_back(P);
    }
    for (const auto& P : places) {
        const Place v = P ? Place::finite(*P) : Place::infinity(F);
        if (std::find(S.begin(), S.end(), v) != S.end()) continue;
        const auto la = brute_log(alpha, P), lb = brute_log(beta, P), ld = brute_log(alpha - beta, P);
        const bool alpha_small = !la || *la <= 0;
        if (alpha_small && !(ld && *ld >= 0)) return false;
        if (!alpha_small && !(!lb || *lb <= 0)) return false;
    }
    return true;
}

/// Minimal annihilator of x found by evaluating phi-bar_P(x) for every monic P in degree-lex order.
inline Poly brute_order(const ResidueModule& R, const Poly& x)
{
    for (unsigned n = 0;; ++n)
        for (const Poly& P : all_monic(R.field_ptr(), n))
            if (R.apply(P, x).is_zero()) return P;
}

inline std::vector<Poly> residue_elements(const ResidueModule& R)
{
    std::vector<Poly> out;
    const FieldPtr& F = R.field_ptr();
    std::uint64_t n = 1;
    for (unsigned i = 0; i < R.degree(); ++i) n *= F->q();
    for (std::uint64_t idx = 0; idx < n; ++idx) {
        std::vector<Fq> c(R.degree());
        std::uint64_t r = idx;
        for (auto& ci : c) {
            ci = Fq{static_cast<std::uint32_t>(r % F->q())};
            r /= F->q();
        }
        out.emplace_back(F, c);
    }
    return out;
}

}  // namespace testutil
