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

#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "drinfeld/finite_field.hpp"

namespace drinfeld {

/// Univariate polynomial over F_q in the variable t, i.e. an element of A = F_q[t].
///
/// Coefficients are stored lowest degree first with no trailing zeros, so the
/// zero polynomial has an empty coefficient vector and degree -1.
class Poly {
public:
    explicit Poly(FieldPtr field);
    Poly(FieldPtr field, std::vector<Fq> coeffs);

    static Poly constant(FieldPtr field, Fq c);
    static Poly monomial(FieldPtr field, Fq c, std::size_t k);
    /// The variable t.
    static Poly t(FieldPtr field);
    /// Builds a polynomial from small integer coefficients (lowest first).
    static Poly from_ints(FieldPtr field, const std::vector<std::int64_t>& coeffs);

    const FieldPtr& field_ptr() const { return field_; }
    const FiniteField& field() const { return *field_; }
    const std::vector<Fq>& coeffs() const { return c_; }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == field_->one(); }
    bool is_constant() const { return c_.size() <= 1; }
    bool is_monic() const { return !c_.empty() && c_.back() == field_->one(); }
    Fq lead() const;
    Fq coeff(std::size_t i) const { return i < c_.size() ? c_[i] : field_->zero(); }

    Poly monic() const;
    Poly scaled(Fq c) const;
    /// Multiplication by t^k.
    Poly shifted(std::size_t k) const;
    /// Truncation modulo t^k.
    Poly truncated(std::size_t k) const;
    Poly derivative() const;
    /// f^(q^k). Coefficients are fixed by x -> x^q, so this only spreads exponents.
    Poly frobenius(unsigned k = 1) const;
    /// f^p, used for square-free decomposition in characteristic p.
    Poly pow_p() const;
    /// The unique g with g^p = f; requires f' = 0.
    Poly pth_root() const;
    /// t^deg f * f(1/t).
    Poly reversed() const;
    Fq eval(Fq x) const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator/(const Poly& a, const Poly& b);
    friend Poly operator%(const Poly& a, const Poly& b);

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    /// Degree first, then coefficients from the top down.
    friend std::strong_ordering operator<=>(const Poly& a, const Poly& b);

    std::string to_string() const;

private:
    void trim();

    FieldPtr field_;
    std::vector<Fq> c_;
};

/// Quotient and remainder; throws DomainError on division by zero.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
/// Monic gcd (zero when both inputs are zero).
Poly gcd(const Poly& a, const Poly& b);
Poly lcm(const Poly& a, const Poly& b);
/// Returns (g, s, u) with s*a + u*b = g, g monic.
struct ExtGcd {
    Poly g, s, u;
};
ExtGcd ext_gcd(const Poly& a, const Poly& b);
/// Inverse of a modulo m; throws DomainError when gcd(a, m) != 1.
Poly inverse_mod(const Poly& a, const Poly& m);
Poly pow(const Poly& base, std::uint64_t n);
Poly pow_mod(const Poly& base, const mpz_class& n, const Poly& m);
Poly mul_mod(const Poly& a, const Poly& b, const Poly& m);

/// Largest k with P^k | f (f nonzero, P non-constant), and f / P^k.
std::pair<std::int64_t, Poly> strip_factor(const Poly& f, const Poly& P);

/// All monic polynomials of exact degree n, in the canonical (degree-lex) order.
std::vector<Poly> monic_polys_of_degree(const FieldPtr& field, unsigned n);

/// q^n as an unsigned integer with overflow detection.
std::uint64_t checked_pow(std::uint64_t base, unsigned n);

}  // namespace drinfeld
