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

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace drinfeld {

/// Raised when an operation is applied outside its mathematical domain
/// (zero valuation argument, non-monic Möbius input, bad-reduction place...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// An element of F_q, stored as its index in [0, q).
///
/// For prime fields the index is the residue itself. For extension fields
/// F_p[g]/(m(g)) the index is the base-p number whose digit i is the
/// coefficient of g^i.
struct Fq {
    std::uint32_t v = 0;

    friend bool operator==(Fq, Fq) = default;
    friend auto operator<=>(Fq, Fq) = default;
};

class FiniteField;
using FieldPtr = std::shared_ptr<const FiniteField>;

/// The finite field F_q with q = p^e.
///
/// Extension fields carry an explicit modulus, verified irreducible over F_p
/// at construction. Field operations for e > 1 are table driven, so q is
/// capped at 1024.
class FiniteField {
public:
    static FieldPtr prime(std::uint32_t p);
    /// `modulus` holds coefficients over F_p, lowest degree first, and must be
    /// monic of degree e >= 2.
    static FieldPtr extension(std::uint32_t p, std::vector<std::uint32_t> modulus);

    std::uint32_t p() const { return p_; }
    std::uint32_t e() const { return e_; }
    std::uint32_t q() const { return q_; }
    bool is_prime() const { return e_ == 1; }
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }

    Fq zero() const { return Fq{0}; }
    Fq one() const { return Fq{1}; }
    /// The class of g in F_p[g]/(m); only meaningful when e > 1.
    Fq generator() const;
    /// Image of an integer under Z -> F_p -> F_q.
    Fq from_int(std::int64_t n) const;
    /// Element with the given base-p digits (coefficients of g^i).
    Fq from_digits(const std::vector<std::uint32_t>& digits) const;
    std::vector<std::uint32_t> digits(Fq a) const;

    Fq add(Fq a, Fq b) const;
    Fq sub(Fq a, Fq b) const;
    Fq neg(Fq a) const;
    Fq mul(Fq a, Fq b) const;
    Fq inv(Fq a) const;
    Fq div(Fq a, Fq b) const { return mul(a, inv(b)); }
    Fq pow(Fq a, std::uint64_t n) const;
    /// x -> x^p.
    Fq frobenius(Fq a) const { return pow(a, p_); }
    /// p-th root (inverse Frobenius).
    Fq pth_root(Fq a) const;

    /// Integer literal for prime fields, "(g^2+1)"-style literal otherwise.
    std::string format(Fq a) const;

    bool same_as(const FiniteField& other) const
    {
        return p_ == other.p_ && modulus_ == other.modulus_;
    }

private:
    FiniteField() = default;
    void build_tables();

    std::uint32_t p_ = 2;
    std::uint32_t e_ = 1;
    std::uint32_t q_ = 2;
    std::vector<std::uint32_t> modulus_;
    std::vector<std::uint16_t> add_;
    std::vector<std::uint16_t> mul_;
    std::vector<std::uint16_t> inv_;
    std::vector<std::uint16_t> neg_;
};

/// Checks primality of a small integer by trial division.
bool is_small_prime(std::uint64_t n);

/// Splits q = p^e; throws DomainError unless q is a prime power.
std::pair<std::uint32_t, std::uint32_t> prime_power(std::uint64_t q);

}  // namespace drinfeld
