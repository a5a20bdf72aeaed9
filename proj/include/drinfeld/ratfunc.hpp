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
#include <string>

#include "drinfeld/poly.hpp"

namespace drinfeld {

/// An element of K = F_q(t) in canonical form: gcd(num, den) = 1 and den monic.
/// Zero is 0/1.
class RatFunc {
public:
    explicit RatFunc(FieldPtr field);
    RatFunc(Poly num);  // NOLINT(google-explicit-constructor)
    RatFunc(Poly num, Poly den);

    static RatFunc constant(const FieldPtr& field, Fq c);
    static RatFunc t(const FieldPtr& field);
    static RatFunc from_int(const FieldPtr& field, std::int64_t n);

    const FieldPtr& field_ptr() const { return num_.field_ptr(); }
    const FiniteField& field() const { return num_.field(); }
    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }
    bool is_constant() const { return den_.is_one() && num_.is_constant(); }
    /// max(deg num, deg den); this is the Weil height in log-q units.
    int size_degree() const { return std::max(num_.degree(), den_.degree()); }

    RatFunc inverse() const;
    RatFunc pow(std::int64_t n) const;
    /// x^(q^k).
    RatFunc frobenius(unsigned k = 1) const;

    RatFunc operator-() const;
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }

    friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

    /// Output re-parses to an equal value: "num" or "(num)/(den)".
    std::string to_string() const;

private:
    struct Canonical {};
    RatFunc(Poly num, Poly den, Canonical) : num_(std::move(num)), den_(std::move(den)) {}

    Poly num_;
    Poly den_;
};

}  // namespace drinfeld
