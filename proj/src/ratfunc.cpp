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

#include "drinfeld/ratfunc.hpp"

namespace drinfeld {

RatFunc::RatFunc(FieldPtr field) : num_(field), den_(Poly::constant(field, field->one())) {}

RatFunc::RatFunc(Poly num) : num_(std::move(num)), den_(Poly::constant(num_.field_ptr(), num_.field().one())) {}

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den))
{
    if (den_.is_zero()) throw DomainError("rational function with zero denominator");
    if (num_.is_zero()) {
        den_ = Poly::constant(num_.field_ptr(), num_.field().one());
        return;
    }
    Poly g = gcd(num_, den_);
    if (!g.is_one()) {
        num_ = num_ / g;
        den_ = den_ / g;
    }
    const Fq inv = num_.field().inv(den_.lead());
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
}

RatFunc RatFunc::constant(const FieldPtr& field, Fq c) { return RatFunc(Poly::constant(field, c)); }
RatFunc RatFunc::t(const FieldPtr& field) { return RatFunc(Poly::t(field)); }
RatFunc RatFunc::from_int(const FieldPtr& field, std::int64_t n) { return constant(field, field->from_int(n)); }

RatFunc RatFunc::inverse() const
{
    if (is_zero()) throw DomainError("inverse of zero in F_q(t)");
    const Fq inv = field().inv(num_.lead());
    return RatFunc(den_.scaled(inv), num_.scaled(inv), Canonical{});
}

RatFunc RatFunc::pow(std::int64_t n) const
{
    if (n < 0) return inverse().pow(-n);
    return RatFunc(drinfeld::pow(num_, static_cast<std::uint64_t>(n)),
                   drinfeld::pow(den_, static_cast<std::uint64_t>(n)), Canonical{});
}

RatFunc RatFunc::frobenius(unsigned k) const
{
    // x -> x^q is an injective ring map, so coprimality and monicity survive.
    return RatFunc(num_.frobenius(k), den_.frobenius(k), Canonical{});
}

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_, Canonical{}); }

RatFunc operator+(const RatFunc& a, const RatFunc& b)
{
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
    const Poly g = gcd(a.den_, b.den_);
    if (g.is_one()) return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_, RatFunc::Canonical{});
    const Poly bd = b.den_ / g;
    Poly num = a.num_ * bd + b.num_ * (a.den_ / g);
    Poly den = a.den_ * bd;
    if (num.is_zero()) return RatFunc(a.field_ptr());
    const Poly h = gcd(num, g);
    if (!h.is_one()) {
        num = num / h;
        den = den / h;
    }
    return RatFunc(std::move(num), std::move(den), RatFunc::Canonical{});
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b)
{
    if (a.is_zero() || b.is_zero()) return RatFunc(a.field_ptr());
    const Poly g1 = gcd(a.num_, b.den_);
    const Poly g2 = gcd(b.num_, a.den_);
    Poly num = (g1.is_one() ? a.num_ : a.num_ / g1) * (g2.is_one() ? b.num_ : b.num_ / g2);
    Poly den = (g2.is_one() ? a.den_ : a.den_ / g2) * (g1.is_one() ? b.den_ : b.den_ / g1);
    const Fq inv = a.field().inv(den.lead());
    return RatFunc(num.scaled(inv), den.scaled(inv), RatFunc::Canonical{});
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }

std::string RatFunc::to_string() const
{
    if (den_.is_one()) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace drinfeld
