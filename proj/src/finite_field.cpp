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

#include "drinfeld/finite_field.hpp"

#include <algorithm>
#include <sstream>

namespace drinfeld {

namespace {

using Digits = std::vector<std::uint32_t>;

void trim(Digits& a)
{
    while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod_p(std::uint32_t a, std::uint32_t p)
{
    // Fermat; p is small.
    std::uint64_t r = 1, b = a % p;
    std::uint64_t n = p - 2;
    while (n) {
        if (n & 1) r = r * b % p;
        b = b * b % p;
        n >>= 1;
    }
    return static_cast<std::uint32_t>(r);
}

// Remainder of a modulo a monic-or-not m, both over F_p.
Digits mod_fp(Digits a, const Digits& m, std::uint32_t p)
{
    trim(a);
    const std::size_t dm = m.size() - 1;
    const std::uint32_t lead_inv = inv_mod_p(m.back(), p);
    while (a.size() > dm) {
        const std::uint64_t c = static_cast<std::uint64_t>(a.back()) * lead_inv % p;
        const std::size_t shift = a.size() - 1 - dm;
        for (std::size_t i = 0; i <= dm; ++i) {
            const std::uint64_t sub = c * m[i] % p;
            a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
        }
        trim(a);
    }
    return a;
}

Digits mul_fp(const Digits& a, const Digits& b, std::uint32_t p)
{
    if (a.empty() || b.empty()) return {};
    Digits r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = static_cast<std::uint32_t>((r[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
    trim(r);
    return r;
}

bool irreducible_fp(const Digits& m, std::uint32_t p)
{
    const std::size_t e = m.size() - 1;
    // Trial division by every monic polynomial of degree 1..e/2.
    for (std::size_t k = 1; 2 * k <= e; ++k) {
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < k; ++i) count *= p;
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            Digits d(k + 1, 0);
            std::uint64_t x = idx;
            for (std::size_t i = 0; i < k; ++i) {
                d[i] = static_cast<std::uint32_t>(x % p);
                x /= p;
            }
            d[k] = 1;
            if (mod_fp(m, d, p).empty()) return false;
        }
    }
    return true;
}

}  // namespace

bool is_small_prime(std::uint64_t n)
{
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::pair<std::uint32_t, std::uint32_t> prime_power(std::uint64_t q)
{
    if (q < 2) throw DomainError("q must be a prime power >= 2");
    std::uint64_t p = 2;
    while (q % p != 0) ++p;
    std::uint32_t e = 0;
    std::uint64_t r = q;
    while (r % p == 0) {
        r /= p;
        ++e;
    }
    if (r != 1) throw DomainError("q = " + std::to_string(q) + " is not a prime power");
    return {static_cast<std::uint32_t>(p), e};
}

FieldPtr FiniteField::prime(std::uint32_t p)
{
    if (!is_small_prime(p) || p >= (1u << 16))
        throw DomainError("characteristic must be a prime below 65536, got " + std::to_string(p));
    auto f = std::shared_ptr<FiniteField>(new FiniteField());
    f->p_ = p;
    f->e_ = 1;
    f->q_ = p;
    f->modulus_ = {0, 1};
    return f;
}

FieldPtr FiniteField::extension(std::uint32_t p, std::vector<std::uint32_t> modulus)
{
    if (!is_small_prime(p)) throw DomainError("characteristic must be prime, got " + std::to_string(p));
    for (auto& c : modulus) c %= p;
    trim(modulus);
    if (modulus.size() < 3) throw DomainError("extension modulus must have degree >= 2");
    if (modulus.back() != 1) throw DomainError("extension modulus must be monic");
    const auto e = static_cast<std::uint32_t>(modulus.size() - 1);
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < e; ++i) q *= p;
    if (q > 1024) throw DomainError("extension fields are limited to q <= 1024");
    if (!irreducible_fp(modulus, p)) throw DomainError("extension modulus is reducible over F_p");
    auto f = std::shared_ptr<FiniteField>(new FiniteField());
    f->p_ = p;
    f->e_ = e;
    f->q_ = static_cast<std::uint32_t>(q);
    f->modulus_ = std::move(modulus);
    f->build_tables();
    return f;
}

void FiniteField::build_tables()
{
    const std::uint32_t q = q_;
    add_.assign(static_cast<std::size_t>(q) * q, 0);
    mul_.assign(static_cast<std::size_t>(q) * q, 0);
    inv_.assign(q, 0);
    neg_.assign(q, 0);
    std::vector<Digits> dig(q);
    for (std::uint32_t a = 0; a < q; ++a) {
        Digits d(e_, 0);
        std::uint32_t x = a;
        for (std::uint32_t i = 0; i < e_; ++i) {
            d[i] = x % p_;
            x /= p_;
        }
        dig[a] = d;
    }
    auto index = [&](Digits d) {
        d.resize(e_, 0);
        std::uint32_t v = 0;
        for (std::uint32_t i = e_; i-- > 0;) v = v * p_ + d[i];
        return static_cast<std::uint16_t>(v);
    };
    for (std::uint32_t a = 0; a < q; ++a) {
        Digits n(e_);
        for (std::uint32_t i = 0; i < e_; ++i) n[i] = (p_ - dig[a][i]) % p_;
        neg_[a] = index(n);
        for (std::uint32_t b = 0; b < q; ++b) {
            Digits s(e_);
            for (std::uint32_t i = 0; i < e_; ++i) s[i] = (dig[a][i] + dig[b][i]) % p_;
            add_[a * q + b] = index(s);
            Digits da = dig[a], db = dig[b];
            trim(da);
            trim(db);
            mul_[a * q + b] = index(mod_fp(mul_fp(da, db, p_), modulus_, p_));
        }
    }
    for (std::uint32_t a = 1; a < q; ++a)
        for (std::uint32_t b = 1; b < q; ++b)
            if (mul_[a * q + b] == 1) {
                inv_[a] = static_cast<std::uint16_t>(b);
                break;
            }
}

Fq FiniteField::generator() const
{
    if (e_ == 1) throw DomainError("prime fields have no extension generator g");
    return Fq{p_};
}

Fq FiniteField::from_int(std::int64_t n) const
{
    std::int64_t r = n % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return Fq{static_cast<std::uint32_t>(r)};
}

Fq FiniteField::from_digits(const std::vector<std::uint32_t>& digits) const
{
    Digits d = digits;
    for (auto& c : d) c %= p_;
    if (e_ > 1) d = mod_fp(d, modulus_, p_);
    else if (d.size() > 1) throw DomainError("prime field elements have a single digit");
    d.resize(e_, 0);
    std::uint32_t v = 0;
    for (std::uint32_t i = e_; i-- > 0;) v = v * p_ + d[i];
    return Fq{v};
}

std::vector<std::uint32_t> FiniteField::digits(Fq a) const
{
    Digits d(e_);
    std::uint32_t x = a.v;
    for (std::uint32_t i = 0; i < e_; ++i) {
        d[i] = x % p_;
        x /= p_;
    }
    return d;
}

Fq FiniteField::add(Fq a, Fq b) const
{
    if (e_ == 1) {
        const std::uint32_t s = a.v + b.v;
        return Fq{s >= p_ ? s - p_ : s};
    }
    return Fq{add_[a.v * q_ + b.v]};
}

Fq FiniteField::neg(Fq a) const
{
    if (e_ == 1) return Fq{a.v == 0 ? 0 : p_ - a.v};
    return Fq{neg_[a.v]};
}

Fq FiniteField::sub(Fq a, Fq b) const { return add(a, neg(b)); }

Fq FiniteField::mul(Fq a, Fq b) const
{
    if (e_ == 1) return Fq{static_cast<std::uint32_t>(static_cast<std::uint64_t>(a.v) * b.v % p_)};
    return Fq{mul_[a.v * q_ + b.v]};
}

Fq FiniteField::inv(Fq a) const
{
    if (a.v == 0) throw DomainError("division by zero in F_q");
    if (e_ == 1) return Fq{inv_mod_p(a.v, p_)};
    return Fq{inv_[a.v]};
}

Fq FiniteField::pow(Fq a, std::uint64_t n) const
{
    Fq r = one();
    while (n) {
        if (n & 1) r = mul(r, a);
        a = mul(a, a);
        n >>= 1;
    }
    return r;
}

Fq FiniteField::pth_root(Fq a) const
{
    // The inverse of x -> x^p on F_q is x -> x^(q/p).
    return pow(a, q_ / p_);
}

std::string FiniteField::format(Fq a) const
{
    if (e_ == 1) return std::to_string(a.v);
    const auto d = digits(a);
    std::ostringstream os;
    bool first = true;
    for (std::uint32_t i = e_; i-- > 0;) {
        if (d[i] == 0) continue;
        if (!first) os << '+';
        first = false;
        if (i == 0) {
            os << d[i];
            continue;
        }
        if (d[i] != 1) os << d[i] << '*';
        os << 'g';
        if (i > 1) os << '^' << i;
    }
    if (first) return "0";
    const std::string s = os.str();
    // Bare digits need no parentheses.
    if (s.find('g') == std::string::npos) return s;
    return "(" + s + ")";
}

}  // namespace drinfeld
