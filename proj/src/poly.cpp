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

#include "drinfeld/poly.hpp"

#include <limits>
#include <sstream>

namespace drinfeld {

Poly::Poly(FieldPtr field) : field_(std::move(field)) {}

Poly::Poly(FieldPtr field, std::vector<Fq> coeffs) : field_(std::move(field)), c_(std::move(coeffs))
{
    trim();
}

Poly Poly::constant(FieldPtr field, Fq c) { return Poly(std::move(field), {c}); }

Poly Poly::monomial(FieldPtr field, Fq c, std::size_t k)
{
    if (c.v == 0) return Poly(std::move(field));
    std::vector<Fq> v(k + 1, Fq{0});
    v[k] = c;
    return Poly(std::move(field), std::move(v));
}

Poly Poly::t(FieldPtr field)
{
    const Fq one = field->one();
    return monomial(std::move(field), one, 1);
}

Poly Poly::from_ints(FieldPtr field, const std::vector<std::int64_t>& coeffs)
{
    std::vector<Fq> v;
    v.reserve(coeffs.size());
    for (auto c : coeffs) v.push_back(field->from_int(c));
    return Poly(std::move(field), std::move(v));
}

void Poly::trim()
{
    while (!c_.empty() && c_.back().v == 0) c_.pop_back();
}

Fq Poly::lead() const
{
    if (c_.empty()) throw DomainError("leading coefficient of the zero polynomial");
    return c_.back();
}

Poly Poly::monic() const
{
    if (is_zero()) return *this;
    return scaled(field_->inv(lead()));
}

Poly Poly::scaled(Fq c) const
{
    if (c.v == 0) return Poly(field_);
    std::vector<Fq> v(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) v[i] = field_->mul(c_[i], c);
    return Poly(field_, std::move(v));
}

Poly Poly::shifted(std::size_t k) const
{
    if (is_zero() || k == 0) return *this;
    std::vector<Fq> v(k, Fq{0});
    v.insert(v.end(), c_.begin(), c_.end());
    return Poly(field_, std::move(v));
}

Poly Poly::truncated(std::size_t k) const
{
    if (c_.size() <= k) return *this;
    return Poly(field_, std::vector<Fq>(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(k)));
}

Poly Poly::derivative() const
{
    if (c_.size() <= 1) return Poly(field_);
    std::vector<Fq> v(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i)
        v[i - 1] = field_->mul(c_[i], field_->from_int(static_cast<std::int64_t>(i % field_->p())));
    return Poly(field_, std::move(v));
}

Poly Poly::frobenius(unsigned k) const
{
    if (is_zero() || degree() == 0 || k == 0) return *this;
    const std::uint64_t step = checked_pow(field_->q(), k);
    const std::uint64_t n = static_cast<std::uint64_t>(degree()) * step + 1;
    if (n > (std::uint64_t{1} << 31)) throw DomainError("Frobenius image too large to represent");
    std::vector<Fq> v(n, Fq{0});
    for (std::size_t i = 0; i < c_.size(); ++i) v[i * step] = c_[i];
    return Poly(field_, std::move(v));
}

Poly Poly::pow_p() const
{
    if (is_zero()) return *this;
    const std::uint32_t p = field_->p();
    std::vector<Fq> v(static_cast<std::size_t>(degree()) * p + 1, Fq{0});
    for (std::size_t i = 0; i < c_.size(); ++i) v[i * p] = field_->frobenius(c_[i]);
    return Poly(field_, std::move(v));
}

Poly Poly::pth_root() const
{
    const std::uint32_t p = field_->p();
    std::vector<Fq> v;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i % p != 0) {
            if (c_[i].v != 0) throw DomainError("polynomial is not a p-th power");
            continue;
        }
        v.push_back(field_->pth_root(c_[i]));
    }
    return Poly(field_, std::move(v));
}

Poly Poly::reversed() const
{
    std::vector<Fq> v(c_.rbegin(), c_.rend());
    return Poly(field_, std::move(v));
}

Fq Poly::eval(Fq x) const
{
    Fq r = field_->zero();
    for (std::size_t i = c_.size(); i-- > 0;) r = field_->add(field_->mul(r, x), c_[i]);
    return r;
}

Poly Poly::operator-() const
{
    std::vector<Fq> v(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) v[i] = field_->neg(c_[i]);
    return Poly(field_, std::move(v));
}

Poly& Poly::operator+=(const Poly& o)
{
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Fq{0});
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = field_->add(c_[i], o.c_[i]);
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o)
{
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Fq{0});
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = field_->sub(c_[i], o.c_[i]);
    trim();
    return *this;
}

Poly& Poly::operator*=(const Poly& o)
{
    *this = *this * o;
    return *this;
}

Poly operator*(const Poly& a, const Poly& b)
{
    if (a.is_zero() || b.is_zero()) return Poly(a.field_);
    const FiniteField& F = *a.field_;
    const std::size_t n = a.c_.size() + b.c_.size() - 1;
    std::vector<Fq> out(n, Fq{0});
    if (F.is_prime()) {
        const std::uint64_t p = F.p();
        // Products are < 2^32, so a few billion terms fit before reducing.
        std::vector<std::uint64_t> acc(n, 0);
        const std::size_t flush = std::numeric_limits<std::uint64_t>::max() / ((p - 1) * (p - 1) + 1) - 1;
        std::size_t pending = 0;
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            const std::uint64_t ai = a.c_[i].v;
            if (ai != 0)
                for (std::size_t j = 0; j < b.c_.size(); ++j) acc[i + j] += ai * b.c_[j].v;
            if (++pending >= flush) {
                for (auto& x : acc) x %= p;
                pending = 0;
            }
        }
        for (std::size_t k = 0; k < n; ++k) out[k] = Fq{static_cast<std::uint32_t>(acc[k] % p)};
    } else {
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].v == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                out[i + j] = F.add(out[i + j], F.mul(a.c_[i], b.c_[j]));
        }
    }
    return Poly(a.field_, std::move(out));
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b)
{
    if (b.is_zero()) throw DomainError("polynomial division by zero");
    const FiniteField& F = a.field();
    if (a.degree() < b.degree()) return {Poly(a.field_ptr()), a};
    std::vector<Fq> r = a.coeffs();
    const auto& bc = b.coeffs();
    const std::size_t db = bc.size() - 1;
    std::vector<Fq> qt(r.size() - db, Fq{0});
    const Fq inv_lead = F.inv(bc.back());
    for (std::size_t k = r.size(); k-- > db;) {
        if (r[k].v == 0) continue;
        const Fq c = F.mul(r[k], inv_lead);
        qt[k - db] = c;
        for (std::size_t i = 0; i <= db; ++i) r[k - db + i] = F.sub(r[k - db + i], F.mul(c, bc[i]));
    }
    r.resize(db);
    return {Poly(a.field_ptr(), std::move(qt)), Poly(a.field_ptr(), std::move(r))};
}

Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }
Poly operator%(const Poly& a, const Poly& b)
{
    if (a.degree() < b.degree() && !b.is_zero()) return a;
    return divmod(a, b).second;
}

std::strong_ordering operator<=>(const Poly& a, const Poly& b)
{
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    for (std::size_t i = a.c_.size(); i-- > 0;)
        if (auto c = a.c_[i].v <=> b.c_[i].v; c != 0) return c;
    return std::strong_ordering::equal;
}

std::string Poly::to_string() const
{
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        const Fq c = c_[i];
        if (c.v == 0) continue;
        if (!first) os << '+';
        first = false;
        const bool unit = c == field_->one();
        if (i == 0) {
            os << field_->format(c);
            continue;
        }
        if (!unit) os << field_->format(c) << '*';
        os << 't';
        if (i > 1) os << '^' << i;
    }
    return os.str();
}

Poly gcd(const Poly& a, const Poly& b)
{
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = x % y;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

Poly lcm(const Poly& a, const Poly& b)
{
    if (a.is_zero() || b.is_zero()) return Poly(a.field_ptr());
    return (a / gcd(a, b) * b).monic();
}

ExtGcd ext_gcd(const Poly& a, const Poly& b)
{
    const auto& F = a.field_ptr();
    Poly r0 = a, r1 = b;
    Poly s0 = Poly::constant(F, F->one()), s1(F);
    Poly u0(F), u1 = Poly::constant(F, F->one());
    while (!r1.is_zero()) {
        auto [qt, r] = divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        Poly s2 = s0 - qt * s1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        Poly u2 = u0 - qt * u1;
        u0 = std::move(u1);
        u1 = std::move(u2);
    }
    if (r0.is_zero()) return {r0, s0, u0};
    const Fq inv = F->inv(r0.lead());
    return {r0.scaled(inv), s0.scaled(inv), u0.scaled(inv)};
}

Poly inverse_mod(const Poly& a, const Poly& m)
{
    auto [g, s, u] = ext_gcd(a % m, m);
    if (!g.is_one()) throw DomainError("polynomial is not invertible modulo " + m.to_string());
    return s % m;
}

Poly pow(const Poly& base, std::uint64_t n)
{
    Poly r = Poly::constant(base.field_ptr(), base.field().one());
    Poly b = base;
    while (n) {
        if (n & 1) r = r * b;
        n >>= 1;
        if (n) b = b * b;
    }
    return r;
}

Poly mul_mod(const Poly& a, const Poly& b, const Poly& m) { return (a * b) % m; }

Poly pow_mod(const Poly& base, const mpz_class& n, const Poly& m)
{
    Poly r = Poly::constant(base.field_ptr(), base.field().one()) % m;
    Poly b = base % m;
    const std::size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
    if (n == 0) return r;
    for (std::size_t i = bits; i-- > 0;) {
        r = mul_mod(r, r, m);
        if (mpz_tstbit(n.get_mpz_t(), i)) r = mul_mod(r, b, m);
    }
    return r;
}

std::pair<std::int64_t, Poly> strip_factor(const Poly& f, const Poly& P)
{
    if (f.is_zero()) throw DomainError("cannot strip factors from zero");
    std::int64_t k = 0;
    Poly g = f;
    while (true) {
        auto [qt, r] = divmod(g, P);
        if (!r.is_zero()) break;
        g = std::move(qt);
        ++k;
    }
    return {k, g};
}

std::vector<Poly> monic_polys_of_degree(const FieldPtr& field, unsigned n)
{
    const std::uint64_t q = field->q();
    const std::uint64_t count = checked_pow(q, n);
    if (count > (std::uint64_t{1} << 24)) throw DomainError("too many polynomials to enumerate");
    std::vector<Poly> out;
    out.reserve(count);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        std::vector<Fq> c(n + 1, Fq{0});
        std::uint64_t x = idx;
        for (unsigned i = 0; i < n; ++i) {
            c[i] = Fq{static_cast<std::uint32_t>(x % q)};
            x /= q;
        }
        c[n] = field->one();
        out.emplace_back(field, std::move(c));
    }
    return out;
}

std::uint64_t checked_pow(std::uint64_t base, unsigned n)
{
    std::uint64_t r = 1;
    for (unsigned i = 0; i < n; ++i) {
        if (r > std::numeric_limits<std::uint64_t>::max() / base) throw DomainError("integer power overflow");
        r *= base;
    }
    return r;
}

}  // namespace drinfeld
