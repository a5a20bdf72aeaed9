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

#include "drinfeld/local.hpp"

#include <algorithm>

namespace drinfeld {

LocalField::LocalField(Place v, unsigned window)
    : v_(std::move(v)), window_(std::max(1u, window)), pi_(Poly::t(v_.field_ptr()))
{
    if (v_.is_finite()) pi_ = v_.poly();
    truncating_ = pi_ == Poly::t(pi_.field_ptr());
    pi_pows_.push_back(Poly::constant(pi_.field_ptr(), pi_.field().one()));
}

const Poly& LocalField::pi_pow(unsigned k) const
{
    while (pi_pows_.size() <= k) pi_pows_.push_back(pi_pows_.back() * pi_);
    return pi_pows_[k];
}

Poly LocalField::reduce(const Poly& f, unsigned k) const
{
    if (truncating_) return f.truncated(k);
    if (f.degree() < static_cast<int>(k * pi_.degree())) return f;
    return f % pi_pow(k);
}

LocalElement LocalField::lost() const
{
    LocalElement r(pi_.field_ptr());
    r.state = LocalElement::State::Lost;
    return r;
}

LocalElement LocalField::embed(const RatFunc& x) const
{
    LocalElement r(pi_.field_ptr());
    if (x.is_zero()) return r;
    Poly f = x.num();
    Poly g = x.den();
    if (v_.is_infinite()) {
        r.m = static_cast<std::int64_t>(g.degree()) - f.degree();
        f = f.reversed();
        g = g.reversed();
    } else {
        auto [a, f1] = strip_factor(f, pi_);
        auto [b, g1] = strip_factor(g, pi_);
        r.m = a - b;
        f = std::move(f1);
        g = std::move(g1);
    }
    r.state = LocalElement::State::Known;
    r.rel = window_;
    const Poly mod = truncating_ ? Poly::monomial(pi_.field_ptr(), pi_.field().one(), window_) : pi_pow(window_);
    r.u = g.is_one() ? reduce(f, window_) : mul_mod(f, inverse_mod(g, mod), mod);
    return r;
}

LocalElement LocalField::mul(const LocalElement& a, const LocalElement& b) const
{
    if (a.is_lost() || b.is_lost()) return lost();
    if (a.is_zero()) return a;
    if (b.is_zero()) return b;
    LocalElement r(pi_.field_ptr());
    r.state = LocalElement::State::Known;
    r.m = a.m + b.m;
    r.rel = std::min(a.rel, b.rel);
    r.u = reduce(reduce(a.u, r.rel) * reduce(b.u, r.rel), r.rel);
    return r;
}

LocalElement LocalField::add(const LocalElement& a, const LocalElement& b) const
{
    if (a.is_lost() || b.is_lost()) return lost();
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    const std::int64_t m0 = std::min(a.m, b.m);
    // Both summands are known modulo pi^abs_prec.
    const std::int64_t abs_prec = std::min(a.m + a.rel, b.m + b.rel);
    const auto width = static_cast<unsigned>(abs_prec - m0);
    const auto shift = [&](const LocalElement& x) {
        const auto e = static_cast<unsigned>(x.m - m0);
        if (e >= width) return Poly(pi_.field_ptr());
        return reduce(reduce(x.u, width - e) * pi_pow(e), width);
    };
    Poly s = shift(a) + shift(b);
    if (s.is_zero()) return lost();
    auto [k, rest] = strip_factor(s, pi_);
    LocalElement r(pi_.field_ptr());
    r.state = LocalElement::State::Known;
    r.m = m0 + k;
    r.rel = width - static_cast<unsigned>(k);
    r.u = std::move(rest);
    return r;
}

LocalElement LocalField::frobenius(const LocalElement& a, unsigned k) const
{
    if (!a.is_known() || k == 0) return a;
    LocalElement r = a;
    const std::uint32_t q = pi_.field().q();
    for (unsigned i = 0; i < k; ++i) {
        // (u + pi^rel e)^q = u^q + pi^(q rel) e^q, so relative precision grows.
        const unsigned rel = static_cast<unsigned>(std::min<std::uint64_t>(std::uint64_t{r.rel} * q, window_));
        r.u = reduce(r.u.frobenius(1), rel);
        r.rel = rel;
        r.m *= q;
    }
    return r;
}

std::optional<LogUnits> LocalField::log_abs(const LocalElement& a) const
{
    if (a.is_zero()) return std::nullopt;
    if (a.is_lost()) throw DomainError("valuation lost to precision at " + v_.to_string());
    return LogUnits(-a.m * static_cast<std::int64_t>(v_.degree()));
}

LocalModule::LocalModule(const DrinfeldModule& M, const LocalField& K) : K_(K)
{
    for (const auto& a : M.phi_t().coeffs()) coeffs_.push_back(K.embed(a));
}

LocalElement LocalModule::apply_t(const LocalElement& x) const
{
    if (!x.is_known()) return x;
    LocalElement acc(K_.uniformizer().field_ptr());
    LocalElement xp = x;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i > 0) xp = K_.frobenius(xp, 1);
        if (coeffs_[i].is_zero()) continue;
        acc = K_.add(acc, K_.mul(coeffs_[i], xp));
        if (acc.is_lost()) return acc;
    }
    return acc;
}

}  // namespace drinfeld
