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

#include "drinfeld/place.hpp"

#include <algorithm>

#include "drinfeld/factor.hpp"

namespace drinfeld {

Place Place::infinity(const FieldPtr& field) { return Place(true, Poly::t(field)); }

Place Place::finite(const Poly& P)
{
    if (!P.is_monic()) throw DomainError("place polynomial " + P.to_string() + " is not monic");
    if (!is_irreducible(P)) throw DomainError("place polynomial " + P.to_string() + " is not irreducible");
    return Place(false, P);
}

Place Place::finite_unchecked(const Poly& P) { return Place(false, P); }

const Poly& Place::poly() const
{
    if (infinite_) throw DomainError("the infinite place has no polynomial");
    return P_;
}

std::string Place::to_string() const { return infinite_ ? "inf" : P_.to_string(); }

std::strong_ordering operator<=>(const Place& a, const Place& b)
{
    if (a.infinite_ != b.infinite_) return a.infinite_ ? std::strong_ordering::greater : std::strong_ordering::less;
    if (a.infinite_) return std::strong_ordering::equal;
    return a.P_ <=> b.P_;
}

std::optional<std::int64_t> ord_or_inf(const RatFunc& x, const Place& v)
{
    if (x.is_zero()) return std::nullopt;
    if (v.is_infinite()) return static_cast<std::int64_t>(x.den().degree()) - x.num().degree();
    const Poly& P = v.poly();
    // Only one of num, den can be divisible by P.
    const std::int64_t a = strip_factor(x.num(), P).first;
    if (a > 0) return a;
    return -strip_factor(x.den(), P).first;
}

std::int64_t ord(const RatFunc& x, const Place& v)
{
    auto o = ord_or_inf(x, v);
    if (!o) throw DomainError("valuation of zero is +infinity");
    return *o;
}

std::int64_t log_abs_int(const RatFunc& x, const Place& v) { return -ord(x, v) * v.degree(); }

LogUnits log_abs(const RatFunc& x, const Place& v) { return LogUnits(log_abs_int(x, v)); }

std::vector<Place> prime_places(const Poly& f, std::uint64_t seed)
{
    std::vector<Place> out;
    if (f.degree() <= 0) return out;
    for (const auto& [P, m] : factor(f, seed).factors) out.push_back(Place::finite_unchecked(P));
    return out;
}

std::vector<Place> support(const RatFunc& x, std::uint64_t seed)
{
    if (x.is_zero()) throw DomainError("support of zero is undefined");
    std::vector<Place> out = prime_places(x.num(), seed);
    auto den = prime_places(x.den(), seed);
    out.insert(out.end(), den.begin(), den.end());
    std::sort(out.begin(), out.end());
    if (x.num().degree() != x.den().degree()) out.push_back(Place::infinity(x.field_ptr()));
    return out;
}

LogUnits weil_height(const RatFunc& x)
{
    if (x.is_zero()) return LogUnits(0);
    return LogUnits(static_cast<long>(x.size_degree()));
}

std::vector<Place> finite_places_up_to(const FieldPtr& field, unsigned max_degree)
{
    std::vector<Place> out;
    for (unsigned n = 1; n <= max_degree; ++n)
        for (const Poly& P : monic_irreducibles(field, n)) out.push_back(Place::finite_unchecked(P));
    return out;
}

}  // namespace drinfeld
