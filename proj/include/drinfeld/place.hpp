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
#include <optional>
#include <string>
#include <vector>

#include "drinfeld/log_units.hpp"
#include "drinfeld/ratfunc.hpp"

namespace drinfeld {

/// A place of F_q(t): the place at infinity (degree 1) or the finite place
/// attached to a monic irreducible polynomial P (degree deg P).
class Place {
public:
    static Place infinity(const FieldPtr& field);
    /// Validates that P is monic and irreducible.
    static Place finite(const Poly& P);
    /// For polynomials already known to be monic irreducible (enumeration, factoring output).
    static Place finite_unchecked(const Poly& P);

    bool is_infinite() const { return infinite_; }
    bool is_finite() const { return !infinite_; }
    /// The irreducible polynomial; throws DomainError at infinity.
    const Poly& poly() const;
    unsigned degree() const { return infinite_ ? 1u : static_cast<unsigned>(P_.degree()); }
    const FieldPtr& field_ptr() const { return P_.field_ptr(); }

    /// "inf" or the polynomial string.
    std::string to_string() const;

    friend bool operator==(const Place& a, const Place& b)
    {
        return a.infinite_ == b.infinite_ && (a.infinite_ || a.P_ == b.P_);
    }
    /// Finite places by degree then coefficients; infinity last.
    friend std::strong_ordering operator<=>(const Place& a, const Place& b);

private:
    Place(bool inf, Poly P) : infinite_(inf), P_(std::move(P)) {}

    bool infinite_;
    Poly P_;
};

/// Valuation ord_v(x); throws DomainError for x = 0.
std::int64_t ord(const RatFunc& x, const Place& v);
/// ord_v(x), or nullopt when x = 0 (valuation +infinity).
std::optional<std::int64_t> ord_or_inf(const RatFunc& x, const Place& v);
/// logq|x|_v = -ord_v(x) * deg(v); throws DomainError for x = 0.
LogUnits log_abs(const RatFunc& x, const Place& v);
/// Integer form of log_abs.
std::int64_t log_abs_int(const RatFunc& x, const Place& v);
/// Places where ord_v(x) != 0, sorted; throws DomainError for x = 0.
std::vector<Place> support(const RatFunc& x, std::uint64_t seed = 0);
/// Finite places dividing a nonzero polynomial, sorted.
std::vector<Place> prime_places(const Poly& f, std::uint64_t seed = 0);
/// h(x) = sum_v max(logq|x|_v, 0); h(0) = 0.
LogUnits weil_height(const RatFunc& x);

/// Monic irreducible places of degree 1..max_degree in canonical order.
std::vector<Place> finite_places_up_to(const FieldPtr& field, unsigned max_degree);

}  // namespace drinfeld
