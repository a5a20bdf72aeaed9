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
#include <optional>
#include <vector>

#include "drinfeld/drinfeld.hpp"
#include "drinfeld/log_units.hpp"
#include "drinfeld/place.hpp"

namespace drinfeld {

/// A truncated element of the completion K_v.
///
/// A nonzero element is pi^m * u with u a unit known modulo pi^rel. At a finite
/// place (P) the uniformizer is P and u is a residue modulo P^rel. At infinity
/// the uniformizer is s = 1/t and u is a power series in s stored as a
/// polynomial in the same variable slot.
struct LocalElement {
    enum class State { Zero, Known, Lost };

    explicit LocalElement(FieldPtr field) : u(std::move(field)) {}

    State state = State::Zero;
    std::int64_t m = 0;
    Poly u;
    unsigned rel = 0;

    bool is_zero() const { return state == State::Zero; }
    bool is_known() const { return state == State::Known; }
    bool is_lost() const { return state == State::Lost; }
};

/// Arithmetic context for LocalElement at one place with a fixed window of
/// W uniformizer digits of relative precision.
class LocalField {
public:
    LocalField(Place v, unsigned window);

    const Place& place() const { return v_; }
    unsigned window() const { return window_; }
    const Poly& uniformizer() const { return pi_; }

    /// Exact embedding of x to full window precision.
    LocalElement embed(const RatFunc& x) const;

    LocalElement add(const LocalElement& a, const LocalElement& b) const;
    LocalElement mul(const LocalElement& a, const LocalElement& b) const;
    /// a^(q^k).
    LocalElement frobenius(const LocalElement& a, unsigned k) const;

    /// log_q |a|_v; nullopt for an exact zero. Throws DomainError if precision was lost.
    std::optional<LogUnits> log_abs(const LocalElement& a) const;

private:
    Poly reduce(const Poly& f, unsigned k) const;
    const Poly& pi_pow(unsigned k) const;
    LocalElement lost() const;

    Place v_;
    unsigned window_;
    Poly pi_;
    bool truncating_;
    mutable std::vector<Poly> pi_pows_;
};

/// phi_t applied in K_v, with the coefficients embedded once.
class LocalModule {
public:
    LocalModule(const DrinfeldModule& M, const LocalField& K);
    LocalElement apply_t(const LocalElement& x) const;
    const LocalField& field() const { return K_; }

private:
    const LocalField& K_;
    std::vector<LocalElement> coeffs_;
};

}  // namespace drinfeld
