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

/// The orbit of a w-integral point under a w-integral module, computed in
/// F_q[t]/(P^N) for a finite place w = (P).
///
/// Valuations below N are exact; a residue that vanishes mod P^N only says
/// ord_P >= N, and callers fall back to exact arithmetic in that case.
class AdicOrbit {
public:
    /// Throws DomainError when w is infinite or M or beta is not w-integral.
    AdicOrbit(const DrinfeldModule& M, const RatFunc& beta, const Place& w, unsigned precision = 32);

    const Place& place() const { return w_; }
    const Poly& modulus() const { return mod_; }
    unsigned precision() const { return N_; }

    /// The residue of an integral x; throws DomainError for non-integral x.
    Poly embed(const RatFunc& x) const;
    /// phi_t applied to a residue.
    Poly apply_t(const Poly& x) const;
    /// phi_(t^k)(beta) mod P^N. Extends the cached orbit, so it is not safe to
    /// call concurrently unless the orbit was extended beforehand via prepare().
    const Poly& at(unsigned k);
    void prepare(unsigned k) { (void)at(k); }
    /// phi_Q(beta) mod P^N, using only the prepared part of the orbit.
    Poly value(const Poly& Q) const;
    /// ord_P of a residue, or nullopt when it vanishes mod P^N.
    std::optional<std::int64_t> ord(const Poly& residue) const;

private:
    Place w_;
    unsigned N_;
    Poly P_;
    Poly mod_;
    std::vector<Poly> coeffs_;
    std::vector<Poly> xs_;
};

/// log_q|phi_Q(beta) - alpha|_w, from the adic orbit when the valuation is
/// visible there and from exact arithmetic otherwise. nullopt means the value is 0.
std::optional<LogUnits> log_abs_phi_minus(const AdicOrbit& orbit, const DrinfeldModule& M, const RatFunc& beta,
                                          const Poly& Q, const RatFunc& alpha);

}  // namespace drinfeld
