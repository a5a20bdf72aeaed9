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
#include <string>
#include <vector>

#include "drinfeld/drinfeld.hpp"
#include "drinfeld/log_units.hpp"
#include "drinfeld/place.hpp"

namespace drinfeld {

struct HeightOptions {
    /// Iteration budget for orbits that stay in the band 1 < |x|_v <= M_v.
    unsigned n_max = 64;
    /// Relative precision of LocalElement windows, in uniformizer digits.
    unsigned window = 64;
    /// Window doublings before falling back to exact iteration.
    unsigned retries = 3;
    /// Orbits are iterated exactly while max(deg num, deg den) stays below this.
    int exact_prefix_degree = 256;
    /// Degree guard for the exact fallback.
    int exact_degree_bound = 4096;
};

/// How a local height was decided.
enum class HeightReason {
    Escaped,        ///< |x_n|_v exceeded the escape threshold; closed form applies
    Integral,       ///< orbit entered the integral ball of the normalized module
    InvariantBall,  ///< orbit entered a phi_t-stable ball of K_v
    Periodic,       ///< exact orbit repeated a value
    Zero,           ///< orbit reached 0
    Budget,         ///< n_max exhausted inside the band (uncertified)
    DegreeGuard,    ///< exact fallback exceeded its degree bound (uncertified)
};

const char* to_string(HeightReason r);

struct LocalHeight {
    Place place;
    LogUnits value;
    bool certified = false;
    std::optional<unsigned> escape_index;
    /// phi_t steps taken.
    unsigned n_used = 0;
    unsigned precision_retries = 0;
    bool exact_fallback = false;
    HeightReason reason = HeightReason::Budget;
    std::string diagnostic;
};

/// Data for certifying bounded orbits, computed once per module.
struct BoundednessData {
    Normalization norm;
};

BoundednessData boundedness_data(const DrinfeldModule& M);

/// Decides whether the ball {x in K_v : ord_v(x) >= -R} is mapped into itself by phi_t.
bool ball_is_stable(const DrinfeldModule& M, const Place& v, std::int64_t R);

/// Largest R within 8 of the escape threshold for which ball_is_stable holds.
std::optional<std::int64_t> stable_radius(const DrinfeldModule& M, const Place& v);

/// log_q M_v where M_v = max(max_{i<d} (|a_i|/|a_d|)^(1/(q^d - q^i)), |a_d|^(-1/(q^d - 1))).
LogUnits escape_threshold(const DrinfeldModule& M, const Place& v);

/// Closed-form local height for an orbit that escapes at step n with log_q|x_n|_v = L.
LogUnits escape_value(const DrinfeldModule& M, const Place& v, unsigned n, const LogUnits& L);

LocalHeight local_height(const DrinfeldModule& M, const RatFunc& beta, const Place& v,
                         const HeightOptions& opts = {});
LocalHeight local_height(const DrinfeldModule& M, const RatFunc& beta, const Place& v, const HeightOptions& opts,
                         const BoundednessData& data);

/// Bad places of M, poles of beta, and infinity, sorted.
std::vector<Place> height_support(const DrinfeldModule& M, const RatFunc& beta);

struct GlobalHeight {
    LogUnits value;
    bool certified = true;
    std::vector<LocalHeight> locals;
};

GlobalHeight global_height(const DrinfeldModule& M, const RatFunc& beta, const HeightOptions& opts = {});
GlobalHeight global_height(const DrinfeldModule& M, const RatFunc& beta, const HeightOptions& opts,
                           const BoundednessData& data);

/// h(phi_{t^k}(beta)) / q^(dk) for k = 0..n, computed exactly. Throws DomainError
/// when an iterate exceeds `degree_bound`.
std::vector<LogUnits> naive_height_sequence(const DrinfeldModule& M, const RatFunc& beta, unsigned n,
                                            int degree_bound = 1 << 18);

/// log_q|phi_{t^n}(beta)|_v for n = 0..count-1 via window arithmetic; nullopt
/// entries mark iterates equal to zero.
std::vector<std::optional<LogUnits>> orbit_log_abs(const DrinfeldModule& M, const RatFunc& beta, const Place& v,
                                                   unsigned count, unsigned window = 64);

struct TorsionResult {
    enum class Kind { Torsion, NotTorsion, Undecided };
    Kind kind = Kind::Undecided;
    std::optional<Poly> order;
    GlobalHeight height;
    /// Number of Krylov vectors examined.
    unsigned steps = 0;
    std::string diagnostic;
};

const char* to_string(TorsionResult::Kind k);

/// Minimal monic Q with phi_Q(beta) = 0, found as the first F_q-linear
/// dependence among beta, phi_t(beta), phi_t^2(beta), ...
TorsionResult torsion_order(const DrinfeldModule& M, const RatFunc& beta, unsigned cap = 32,
                            const HeightOptions& opts = {});

/// The exact orbit beta, phi_t(beta), ... with memoization; phi_Q(beta) is
/// assembled from it by linearity.
class Orbit {
public:
    Orbit(const DrinfeldModule& M, RatFunc beta);
    const RatFunc& at(unsigned k);
    RatFunc apply(const Poly& Q);
    const DrinfeldModule& module() const { return M_; }

private:
    const DrinfeldModule& M_;
    std::vector<RatFunc> xs_;
};

}  // namespace drinfeld
