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

#include <optional>
#include <string>
#include <vector>

#include "drinfeld/drinfeld.hpp"
#include "drinfeld/heights.hpp"
#include "drinfeld/log_units.hpp"
#include "drinfeld/place.hpp"

namespace drinfeld {

enum class IntegralityCondition {
    /// |alpha|_v <= 1 but |alpha - beta|_v < 1.
    DistanceBelowOne,
    /// |alpha|_v > 1 and |beta|_v > 1.
    BothPoles,
    /// Only in the strict variant: min(|alpha|_v, |beta|_v) > 1 or |alpha - beta|_v < 1.
    StrictVariant,
};
const char* to_string(IntegralityCondition c);

struct Violation {
    Place place;
    IntegralityCondition condition;
};

/// Galois conjugation acts trivially on K-rational points, so the conjugate
/// quantifiers of S-integrality reduce to a single check per place.
inline constexpr const char* kRationalReductionNote =
    "alpha and beta are K-rational: Galois conjugates coincide, one check per place";

struct IntegralityReport {
    std::optional<Poly> Q;
    RatFunc point;
    RatFunc alpha;
    std::vector<Violation> violations;
    bool is_S_integral = true;
    /// Verdict of the variant |alpha - beta|_v >= 1 and min(|alpha|_v, |beta|_v) <= 1.
    bool strict_is_S_integral = true;
    /// The two verdicts differ (never expected over K; kept as a guard).
    bool variants_disagree = false;
    /// Places examined: the joint support of alpha, beta and alpha - beta outside S.
    /// Every other place has |alpha| = |beta| = |alpha - beta| = 1 and passes both tests.
    std::vector<Place> checked;
};

struct IntegralityOptions {
    /// Use the strict variant for the verdict instead of the conjugate-case definition.
    bool strict = false;
    std::uint64_t seed = 0;
};

/// Checks whether beta is S-integral with respect to alpha.
IntegralityReport is_S_integral(const RatFunc& beta, const RatFunc& alpha, const std::vector<Place>& S,
                                const IntegralityOptions& opts = {});

struct SiegelScan {
    std::vector<IntegralityReport> hits;
    /// hits_per_degree[k] and scanned_per_degree[k] for 1 <= k <= deg_max (index 0 unused).
    std::vector<unsigned> hits_per_degree;
    std::vector<unsigned> scanned_per_degree;
    std::optional<unsigned> largest_hit_degree;
    std::optional<Poly> alpha_order;
    /// beta could not be certified nontorsion within the budget.
    bool beta_undecided = false;
    std::string note = kRationalReductionNote;
};

struct SiegelOptions {
    IntegralityOptions integrality;
    HeightOptions heights;
    unsigned torsion_cap = 32;
    unsigned workers = 0;
};

/// All monic Q with 1 <= deg Q <= deg_max such that phi_Q(beta) is S-integral
/// with respect to alpha. alpha must be 0 or torsion and beta must not be torsion;
/// DomainError otherwise.
SiegelScan scan_siegel(const DrinfeldModule& M, const RatFunc& beta, const RatFunc& alpha, const std::vector<Place>& S,
                       unsigned deg_max, const SiegelOptions& opts = {});

/// Brute-force instance of the lower bound |phi_Q(beta)|_w >= C_w |P|_w^(ord_P Q)
/// at a finite place w = (P) where the module and beta are integral.
struct NiceTrickBound {
    Place place;
    /// Minimal-degree monic G with |phi_G(beta)|_w < |P|_w, if one has degree <= generator_degree.
    /// With generator_degree = 0 the search runs to (d + 1) deg P, which always finds it.
    std::optional<Poly> generator;
    /// log_q C_w = min(log_q|P|_w, log_q|phi_G(beta)|_w).
    LogUnits log_constant;
};
NiceTrickBound nice_trick_bound(const DrinfeldModule& M, const RatFunc& beta, const Place& w,
                                unsigned generator_degree = 0);

/// Result of testing that {F : |phi_F(beta)|_w < q^log_eps} is an ideal, on monic F of degree <= deg_max.
struct IdealCheck {
    std::optional<Poly> generator;
    unsigned members = 0;
    /// Every member is a multiple of the generator and every monic multiple of it is a member.
    bool closed = true;
};
IdealCheck ideal_closure(const DrinfeldModule& M, const RatFunc& beta, const Place& w, const LogUnits& log_eps,
                         unsigned deg_max);

/// min over monic Q of degree k of log_q|phi_Q(beta) - alpha|_w - log_q|Q|_w, for k = 1..deg_max
/// (index 0 holds the value for Q = 1).
std::vector<LogUnits> nice_trick_again_profile(const DrinfeldModule& M, const RatFunc& beta, const RatFunc& alpha,
                                               const Place& w, unsigned deg_max);

}  // namespace drinfeld
