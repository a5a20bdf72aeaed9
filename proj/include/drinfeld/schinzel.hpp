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
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "drinfeld/drinfeld.hpp"
#include "drinfeld/heights.hpp"
#include "drinfeld/log_units.hpp"
#include "drinfeld/place.hpp"

namespace drinfeld {

/// The residue order and the valuation conditions disagreed on some (Q, v).
/// This signals a bug, never a property of the input.
class CharacterizationMismatch : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// mu(Q) in {-1, 0, 1}; DomainError unless Q is monic.
int mobius(const Poly& Q);

/// All monic divisors of a monic Q, sorted by degree then coefficients.
std::vector<Poly> monic_divisors(const Poly& Q, std::uint64_t seed = 0);

/// Minimal monic Q with phi-bar_Q(x) = 0, from the first F_q-linear dependence
/// in the Krylov sequence x, T x, T^2 x, ... of T = phi-bar_t on F_{q^l} = F_q^l.
/// The zero element has order 1.
Poly residue_order(const ResidueModule& R, const Poly& x);

/// Largest residue field size q^l accepted by the enumerating routines.
inline constexpr unsigned kMaxEnumerationDegree = 12;

/// #{x in F_{q^l} : phi-bar_P(x) = 0}, by enumeration. DomainError when l > 12.
std::uint64_t kernel_size(const ResidueModule& R, const Poly& P);

/// Number of residue field elements of each exact order (Krylov), by enumeration.
std::map<Poly, std::uint64_t> order_census(const ResidueModule& R);

/// sum over monic P | Q of mu(Q / P) kernel_size(P).
std::int64_t inclusion_exclusion_count(const ResidueModule& R, const Poly& Q);

struct DivisorValuation {
    Poly P;
    LogUnits log_abs;
};

struct ValuationEvidence {
    bool holds = false;
    /// log_q|phi_Q(beta)|_v; nullopt when phi_Q(beta) = 0.
    std::optional<LogUnits> log_phi_Q;
    /// log_q|phi_P(beta)|_v for every proper monic divisor P of Q.
    std::vector<DivisorValuation> divisors;
};

/// |phi_Q(beta)|_v < 1 and |phi_P(beta)|_v >= 1 for every proper monic divisor P of Q.
/// DomainError at infinity, at bad places and when beta is not v-integral.
ValuationEvidence valuation_conditions(const DrinfeldModule& M, const RatFunc& beta, const Poly& Q, const Place& v);

struct PrimitiveHit {
    Poly Q;
    Place place;
    Poly residue_order;
    ValuationEvidence evidence;
};

struct SchinzelOptions {
    HeightOptions heights;
    /// Krylov cap for the torsion check on beta; 0 skips the check.
    unsigned torsion_cap = 32;
    unsigned workers = 0;
    /// Also find every primitive place of any degree by factoring phi_Q(beta).
    bool exact_search = false;
};

/// Places of degree <= place_deg_max outside S, of good reduction, with beta
/// integral, at which the reduction of beta has exact order Q. Each scanned place
/// is also tested with valuation_conditions; any disagreement throws
/// CharacterizationMismatch. DomainError when beta is torsion.
std::vector<PrimitiveHit> primitive_place_search(const DrinfeldModule& M, const RatFunc& beta, const Poly& Q,
                                                 const std::vector<Place>& S, unsigned place_deg_max,
                                                 const SchinzelOptions& opts = {});

/// Every primitive place for Q, of any degree: such a place divides the
/// numerator of phi_Q(beta), so it is found by factoring that numerator. The
/// results are checked against residue orders like primitive_place_search.
std::vector<PrimitiveHit> primitive_places_exact(const DrinfeldModule& M, const RatFunc& beta, const Poly& Q,
                                                 const std::vector<Place>& S, const SchinzelOptions& opts = {});

struct FrontierRow {
    Poly Q;
    std::optional<PrimitiveHit> first_hit;
    unsigned hits = 0;
    /// With exact_search: the number of primitive places of any degree and the smallest one.
    std::optional<unsigned> exact_hits;
    std::optional<Place> smallest_exact;
};

struct SchinzelFrontier {
    std::vector<FrontierRow> rows;
    /// 1 + the largest degree of a Q without a hit (1 when every Q hits).
    unsigned empirical_N = 1;
    /// With exact_search: 1 + the largest degree of a Q with no primitive place at all.
    std::optional<unsigned> exact_N;
    /// (Q, v) pairs on which both characterizations were evaluated.
    std::uint64_t pairs_checked = 0;
    /// Places that passed the admissibility filters.
    std::vector<Place> admissible;
    bool beta_undecided = false;
};

/// Runs the primitive place search for every monic Q with 1 <= deg Q <= qdeg_max.
/// Throws CharacterizationMismatch on the first (Q, v) where the two tests disagree.
SchinzelFrontier schinzel_frontier(const DrinfeldModule& M, const RatFunc& beta, const std::vector<Place>& S,
                                   unsigned qdeg_max, unsigned place_deg_max, const SchinzelOptions& opts = {});

/// One comparison |lhs| = |rhs| of an ultrametric lemma, in log_q units.
struct LemmaCheck {
    bool applicable = false;
    LogUnits lhs;
    LogUnits rhs;
    bool holds() const { return !applicable || lhs == rhs; }
};

/// F(X) = sum_{i >= 1} b_i X^i with |b_i|_w <= 1: if |x|_w < |b_1|_w then |F(x)|_w = |b_1 x|_w.
/// b[0] is the coefficient of X. Not applicable when some b_i is not w-integral.
LemmaCheck lemma_small_x(const std::vector<RatFunc>& b, const RatFunc& x, const Place& w);

/// For v = (P) of degree l with M v-integral: |x|_v < |P|_v^(1/(q^l - 1)) implies |phi_Q(x)|_v = |Q x|_v.
LemmaCheck lemma_more_precise(const DrinfeldModule& M, const RatFunc& x, const Poly& Q, const Place& v);

/// Over K = F_q(t): if |x|_v < 1 and q^(deg v) > 2 then |phi_Q(x)|_v = |Q x|_v (M v-integral).
LemmaCheck corollary_util(const DrinfeldModule& M, const RatFunc& x, const Poly& Q, const Place& v);

/// The admissible set T of the one-place lemma, restricted to places of degree
/// <= place_deg_max, and the Moebius sums over it.
struct OneVSum {
    std::vector<Place> places;
    /// sum_{P | Q} mu(Q / P) log_q|phi_P(beta)|_v for each place.
    std::vector<LogUnits> per_place;
    LogUnits total;
    /// -deg Q; the lemma asserts total >= bound.
    LogUnits bound;
};
OneVSum lemma_one_v(const DrinfeldModule& M, const RatFunc& beta, const Poly& Q, const std::vector<Place>& S,
                    unsigned place_deg_max);

}  // namespace drinfeld
