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

/// (log_q|phi_Q(beta)|_v - log_q|gamma_Q|_v) / q^(d deg Q).
///
/// This is the average of log_q|y - beta|_v over the q^(d deg Q) roots y of
/// phi_Q, obtained from the leading-coefficient factorisation of phi_Q(X) - phi_Q(beta)
/// without finding any root. Throws DomainError when phi_Q(beta) = 0.
LogUnits torsion_average(const DrinfeldModule& M, const RatFunc& beta, const Poly& Q, const Place& v);

/// Average over the roots y != beta when beta may be torsion.
///
/// If phi_Q(beta) = 0 the factor X - beta is removed through the derivative
/// of phi_Q, which is the constant Q, giving (log_q|Q|_v - log_q|gamma_Q|_v) / q^(d deg Q).
/// Otherwise the value coincides with torsion_average.
LogUnits excluded_average(const DrinfeldModule& M, const RatFunc& beta, const Poly& Q, const Place& v);

struct PlaceTarget {
    LogUnits value;
    bool certified = true;
    LogUnits local_height;
};

/// h_v(beta) - log_q|a_d|_v / (q^d - 1). For torsion beta the local height is 0.
PlaceTarget per_place_target(const DrinfeldModule& M, const RatFunc& beta, const Place& v,
                             const HeightOptions& opts = {});

struct AverageRow {
    Poly Q;
    Place place;
    LogUnits average;
    LogUnits target;
    /// |average - target|
    LogUnits gap;
    /// phi_Q(beta) = 0, so the excluded form was used.
    bool annihilated = false;
    bool target_certified = true;
};

struct ZeroSumRow {
    Poly Q;
    /// Sum of the average numerators over every place where phi_Q(beta), gamma_Q or Q is not a unit.
    LogUnits sum;
    std::vector<Place> places;
};

struct ConvergenceTable {
    TorsionResult::Kind torsion = TorsionResult::Kind::Undecided;
    std::optional<Poly> order;
    GlobalHeight height;
    std::vector<AverageRow> rows;
    std::vector<ZeroSumRow> zero_sums;
};

struct TableOptions {
    HeightOptions heights;
    /// Also compute the fixed-Q sums over all places (factors each phi_Q(beta)).
    bool zero_sums = true;
    unsigned torsion_cap = 32;
    unsigned workers = 0;
};

/// Rows for every monic Q with 1 <= deg Q <= deg_max and every place in `places`.
ConvergenceTable convergence_table(const DrinfeldModule& M, const RatFunc& beta, const std::vector<Place>& places,
                                   unsigned deg_max, const TableOptions& opts = {});

struct GapLaw {
    Place place;
    /// max of gap * q^(d deg Q) over the fitting degrees.
    LogUnits constant;
    /// Rows with deg Q in the checked range that violate gap <= C / q^(d deg Q).
    std::vector<const AverageRow*> violations;
    /// max of gap * q^(d deg Q) over the checked range.
    LogUnits worst;
};

/// Fits C_v on rows with deg Q <= fit_degree and checks the rows with
/// check_from <= deg Q <= check_to against the law gap <= C_v / q^(d deg Q).
std::vector<GapLaw> fit_gap_law(const DrinfeldModule& M, const ConvergenceTable& table, unsigned fit_degree,
                                unsigned check_from, unsigned check_to);

}  // namespace drinfeld
