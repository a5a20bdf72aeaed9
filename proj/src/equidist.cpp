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
#include "drinfeld/equidist.hpp"

#include <algorithm>
#include <map>

#include "drinfeld/parallel.hpp"

namespace drinfeld {

namespace {

mpz_class root_count(const DrinfeldModule& M, const Poly& Q)
{
    return mpz_pow(M.q(), static_cast<unsigned long>(M.rank()) * static_cast<unsigned long>(Q.degree()));
}

void require_monic(const Poly& Q)
{
    if (!Q.is_monic()) throw DomainError("averages need a monic Q");
}

LogUnits average_from(const DrinfeldModule& M, const RatFunc& value, const Poly& Q, const Place& v)
{
    return (log_abs(value, v) - log_abs_gamma(M, Q, v)) / mpq_class(root_count(M, Q));
}

std::vector<Place> merged(std::vector<Place> a, const std::vector<Place>& b)
{
    a.insert(a.end(), b.begin(), b.end());
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
    return a;
}

}  // namespace

LogUnits torsion_average(const DrinfeldModule& M, const RatFunc& beta, const Poly& Q, const Place& v)
{
    require_monic(Q);
    const RatFunc x = apply(M, Q, beta);
    if (x.is_zero()) throw DomainError("phi_Q(beta) = 0; use excluded_average");
    return average_from(M, x, Q, v);
}

LogUnits excluded_average(const DrinfeldModule& M, const RatFunc& beta, const Poly& Q, const Place& v)
{
    require_monic(Q);
    const RatFunc x = apply(M, Q, beta);
    return average_from(M, x.is_zero() ? RatFunc(Q) : x, Q, v);
}

PlaceTarget per_place_target(const DrinfeldModule& M, const RatFunc& beta, const Place& v, const HeightOptions& opts)
{
    const LocalHeight h = local_height(M, beta, v, opts);
    const mpz_class denom = mpz_pow(M.q(), M.rank()) - 1;
    PlaceTarget out;
    out.local_height = h.value;
    out.certified = h.certified;
    out.value = h.value - log_abs(M.a_d(), v) / mpq_class(denom);
    return out;
}

ConvergenceTable convergence_table(const DrinfeldModule& M, const RatFunc& beta, const std::vector<Place>& places,
                                   unsigned deg_max, const TableOptions& opts)
{
    ConvergenceTable table;
    const TorsionResult tr = torsion_order(M, beta, opts.torsion_cap, opts.heights);
    table.torsion = tr.kind;
    table.order = tr.order;
    table.height = tr.height;

    std::vector<PlaceTarget> targets;
    for (const Place& v : places) targets.push_back(per_place_target(M, beta, v, opts.heights));

    std::vector<Poly> qs;
    for (unsigned n = 1; n <= deg_max; ++n)
        for (Poly& Q : monic_polys_of_degree(M.field_ptr(), n)) qs.push_back(std::move(Q));

    // phi_{t^k}(beta) for k <= deg_max, shared read-only by the workers.
    std::vector<RatFunc> orbit{beta};
    for (unsigned k = 1; k <= deg_max; ++k) orbit.push_back(M.apply_t(orbit.back()));

    std::vector<std::vector<AverageRow>> rows(qs.size());
    std::vector<std::optional<ZeroSumRow>> sums(qs.size());
    parallel_for(
        qs.size(),
        [&](std::size_t i) {
            const Poly& Q = qs[i];
            RatFunc x(M.field_ptr());
            for (int k = 0; k <= Q.degree(); ++k) {
                const Fq c = Q.coeff(static_cast<std::size_t>(k));
                if (c.v != 0) x += RatFunc::constant(M.field_ptr(), c) * orbit[static_cast<std::size_t>(k)];
            }
            const bool annihilated = x.is_zero();
            const RatFunc numerator_value = annihilated ? RatFunc(Q) : x;
            for (std::size_t j = 0; j < places.size(); ++j) {
                const LogUnits avg = average_from(M, numerator_value, Q, places[j]);
                rows[i].push_back(AverageRow{Q, places[j], avg, targets[j].value, abs(avg - targets[j].value),
                                             annihilated, targets[j].certified});
            }
            if (opts.zero_sums) {
                std::vector<Place> all = merged(support(numerator_value, M.seed()), support(M.a_d(), M.seed()));
                all = merged(std::move(all), {Place::infinity(M.field_ptr())});
                LogUnits total;
                for (const Place& v : all) total += average_from(M, numerator_value, Q, v);
                sums[i] = ZeroSumRow{Q, total, std::move(all)};
            }
        },
        opts.workers);

    for (auto& r : rows)
        for (auto& row : r) table.rows.push_back(std::move(row));
    for (auto& s : sums)
        if (s) table.zero_sums.push_back(std::move(*s));
    return table;
}

std::vector<GapLaw> fit_gap_law(const DrinfeldModule& M, const ConvergenceTable& table, unsigned fit_degree,
                                unsigned check_from, unsigned check_to)
{
    std::map<Place, GapLaw> laws;
    auto scaled = [&](const AverageRow& row) { return row.gap * mpq_class(root_count(M, row.Q)); };
    for (const AverageRow& row : table.rows) {
        auto it = laws.find(row.place);
        if (it == laws.end()) it = laws.emplace(row.place, GapLaw{row.place, LogUnits(0), {}, LogUnits(0)}).first;
        if (static_cast<unsigned>(row.Q.degree()) <= fit_degree) it->second.constant = max(it->second.constant, scaled(row));
    }
    for (const AverageRow& row : table.rows) {
        const auto deg = static_cast<unsigned>(row.Q.degree());
        if (deg < check_from || deg > check_to) continue;
        GapLaw& law = laws.at(row.place);
        const LogUnits s = scaled(row);
        law.worst = max(law.worst, s);
        if (s > law.constant) law.violations.push_back(&row);
    }
    std::vector<GapLaw> out;
    for (auto& [v, law] : laws) out.push_back(std::move(law));
    return out;
}

}  // namespace drinfeld
