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
#include "drinfeld/siegel.hpp"

#include <algorithm>

#include "drinfeld/adic.hpp"
#include "drinfeld/parallel.hpp"

namespace drinfeld {

const char* to_string(IntegralityCondition c)
{
    switch (c) {
    case IntegralityCondition::DistanceBelowOne: return "distance-below-one";
    case IntegralityCondition::BothPoles: return "both-poles";
    case IntegralityCondition::StrictVariant: return "strict-variant";
    }
    return "?";
}

namespace {

/// log_q|x|_v with nullopt standing for log 0 = -infinity.
std::optional<LogUnits> log_or_minus_inf(const RatFunc& x, const Place& v)
{
    if (x.is_zero()) return std::nullopt;
    return log_abs(x, v);
}

bool at_most_zero(const std::optional<LogUnits>& l) { return !l || l->sign() <= 0; }
bool at_least_zero(const std::optional<LogUnits>& l) { return l && l->sign() >= 0; }

void add_support(std::vector<Place>& out, const RatFunc& x, std::uint64_t seed)
{
    if (x.is_zero()) return;
    for (Place& v : support(x, seed)) out.push_back(std::move(v));
}

}  // namespace

IntegralityReport is_S_integral(const RatFunc& beta, const RatFunc& alpha, const std::vector<Place>& S,
                                const IntegralityOptions& opts)
{
    const FieldPtr& F = beta.num().field_ptr();
    const RatFunc diff = alpha - beta;
    IntegralityReport report{std::nullopt, beta, alpha, {}, true, true, false, {}};

    std::vector<Place> places{Place::infinity(F)};
    add_support(places, alpha, opts.seed);
    add_support(places, beta, opts.seed);
    add_support(places, diff, opts.seed);
    if (diff.is_zero()) {
        // |alpha - beta|_v = 0 everywhere; the degree-one places are enough to exhibit violations.
        for (Place& v : finite_places_up_to(F, 1)) places.push_back(std::move(v));
    }
    std::sort(places.begin(), places.end());
    places.erase(std::unique(places.begin(), places.end()), places.end());

    for (const Place& v : places) {
        if (std::find(S.begin(), S.end(), v) != S.end()) continue;
        report.checked.push_back(v);
        const auto la = log_or_minus_inf(alpha, v);
        const auto lb = log_or_minus_inf(beta, v);
        const auto ld = log_or_minus_inf(diff, v);

        std::optional<IntegralityCondition> failed;
        if (at_most_zero(la)) {
            if (!at_least_zero(ld)) failed = IntegralityCondition::DistanceBelowOne;
        } else if (!at_most_zero(lb)) {
            failed = IntegralityCondition::BothPoles;
        }
        const bool strict_ok = at_least_zero(ld) && (at_most_zero(la) || at_most_zero(lb));

        if (failed) report.is_S_integral = false;
        if (!strict_ok) report.strict_is_S_integral = false;
        if (opts.strict) {
            if (!strict_ok) report.violations.push_back({v, IntegralityCondition::StrictVariant});
        } else if (failed) {
            report.violations.push_back({v, *failed});
        }
    }
    report.variants_disagree = report.is_S_integral != report.strict_is_S_integral;
    if (opts.strict) report.is_S_integral = report.strict_is_S_integral;
    return report;
}

SiegelScan scan_siegel(const DrinfeldModule& M, const RatFunc& beta, const RatFunc& alpha, const std::vector<Place>& S,
                       unsigned deg_max, const SiegelOptions& opts)
{
    SiegelScan scan;
    if (!alpha.is_zero()) {
        const TorsionResult ta = torsion_order(M, alpha, opts.torsion_cap, opts.heights);
        if (ta.kind != TorsionResult::Kind::Torsion)
            throw DomainError("alpha must be 0 or a torsion point (" + std::string(to_string(ta.kind)) + ")");
        scan.alpha_order = ta.order;
    }
    const TorsionResult tb = torsion_order(M, beta, opts.torsion_cap, opts.heights);
    if (tb.kind == TorsionResult::Kind::Torsion) throw DomainError("beta is a torsion point");
    scan.beta_undecided = tb.kind == TorsionResult::Kind::Undecided;

    std::vector<Poly> qs;
    for (unsigned n = 1; n <= deg_max; ++n)
        for (Poly& Q : monic_polys_of_degree(M.field_ptr(), n)) qs.push_back(std::move(Q));
    std::vector<RatFunc> orbit{beta};
    for (unsigned k = 1; k <= deg_max; ++k) orbit.push_back(M.apply_t(orbit.back()));

    std::vector<std::optional<IntegralityReport>> reports(qs.size());
    parallel_for(
        qs.size(),
        [&](std::size_t i) {
            RatFunc x(M.field_ptr());
            for (int k = 0; k <= qs[i].degree(); ++k) {
                const Fq c = qs[i].coeff(static_cast<std::size_t>(k));
                if (c.v != 0) x += RatFunc::constant(M.field_ptr(), c) * orbit[static_cast<std::size_t>(k)];
            }
            IntegralityReport r = is_S_integral(x, alpha, S, opts.integrality);
            r.Q = qs[i];
            reports[i] = std::move(r);
        },
        opts.workers);

    scan.hits_per_degree.assign(deg_max + 1, 0);
    scan.scanned_per_degree.assign(deg_max + 1, 0);
    for (auto& r : reports) {
        const auto deg = static_cast<unsigned>(r->Q->degree());
        ++scan.scanned_per_degree[deg];
        if (!r->is_S_integral) continue;
        ++scan.hits_per_degree[deg];
        scan.largest_hit_degree = deg;
        scan.hits.push_back(std::move(*r));
    }
    return scan;
}

NiceTrickBound nice_trick_bound(const DrinfeldModule& M, const RatFunc& beta, const Place& w,
                                unsigned generator_degree)
{
    AdicOrbit orbit(M, beta, w);
    const auto degP = static_cast<std::int64_t>(w.degree());
    // The ideal contains R P, where R is the reduction order of beta (degree <= d deg P).
    if (generator_degree == 0) generator_degree = static_cast<unsigned>((M.rank() + 1) * degP);
    const LogUnits logP(-degP);
    orbit.prepare(generator_degree);
    NiceTrickBound out{w, std::nullopt, logP};
    const RatFunc zero(M.field_ptr());
    for (unsigned n = 0; n <= generator_degree && !out.generator; ++n) {
        for (const Poly& G : monic_polys_of_degree(M.field_ptr(), n)) {
            const auto l = log_abs_phi_minus(orbit, M, beta, G, zero);
            if (!l) throw DomainError("beta is torsion: phi_" + G.to_string() + "(beta) = 0");
            if (*l < logP) {
                out.generator = G;
                out.log_constant = *l;
                break;
            }
        }
    }
    return out;
}

IdealCheck ideal_closure(const DrinfeldModule& M, const RatFunc& beta, const Place& w, const LogUnits& log_eps,
                         unsigned deg_max)
{
    AdicOrbit orbit(M, beta, w);
    orbit.prepare(deg_max);
    const RatFunc zero(M.field_ptr());
    std::vector<Poly> members;
    std::vector<Poly> all;
    for (unsigned n = 0; n <= deg_max; ++n)
        for (Poly& F : monic_polys_of_degree(M.field_ptr(), n)) {
            const auto l = log_abs_phi_minus(orbit, M, beta, F, zero);
            if (!l || *l < log_eps) members.push_back(F);
            all.push_back(std::move(F));
        }
    IdealCheck out;
    out.members = static_cast<unsigned>(members.size());
    if (members.empty()) return out;
    out.generator = members.front();
    const Poly& G = *out.generator;
    for (const Poly& F : all) {
        const bool multiple = (F % G).is_zero();
        const bool member = std::find(members.begin(), members.end(), F) != members.end();
        if (multiple != member) out.closed = false;
    }
    return out;
}

std::vector<LogUnits> nice_trick_again_profile(const DrinfeldModule& M, const RatFunc& beta, const RatFunc& alpha,
                                               const Place& w, unsigned deg_max)
{
    AdicOrbit orbit(M, beta, w);
    orbit.prepare(deg_max);
    std::vector<LogUnits> out;
    for (unsigned n = 0; n <= deg_max; ++n) {
        std::optional<LogUnits> best;
        for (const Poly& Q : monic_polys_of_degree(M.field_ptr(), n)) {
            const auto l = log_abs_phi_minus(orbit, M, beta, Q, alpha);
            if (!l) throw DomainError("phi_Q(beta) = alpha for Q = " + Q.to_string());
            const LogUnits value = *l - log_abs(RatFunc(Q), w);
            if (!best || value < *best) best = value;
        }
        out.push_back(*best);
    }
    return out;
}

}  // namespace drinfeld
