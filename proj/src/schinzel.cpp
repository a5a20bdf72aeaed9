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
#include "drinfeld/schinzel.hpp"

#include <algorithm>

#include "drinfeld/adic.hpp"
#include "drinfeld/factor.hpp"
#include "drinfeld/parallel.hpp"

namespace drinfeld {

int mobius(const Poly& Q)
{
    if (!Q.is_monic()) throw DomainError("mobius needs a monic polynomial");
    if (Q.degree() == 0) return 1;
    const Factorization f = factor(Q);
    int sign = 1;
    for (const auto& [P, m] : f.factors) {
        if (m > 1) return 0;
        sign = -sign;
    }
    return sign;
}

std::vector<Poly> monic_divisors(const Poly& Q, std::uint64_t seed)
{
    if (!Q.is_monic()) throw DomainError("monic_divisors needs a monic polynomial");
    std::vector<Poly> out{Poly::constant(Q.field_ptr(), Q.field().one())};
    if (Q.degree() == 0) return out;
    for (const auto& [P, m] : factor(Q, seed).factors) {
        const std::size_t n = out.size();
        Poly power = P;
        for (unsigned e = 1; e <= m; ++e) {
            for (std::size_t i = 0; i < n; ++i) out.push_back(out[i] * power);
            power *= P;
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

std::vector<Fq> to_vector(const Poly& x, unsigned l)
{
    std::vector<Fq> v(l);
    for (unsigned i = 0; i < l; ++i) v[i] = x.coeff(i);
    return v;
}

Poly element_from_index(const FieldPtr& F, std::uint64_t idx, unsigned l)
{
    std::vector<Fq> c(l);
    for (unsigned i = 0; i < l; ++i) {
        c[i] = Fq{static_cast<std::uint32_t>(idx % F->q())};
        idx /= F->q();
    }
    return Poly(F, std::move(c));
}

std::uint64_t field_size(const ResidueModule& R)
{
    if (R.degree() > kMaxEnumerationDegree)
        throw DomainError("residue field of degree " + std::to_string(R.degree()) + " exceeds the enumeration cap");
    return checked_pow(R.field_ptr()->q(), R.degree());
}

}  // namespace

Poly residue_order(const ResidueModule& R, const Poly& x)
{
    const FieldPtr& F = R.field_ptr();
    const FiniteField& k = *F;
    const unsigned l = R.degree();
    struct Row {
        std::vector<Fq> vec;
        Poly comb;
        unsigned pivot;
    };
    std::vector<Row> rows;
    Poly current = x % R.modulus();
    for (unsigned step = 0; step <= l; ++step) {
        std::vector<Fq> vec = to_vector(current, l);
        Poly comb = Poly::monomial(F, k.one(), step);
        for (const Row& r : rows) {
            const Fq c = vec[r.pivot];
            if (c.v == 0) continue;
            const Fq f = k.div(c, r.vec[r.pivot]);
            for (unsigned i = 0; i < l; ++i) vec[i] = k.sub(vec[i], k.mul(f, r.vec[i]));
            comb -= r.comb.scaled(f);
        }
        const auto nz = std::find_if(vec.begin(), vec.end(), [](Fq a) { return a.v != 0; });
        if (nz == vec.end()) return comb.monic();
        const auto pivot = static_cast<unsigned>(nz - vec.begin());
        rows.push_back({std::move(vec), std::move(comb), pivot});
        current = R.apply_t(current);
    }
    throw std::logic_error("Krylov sequence did not become dependent within l + 1 steps");
}

std::uint64_t kernel_size(const ResidueModule& R, const Poly& P)
{
    const std::uint64_t n = field_size(R);
    std::uint64_t count = 0;
    for (std::uint64_t idx = 0; idx < n; ++idx)
        if (R.apply(P, element_from_index(R.field_ptr(), idx, R.degree())).is_zero()) ++count;
    return count;
}

std::map<Poly, std::uint64_t> order_census(const ResidueModule& R)
{
    const std::uint64_t n = field_size(R);
    std::map<Poly, std::uint64_t> out;
    for (std::uint64_t idx = 0; idx < n; ++idx) ++out[residue_order(R, element_from_index(R.field_ptr(), idx, R.degree()))];
    return out;
}

std::int64_t inclusion_exclusion_count(const ResidueModule& R, const Poly& Q)
{
    std::int64_t total = 0;
    for (const Poly& D : monic_divisors(Q)) {
        const int mu = mobius(Q / D);
        if (mu != 0) total += mu * static_cast<std::int64_t>(kernel_size(R, D));
    }
    return total;
}

namespace {

ValuationEvidence evidence_from(const AdicOrbit& orbit, const DrinfeldModule& M, const RatFunc& beta, const Poly& Q,
                                const std::vector<Poly>& divisors)
{
    const RatFunc zero(M.field_ptr());
    ValuationEvidence ev;
    ev.log_phi_Q = log_abs_phi_minus(orbit, M, beta, Q, zero);
    bool divisors_ok = true;
    for (const Poly& D : divisors) {
        if (D == Q) continue;
        const auto l = log_abs_phi_minus(orbit, M, beta, D, zero);
        if (!l) throw DomainError("phi_" + D.to_string() + "(beta) = 0: beta is torsion");
        if (l->sign() < 0) divisors_ok = false;
        ev.divisors.push_back({D, *l});
    }
    ev.holds = (!ev.log_phi_Q || ev.log_phi_Q->sign() < 0) && divisors_ok;
    return ev;
}

void require_admissible(const DrinfeldModule& M, const RatFunc& beta, const Place& v)
{
    if (v.is_infinite()) throw DomainError("valuation conditions need a finite place");
    if (!good_reduction(M, v)) throw DomainError("bad reduction at " + v.to_string());
    if ((beta.den() % v.poly()).is_zero()) throw DomainError("beta is not integral at " + v.to_string());
}

/// Admissibility for the primitive place search; no exceptions.
bool admissible(const DrinfeldModule& M, const RatFunc& beta, const Place& v, const std::vector<Place>& S)
{
    if (std::find(S.begin(), S.end(), v) != S.end()) return false;
    if (!good_reduction(M, v)) return false;
    return !(beta.den() % v.poly()).is_zero();
}

constexpr unsigned kAdicPrecision = 8;

struct PlaceScan {
    Place place;
    Poly order;
    std::vector<std::optional<PrimitiveHit>> hits;  // one slot per Q
    std::uint64_t pairs = 0;
};

PlaceScan scan_place(const DrinfeldModule& M, const RatFunc& beta, const Place& v, const std::vector<Poly>& qs,
                     const std::vector<std::vector<Poly>>& divisors)
{
    const ResidueModule R = reduce(M, v);
    AdicOrbit orbit(M, beta, v, kAdicPrecision);
    int maxdeg = 0;
    for (const Poly& Q : qs) maxdeg = std::max(maxdeg, Q.degree());
    orbit.prepare(static_cast<unsigned>(maxdeg));
    PlaceScan out{v, residue_order(R, R.reduce(beta)), {}, 0};
    for (std::size_t i = 0; i < qs.size(); ++i) {
        ValuationEvidence ev = evidence_from(orbit, M, beta, qs[i], divisors[i]);
        const bool by_order = out.order == qs[i];
        ++out.pairs;
        if (by_order != ev.holds)
            throw CharacterizationMismatch("residue order " + out.order.to_string() + " and valuation conditions for Q = " +
                                           qs[i].to_string() + " disagree at " + v.to_string());
        if (by_order) out.hits.emplace_back(PrimitiveHit{qs[i], v, out.order, std::move(ev)});
        else out.hits.emplace_back(std::nullopt);
    }
    return out;
}

void require_nontorsion(const DrinfeldModule& M, const RatFunc& beta, const SchinzelOptions& opts, bool* undecided)
{
    if (opts.torsion_cap == 0) return;  // the caller has already decided
    const TorsionResult tr = torsion_order(M, beta, opts.torsion_cap, opts.heights);
    if (tr.kind == TorsionResult::Kind::Torsion) throw DomainError("beta is a torsion point of order " + tr.order->to_string());
    if (undecided) *undecided = tr.kind == TorsionResult::Kind::Undecided;
}

std::vector<PlaceScan> scan_places(const DrinfeldModule& M, const RatFunc& beta, const std::vector<Poly>& qs,
                                   const std::vector<Place>& S, unsigned place_deg_max, unsigned workers,
                                   std::vector<Place>* admitted)
{
    std::vector<Place> places;
    for (const Place& v : finite_places_up_to(M.field_ptr(), place_deg_max))
        if (admissible(M, beta, v, S)) places.push_back(v);
    std::vector<std::vector<Poly>> divisors;
    for (const Poly& Q : qs) divisors.push_back(monic_divisors(Q, M.seed()));
    std::vector<std::optional<PlaceScan>> scans(places.size());
    parallel_for(places.size(), [&](std::size_t i) { scans[i] = scan_place(M, beta, places[i], qs, divisors); }, workers);
    std::vector<PlaceScan> out;
    for (auto& s : scans) out.push_back(std::move(*s));
    if (admitted) *admitted = std::move(places);
    return out;
}

}  // namespace

ValuationEvidence valuation_conditions(const DrinfeldModule& M, const RatFunc& beta, const Poly& Q, const Place& v)
{
    if (!Q.is_monic()) throw DomainError("valuation conditions need a monic Q");
    require_admissible(M, beta, v);
    AdicOrbit orbit(M, beta, v, kAdicPrecision);
    orbit.prepare(static_cast<unsigned>(Q.degree()));
    return evidence_from(orbit, M, beta, Q, monic_divisors(Q, M.seed()));
}

std::vector<PrimitiveHit> primitive_place_search(const DrinfeldModule& M, const RatFunc& beta, const Poly& Q,
                                                 const std::vector<Place>& S, unsigned place_deg_max,
                                                 const SchinzelOptions& opts)
{
    if (!Q.is_monic()) throw DomainError("primitive place search needs a monic Q");
    require_nontorsion(M, beta, opts, nullptr);
    std::vector<PrimitiveHit> out;
    for (PlaceScan& s : scan_places(M, beta, {Q}, S, place_deg_max, opts.workers, nullptr))
        if (s.hits[0]) out.push_back(std::move(*s.hits[0]));
    return out;
}

std::vector<PrimitiveHit> primitive_places_exact(const DrinfeldModule& M, const RatFunc& beta, const Poly& Q,
                                                 const std::vector<Place>& S, const SchinzelOptions& opts)
{
    if (!Q.is_monic()) throw DomainError("primitive place search needs a monic Q");
    require_nontorsion(M, beta, opts, nullptr);
    const RatFunc x = apply(M, Q, beta);
    const std::vector<Poly> divisors = monic_divisors(Q, M.seed());
    std::vector<PrimitiveHit> out;
    for (const Place& v : prime_places(x.num(), M.seed())) {
        if (!admissible(M, beta, v, S)) continue;
        AdicOrbit orbit(M, beta, v, kAdicPrecision);
        orbit.prepare(static_cast<unsigned>(Q.degree()));
        ValuationEvidence ev = evidence_from(orbit, M, beta, Q, divisors);
        if (v.degree() <= kMaxEnumerationDegree * 4) {
            const ResidueModule R = reduce(M, v);
            const Poly order = residue_order(R, R.reduce(beta));
            if ((order == Q) != ev.holds)
                throw CharacterizationMismatch("residue order " + order.to_string() +
                                               " and valuation conditions disagree at " + v.to_string());
        }
        if (ev.holds) out.push_back(PrimitiveHit{Q, v, Q, std::move(ev)});
    }
    return out;
}

SchinzelFrontier schinzel_frontier(const DrinfeldModule& M, const RatFunc& beta, const std::vector<Place>& S,
                                   unsigned qdeg_max, unsigned place_deg_max, const SchinzelOptions& opts)
{
    SchinzelFrontier frontier;
    require_nontorsion(M, beta, opts, &frontier.beta_undecided);
    std::vector<Poly> qs;
    for (unsigned n = 1; n <= qdeg_max; ++n)
        for (Poly& Q : monic_polys_of_degree(M.field_ptr(), n)) qs.push_back(std::move(Q));
    std::vector<PlaceScan> scans = scan_places(M, beta, qs, S, place_deg_max, opts.workers, &frontier.admissible);
    for (std::size_t i = 0; i < qs.size(); ++i) {
        FrontierRow row{qs[i], std::nullopt, 0, std::nullopt, std::nullopt};
        for (PlaceScan& s : scans) {
            if (!s.hits[i]) continue;
            ++row.hits;
            if (!row.first_hit) row.first_hit = s.hits[i];
        }
        if (row.hits == 0) frontier.empirical_N = std::max(frontier.empirical_N, static_cast<unsigned>(qs[i].degree()) + 1);
        frontier.rows.push_back(std::move(row));
    }
    for (const PlaceScan& s : scans) frontier.pairs_checked += s.pairs;
    if (opts.exact_search) {
        frontier.exact_N = 1;
        std::vector<std::vector<PrimitiveHit>> exact(qs.size());
        SchinzelOptions inner = opts;
        inner.torsion_cap = 0;
        parallel_for(qs.size(), [&](std::size_t i) { exact[i] = primitive_places_exact(M, beta, qs[i], S, inner); },
                     opts.workers);
        for (std::size_t i = 0; i < qs.size(); ++i) {
            FrontierRow& row = frontier.rows[i];
            row.exact_hits = static_cast<unsigned>(exact[i].size());
            for (const PrimitiveHit& h : exact[i])
                if (!row.smallest_exact || h.place < *row.smallest_exact) row.smallest_exact = h.place;
            if (exact[i].empty()) *frontier.exact_N = std::max(*frontier.exact_N, static_cast<unsigned>(qs[i].degree()) + 1);
        }
    }
    return frontier;
}

namespace {

bool integral_module(const DrinfeldModule& M, const Place& v)
{
    for (unsigned i = 0; i <= M.rank(); ++i)
        if (!M.coeff(i).is_zero() && log_abs(M.coeff(i), v).sign() > 0) return false;
    return true;
}

LemmaCheck multiplicative_check(const DrinfeldModule& M, const RatFunc& x, const Poly& Q, const Place& v)
{
    LemmaCheck c;
    c.applicable = true;
    const RatFunc y = apply(M, Q, x);
    c.lhs = log_abs(y, v);
    c.rhs = log_abs(RatFunc(Q), v) + log_abs(x, v);
    return c;
}

}  // namespace

LemmaCheck lemma_small_x(const std::vector<RatFunc>& b, const RatFunc& x, const Place& w)
{
    LemmaCheck c;
    if (b.empty() || b[0].is_zero() || x.is_zero()) return c;
    for (const RatFunc& bi : b)
        if (!bi.is_zero() && log_abs(bi, w).sign() > 0) return c;
    if (!(log_abs(x, w) < log_abs(b[0], w))) return c;
    RatFunc value(x.num().field_ptr());
    RatFunc power = x;
    for (const RatFunc& bi : b) {
        value += bi * power;
        power *= x;
    }
    c.applicable = true;
    c.lhs = log_abs(value, w);
    c.rhs = log_abs(b[0], w) + log_abs(x, w);
    return c;
}

LemmaCheck lemma_more_precise(const DrinfeldModule& M, const RatFunc& x, const Poly& Q, const Place& v)
{
    if (v.is_infinite() || x.is_zero() || Q.is_zero() || !integral_module(M, v)) return {};
    const unsigned l = v.degree();
    const LogUnits radius = LogUnits::fraction(-static_cast<long>(l), mpz_pow(M.q(), l) - 1);
    if (!(log_abs(x, v) < radius)) return {};
    return multiplicative_check(M, x, Q, v);
}

LemmaCheck corollary_util(const DrinfeldModule& M, const RatFunc& x, const Poly& Q, const Place& v)
{
    if (v.is_infinite() || x.is_zero() || Q.is_zero() || !integral_module(M, v)) return {};
    if (mpz_pow(M.q(), v.degree()) <= 2) return {};
    if (log_abs(x, v).sign() >= 0) return {};
    return multiplicative_check(M, x, Q, v);
}

OneVSum lemma_one_v(const DrinfeldModule& M, const RatFunc& beta, const Poly& Q, const std::vector<Place>& S,
                    unsigned place_deg_max)
{
    if (!Q.is_monic() || Q.degree() < 1) throw DomainError("the one-place lemma needs a non-constant monic Q");
    const std::vector<Poly> divisors = monic_divisors(Q, M.seed());
    OneVSum out;
    out.bound = LogUnits(-Q.degree());
    const RatFunc zero(M.field_ptr());
    for (const Place& v : finite_places_up_to(M.field_ptr(), place_deg_max)) {
        if (mpz_pow(M.q(), v.degree()) <= 2) continue;
        if (!admissible(M, beta, v, S)) continue;
        AdicOrbit orbit(M, beta, v, kAdicPrecision);
        orbit.prepare(static_cast<unsigned>(Q.degree()));
        std::vector<LogUnits> logs;
        for (const Poly& D : divisors) {
            const auto l = log_abs_phi_minus(orbit, M, beta, D, zero);
            if (!l) throw DomainError("beta is torsion");
            logs.push_back(*l);
        }
        // Condition (iv): |phi_Q(beta)|_v = 1 or a proper divisor already has |phi_P(beta)|_v < 1.
        bool proper_small = false;
        for (std::size_t i = 0; i + 1 < divisors.size(); ++i)
            if (logs[i].sign() < 0) proper_small = true;
        if (!(logs.back().is_zero() || proper_small)) continue;
        LogUnits sum;
        for (std::size_t i = 0; i < divisors.size(); ++i) {
            const int mu = mobius(Q / divisors[i]);
            if (mu != 0) sum += logs[i] * mpq_class(mu);
        }
        out.places.push_back(v);
        out.per_place.push_back(sum);
        out.total += sum;
    }
    return out;
}

}  // namespace drinfeld
