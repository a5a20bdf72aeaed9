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

#include "drinfeld/heights.hpp"

#include <algorithm>

#include "drinfeld/local.hpp"

namespace drinfeld {

const char* to_string(HeightReason r)
{
    switch (r) {
    case HeightReason::Escaped: return "escaped";
    case HeightReason::Integral: return "integral";
    case HeightReason::InvariantBall: return "invariant-ball";
    case HeightReason::Periodic: return "periodic";
    case HeightReason::Zero: return "zero";
    case HeightReason::Budget: return "budget";
    case HeightReason::DegreeGuard: return "degree-guard";
    }
    return "?";
}

const char* to_string(TorsionResult::Kind k)
{
    switch (k) {
    case TorsionResult::Kind::Torsion: return "torsion";
    case TorsionResult::Kind::NotTorsion: return "not-torsion";
    case TorsionResult::Kind::Undecided: return "undecided";
    }
    return "?";
}

LogUnits escape_threshold(const DrinfeldModule& M, const Place& v)
{
    const unsigned d = M.rank();
    const mpz_class qd = mpz_pow(M.q(), d);
    const LogUnits Ld = log_abs(M.a_d(), v);
    LogUnits best = -Ld / mpq_class(qd - 1);
    for (unsigned i = 0; i < d; ++i) {
        const RatFunc& a = M.coeff(i);
        if (a.is_zero()) continue;
        const LogUnits c = (log_abs(a, v) - Ld) / mpq_class(qd - mpz_pow(M.q(), i));
        best = max(best, c);
    }
    return best;
}

LogUnits escape_value(const DrinfeldModule& M, const Place& v, unsigned n, const LogUnits& L)
{
    const unsigned d = M.rank();
    const mpz_class qd = mpz_pow(M.q(), d);
    const mpz_class qdn = mpz_pow(M.q(), static_cast<unsigned long>(d) * n);
    const LogUnits Ld = log_abs(M.a_d(), v);
    return Ld / mpq_class(qdn * (qd - 1)) + L / mpq_class(qdn);
}

namespace {

std::int64_t floor_of(const LogUnits& x)
{
    mpz_class r;
    mpz_fdiv_q(r.get_mpz_t(), x.numerator().get_mpz_t(), x.denominator().get_mpz_t());
    return r.get_si();
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b)
{
    // b > 0
    return a >= 0 ? (a + b - 1) / b : -((-a) / b);
}

}  // namespace

bool ball_is_stable(const DrinfeldModule& M, const Place& v, std::int64_t R)
{
    const FieldPtr& F = M.field_ptr();
    // Split x = top + tail where tail has ord >= J; J is chosen so that
    // ord(a_i tail^(q^i)) >= -R for every i, hence phi_t(tail) stays in the ball.
    std::int64_t J = -R;
    for (unsigned i = 0; i <= M.rank(); ++i) {
        const RatFunc& a = M.coeff(i);
        if (a.is_zero()) continue;
        J = std::max(J, ceil_div(-R - ord(a, v), static_cast<std::int64_t>(checked_pow(M.q(), i))));
    }
    // phi_t is F_q-linear and the ball is an F_q-subspace, so it suffices to
    // test an F_q-basis of the tops: t^k pi^j with k < deg v and -R <= j < J.
    const RatFunc pi = v.is_infinite() ? RatFunc::t(F).inverse() : RatFunc(v.poly());
    const unsigned l = v.is_infinite() ? 1u : v.degree();
    for (std::int64_t j = -R; j < J; ++j) {
        const RatFunc pj = pi.pow(j);
        for (unsigned k = 0; k < l; ++k) {
            const RatFunc y = M.apply_t(RatFunc::t(F).pow(k) * pj);
            if (!y.is_zero() && ord(y, v) < -R) return false;
        }
    }
    return true;
}

std::optional<std::int64_t> stable_radius(const DrinfeldModule& M, const Place& v)
{
    // Balls reaching past the escape threshold contain escaping points.
    const LogUnits thr = escape_threshold(M, v) / mpq_class(v.degree());
    const std::int64_t top = floor_of(thr);
    for (std::int64_t R = top; R >= top - 8; --R)
        if (ball_is_stable(M, v, R)) return R;
    return std::nullopt;
}

BoundednessData boundedness_data(const DrinfeldModule& M) { return BoundednessData{normalize_integral(M)}; }

namespace {

class Judge {
public:
    Judge(const DrinfeldModule& M, const Place& v, const BoundednessData& data, LocalHeight& h)
        : M_(M), v_(v), h_(h), thr_(escape_threshold(M, v))
    {
        if (v.is_finite()) integral_bound_ = log_abs(data.norm.conjugator, v);
    }
    /// Returns true once the local height is decided at step n.
    bool operator()(unsigned n, const std::optional<LogUnits>& L)
    {
        h_.n_used = n;
        if (!L) {
            decide(LogUnits(0), HeightReason::Zero);
            return true;
        }
        if (*L > thr_) {
            decide(escape_value(M_, v_, n, *L), HeightReason::Escaped);
            h_.escape_index = n;
            return true;
        }
        if (integral_bound_ && *L <= *integral_bound_) {
            decide(LogUnits(0), HeightReason::Integral);
            return true;
        }
        if (!ball_checked_) {
            ball_checked_ = true;
            if (auto R = stable_radius(M_, v_)) ball_bound_ = LogUnits(*R * static_cast<std::int64_t>(v_.degree()));
        }
        if (ball_bound_ && *L <= *ball_bound_) {
            decide(LogUnits(0), HeightReason::InvariantBall);
            return true;
        }
        return false;
    }

    void decide(const LogUnits& value, HeightReason r)
    {
        h_.value = value;
        h_.certified = true;
        h_.reason = r;
    }

    void give_up(HeightReason r, std::string diag)
    {
        h_.value = LogUnits(0);
        h_.certified = false;
        h_.reason = r;
        h_.diagnostic = std::move(diag);
    }

private:
    const DrinfeldModule& M_;
    const Place& v_;
    LocalHeight& h_;
    LogUnits thr_;
    std::optional<LogUnits> integral_bound_;
    bool ball_checked_ = false;
    std::optional<LogUnits> ball_bound_;
};

std::optional<LogUnits> exact_log_abs(const RatFunc& x, const Place& v)
{
    if (x.is_zero()) return std::nullopt;
    return log_abs(x, v);
}

}  // namespace

LocalHeight local_height(const DrinfeldModule& M, const RatFunc& beta, const Place& v, const HeightOptions& opts)
{
    return local_height(M, beta, v, opts, boundedness_data(M));
}

LocalHeight local_height(const DrinfeldModule& M, const RatFunc& beta, const Place& v, const HeightOptions& opts,
                         const BoundednessData& data)
{
    LocalHeight h{v, LogUnits(0), false, std::nullopt, 0, 0, false, HeightReason::Budget, {}};
    Judge judge(M, v, data, h);

    // Exact prefix while the iterates are small.
    std::vector<RatFunc> seen;
    RatFunc x = beta;
    unsigned n = 0;
    for (;; ++n) {
        if (judge(n, exact_log_abs(x, v))) return h;
        if (std::find(seen.begin(), seen.end(), x) != seen.end()) {
            judge.decide(LogUnits(0), HeightReason::Periodic);
            return h;
        }
        if (n >= opts.n_max) {
            judge.give_up(HeightReason::Budget, "orbit stayed in the band for " + std::to_string(n) + " steps");
            return h;
        }
        if (x.size_degree() > opts.exact_prefix_degree) break;
        seen.push_back(x);
        x = M.apply_t(x);
    }

    // Window arithmetic from step n0 on.
    const unsigned n0 = n;
    const RatFunc x0 = x;
    unsigned W = opts.window;
    for (unsigned attempt = 0; attempt <= opts.retries; ++attempt, W *= 2) {
        const LocalField K(v, W);
        const LocalModule LM(M, K);
        LocalElement e = K.embed(x0);
        bool lost = false;
        for (n = n0;; ++n) {
            if (e.is_lost()) {
                lost = true;
                break;
            }
            if (judge(n, K.log_abs(e))) return h;
            if (n >= opts.n_max) {
                judge.give_up(HeightReason::Budget, "orbit stayed in the band for " + std::to_string(n) + " steps");
                return h;
            }
            e = LM.apply_t(e);
        }
        if (!lost) break;
        if (attempt < opts.retries) ++h.precision_retries;
    }

    // Exact continuation under a degree guard.
    h.exact_fallback = true;
    x = x0;
    for (n = n0;; ++n) {
        if (judge(n, exact_log_abs(x, v))) return h;
        if (std::find(seen.begin(), seen.end(), x) != seen.end()) {
            judge.decide(LogUnits(0), HeightReason::Periodic);
            return h;
        }
        if (n >= opts.n_max) {
            judge.give_up(HeightReason::Budget, "orbit stayed in the band for " + std::to_string(n) + " steps");
            return h;
        }
        if (x.size_degree() > opts.exact_degree_bound) {
            judge.give_up(HeightReason::DegreeGuard, "precision exhausted and exact iterate at step " +
                                                         std::to_string(n) + " exceeds degree " +
                                                         std::to_string(opts.exact_degree_bound));
            return h;
        }
        seen.push_back(x);
        x = M.apply_t(x);
    }
}

std::vector<Place> height_support(const DrinfeldModule& M, const RatFunc& beta)
{
    std::vector<Place> out = M.bad_places();
    for (auto& v : prime_places(beta.den(), M.seed())) out.push_back(v);
    out.push_back(Place::infinity(M.field_ptr()));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

GlobalHeight global_height(const DrinfeldModule& M, const RatFunc& beta, const HeightOptions& opts)
{
    return global_height(M, beta, opts, boundedness_data(M));
}

GlobalHeight global_height(const DrinfeldModule& M, const RatFunc& beta, const HeightOptions& opts,
                           const BoundednessData& data)
{
    GlobalHeight g{LogUnits(0), true, {}};
    for (const Place& v : height_support(M, beta)) {
        LocalHeight h = local_height(M, beta, v, opts, data);
        g.value += h.value;
        g.certified = g.certified && h.certified;
        g.locals.push_back(std::move(h));
    }
    return g;
}

std::vector<LogUnits> naive_height_sequence(const DrinfeldModule& M, const RatFunc& beta, unsigned n, int degree_bound)
{
    std::vector<LogUnits> out;
    RatFunc x = beta;
    mpz_class scale = 1;
    const mpz_class qd = mpz_pow(M.q(), M.rank());
    for (unsigned k = 0; k <= n; ++k) {
        if (k > 0) {
            if (x.size_degree() * static_cast<std::int64_t>(qd.get_si()) > degree_bound)
                throw DomainError("iterate " + std::to_string(k) + " would exceed the degree guard");
            x = M.apply_t(x);
            scale *= qd;
        }
        out.push_back(weil_height(x) / mpq_class(scale));
    }
    return out;
}

std::vector<std::optional<LogUnits>> orbit_log_abs(const DrinfeldModule& M, const RatFunc& beta, const Place& v,
                                                   unsigned count, unsigned window)
{
    for (unsigned attempt = 0; attempt < 4; ++attempt, window *= 2) {
        const LocalField K(v, window);
        const LocalModule LM(M, K);
        LocalElement e = K.embed(beta);
        std::vector<std::optional<LogUnits>> out;
        for (unsigned n = 0; n < count && !e.is_lost(); ++n) {
            out.push_back(K.log_abs(e));
            if (e.is_zero()) {
                out.resize(count, std::nullopt);
                break;
            }
            e = LM.apply_t(e);
        }
        if (out.size() == count) return out;
    }
    // The orbit most likely hit zero; settle it exactly.
    std::vector<std::optional<LogUnits>> out;
    RatFunc x = beta;
    for (unsigned n = 0; n < count; ++n) {
        out.push_back(exact_log_abs(x, v));
        x = M.apply_t(x);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Torsion

namespace {

/// First F_q-linear dependence among xs, as coefficients c_0..c_k with c_k = 1,
/// or nullopt if the vectors are independent.
std::optional<std::vector<Fq>> first_dependence(const FiniteField& F, const std::vector<RatFunc>& xs)
{
    Poly D = xs.front().den();
    for (const auto& x : xs) D = lcm(D, x.den());
    std::vector<std::vector<Fq>> rows;
    std::size_t width = 0;
    for (const auto& x : xs) {
        const Poly n = x.num() * (D / x.den());
        rows.push_back(n.coeffs());
        width = std::max(width, n.coeffs().size());
    }
    const std::size_t k = xs.size();
    // Augment each row with the identity to track combinations.
    for (std::size_t i = 0; i < k; ++i) {
        rows[i].resize(width, F.zero());
        for (std::size_t j = 0; j < k; ++j) rows[i].push_back(i == j ? F.one() : F.zero());
    }
    std::vector<std::size_t> pivot_of_row;
    std::vector<std::size_t> basis;  // indices of reduced rows
    for (std::size_t i = 0; i < k; ++i) {
        auto& r = rows[i];
        for (std::size_t b = 0; b < basis.size(); ++b) {
            const auto& br = rows[basis[b]];
            const std::size_t p = pivot_of_row[b];
            if (r[p].v == 0) continue;
            const Fq f = r[p];
            for (std::size_t c = 0; c < r.size(); ++c) r[c] = F.sub(r[c], F.mul(f, br[c]));
        }
        std::size_t p = width;
        for (std::size_t c = 0; c < width; ++c)
            if (r[c].v != 0) {
                p = c;
                break;
            }
        if (p == width) {
            std::vector<Fq> comb(r.begin() + static_cast<std::ptrdiff_t>(width), r.end());
            const Fq lead = comb[i];
            const Fq inv = F.inv(lead);
            for (auto& c : comb) c = F.mul(c, inv);
            comb.resize(i + 1);
            return comb;
        }
        const Fq inv = F.inv(r[p]);
        for (auto& c : r) c = F.mul(c, inv);
        basis.push_back(i);
        pivot_of_row.push_back(p);
    }
    return std::nullopt;
}

}  // namespace

TorsionResult torsion_order(const DrinfeldModule& M, const RatFunc& beta, unsigned cap, const HeightOptions& opts)
{
    TorsionResult res;
    const FieldPtr& F = M.field_ptr();
    if (beta.is_zero()) {
        res.kind = TorsionResult::Kind::Torsion;
        res.order = Poly::constant(F, F->one());
        res.height = GlobalHeight{LogUnits(0), true, {}};
        return res;
    }
    res.height = global_height(M, beta, opts);
    if (res.height.certified && res.height.value.sign() > 0) {
        res.kind = TorsionResult::Kind::NotTorsion;
        res.diagnostic = "certified positive canonical height";
        return res;
    }
    std::vector<RatFunc> xs{beta};
    for (unsigned k = 1; k <= cap; ++k) {
        if (xs.back().size_degree() > opts.exact_degree_bound) {
            res.diagnostic = "orbit degree exceeded the guard before a dependence appeared";
            break;
        }
        xs.push_back(M.apply_t(xs.back()));
        res.steps = k + 1;
        if (auto dep = first_dependence(*F, xs)) {
            res.kind = TorsionResult::Kind::Torsion;
            res.order = Poly(F, *dep);
            return res;
        }
    }
    if (res.diagnostic.empty()) res.diagnostic = "no dependence within " + std::to_string(cap) + " steps";
    return res;
}

// ---------------------------------------------------------------------------
// Orbit

Orbit::Orbit(const DrinfeldModule& M, RatFunc beta) : M_(M) { xs_.push_back(std::move(beta)); }

const RatFunc& Orbit::at(unsigned k)
{
    while (xs_.size() <= k) xs_.push_back(M_.apply_t(xs_.back()));
    return xs_[k];
}

RatFunc Orbit::apply(const Poly& Q)
{
    RatFunc acc(M_.field_ptr());
    for (int k = 0; k <= Q.degree(); ++k) {
        const Fq c = Q.coeff(static_cast<std::size_t>(k));
        if (c.v == 0) continue;
        acc += RatFunc::constant(M_.field_ptr(), c) * at(static_cast<unsigned>(k));
    }
    return acc;
}

}  // namespace drinfeld
