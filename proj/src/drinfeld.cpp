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

#include "drinfeld/drinfeld.hpp"

#include <algorithm>

namespace drinfeld {

// ---------------------------------------------------------------------------
// TwistedPoly

TwistedPoly::TwistedPoly(FieldPtr field) : field_(std::move(field)) {}

TwistedPoly::TwistedPoly(FieldPtr field, std::vector<RatFunc> coeffs) : field_(std::move(field)), c_(std::move(coeffs))
{
    trim();
}

void TwistedPoly::trim()
{
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

TwistedPoly TwistedPoly::scalar(const RatFunc& a) { return TwistedPoly(a.field_ptr(), {a}); }

TwistedPoly TwistedPoly::monomial(const RatFunc& a, unsigned k)
{
    std::vector<RatFunc> c(k + 1, RatFunc(a.field_ptr()));
    c[k] = a;
    return TwistedPoly(a.field_ptr(), std::move(c));
}

const RatFunc& TwistedPoly::lead() const
{
    if (c_.empty()) throw DomainError("zero twisted polynomial has no leading coefficient");
    return c_.back();
}

RatFunc TwistedPoly::evaluate(const RatFunc& x) const
{
    RatFunc acc(field_);
    if (x.is_zero()) return acc;
    RatFunc xp = x;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i > 0) xp = xp.frobenius(1);
        if (!c_[i].is_zero()) acc += c_[i] * xp;
    }
    return acc;
}

TwistedPoly operator+(const TwistedPoly& a, const TwistedPoly& b)
{
    std::vector<RatFunc> c(std::max(a.c_.size(), b.c_.size()), RatFunc(a.field_));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] = a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return TwistedPoly(a.field_, std::move(c));
}

TwistedPoly operator-(const TwistedPoly& a, const TwistedPoly& b)
{
    std::vector<RatFunc> c(std::max(a.c_.size(), b.c_.size()), RatFunc(a.field_));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] = a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
    return TwistedPoly(a.field_, std::move(c));
}

TwistedPoly tw_mul(const TwistedPoly& f, const TwistedPoly& g)
{
    if (f.is_zero() || g.is_zero()) return TwistedPoly(f.field_ptr());
    const auto& fc = f.coeffs();
    const auto& gc = g.coeffs();
    std::vector<RatFunc> c(fc.size() + gc.size() - 1, RatFunc(f.field_ptr()));
    for (std::size_t i = 0; i < fc.size(); ++i) {
        if (fc[i].is_zero()) continue;
        for (std::size_t j = 0; j < gc.size(); ++j) {
            if (gc[j].is_zero()) continue;
            c[i + j] += fc[i] * gc[j].frobenius(static_cast<unsigned>(i));
        }
    }
    return TwistedPoly(f.field_ptr(), std::move(c));
}

TwistedPoly operator*(const TwistedPoly& a, const TwistedPoly& b) { return tw_mul(a, b); }

std::string TwistedPoly::to_string() const
{
    if (c_.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        if (!out.empty()) out += " + ";
        std::string mono = i == 0 ? "x" : (i == 1 ? "x^q" : "x^q^" + std::to_string(i));
        if (c_[i].is_one()) {
            out += mono;
        } else {
            out += "(" + c_[i].to_string() + ")*" + mono;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// DrinfeldModule

DrinfeldModule::DrinfeldModule(FieldPtr field, std::vector<RatFunc> coeffs, std::uint64_t seed)
    : field_(std::move(field)), phi_t_(field_, coeffs), seed_(seed)
{
    if (coeffs.empty() || !(coeffs[0] == RatFunc::t(field_)))
        throw DomainError("the x coefficient of phi_t must be exactly t");
    if (phi_t_.degree() < 1) throw DomainError("phi_t must have rank at least 1");
    if (static_cast<std::size_t>(phi_t_.degree()) + 1 != coeffs.size())
        throw DomainError("leading coefficient a_d of phi_t must be nonzero");

    std::vector<Place> bad;
    const auto& c = phi_t_.coeffs();
    for (std::size_t i = 1; i < c.size(); ++i) {
        if (c[i].is_zero()) continue;
        for (auto& v : prime_places(c[i].den(), seed_)) bad.push_back(v);
    }
    for (auto& v : prime_places(c.back().num(), seed_)) bad.push_back(v);
    std::sort(bad.begin(), bad.end());
    bad.erase(std::unique(bad.begin(), bad.end()), bad.end());
    bad_ = std::move(bad);
}

DrinfeldModule DrinfeldModule::carlitz(const FieldPtr& field)
{
    return DrinfeldModule(field, {RatFunc::t(field), RatFunc::from_int(field, 1)});
}

bool DrinfeldModule::is_integral() const
{
    return std::all_of(phi_t_.coeffs().begin(), phi_t_.coeffs().end(),
                       [](const RatFunc& a) { return a.is_polynomial(); });
}

TwistedPoly phi_of(const DrinfeldModule& M, const Poly& Q)
{
    const FieldPtr& F = M.field_ptr();
    if (Q.is_zero()) return TwistedPoly(F);
    TwistedPoly r = TwistedPoly::scalar(RatFunc::constant(F, Q.lead()));
    for (int k = Q.degree() - 1; k >= 0; --k) {
        r = tw_mul(M.phi_t(), r);
        const Fq c = Q.coeff(static_cast<std::size_t>(k));
        if (c.v != 0) r = r + TwistedPoly::scalar(RatFunc::constant(F, c));
    }
    return r;
}

RatFunc apply(const DrinfeldModule& M, const Poly& Q, const RatFunc& x)
{
    const FieldPtr& F = M.field_ptr();
    if (Q.is_zero() || x.is_zero()) return RatFunc(F);
    RatFunc r = RatFunc::constant(F, Q.lead()) * x;
    for (int k = Q.degree() - 1; k >= 0; --k) {
        r = M.apply_t(r);
        const Fq c = Q.coeff(static_cast<std::size_t>(k));
        if (c.v != 0) r += RatFunc::constant(F, c) * x;
    }
    return r;
}

mpz_class gamma_exponent(std::uint32_t q, unsigned d, unsigned n)
{
    const mpz_class qd = mpz_pow(q, d);
    return (mpz_pow(q, static_cast<unsigned long>(d) * n) - 1) / (qd - 1);
}

RatFunc gamma(const DrinfeldModule& M, const Poly& Q)
{
    if (Q.is_zero()) throw DomainError("gamma of the zero polynomial");
    const FieldPtr& F = M.field_ptr();
    const unsigned d = M.rank();
    // a_d^(1 + q^d + ... + q^(d(n-1))) as a product of Frobenius images.
    RatFunc r = RatFunc::constant(F, Q.lead());
    for (int k = 0; k < Q.degree(); ++k) r *= M.a_d().frobenius(d * static_cast<unsigned>(k));
    return r;
}

LogUnits log_abs_gamma(const DrinfeldModule& M, const Poly& Q, const Place& v)
{
    if (Q.is_zero()) throw DomainError("gamma of the zero polynomial");
    const mpz_class N = gamma_exponent(M.q(), M.rank(), static_cast<unsigned>(Q.degree()));
    return log_abs(M.a_d(), v) * mpq_class(N);
}

Normalization normalize_integral(const DrinfeldModule& M)
{
    const FieldPtr& F = M.field_ptr();
    const auto& c = M.phi_t().coeffs();
    const mpz_class q = M.q();

    std::vector<Place> offending;
    for (std::size_t i = 1; i < c.size(); ++i)
        if (!c[i].is_zero())
            for (auto& v : prime_places(c[i].den(), M.seed())) offending.push_back(v);
    std::sort(offending.begin(), offending.end());
    offending.erase(std::unique(offending.begin(), offending.end()), offending.end());

    // Smallest k with ord_P(a_i) + k (q^i - 1) >= 0 for every offending P and i >= 1.
    std::int64_t k = 0;
    Poly B = Poly::constant(F, F->one());
    for (const Place& v : offending) {
        B *= v.poly();
        for (std::size_t i = 1; i < c.size(); ++i) {
            if (c[i].is_zero()) continue;
            const std::int64_t o = ord(c[i], v);
            if (o >= 0) continue;
            const std::int64_t step = static_cast<std::int64_t>(checked_pow(M.q(), static_cast<unsigned>(i))) - 1;
            k = std::max(k, (-o + step - 1) / step);
        }
    }
    const RatFunc gam = RatFunc(pow(B, static_cast<std::uint64_t>(k)));

    std::vector<RatFunc> nc;
    nc.reserve(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i == 0 || c[i].is_zero() || k == 0) {
            nc.push_back(c[i]);
            continue;
        }
        // a_i gamma^(q^i - 1) = a_i gamma^(q^i) / gamma.
        nc.push_back(c[i] * gam.frobenius(static_cast<unsigned>(i)) / gam);
    }
    DrinfeldModule psi(F, std::move(nc), M.seed());
    psi.normalized_ = true;
    return Normalization{std::move(psi), gam};
}

bool good_reduction(const DrinfeldModule& M, const Place& v)
{
    if (v.is_infinite()) throw DomainError("the infinite place is always of bad reduction");
    const auto& c = M.phi_t().coeffs();
    for (const auto& a : c)
        if (!a.is_zero() && ord(a, v) < 0) return false;
    return ord(M.a_d(), v) == 0;
}

Poly residue(const RatFunc& x, const Place& v)
{
    if (v.is_infinite()) throw DomainError("residues are only taken at finite places");
    const Poly& P = v.poly();
    if (x.is_zero()) return Poly(P.field_ptr());
    if (ord(x, v) < 0) throw DomainError(x.to_string() + " is not integral at " + v.to_string());
    return mul_mod(x.num() % P, inverse_mod(x.den() % P, P), P);
}

// ---------------------------------------------------------------------------
// ResidueModule

ResidueModule::ResidueModule(Place v, std::vector<Poly> coeffs)
    : v_(std::move(v)), c_(std::move(coeffs)), t_class_(Poly::t(v_.poly().field_ptr()) % v_.poly())
{
    if (c_.size() < 2 || c_.back().is_zero()) throw DomainError("reduced module must keep its rank");
}

Poly ResidueModule::frobenius(const Poly& x, unsigned k) const
{
    if (k == 0 || x.degree() <= 0) return x;
    return x.frobenius(k) % v_.poly();
}

Poly ResidueModule::apply_t(const Poly& x) const
{
    const Poly& P = v_.poly();
    Poly acc(P.field_ptr());
    if (x.is_zero()) return acc;
    Poly xp = x;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i > 0) xp = frobenius(xp, 1);
        if (!c_[i].is_zero()) acc += mul_mod(c_[i], xp, P);
    }
    return acc;
}

Poly ResidueModule::apply(const Poly& Q, const Poly& x) const
{
    const Poly& P = v_.poly();
    if (Q.is_zero() || x.is_zero()) return Poly(P.field_ptr());
    Poly r = x.scaled(Q.lead());
    for (int k = Q.degree() - 1; k >= 0; --k) {
        r = apply_t(r);
        const Fq c = Q.coeff(static_cast<std::size_t>(k));
        if (c.v != 0) r += x.scaled(c);
    }
    return r;
}

std::string ResidueModule::to_string() const
{
    std::string out;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        if (!out.empty()) out += " + ";
        std::string mono = i == 0 ? "x" : (i == 1 ? "x^q" : "x^q^" + std::to_string(i));
        out += c_[i].is_one() ? mono : "(" + c_[i].to_string() + ")*" + mono;
    }
    return out + "  (mod " + v_.poly().to_string() + ")";
}

ResidueModule reduce(const DrinfeldModule& M, const Place& v)
{
    if (!good_reduction(M, v)) throw DomainError("module has bad reduction at " + v.to_string());
    std::vector<Poly> c;
    for (const auto& a : M.phi_t().coeffs()) c.push_back(residue(a, v));
    return ResidueModule(v, std::move(c));
}

}  // namespace drinfeld
