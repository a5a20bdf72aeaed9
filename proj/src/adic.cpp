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
#include "drinfeld/adic.hpp"

namespace drinfeld {

AdicOrbit::AdicOrbit(const DrinfeldModule& M, const RatFunc& beta, const Place& w, unsigned precision)
    : w_(w), N_(precision), P_(Poly(M.field_ptr())), mod_(Poly(M.field_ptr()))
{
    if (w.is_infinite()) throw DomainError("adic orbits need a finite place");
    if (precision == 0) throw DomainError("adic precision must be positive");
    P_ = w.poly();
    mod_ = pow(P_, precision);
    for (unsigned i = 0; i <= M.rank(); ++i) coeffs_.push_back(embed(M.coeff(i)));
    xs_.push_back(embed(beta));
}

Poly AdicOrbit::embed(const RatFunc& x) const
{
    if (x.is_zero()) return Poly(P_.field_ptr());
    if ((x.den() % P_).is_zero())
        throw DomainError("element is not integral at " + w_.to_string());
    return mul_mod(x.num() % mod_, inverse_mod(x.den() % mod_, mod_), mod_);
}

Poly AdicOrbit::apply_t(const Poly& x) const
{
    Poly acc(P_.field_ptr());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        acc += mul_mod(coeffs_[i], x.frobenius(static_cast<unsigned>(i)) % mod_, mod_);
    }
    return acc;
}

const Poly& AdicOrbit::at(unsigned k)
{
    while (xs_.size() <= k) xs_.push_back(apply_t(xs_.back()));
    return xs_[k];
}

Poly AdicOrbit::value(const Poly& Q) const
{
    if (static_cast<std::size_t>(Q.degree()) >= xs_.size() && !Q.is_zero())
        throw DomainError("adic orbit not prepared to degree " + std::to_string(Q.degree()));
    Poly acc(P_.field_ptr());
    for (int k = 0; k <= Q.degree(); ++k) {
        const Fq c = Q.coeff(static_cast<std::size_t>(k));
        if (c.v != 0) acc += xs_[static_cast<std::size_t>(k)].scaled(c);
    }
    return acc;
}

std::optional<std::int64_t> AdicOrbit::ord(const Poly& residue) const
{
    if (residue.is_zero()) return std::nullopt;
    return strip_factor(residue, P_).first;
}

std::optional<LogUnits> log_abs_phi_minus(const AdicOrbit& orbit, const DrinfeldModule& M, const RatFunc& beta,
                                          const Poly& Q, const RatFunc& alpha)
{
    const Poly r = orbit.value(Q) - orbit.embed(alpha);
    const auto o = orbit.ord(r);
    const std::int64_t deg = orbit.place().degree();
    if (o) return LogUnits(-*o * deg);
    const RatFunc exact = apply(M, Q, beta) - alpha;
    if (exact.is_zero()) return std::nullopt;
    return log_abs(exact, orbit.place());
}

}  // namespace drinfeld
