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
#include <string>
#include <utility>
#include <vector>

#include "drinfeld/log_units.hpp"
#include "drinfeld/place.hpp"
#include "drinfeld/ratfunc.hpp"

namespace drinfeld {

/// An element of K{tau}: coefficient i multiplies x^(q^i). Multiplication is
/// composition of F_q-linear maps, so tau * a = a^q * tau.
class TwistedPoly {
public:
    explicit TwistedPoly(FieldPtr field);
    TwistedPoly(FieldPtr field, std::vector<RatFunc> coeffs);

    static TwistedPoly scalar(const RatFunc& a);
    /// a * tau^k.
    static TwistedPoly monomial(const RatFunc& a, unsigned k);

    const FieldPtr& field_ptr() const { return field_; }
    const std::vector<RatFunc>& coeffs() const { return c_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    RatFunc coeff(std::size_t i) const { return i < c_.size() ? c_[i] : RatFunc(field_); }
    const RatFunc& lead() const;

    /// sum_i f_i x^(q^i).
    RatFunc evaluate(const RatFunc& x) const;

    friend TwistedPoly operator+(const TwistedPoly& a, const TwistedPoly& b);
    friend TwistedPoly operator-(const TwistedPoly& a, const TwistedPoly& b);
    friend TwistedPoly operator*(const TwistedPoly& a, const TwistedPoly& b);
    friend bool operator==(const TwistedPoly& a, const TwistedPoly& b) { return a.c_ == b.c_; }

    /// e.g. "t*x + (t+1)*x^q^2".
    std::string to_string() const;

private:
    void trim();

    FieldPtr field_;
    std::vector<RatFunc> c_;
};

/// (f g)_k = sum_{i+j=k} f_i g_j^(q^i).
TwistedPoly tw_mul(const TwistedPoly& f, const TwistedPoly& g);

struct Normalization;

/// A Drinfeld module phi over K = F_q(t), given by phi_t = t + a_1 tau + ... + a_d tau^d.
class DrinfeldModule {
public:
    /// `coeffs` are a_0..a_d. Throws DomainError unless a_0 = t, d >= 1 and a_d != 0.
    DrinfeldModule(FieldPtr field, std::vector<RatFunc> coeffs, std::uint64_t seed = 0);

    /// phi_t = t + tau.
    static DrinfeldModule carlitz(const FieldPtr& field);

    const FieldPtr& field_ptr() const { return field_; }
    const FiniteField& field() const { return *field_; }
    std::uint32_t q() const { return field_->q(); }
    unsigned rank() const { return static_cast<unsigned>(phi_t_.degree()); }
    const TwistedPoly& phi_t() const { return phi_t_; }
    const RatFunc& coeff(unsigned i) const { return phi_t_.coeffs().at(i); }
    const RatFunc& a_d() const { return phi_t_.lead(); }
    /// Finite places where a coefficient is non-integral or a_d is not a unit.
    /// The infinite place is always of bad reduction and is not listed.
    const std::vector<Place>& bad_places() const { return bad_; }
    /// True when every coefficient lies in F_q[t].
    bool is_integral() const;
    /// Set on modules produced by normalize_integral.
    bool normalized() const { return normalized_; }
    std::uint64_t seed() const { return seed_; }

    /// phi_t(x).
    RatFunc apply_t(const RatFunc& x) const { return phi_t_.evaluate(x); }

    std::string to_string() const { return phi_t_.to_string(); }

    friend bool operator==(const DrinfeldModule& a, const DrinfeldModule& b) { return a.phi_t_ == b.phi_t_; }

private:
    friend Normalization normalize_integral(const DrinfeldModule& M);

    FieldPtr field_;
    TwistedPoly phi_t_;
    std::vector<Place> bad_;
    bool normalized_ = false;
    std::uint64_t seed_ = 0;
};

/// phi_Q by Horner's scheme on the t-expansion of Q.
TwistedPoly phi_of(const DrinfeldModule& M, const Poly& Q);
/// phi_Q(x) computed as sum_k c_k phi_t^k(x), without forming phi_Q.
RatFunc apply(const DrinfeldModule& M, const Poly& Q, const RatFunc& x);

/// Leading coefficient of phi_Q: c * a_d^((q^(d deg Q) - 1)/(q^d - 1)), c = lead(Q).
RatFunc gamma(const DrinfeldModule& M, const Poly& Q);
/// log_q |gamma_Q|_v, computed from the closed form without expanding the power.
LogUnits log_abs_gamma(const DrinfeldModule& M, const Poly& Q, const Place& v);
/// (q^(d n) - 1)/(q^d - 1).
mpz_class gamma_exponent(std::uint32_t q, unsigned d, unsigned n);

/// The conjugate psi = gamma^-1 phi gamma with all coefficients of psi_t in F_q[t].
struct Normalization {
    DrinfeldModule module;
    /// gamma = B^k where B is the product of the offending primes, k minimal.
    RatFunc conjugator;
};
Normalization normalize_integral(const DrinfeldModule& M);

/// All coefficients of phi_t are v-integral and a_d is a v-unit.
/// Throws DomainError at the infinite place.
bool good_reduction(const DrinfeldModule& M, const Place& v);

/// Residue class of a v-integral x in F_q[t]/(P); throws DomainError if x is not v-integral.
Poly residue(const RatFunc& x, const Place& v);

/// The reduction of phi at a finite place of good reduction. Residue field
/// elements are polynomials of degree < l = deg P representing classes in F_q[t]/(P).
class ResidueModule {
public:
    ResidueModule(Place v, std::vector<Poly> coeffs);

    const Place& place() const { return v_; }
    const Poly& modulus() const { return v_.poly(); }
    const FieldPtr& field_ptr() const { return v_.poly().field_ptr(); }
    /// l = deg P; the residue field is F_{q^l}.
    unsigned degree() const { return v_.degree(); }
    unsigned rank() const { return static_cast<unsigned>(c_.size()) - 1; }
    const std::vector<Poly>& coeffs() const { return c_; }

    /// x^(q^k) in the residue field.
    Poly frobenius(const Poly& x, unsigned k) const;
    /// phi-bar_t(x).
    Poly apply_t(const Poly& x) const;
    /// phi-bar_Q(x).
    Poly apply(const Poly& Q, const Poly& x) const;
    Poly reduce(const RatFunc& x) const { return residue(x, v_); }

    /// e.g. "(t)*x + x^q" with residues printed as polynomials in t mod P.
    std::string to_string() const;

private:
    Place v_;
    std::vector<Poly> c_;
    Poly t_class_;
};

/// Throws DomainError unless good_reduction(M, v).
ResidueModule reduce(const DrinfeldModule& M, const Place& v);

}  // namespace drinfeld
