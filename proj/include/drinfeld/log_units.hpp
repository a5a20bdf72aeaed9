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

#include <compare>
#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace drinfeld {

/// An exact quantity measured in base-q logarithm units.
///
/// logq|x|_v = -ord_v(x) * deg(v), and every height in the library is an
/// exact rational in these units. The real-valued logarithm is value * ln q.
class LogUnits {
public:
    LogUnits() = default;
    LogUnits(long n) : v_(n) {}  // NOLINT(google-explicit-constructor)
    explicit LogUnits(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }
    static LogUnits fraction(const mpz_class& num, const mpz_class& den)
    {
        return LogUnits(mpq_class(num, den));
    }

    const mpq_class& value() const { return v_; }
    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }
    bool is_zero() const { return v_ == 0; }
    int sign() const { return sgn(v_); }
    double to_double() const { return v_.get_d(); }

    LogUnits& operator+=(const LogUnits& o) { v_ += o.v_; return *this; }
    LogUnits& operator-=(const LogUnits& o) { v_ -= o.v_; return *this; }
    friend LogUnits operator+(LogUnits a, const LogUnits& b) { return a += b; }
    friend LogUnits operator-(LogUnits a, const LogUnits& b) { return a -= b; }
    friend LogUnits operator-(const LogUnits& a) { return LogUnits(mpq_class(-a.v_)); }
    friend LogUnits operator*(const LogUnits& a, const mpq_class& k) { return LogUnits(mpq_class(a.v_ * k)); }
    friend LogUnits operator/(const LogUnits& a, const mpq_class& k) { return LogUnits(mpq_class(a.v_ / k)); }

    friend bool operator==(const LogUnits& a, const LogUnits& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const LogUnits& a, const LogUnits& b)
    {
        const int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }

    /// "n" or "n/d".
    std::string to_string() const { return v_.get_str(); }

private:
    mpq_class v_{0};
};

inline LogUnits abs(const LogUnits& x) { return x.sign() < 0 ? -x : x; }
inline LogUnits max(const LogUnits& a, const LogUnits& b) { return a < b ? b : a; }
inline LogUnits min(const LogUnits& a, const LogUnits& b) { return b < a ? b : a; }

/// base^n as a GMP integer.
inline mpz_class mpz_pow(unsigned long base, unsigned long n)
{
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, n);
    return r;
}

}  // namespace drinfeld
