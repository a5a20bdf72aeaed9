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

#include "drinfeld/parse.hpp"

#include <algorithm>
#include <cctype>

namespace drinfeld {

namespace {

enum class Symbol { Variable, Generator };

class Parser {
public:
    Parser(const FieldPtr& field, std::string_view text, char variable, char generator)
        : F_(field), s_(text), var_(variable), gen_(generator)
    {
    }

    RatFunc parse()
    {
        RatFunc v = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected character '" + std::string(1, s_[pos_]) + "'");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

    void skip()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool accept(char c)
    {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    RatFunc expr()
    {
        RatFunc v = term();
        for (;;) {
            if (accept('+')) v = v + term();
            else if (accept('-')) v = v - term();
            else return v;
        }
    }

    RatFunc term()
    {
        RatFunc v = unary();
        for (;;) {
            if (accept('*')) {
                v = v * unary();
            } else if (accept('/')) {
                const std::size_t at = pos_;
                RatFunc d = unary();
                if (d.is_zero()) throw ParseError("division by zero", at);
                v = v / d;
            } else {
                return v;
            }
        }
    }

    RatFunc unary()
    {
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return power();
    }

    RatFunc power()
    {
        RatFunc base = atom();
        if (accept('^')) {
            skip();
            bool negative = accept('-');
            skip();
            if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
                fail("expected integer exponent");
            const std::int64_t n = integer();
            if (negative && base.is_zero()) fail("negative power of zero");
            return base.pow(negative ? -n : n);
        }
        return base;
    }

    std::int64_t integer()
    {
        std::int64_t n = 0;
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            n = n * 10 + (s_[pos_] - '0');
            if (n > (std::int64_t{1} << 40)) throw ParseError("integer literal too large", start);
            ++pos_;
        }
        return n;
    }

    RatFunc atom()
    {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        const char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            RatFunc v = expr();
            if (!accept(')')) fail("expected ')'");
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return RatFunc::from_int(F_, integer());
        if (c == var_) {
            ++pos_;
            return RatFunc::t(F_);
        }
        if (gen_ != 0 && c == gen_) {
            if (F_->is_prime()) fail("generator '" + std::string(1, gen_) + "' used over a prime field");
            ++pos_;
            return RatFunc::constant(F_, F_->generator());
        }
        fail("unexpected character '" + std::string(1, c) + "'");
    }

    const FieldPtr& F_;
    std::string_view s_;
    char var_;
    char gen_;
    std::size_t pos_ = 0;
};

std::string_view strip(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace

RatFunc parse_ratfunc(const FieldPtr& field, std::string_view text)
{
    if (strip(text).empty()) throw ParseError("empty expression", 0);
    return Parser(field, text, 't', 'g').parse();
}

Poly parse_poly(const FieldPtr& field, std::string_view text)
{
    RatFunc v = parse_ratfunc(field, text);
    if (!v.is_polynomial()) throw ParseError("expected a polynomial, got " + v.to_string(), 0);
    return v.num();
}

Place parse_place(const FieldPtr& field, std::string_view text)
{
    const std::string_view s = strip(text);
    if (s == "inf" || s == "infinity" || s == "oo") return Place::infinity(field);
    Poly P = parse_poly(field, s);
    if (!P.is_monic()) throw ParseError("place polynomial " + P.to_string() + " is not monic", 0);
    try {
        return Place::finite(P);
    } catch (const DomainError& e) {
        throw ParseError(e.what(), 0);
    }
}

std::vector<Place> parse_places(const FieldPtr& field, std::string_view text)
{
    std::vector<Place> out;
    std::string_view s = strip(text);
    if (s.empty() || s == "{}" || s == "none") return out;
    if (s.front() == '{' && s.back() == '}') s = strip(s.substr(1, s.size() - 2));
    std::size_t start = 0;
    while (start <= s.size()) {
        std::size_t end = s.find_first_of(",;", start);
        if (end == std::string_view::npos) end = s.size();
        const std::string_view item = strip(s.substr(start, end - start));
        if (item.empty()) throw ParseError("empty place in list", start);
        try {
            out.push_back(parse_place(field, item));
        } catch (const ParseError& e) {
            throw ParseError(e.what(), start + e.position());
        }
        start = end + 1;
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<std::uint32_t> parse_modulus(std::uint32_t p, std::string_view text)
{
    const FieldPtr Fp = FiniteField::prime(p);
    RatFunc v = Parser(Fp, text, 'g', 0).parse();
    if (!v.is_polynomial()) throw ParseError("modulus must be a polynomial in g", 0);
    std::vector<std::uint32_t> out;
    for (Fq c : v.num().coeffs()) out.push_back(c.v);
    return out;
}

}  // namespace drinfeld
