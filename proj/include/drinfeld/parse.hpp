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

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "drinfeld/place.hpp"
#include "drinfeld/ratfunc.hpp"

namespace drinfeld {

/// Malformed input text; `position` is the 0-based offset of the problem.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " at position " + std::to_string(position)), position_(position)
    {
    }
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// Parses an element of F_q(t). Accepted syntax: integers, `t`, the extension
/// generator `g`, parentheses, and the operators + - * / ^ (integer exponents),
/// e.g. `t^2+1`, `(g+1)*t^3+g`, `(t+1)/(t^2+t+1)`.
RatFunc parse_ratfunc(const FieldPtr& field, std::string_view text);
/// As parse_ratfunc, but the value must be a polynomial.
Poly parse_poly(const FieldPtr& field, std::string_view text);
/// `inf` or a monic irreducible polynomial.
Place parse_place(const FieldPtr& field, std::string_view text);
/// Comma- or semicolon-separated places; empty text, `{}` or `none` give no places.
std::vector<Place> parse_places(const FieldPtr& field, std::string_view text);
/// Modulus of an extension field written as a polynomial in `g` over F_p,
/// returned lowest coefficient first.
std::vector<std::uint32_t> parse_modulus(std::uint32_t p, std::string_view text);

}  // namespace drinfeld
