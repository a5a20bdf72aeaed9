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
#include <istream>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "drinfeld/drinfeld.hpp"
#include "drinfeld/heights.hpp"
#include "drinfeld/place.hpp"

namespace drinfeld::cli {

/// A configuration problem, already annotated with its source and position.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct ConfigValue {
    std::string text;
    /// "file:line" or "command line".
    std::string origin;
};

/// Line-oriented `key = value` settings. Blank lines and lines starting with
/// '#' are ignored; later assignments override earlier ones.
class RunConfig {
public:
    void read(std::istream& in, const std::string& source);
    void read_file(const std::string& path);
    /// Adds "key=value" from the command line.
    void set(const std::string& key, const std::string& value, const std::string& origin = "command line");

    bool has(const std::string& key) const { return values_.count(key) > 0; }
    std::string text(const std::string& key) const;
    std::string text_or(const std::string& key, const std::string& fallback) const;
    std::uint64_t uint(const std::string& key, std::uint64_t fallback) const;
    bool flag(const std::string& key, bool fallback) const;

    /// F_q from `p`, `e` (default 1) and `modulus` (a polynomial in g, needed when e > 1).
    FieldPtr field() const;
    /// The module from `coeffs`: comma-separated a_0, ..., a_d with a_0 = t.
    DrinfeldModule module(const FieldPtr& F) const;
    RatFunc ratfunc(const FieldPtr& F, const std::string& key) const;
    Poly poly(const FieldPtr& F, const std::string& key) const;
    Place place(const FieldPtr& F, const std::string& key) const;
    std::vector<Place> places(const FieldPtr& F, const std::string& key) const;
    HeightOptions height_options() const;
    std::uint64_t seed() const { return uint("seed", 0); }
    unsigned workers() const { return static_cast<unsigned>(uint("workers", 0)); }

private:
    const ConfigValue& value(const std::string& key) const;
    [[noreturn]] void fail(const std::string& key, const std::string& message) const;

    std::map<std::string, ConfigValue> values_;
};

}  // namespace drinfeld::cli
