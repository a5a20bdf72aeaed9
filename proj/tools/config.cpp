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
#include "config.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "drinfeld/parse.hpp"

namespace drinfeld::cli {

namespace {

std::string trim(const std::string& s)
{
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_list(const std::string& s)
{
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (char c : s) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if ((c == ',' || c == ';') && depth == 0) {
            out.push_back(trim(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(trim(cur));
    return out;
}

}  // namespace

void RunConfig::read(std::istream& in, const std::string& source)
{
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
        ++number;
        const std::string body = trim(line);
        if (body.empty() || body[0] == '#') continue;
        const auto eq = body.find('=');
        const std::string origin = source + ":" + std::to_string(number);
        if (eq == std::string::npos) throw ConfigError(origin + ": expected `key = value`");
        const std::string key = trim(body.substr(0, eq));
        if (key.empty()) throw ConfigError(origin + ": empty key");
        set(key, trim(body.substr(eq + 1)), origin);
    }
}

void RunConfig::read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file " + path);
    read(in, path);
}

void RunConfig::set(const std::string& key, const std::string& value, const std::string& origin)
{
    std::string k = key;
    std::replace(k.begin(), k.end(), '-', '_');
    values_[k] = ConfigValue{value, origin};
}

const ConfigValue& RunConfig::value(const std::string& key) const
{
    const auto it = values_.find(key);
    if (it == values_.end()) throw ConfigError("missing required key `" + key + "`");
    return it->second;
}

void RunConfig::fail(const std::string& key, const std::string& message) const
{
    const auto it = values_.find(key);
    const std::string where = it == values_.end() ? std::string("config") : it->second.origin;
    throw ConfigError(where + ": `" + key + "`: " + message);
}

std::string RunConfig::text(const std::string& key) const { return value(key).text; }

std::string RunConfig::text_or(const std::string& key, const std::string& fallback) const
{
    return has(key) ? text(key) : fallback;
}

std::uint64_t RunConfig::uint(const std::string& key, std::uint64_t fallback) const
{
    if (!has(key)) return fallback;
    const std::string& s = text(key);
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); }))
        fail(key, "expected a non-negative integer, got \"" + s + "\"");
    try {
        return std::stoull(s);
    } catch (const std::exception&) {
        fail(key, "integer out of range");
    }
}

bool RunConfig::flag(const std::string& key, bool fallback) const
{
    if (!has(key)) return fallback;
    std::string s = text(key);
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (s == "1" || s == "true" || s == "yes" || s == "on") return true;
    if (s == "0" || s == "false" || s == "no" || s == "off") return false;
    fail(key, "expected true or false, got \"" + s + "\"");
}

FieldPtr RunConfig::field() const
{
    const auto p = static_cast<std::uint32_t>(uint("p", 0));
    if (p == 0) throw ConfigError("missing required key `p` (the characteristic)");
    const auto e = static_cast<std::uint32_t>(uint("e", 1));
    try {
        if (e == 1) {
            if (has("modulus")) fail("modulus", "only allowed when e > 1");
            return FiniteField::prime(p);
        }
        if (!has("modulus")) fail("e", "an extension field needs `modulus`, a polynomial in g over F_p");
        const std::vector<std::uint32_t> m = parse_modulus(p, text("modulus"));
        if (m.size() != e + 1) fail("modulus", "degree does not match e = " + std::to_string(e));
        return FiniteField::extension(p, m);
    } catch (const ParseError& err) {
        fail("modulus", err.what());
    } catch (const DomainError& err) {
        fail(has("modulus") ? "modulus" : "p", err.what());
    }
}

DrinfeldModule RunConfig::module(const FieldPtr& F) const
{
    const std::vector<std::string> parts = split_list(text("coeffs"));
    std::vector<RatFunc> coeffs;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        try {
            coeffs.push_back(parse_ratfunc(F, parts[i]));
        } catch (const ParseError& err) {
            fail("coeffs", "coefficient a_" + std::to_string(i) + ": " + err.what());
        } catch (const DomainError& err) {
            fail("coeffs", "coefficient a_" + std::to_string(i) + ": " + err.what());
        }
    }
    if (coeffs.empty() || coeffs[0] != RatFunc::t(F)) fail("coeffs", "a_0 must be t");
    try {
        return DrinfeldModule(F, coeffs, seed());
    } catch (const DomainError& err) {
        fail("coeffs", err.what());
    }
}

RatFunc RunConfig::ratfunc(const FieldPtr& F, const std::string& key) const
{
    try {
        return parse_ratfunc(F, text(key));
    } catch (const ParseError& err) {
        fail(key, err.what());
    } catch (const DomainError& err) {
        fail(key, err.what());
    }
}

Poly RunConfig::poly(const FieldPtr& F, const std::string& key) const
{
    try {
        return parse_poly(F, text(key));
    } catch (const ParseError& err) {
        fail(key, err.what());
    } catch (const DomainError& err) {
        fail(key, err.what());
    }
}

Place RunConfig::place(const FieldPtr& F, const std::string& key) const
{
    try {
        return parse_place(F, text(key));
    } catch (const ParseError& err) {
        fail(key, err.what());
    } catch (const DomainError& err) {
        fail(key, err.what());
    }
}

std::vector<Place> RunConfig::places(const FieldPtr& F, const std::string& key) const
{
    if (!has(key)) return {};
    try {
        return parse_places(F, text(key));
    } catch (const ParseError& err) {
        fail(key, err.what());
    } catch (const DomainError& err) {
        fail(key, err.what());
    }
}

HeightOptions RunConfig::height_options() const
{
    HeightOptions o;
    o.n_max = static_cast<unsigned>(uint("n_max", o.n_max));
    o.window = static_cast<unsigned>(uint("window", o.window));
    o.retries = static_cast<unsigned>(uint("retries", o.retries));
    o.exact_prefix_degree = static_cast<int>(uint("exact_prefix_degree", static_cast<std::uint64_t>(o.exact_prefix_degree)));
    o.exact_degree_bound = static_cast<int>(uint("exact_degree_bound", static_cast<std::uint64_t>(o.exact_degree_bound)));
    return o;
}

}  // namespace drinfeld::cli
