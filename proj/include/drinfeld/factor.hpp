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
#include <utility>
#include <vector>

#include "drinfeld/poly.hpp"

namespace drinfeld {

/// f = lead * prod(P_i ^ m_i) with each P_i monic irreducible, sorted by P_i.
struct Factorization {
    Fq lead;
    std::vector<std::pair<Poly, unsigned>> factors;

    Poly product(const FieldPtr& field) const;
};

/// Full factorization over F_q: square-free decomposition, distinct-degree
/// splitting, then Cantor–Zassenhaus equal-degree splitting driven by a
/// generator seeded with `seed`. Inputs of degree below 4 use trial division.
/// Throws DomainError on the zero polynomial.
Factorization factor(const Poly& f, std::uint64_t seed = 0);

/// Square-free decomposition of a monic polynomial: pairs (g_i, i) with
/// f = prod g_i^i and each g_i square-free.
std::vector<std::pair<Poly, unsigned>> squarefree_decomposition(const Poly& f);

/// Rabin's irreducibility test.
bool is_irreducible(const Poly& f);

/// Monic irreducible polynomials of exact degree n in canonical order.
std::vector<Poly> monic_irreducibles(const FieldPtr& field, unsigned n);

}  // namespace drinfeld
