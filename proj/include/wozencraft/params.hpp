/*
   Copyright 2026 The wozencraft authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef WOZENCRAFT_PARAMS_HPP
#define WOZENCRAFT_PARAMS_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "wozencraft/galois.hpp"
#include "wozencraft/rational.hpp"
#include "wozencraft/sidon.hpp"

namespace wozencraft {

/// Everything needed to rebuild one code deterministically.
struct CodeParams {
    std::uint64_t q = 2;
    std::uint64_t kprime = 0;
    /// Message length in F_q symbols; always kprime - 1.
    std::uint64_t k = 0;
    /// Sidon order: a prime with d * d <= k.
    std::uint64_t d = 0;
    SidonSet sidon;
    /// Length-k coefficient vector of alpha over F_q.
    std::vector<galois::Symbol> alpha_coeffs;
    /// Always k / (k + kept).
    Rational rate{1, 2};
    /// Number of retained check coordinates, 0 < kept <= k.
    std::uint64_t kept = 0;

    std::uint64_t length() const noexcept { return k + kept; }
    bool operator==(const CodeParams&) const = default;
};

/// Re-checks every CodeParams invariant. Throws InvalidParams naming the first
/// one that fails.
void validate(const CodeParams& params);

inline constexpr std::uint64_t kArtinSearchFactor = 64;

struct ArtinSearch {
    std::uint64_t kprime;
    /// Candidates k_min < n < kprime rejected on the way, ascending.
    std::vector<std::uint64_t> skipped;
};

/// Smallest prime k' > k_min with q a primitive root mod k'. Candidates are
/// tried in ascending order up to `cap` (default k_min * 64); SearchExhausted
/// if none qualifies.
ArtinSearch search_artin_prime(std::uint64_t q, std::uint64_t k_min, std::optional<std::uint64_t> cap = {});
std::uint64_t find_artin_prime(std::uint64_t q, std::uint64_t k_min, std::optional<std::uint64_t> cap = {});

/// True iff k' is prime and q has multiplicative order k' - 1 modulo k'.
bool is_artin_prime(std::uint64_t q, std::uint64_t kprime);

/// 1 + x + ... + x^(k'-1) as an all-ones coefficient vector.
std::vector<galois::Symbol> cyclotomic_modulus(std::uint64_t kprime);

struct IrreducibilityCertificate {
    bool irreducible = false;
    /// Multiplicative order of q mod k'; 0 when k' divides q. Serves as the
    /// failure witness.
    std::uint64_t order = 0;
    /// Whether x has order exactly k' in F_q[x]/(p(x)); only computed for
    /// k' up to kRingCheckLimit.
    std::optional<bool> ring_check;
};

inline constexpr std::uint64_t kRingCheckLimit = 4096;

/// Certifies irreducibility of the cyclotomic modulus over F_q by the
/// primitive-root criterion. Throws NotPrime if k' is not prime.
IrreducibilityCertificate verify_irreducible(std::uint64_t q, std::uint64_t kprime);

}  // namespace wozencraft

#endif  // WOZENCRAFT_PARAMS_HPP
