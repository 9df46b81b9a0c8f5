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

#ifndef WOZENCRAFT_SIDON_HPP
#define WOZENCRAFT_SIDON_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "wozencraft/galois.hpp"

namespace wozencraft {

/// Bose-Chowla Sidon set: p integers in [1, p^2 - 2], Sidon modulo p^2 - 1.
struct SidonSet {
    std::uint64_t p = 0;
    std::uint64_t modulus = 0;
    std::vector<std::uint64_t> elements;
    /// Code of the primitive root of F_{p^2} the set was built from.
    galois::Symbol generator_code = 0;

    std::uint64_t order() const noexcept { return elements.size(); }
    bool operator==(const SidonSet&) const = default;
};

/// Largest prime strictly below x. Throws NoPrime when x <= 2.
std::uint64_t largest_prime_below(double x);

/// Largest prime d with d * d < k, in exact integer arithmetic; agrees with
/// largest_prime_below(sqrt(k)).
std::uint64_t sidon_order_for_length(std::uint64_t k);

/// {i in [1, p^2 - 2] : g^i + g^(p i) = 1} for the canonical primitive root g
/// of the canonical F_{p^2}.
SidonSet bose_chowla(std::uint32_t p);

struct SidonVerdict {
    bool is_sidon = true;
    /// Two ordered pairs (a, b), (c, d) with a - b == c - d (mod n).
    std::optional<std::array<std::uint64_t, 4>> witness;
};

/// Checks that all ordered differences of distinct elements are distinct mod n.
SidonVerdict verify_sidon(std::span<const std::uint64_t> elements, std::uint64_t n);

/// sqrt(m) + m^(1/4) + 1: bound on the order of a Sidon set of length m.
double lindstrom_bound(double m) noexcept;

/// A non-wrapping window [start, start + length) holding more elements than
/// lindstrom_bound(length) allows.
struct WindowExcess {
    std::uint64_t start;
    std::uint64_t length;
    std::uint64_t count;
};

/// Sweeps every contiguous window inside [0, set.modulus).
std::optional<WindowExcess> find_lindstrom_excess(const SidonSet& set);

struct WindowCount {
    std::uint64_t count;
    double lower;
    double upper;
};

inline constexpr double kBoundSlack = 1e-9;

/// |{a in A : (s + a) mod k' < m}| together with the bounds
/// d - (sqrt(k - m) + (k - m)^(1/4) + 2) <= count <= sqrt(m) + m^(1/4) + 1,
/// where k = k' - 1, d = |A| and k - m is clamped at 0. Throws BoundViolation if the count falls
/// outside, BadTruncation unless 0 < m <= k'.
WindowCount window_count_bounds(const SidonSet& set, std::uint64_t shift, std::uint64_t window,
                                std::uint64_t kprime);

}  // namespace wozencraft

#endif  // WOZENCRAFT_SIDON_HPP
