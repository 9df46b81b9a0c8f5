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

#include "wozencraft/sidon.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <unordered_map>
#include <utility>

namespace wozencraft {

std::uint64_t largest_prime_below(double x) {
    if (!(x > 2.0)) throw Error(ErrorCode::NoPrime, "no prime below " + std::to_string(x));
    auto n = static_cast<std::uint64_t>(std::ceil(x)) - 1;
    while (!galois::is_prime(n)) --n;
    return n;
}

std::uint64_t sidon_order_for_length(std::uint64_t k) {
    if (k <= 4) throw Error(ErrorCode::NoPrime, "no prime below sqrt(" + std::to_string(k) + ")");
    auto d = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(k)));
    while (d * d >= k) --d;
    while ((d + 1) * (d + 1) < k) ++d;
    while (!galois::is_prime(d)) --d;
    return d;
}

SidonSet bose_chowla(std::uint32_t p) {
    const galois::Field field = galois::field_make(p, 2);
    const galois::FieldElement g = galois::find_primitive_root(field);
    const std::uint64_t n = field.order() - 1;

    SidonSet set;
    set.p = p;
    set.modulus = n;
    set.generator_code = g.code();
    galois::Symbol power = 1;
    for (std::uint64_t i = 1; i <= n - 1; ++i) {
        power = field.mul(power, g.code());
        if (field.add(power, field.pow(power, p)) == 1) set.elements.push_back(i);
    }
    return set;
}

SidonVerdict verify_sidon(std::span<const std::uint64_t> elements, std::uint64_t n) {
    std::unordered_map<std::uint64_t, std::pair<std::uint64_t, std::uint64_t>> seen;
    seen.reserve(elements.size() * elements.size());
    auto record = [&](std::uint64_t a, std::uint64_t b) -> std::optional<std::array<std::uint64_t, 4>> {
        const std::uint64_t diff = (a % n + n - b % n) % n;
        const auto [it, inserted] = seen.try_emplace(diff, a, b);
        if (inserted) return std::nullopt;
        return std::array<std::uint64_t, 4>{it->second.first, it->second.second, a, b};
    };
    for (std::size_t i = 0; i < elements.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            for (auto [a, b] : {std::pair{elements[i], elements[j]}, std::pair{elements[j], elements[i]}}) {
                if (auto w = record(a, b)) return {false, w};
            }
        }
    }
    return {};
}

double lindstrom_bound(double m) noexcept { return std::sqrt(m) + std::sqrt(std::sqrt(m)) + 1.0; }

std::optional<WindowExcess> find_lindstrom_excess(const SidonSet& set) {
    const std::uint64_t n = set.modulus;
    // prefix[i] = #elements < i
    std::vector<std::uint64_t> prefix(n + 1, 0);
    for (std::uint64_t a : set.elements) {
        if (a < n) ++prefix[a + 1];
    }
    for (std::uint64_t i = 0; i < n; ++i) prefix[i + 1] += prefix[i];
    for (std::uint64_t length = 1; length <= n; ++length) {
        const double bound = lindstrom_bound(static_cast<double>(length)) + kBoundSlack;
        for (std::uint64_t start = 0; start + length <= n; ++start) {
            const std::uint64_t count = prefix[start + length] - prefix[start];
            if (static_cast<double>(count) > bound) return WindowExcess{start, length, count};
        }
    }
    return std::nullopt;
}

WindowCount window_count_bounds(const SidonSet& set, std::uint64_t shift, std::uint64_t window,
                                std::uint64_t kprime) {
    const std::uint64_t k = kprime - 1;
    if (window == 0 || window > kprime) {
        throw Error(ErrorCode::BadTruncation,
                    "window " + std::to_string(window) + " outside (0, " + std::to_string(kprime) + "]");
    }
    const std::uint64_t d = set.order();
    const std::uint64_t max_element = set.elements.empty() ? 0 : set.elements.back();
    if (d < 2 || max_element > d * d - 2 || d * d > k) {
        throw Error(ErrorCode::InvalidParams, "Sidon set does not fit below k - 1");
    }

    WindowCount out{0, 0.0, 0.0};
    for (std::uint64_t a : set.elements) {
        if ((shift + a) % kprime < window) ++out.count;
    }
    const double rest = window >= k ? 0.0 : static_cast<double>(k - window);
    out.lower = static_cast<double>(d) - (std::sqrt(rest) + std::sqrt(std::sqrt(rest)) + 2.0);
    out.upper = lindstrom_bound(static_cast<double>(window));
    const double count = static_cast<double>(out.count);
    if (count < out.lower - kBoundSlack || count > out.upper + kBoundSlack) {
        throw Error(ErrorCode::BoundViolation,
                    "shift " + std::to_string(shift) + ", window " + std::to_string(window) + ": count " +
                        std::to_string(out.count) + " outside [" + std::to_string(out.lower) + ", " +
                        std::to_string(out.upper) + "]");
    }
    return out;
}

}  // namespace wozencraft
