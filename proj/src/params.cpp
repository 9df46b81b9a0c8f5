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

#include "wozencraft/params.hpp"

#include <algorithm>
#include <string>

namespace wozencraft {

namespace {

[[noreturn]] void invalid(const std::string& what) { throw Error(ErrorCode::InvalidParams, what); }

}  // namespace

bool is_artin_prime(std::uint64_t q, std::uint64_t kprime) {
    if (!galois::is_prime(kprime) || q % kprime == 0) return false;
    return galois::multiplicative_order(q % kprime, kprime) == kprime - 1;
}

ArtinSearch search_artin_prime(std::uint64_t q, std::uint64_t k_min, std::optional<std::uint64_t> cap) {
    if (!galois::as_prime_power(q)) invalid("q = " + std::to_string(q) + " is not a prime power");
    if (k_min < 2) invalid("k_min must be at least 2");
    const std::uint64_t limit = cap.value_or(k_min * kArtinSearchFactor);
    ArtinSearch search{0, {}};
    for (std::uint64_t n = k_min + 1; n <= limit; ++n) {
        if (is_artin_prime(q, n)) {
            search.kprime = n;
            return search;
        }
        search.skipped.push_back(n);
    }
    throw Error(ErrorCode::SearchExhausted, "no prime k' in (" + std::to_string(k_min) + ", " +
                                                std::to_string(limit) + "] has " + std::to_string(q) +
                                                " as a primitive root");
}

std::uint64_t find_artin_prime(std::uint64_t q, std::uint64_t k_min, std::optional<std::uint64_t> cap) {
    return search_artin_prime(q, k_min, cap).kprime;
}

std::vector<galois::Symbol> cyclotomic_modulus(std::uint64_t kprime) {
    return std::vector<galois::Symbol>(kprime, 1);
}

IrreducibilityCertificate verify_irreducible(std::uint64_t q, std::uint64_t kprime) {
    if (!galois::is_prime(kprime)) throw Error(ErrorCode::NotPrime, std::to_string(kprime) + " is not prime");
    IrreducibilityCertificate cert;
    if (q % kprime != 0) cert.order = galois::multiplicative_order(q % kprime, kprime);
    cert.irreducible = cert.order == kprime - 1;

    if (kprime <= kRingCheckLimit) {
        // Walk x, x^2, ... in F_q[x]/(p(x)); x^j = 1 must first happen at j = k'.
        const galois::Field field = galois::field_of_order(q);
        const std::uint64_t k = kprime - 1;
        std::vector<galois::Symbol> power(k, 0);
        power[0] = 1;
        std::uint64_t first_one = 0;
        for (std::uint64_t j = 1; j <= kprime; ++j) {
            // multiply by x, then fold the x^k term using x^k = -(1 + ... + x^(k-1))
            const galois::Symbol top = power[k - 1];
            for (std::uint64_t i = k - 1; i > 0; --i) power[i] = power[i - 1];
            power[0] = 0;
            if (top != 0) {
                for (auto& c : power) c = field.sub(c, top);
            }
            const bool is_one =
                power[0] == 1 && std::all_of(power.begin() + 1, power.end(), [](galois::Symbol c) { return c == 0; });
            if (is_one) {
                first_one = j;
                break;
            }
        }
        cert.ring_check = first_one == kprime;
    }
    return cert;
}

void validate(const CodeParams& params) {
    const auto pp = galois::as_prime_power(params.q);
    if (!pp || params.q > galois::kMaxOrder) invalid("q = " + std::to_string(params.q) + " is not a supported prime power");
    if (params.kprime < 3 || params.k != params.kprime - 1) invalid("k must equal kprime - 1");
    if (!is_artin_prime(params.q, params.kprime)) {
        invalid(std::to_string(params.q) + " is not a primitive root modulo prime " + std::to_string(params.kprime));
    }
    if (!galois::is_prime(params.d) || params.d * params.d > params.k) {
        invalid("d = " + std::to_string(params.d) + " must be a prime with d^2 <= k");
    }
    const SidonSet& s = params.sidon;
    if (s.p != params.d || s.modulus != params.d * params.d - 1) invalid("Sidon modulus must be d^2 - 1");
    if (s.elements.size() != params.d) invalid("Sidon set must have exactly d elements");
    if (!std::is_sorted(s.elements.begin(), s.elements.end()) ||
        std::adjacent_find(s.elements.begin(), s.elements.end()) != s.elements.end()) {
        invalid("Sidon elements must be strictly increasing");
    }
    if (s.elements.front() < 1 || s.elements.back() > s.modulus - 1) invalid("Sidon elements must lie in [1, d^2 - 2]");
    if (const auto verdict = verify_sidon(s.elements, s.modulus); !verdict.is_sidon) {
        invalid("Sidon set has a repeated difference modulo " + std::to_string(s.modulus));
    }
    if (params.alpha_coeffs.size() != params.k) invalid("alpha_coeffs must have exactly k entries");
    if (std::any_of(params.alpha_coeffs.begin(), params.alpha_coeffs.end(),
                    [&](galois::Symbol c) { return c >= params.q; })) {
        invalid("alpha_coeffs entries must lie in [0, q)");
    }
    if (std::all_of(params.alpha_coeffs.begin(), params.alpha_coeffs.end(), [](galois::Symbol c) { return c == 0; })) {
        invalid("alpha must be nonzero");
    }
    if (params.kept == 0 || params.kept > params.k) invalid("kept must lie in (0, k]");
    const Rational expected(static_cast<std::int64_t>(params.k), static_cast<std::int64_t>(params.k + params.kept));
    if (params.rate != expected) invalid("rate must equal k/(k + kept) = " + expected.str());
}

}  // namespace wozencraft
