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

#include <doctest.h>

#include <cstdint>
#include <vector>

#include "wozencraft/codec.hpp"
#include "wozencraft/params.hpp"
#include "wozencraft/random.hpp"

using namespace wozencraft;

namespace {

bool naive_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d < n; ++d)
        if (n % d == 0) return false;
    return true;
}

// q generates Z_n^* by direct powering.
bool naive_artin(std::uint64_t q, std::uint64_t n) {
    if (!naive_prime(n) || q % n == 0) return false;
    std::uint64_t x = q % n, ord = 1;
    while (x != 1) {
        x = x * q % n;
        ++ord;
    }
    return ord == n - 1;
}

ErrorCode code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no error raised");
    return ErrorCode::ParseError;
}

}  // namespace

TEST_CASE("find_artin_prime examples") {
    CHECK(find_artin_prime(2, 10) == 11);
    CHECK(find_artin_prime(2, 5) == 11);
    CHECK(find_artin_prime(3, 4) == 5);
    auto s = search_artin_prime(2, 5);
    CHECK(s.kprime == 11);
    CHECK(s.skipped == std::vector<std::uint64_t>{6, 7, 8, 9, 10});
}

TEST_CASE("find_artin_prime is the least qualifying prime") {
    for (std::uint64_t q : {2u, 3u, 5u, 7u, 8u, 11u}) {
        for (std::uint64_t k_min = 2; k_min < 120; ++k_min) {
            std::uint64_t expect = k_min + 1;
            while (!naive_artin(q, expect)) ++expect;
            CAPTURE(q);
            CAPTURE(k_min);
            REQUIRE(find_artin_prime(q, k_min) == expect);
            REQUIRE(verify_irreducible(q, expect).irreducible);
        }
    }
}

TEST_CASE("skipped candidates really are disqualified") {
    Xorshift64Star rng(3);
    for (std::uint64_t q : {2u, 3u, 5u}) {
        for (std::uint64_t k_min : {100u, 500u, 1000u}) {
            auto s = search_artin_prime(q, k_min);
            REQUIRE(verify_irreducible(q, s.kprime).irreducible);
            if (s.skipped.empty()) continue;
            for (int t = 0; t < 10; ++t) {
                std::uint64_t n = s.skipped[rng.below(s.skipped.size())];
                CAPTURE(n);
                REQUIRE_FALSE(naive_artin(q, n));
            }
        }
    }
}

TEST_CASE("a square q has no Artin primes") {
    CHECK(code_of([] { find_artin_prime(4, 10); }) == ErrorCode::SearchExhausted);
    CHECK(code_of([] { find_artin_prime(2, 5, 10); }) == ErrorCode::SearchExhausted);
}

TEST_CASE("cyclotomic modulus") {
    CHECK(cyclotomic_modulus(3) == std::vector<galois::Symbol>{1, 1, 1});
    CHECK(cyclotomic_modulus(11) == std::vector<galois::Symbol>(11, 1));
    CHECK(cyclotomic_modulus(2) == std::vector<galois::Symbol>{1, 1});
}

TEST_CASE("verify_irreducible") {
    auto c = verify_irreducible(2, 11);
    CHECK(c.irreducible);
    CHECK(c.order == 10);
    REQUIRE(c.ring_check.has_value());
    CHECK(*c.ring_check);
    auto bad = verify_irreducible(2, 7);
    CHECK_FALSE(bad.irreducible);
    CHECK(bad.order == 3);
    CHECK(verify_irreducible(3, 5).irreducible);
    CHECK(code_of([] { verify_irreducible(2, 9); }) == ErrorCode::NotPrime);
}

TEST_CASE("verify_irreducible agrees with a direct irreducibility test") {
    for (std::uint32_t q : {2u, 3u, 5u, 7u}) {
        for (std::uint64_t kprime : {3u, 5u, 7u, 11u, 13u, 17u, 19u}) {
            if (kprime == q) continue;
            const auto p = cyclotomic_modulus(kprime);
            CAPTURE(q);
            CAPTURE(kprime);
            REQUIRE(verify_irreducible(q, kprime).irreducible == galois::is_irreducible(p, q));
        }
    }
}

TEST_CASE("validate rejects inconsistent parameters") {
    const CodeParams good = construct_params(2, 10);
    CHECK_NOTHROW(validate(good));
    auto rejects = [](CodeParams p) { return code_of([&] { validate(p); }) == ErrorCode::InvalidParams; };
    CodeParams p = good;
    p.q = 6;
    CHECK(rejects(p));
    p = good;
    p.kprime = 7;
    p.k = 6;
    CHECK(rejects(p));
    p = good;
    p.k = 9;
    CHECK(rejects(p));
    p = good;
    p.d = 5;
    CHECK(rejects(p));
    p = good;
    p.alpha_coeffs.assign(10, 0);
    CHECK(rejects(p));
    p = good;
    p.alpha_coeffs[0] = 2;
    CHECK(rejects(p));
    p = good;
    p.alpha_coeffs.pop_back();
    CHECK(rejects(p));
    p = good;
    p.sidon.elements = {0, 1, 2};
    CHECK(rejects(p));
    p = good;
    p.kept = 0;
    CHECK(rejects(p));
    p = good;
    p.kept = 5;
    CHECK(rejects(p));
    p.rate = Rational(2, 3);
    CHECK_NOTHROW(validate(p));
}

TEST_CASE("construct_params at k_min = 10") {
    CodeParams p = construct_params(2, 10);
    CHECK(p.kprime == 11);
    CHECK(p.k == 10);
    CHECK(p.d == 3);
    CHECK(p.sidon.elements == std::vector<std::uint64_t>{4, 5, 7});
    CHECK(p.sidon.modulus == 8);
    CHECK(p.kept == 10);
    CHECK(p.length() == 20);
}
