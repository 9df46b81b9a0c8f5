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

#include "wozencraft/cyclic.hpp"

#include <algorithm>
#include <string>

namespace wozencraft {

std::uint64_t hamming_weight(std::span<const galois::Symbol> v) noexcept {
    return static_cast<std::uint64_t>(std::count_if(v.begin(), v.end(), [](galois::Symbol c) { return c != 0; }));
}

CyclicRing::CyclicRing(galois::Field field, std::uint64_t kprime) : field_(std::move(field)), kprime_(kprime) {
    if (kprime_ < 2) throw Error(ErrorCode::InvalidParams, "k' must be at least 2");
}

void CyclicRing::require_member(const RingElement& f) const {
    if (f.kprime() != kprime_) {
        throw Error(ErrorCode::ContextMismatch,
                    "element of length " + std::to_string(f.kprime()) + " in ring with k' = " + std::to_string(kprime_));
    }
}

RingElement CyclicRing::element(SymbolVector coeffs) const {
    if (coeffs.size() != kprime_) {
        throw Error(ErrorCode::BadLength,
                    "expected " + std::to_string(kprime_) + " coefficients, got " + std::to_string(coeffs.size()));
    }
    for (galois::Symbol c : coeffs) {
        if (!field_.contains(c)) throw Error(ErrorCode::InvalidParams, "coefficient " + std::to_string(c) + " outside F_q");
    }
    return RingElement(std::move(coeffs));
}

RingElement CyclicRing::embed(std::span<const galois::Symbol> prefix) const {
    if (prefix.size() > kprime_) {
        throw Error(ErrorCode::BadLength, "cannot embed " + std::to_string(prefix.size()) + " coefficients");
    }
    SymbolVector coeffs(prefix.begin(), prefix.end());
    coeffs.resize(kprime_, 0);
    return element(std::move(coeffs));
}

RingElement CyclicRing::zero() const { return RingElement(SymbolVector(kprime_, 0)); }

RingElement CyclicRing::one() const { return monomial(0); }

RingElement CyclicRing::monomial(std::uint64_t exponent, galois::Symbol coeff) const {
    SymbolVector coeffs(kprime_, 0);
    coeffs[exponent % kprime_] = coeff;
    return element(std::move(coeffs));
}

RingElement CyclicRing::add(const RingElement& f, const RingElement& g) const {
    require_member(f);
    require_member(g);
    SymbolVector out(kprime_);
    for (std::uint64_t i = 0; i < kprime_; ++i) out[i] = field_.add(f[i], g[i]);
    return RingElement(std::move(out));
}

RingElement CyclicRing::sub(const RingElement& f, const RingElement& g) const {
    require_member(f);
    require_member(g);
    SymbolVector out(kprime_);
    for (std::uint64_t i = 0; i < kprime_; ++i) out[i] = field_.sub(f[i], g[i]);
    return RingElement(std::move(out));
}

RingElement CyclicRing::mul(const RingElement& f, const RingElement& g) const {
    require_member(f);
    require_member(g);
    SymbolVector out(kprime_, 0);
    for (std::uint64_t i = 0; i < kprime_; ++i) {
        if (f[i] == 0) continue;
        std::uint64_t j = i;
        for (std::uint64_t l = 0; l < kprime_; ++l, ++j) {
            if (j == kprime_) j = 0;
            if (g[l] != 0) out[j] = field_.add(out[j], field_.mul(f[i], g[l]));
        }
    }
    return RingElement(std::move(out));
}

SymbolVector CyclicRing::reduce_mod_p(const RingElement& f) const {
    require_member(f);
    const std::uint64_t top_index = k();
    const galois::Symbol top = f[top_index];
    SymbolVector out(f.coeffs().begin(), f.coeffs().begin() + static_cast<std::ptrdiff_t>(top_index));
    if (top != 0) {
        for (auto& c : out) c = field_.sub(c, top);
    }
    return out;
}

Weights CyclicRing::weights(const RingElement& f, std::optional<std::uint64_t> m) const {
    require_member(f);
    if (m && (*m == 0 || *m > k())) {
        throw Error(ErrorCode::BadTruncation,
                    "truncation " + std::to_string(*m) + " outside (0, " + std::to_string(k()) + "]");
    }
    const SymbolVector reduced = reduce_mod_p(f);
    Weights w{hamming_weight(f.coeffs()), hamming_weight(reduced), std::nullopt};
    if (m) w.wt_r = hamming_weight(std::span(reduced).first(*m));
    return w;
}

SymbolVector CyclicRing::field_mul(std::span<const galois::Symbol> a, std::span<const galois::Symbol> b) const {
    if (a.size() != k() || b.size() != k()) throw Error(ErrorCode::BadLength, "field elements have k coefficients");
    return reduce_mod_p(mul(embed(a), embed(b)));
}

}  // namespace wozencraft
