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

// The cyclic ring R = F_q[x]/(x^k' - 1) and its quotient F_q[x]/(p(x)) with
// p = 1 + x + ... + x^(k'-1). Elements of the quotient are plain length-k
// coefficient vectors, so the coefficient maps of the code are identities.

#ifndef WOZENCRAFT_CYCLIC_HPP
#define WOZENCRAFT_CYCLIC_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "wozencraft/galois.hpp"

namespace wozencraft {

using SymbolVector = std::vector<galois::Symbol>;

/// Number of nonzero entries.
std::uint64_t hamming_weight(std::span<const galois::Symbol> v) noexcept;

class RingElement {
   public:
    RingElement() = default;
    explicit RingElement(SymbolVector coeffs) : coeffs_(std::move(coeffs)) {}

    std::uint64_t kprime() const noexcept { return coeffs_.size(); }
    const SymbolVector& coeffs() const noexcept { return coeffs_; }
    galois::Symbol operator[](std::size_t i) const noexcept { return coeffs_[i]; }

    bool operator==(const RingElement&) const = default;

   private:
    SymbolVector coeffs_;
};

struct Weights {
    /// Nonzero coefficients among all k'.
    std::uint64_t wt_tilde;
    /// Weight of f mod p.
    std::uint64_t wt;
    /// Weight of the first m entries of f mod p (only when m was given).
    std::optional<std::uint64_t> wt_r;
};

class CyclicRing {
   public:
    CyclicRing(galois::Field field, std::uint64_t kprime);

    const galois::Field& field() const noexcept { return field_; }
    std::uint64_t kprime() const noexcept { return kprime_; }
    std::uint64_t k() const noexcept { return kprime_ - 1; }

    /// Validates length and entry range.
    RingElement element(SymbolVector coeffs) const;
    /// Zero-pads a vector of length <= k' (for instance a length-k field element).
    RingElement embed(std::span<const galois::Symbol> prefix) const;
    RingElement zero() const;
    RingElement one() const;
    RingElement monomial(std::uint64_t exponent, galois::Symbol coeff = 1) const;

    RingElement add(const RingElement& f, const RingElement& g) const;
    RingElement sub(const RingElement& f, const RingElement& g) const;
    /// Cyclic convolution: coefficient j is the sum of f_i g_l over i + l = j mod k'.
    RingElement mul(const RingElement& f, const RingElement& g) const;

    /// (b_0 - b_k, ..., b_{k-1} - b_k): the residue of f modulo p(x).
    SymbolVector reduce_mod_p(const RingElement& f) const;

    /// Throws BadTruncation unless 0 < m <= k.
    Weights weights(const RingElement& f, std::optional<std::uint64_t> m = {}) const;

    /// Product of two length-k field elements in F_q[x]/(p(x)).
    SymbolVector field_mul(std::span<const galois::Symbol> a, std::span<const galois::Symbol> b) const;

   private:
    void require_member(const RingElement& f) const;

    galois::Field field_;
    std::uint64_t kprime_;
};

}  // namespace wozencraft

#endif  // WOZENCRAFT_CYCLIC_HPP
