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

#ifndef WOZENCRAFT_CODEC_HPP
#define WOZENCRAFT_CODEC_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>

#include "wozencraft/cyclic.hpp"
#include "wozencraft/params.hpp"
#include "wozencraft/random.hpp"
#include "wozencraft/rational.hpp"

namespace wozencraft {

/// Row i is the codeword of the basis message x^i; the left k x k block is
/// the identity.
struct GeneratorMatrix {
    std::uint64_t q = 2;
    std::uint64_t k = 0;
    std::uint64_t n = 0;
    SymbolVector entries;  // row-major, k * n

    galois::Symbol at(std::uint64_t row, std::uint64_t col) const { return entries[row * n + col]; }
    std::span<const galois::Symbol> row(std::uint64_t r) const {
        return std::span(entries).subspan(r * n, n);
    }
    bool operator==(const GeneratorMatrix&) const = default;
};

/// Indicator vector of the Sidon set, length k. Throws DegreeOverflow if an
/// element does not fit.
SymbolVector build_alpha_star(const SidonSet& sidon, std::uint64_t k);
SymbolVector build_alpha_star(const CodeParams& params);

/// Kept check coordinates for rate r in (1/2, 1): ceil((1/r - 1) k).
/// Throws RateOutOfRange otherwise.
std::uint64_t puncture_plan(Rational r, std::uint64_t k);

/// Like puncture_plan, but r = 1/2 keeps all k check coordinates.
std::uint64_t kept_for_rate(Rational r, std::uint64_t k);

/// The explicit construction: Artin prime k' > k_min, d the largest prime
/// below sqrt(k), the Bose-Chowla set of order d, and alpha* = sum x^a.
CodeParams construct_params(std::uint64_t q, std::uint64_t k_min, Rational rate = Rational(1, 2),
                            std::optional<std::uint64_t> search_cap = {});

/// Copy of params with a different puncturing, rate recomputed.
CodeParams with_rate(CodeParams params, Rational rate);
CodeParams with_kept(CodeParams params, std::uint64_t kept);
CodeParams with_alpha(CodeParams params, SymbolVector alpha);

/// One code x -> (x, first `kept` coefficients of alpha x mod p).
class WozencraftCode {
   public:
    explicit WozencraftCode(const CodeParams& params);
    /// Direct form for arbitrary alpha, no Sidon data required. k' must be an
    /// Artin prime for q.
    WozencraftCode(galois::Field field, std::uint64_t kprime, SymbolVector alpha, std::uint64_t kept);

    const CyclicRing& ring() const noexcept { return ring_; }
    const galois::Field& field() const noexcept { return ring_.field(); }
    std::uint64_t q() const noexcept { return ring_.field().order(); }
    std::uint64_t k() const noexcept { return ring_.k(); }
    std::uint64_t kept() const noexcept { return kept_; }
    std::uint64_t length() const noexcept { return k() + kept_; }
    const RingElement& alpha() const noexcept { return alpha_; }

    /// Throws BadLength unless y has k entries.
    SymbolVector encode(std::span<const galois::Symbol> message) const;
    GeneratorMatrix generator_matrix() const;

   private:
    CyclicRing ring_;
    RingElement alpha_;
    std::uint64_t kept_;
};

SymbolVector encode(std::span<const galois::Symbol> message, const CodeParams& params);
GeneratorMatrix generator_matrix(const CodeParams& params);

/// message * G over F_q.
SymbolVector multiply(std::span<const galois::Symbol> message, const GeneratorMatrix& g, const galois::Field& field);

/// Line 1: `q k n`; then k lines of n space-separated symbols.
void write_generator_matrix(std::ostream& os, const GeneratorMatrix& g);
GeneratorMatrix read_generator_matrix(std::istream& is);

/// Uniform nonzero length-k vector over F_q: symbols drawn by rejection from
/// [0, q), whole vector redrawn if it comes out zero.
SymbolVector sample_random_alpha(std::uint64_t q, std::uint64_t k, Xorshift64Star& rng);
SymbolVector sample_random_alpha(const CodeParams& params, std::uint64_t seed);

}  // namespace wozencraft

#endif  // WOZENCRAFT_CODEC_HPP
