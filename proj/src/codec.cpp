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

#include "wozencraft/codec.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <string>

namespace wozencraft {

SymbolVector build_alpha_star(const SidonSet& sidon, std::uint64_t k) {
    SymbolVector alpha(k, 0);
    for (std::uint64_t a : sidon.elements) {
        if (a >= k) {
            throw Error(ErrorCode::DegreeOverflow,
                        "Sidon element " + std::to_string(a) + " does not fit in length " + std::to_string(k));
        }
        alpha[a] = 1;
    }
    return alpha;
}

SymbolVector build_alpha_star(const CodeParams& params) { return build_alpha_star(params.sidon, params.k); }

std::uint64_t puncture_plan(Rational r, std::uint64_t k) {
    if (!(Rational(1, 2) < r && r < Rational(1, 1))) {
        throw Error(ErrorCode::RateOutOfRange, "rate " + r.str() + " outside (1/2, 1)");
    }
    // (1/r - 1) k = (den - num) k / num
    const auto num = static_cast<std::uint64_t>(r.num());
    const auto den = static_cast<std::uint64_t>(r.den());
    const std::uint64_t top = (den - num) * k;
    return (top + num - 1) / num;
}

std::uint64_t kept_for_rate(Rational r, std::uint64_t k) {
    if (r == Rational(1, 2)) return k;
    return puncture_plan(r, k);
}

CodeParams with_kept(CodeParams params, std::uint64_t kept) {
    params.kept = kept;
    params.rate = Rational(static_cast<std::int64_t>(params.k), static_cast<std::int64_t>(params.k + kept));
    return params;
}

CodeParams with_rate(CodeParams params, Rational rate) {
    const std::uint64_t kept = kept_for_rate(rate, params.k);
    return with_kept(std::move(params), kept);
}

CodeParams with_alpha(CodeParams params, SymbolVector alpha) {
    params.alpha_coeffs = std::move(alpha);
    return params;
}

CodeParams construct_params(std::uint64_t q, std::uint64_t k_min, Rational rate, std::optional<std::uint64_t> search_cap) {
    CodeParams params;
    params.q = q;
    params.kprime = find_artin_prime(q, k_min, search_cap);
    params.k = params.kprime - 1;
    params.d = sidon_order_for_length(params.k);
    params.sidon = bose_chowla(static_cast<std::uint32_t>(params.d));
    params.alpha_coeffs = build_alpha_star(params);
    params = with_rate(std::move(params), rate);
    validate(params);
    return params;
}

WozencraftCode::WozencraftCode(const CodeParams& params)
    : WozencraftCode(galois::field_of_order(params.q), params.kprime, params.alpha_coeffs, params.kept) {}

WozencraftCode::WozencraftCode(galois::Field field, std::uint64_t kprime, SymbolVector alpha, std::uint64_t kept)
    : ring_(std::move(field), kprime), kept_(kept) {
    if (!is_artin_prime(ring_.field().order(), kprime)) {
        throw Error(ErrorCode::InvalidParams, "x^k' - 1 / (x - 1) is reducible for this (q, k')");
    }
    if (alpha.size() != ring_.k()) throw Error(ErrorCode::BadLength, "alpha must have k coefficients");
    if (hamming_weight(alpha) == 0) throw Error(ErrorCode::InvalidParams, "alpha must be nonzero");
    if (kept_ == 0 || kept_ > ring_.k()) throw Error(ErrorCode::BadTruncation, "kept must lie in (0, k]");
    alpha_ = ring_.embed(alpha);
}

SymbolVector WozencraftCode::encode(std::span<const galois::Symbol> message) const {
    if (message.size() != k()) {
        throw Error(ErrorCode::BadLength,
                    "message has " + std::to_string(message.size()) + " symbols, expected " + std::to_string(k()));
    }
    const SymbolVector check = ring_.reduce_mod_p(ring_.mul(ring_.embed(message), alpha_));
    SymbolVector codeword(message.begin(), message.end());
    codeword.insert(codeword.end(), check.begin(), check.begin() + static_cast<std::ptrdiff_t>(kept_));
    return codeword;
}

GeneratorMatrix WozencraftCode::generator_matrix() const {
    GeneratorMatrix g{q(), k(), length(), {}};
    g.entries.reserve(k() * length());
    SymbolVector basis(k(), 0);
    for (std::uint64_t i = 0; i < k(); ++i) {
        basis[i] = 1;
        const SymbolVector row = encode(basis);
        g.entries.insert(g.entries.end(), row.begin(), row.end());
        basis[i] = 0;
    }
    return g;
}

SymbolVector encode(std::span<const galois::Symbol> message, const CodeParams& params) {
    return WozencraftCode(params).encode(message);
}

GeneratorMatrix generator_matrix(const CodeParams& params) { return WozencraftCode(params).generator_matrix(); }

SymbolVector multiply(std::span<const galois::Symbol> message, const GeneratorMatrix& g, const galois::Field& field) {
    if (message.size() != g.k) throw Error(ErrorCode::BadLength, "message length does not match generator rows");
    SymbolVector out(g.n, 0);
    for (std::uint64_t i = 0; i < g.k; ++i) {
        if (message[i] == 0) continue;
        for (std::uint64_t j = 0; j < g.n; ++j) out[j] = field.add(out[j], field.mul(message[i], g.at(i, j)));
    }
    return out;
}

void write_generator_matrix(std::ostream& os, const GeneratorMatrix& g) {
    os << g.q << ' ' << g.k << ' ' << g.n << '\n';
    for (std::uint64_t i = 0; i < g.k; ++i) {
        for (std::uint64_t j = 0; j < g.n; ++j) os << (j ? " " : "") << g.at(i, j);
        os << '\n';
    }
}

GeneratorMatrix read_generator_matrix(std::istream& is) {
    GeneratorMatrix g;
    if (!(is >> g.q >> g.k >> g.n)) throw Error(ErrorCode::ParseError, "missing `q k n` header");
    g.entries.resize(g.k * g.n);
    for (auto& e : g.entries) {
        std::uint64_t v = 0;
        if (!(is >> v) || v >= g.q) throw Error(ErrorCode::ParseError, "bad matrix entry");
        e = static_cast<galois::Symbol>(v);
    }
    return g;
}

SymbolVector sample_random_alpha(std::uint64_t q, std::uint64_t k, Xorshift64Star& rng) {
    SymbolVector alpha(k);
    do {
        for (auto& c : alpha) c = static_cast<galois::Symbol>(rng.below(q));
    } while (hamming_weight(alpha) == 0);
    return alpha;
}

SymbolVector sample_random_alpha(const CodeParams& params, std::uint64_t seed) {
    Xorshift64Star rng(seed);
    return sample_random_alpha(params.q, params.k, rng);
}

}  // namespace wozencraft
