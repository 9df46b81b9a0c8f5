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

// Prime and extension field arithmetic over F_{p^e}, plus the small amount of
// elementary number theory (trial-division factoring, multiplicative orders)
// that the code constructions need.
//
// Field elements are integer codes: the element c_0 + c_1 t + ... + c_{e-1} t^{e-1}
// of F_p[t]/(f) is stored as c_0 + c_1 p + ... + c_{e-1} p^{e-1}.

#ifndef WOZENCRAFT_GALOIS_HPP
#define WOZENCRAFT_GALOIS_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wozencraft/error.hpp"

namespace wozencraft::galois {

using Symbol = std::uint32_t;

/// Largest supported field order (and multiplicative group bound).
inline constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 31;

bool is_prime(std::uint64_t n) noexcept;

/// Prime factors of n with multiplicity, ascending. factorize(1) is empty.
std::vector<std::uint64_t> factorize(std::uint64_t n);

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) noexcept;
std::uint64_t gcd(std::uint64_t a, std::uint64_t b) noexcept;

/// Least d >= 1 with g^d = 1, found by stripping prime factors off a known
/// group order. `is_one_at(d)` must report whether g^d is the identity.
template <class IsOneAt>
std::uint64_t order_from_group_order(std::uint64_t group_order, IsOneAt&& is_one_at) {
    std::uint64_t order = group_order;
    for (std::uint64_t prime : factorize(group_order)) {
        if (order % prime == 0 && is_one_at(order / prime)) order /= prime;
    }
    return order;
}

/// Multiplicative order of the residue g in (Z/nZ)^*. Throws NotAUnit when
/// gcd(g, n) != 1.
std::uint64_t multiplicative_order(std::uint64_t g, std::uint64_t n);

struct PrimePower {
    std::uint32_t prime;
    unsigned exponent;
};

/// Decomposes q = p^e; nullopt when q is not a prime power.
std::optional<PrimePower> as_prime_power(std::uint64_t q) noexcept;

/// Irreducibility of a monic polynomial over F_p (coefficients low degree
/// first, including the leading 1), via Rabin's test.
bool is_irreducible(std::span<const Symbol> monic, std::uint32_t p);

struct FieldDesc {
    std::uint32_t characteristic = 2;
    unsigned degree = 1;
    /// Monic modulus, low degree first, leading 1 included; empty for prime fields.
    std::vector<Symbol> modulus;
    std::uint64_t order = 2;

    bool operator==(const FieldDesc&) const = default;
};

std::string describe(const FieldDesc& desc);

class FieldElement;

/// Immutable handle to a finite field. Copies share the same tables.
class Field {
   public:
    const FieldDesc& desc() const noexcept;
    std::uint32_t characteristic() const noexcept { return desc().characteristic; }
    unsigned degree() const noexcept { return desc().degree; }
    std::uint64_t order() const noexcept { return desc().order; }

    Symbol add(Symbol a, Symbol b) const noexcept;
    Symbol sub(Symbol a, Symbol b) const noexcept;
    Symbol neg(Symbol a) const noexcept;
    Symbol mul(Symbol a, Symbol b) const noexcept;
    /// Throws ZeroInverse for a == 0.
    Symbol inv(Symbol a) const;
    Symbol pow(Symbol a, std::uint64_t n) const noexcept;

    bool contains(std::uint64_t code) const noexcept { return code < order(); }

    FieldElement element(std::uint64_t code) const;
    FieldElement zero() const;
    FieldElement one() const;

    bool operator==(const Field& other) const noexcept { return desc() == other.desc(); }

   private:
    struct Impl;
    explicit Field(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
    std::shared_ptr<const Impl> impl_;

    friend Field field_make(std::uint32_t p, unsigned e);
};

/// Builds F_{p^e}; for e > 1 the modulus is the lexicographically smallest
/// monic irreducible (c_0 compared first, then c_1, ...).
Field field_make(std::uint32_t p, unsigned e);

/// Builds F_q for a prime power q.
Field field_of_order(std::uint64_t q);

class FieldElement {
   public:
    FieldElement(Field field, Symbol code);

    const Field& field() const noexcept { return field_; }
    Symbol code() const noexcept { return code_; }
    bool is_zero() const noexcept { return code_ == 0; }

    FieldElement operator-() const { return {field_, field_.neg(code_)}; }
    FieldElement& operator+=(const FieldElement& rhs);
    FieldElement& operator-=(const FieldElement& rhs);
    FieldElement& operator*=(const FieldElement& rhs);
    FieldElement& operator/=(const FieldElement& rhs);

    friend bool operator==(const FieldElement& lhs, const FieldElement& rhs) noexcept {
        return lhs.code_ == rhs.code_ && lhs.field_ == rhs.field_;
    }

   private:
    void require_same_field(const FieldElement& rhs) const;

    Field field_;
    Symbol code_;
};

inline FieldElement operator+(FieldElement lhs, const FieldElement& rhs) { return lhs += rhs; }
inline FieldElement operator-(FieldElement lhs, const FieldElement& rhs) { return lhs -= rhs; }
inline FieldElement operator*(FieldElement lhs, const FieldElement& rhs) { return lhs *= rhs; }
inline FieldElement operator/(FieldElement lhs, const FieldElement& rhs) { return lhs /= rhs; }

FieldElement pow(const FieldElement& a, std::uint64_t n);
FieldElement inverse(const FieldElement& a);

/// Order of a nonzero element in F_q^*. Throws NotAUnit for zero.
std::uint64_t multiplicative_order(const FieldElement& g);

/// Element with the smallest code whose order is q - 1. For F_2 this is 1.
FieldElement find_primitive_root(const Field& field);

}  // namespace wozencraft::galois

#endif  // WOZENCRAFT_GALOIS_HPP
