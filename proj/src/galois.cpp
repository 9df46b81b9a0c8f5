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

#include "wozencraft/galois.hpp"

#include <algorithm>
#include <sstream>

namespace wozencraft::galois {

namespace {

using Poly = std::vector<std::uint64_t>;

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mod(Poly a, const Poly& f, std::uint64_t p) {
    // f monic
    trim(a);
    const std::size_t df = f.size() - 1;
    while (a.size() > df) {
        const std::uint64_t lead = a.back();
        const std::size_t shift = a.size() - 1 - df;
        for (std::size_t i = 0; i <= df; ++i) {
            a[shift + i] = (a[shift + i] + (p - lead) * f[i]) % p;
        }
        trim(a);
    }
    return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    return poly_mod(std::move(r), f, p);
}

Poly poly_powmod(Poly base, std::uint64_t n, const Poly& f, std::uint64_t p) {
    Poly result = poly_mod({1}, f, p);
    base = poly_mod(std::move(base), f, p);
    while (n > 0) {
        if (n & 1) result = poly_mulmod(result, base, f, p);
        base = poly_mulmod(base, base, f, p);
        n >>= 1;
    }
    return result;
}

Poly poly_gcd(Poly a, Poly b, std::uint64_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        // make b monic before reducing
        const std::uint64_t inv_lead = pow_mod(b.back(), p - 2, p);
        for (auto& c : b) c = c * inv_lead % p;
        a = poly_mod(std::move(a), b, p);
        std::swap(a, b);
    }
    return a;
}

// x^(p^j) mod f
Poly frobenius_power_of_x(std::uint64_t j, const Poly& f, std::uint64_t p) {
    Poly x = poly_mod({0, 1}, f, p);
    for (std::uint64_t i = 0; i < j; ++i) x = poly_powmod(x, p, f, p);
    return x;
}

Poly sub_x(Poly a, std::uint64_t p) {
    if (a.size() < 2) a.resize(2, 0);
    a[1] = (a[1] + p - 1) % p;
    trim(a);
    return a;
}

std::vector<std::uint64_t> distinct_primes(std::uint64_t n) {
    auto primes = factorize(n);
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
    return primes;
}

// Arithmetic straight from the descriptor, used to bootstrap the log tables.
struct Direct {
    const FieldDesc& d;

    Symbol add(Symbol a, Symbol b) const noexcept {
        const std::uint64_t p = d.characteristic;
        if (d.degree == 1) return static_cast<Symbol>((std::uint64_t{a} + b) % p);
        if (p == 2) return a ^ b;
        std::uint64_t out = 0, place = 1;
        for (unsigned i = 0; i < d.degree; ++i) {
            out += ((a % p + b % p) % p) * place;
            a /= static_cast<Symbol>(p);
            b /= static_cast<Symbol>(p);
            place *= p;
        }
        return static_cast<Symbol>(out);
    }

    Symbol neg(Symbol a) const noexcept {
        const std::uint64_t p = d.characteristic;
        if (d.degree == 1) return static_cast<Symbol>((p - a) % p);
        if (p == 2) return a;
        std::uint64_t out = 0, place = 1;
        for (unsigned i = 0; i < d.degree; ++i) {
            out += ((p - a % p) % p) * place;
            a /= static_cast<Symbol>(p);
            place *= p;
        }
        return static_cast<Symbol>(out);
    }

    Symbol mul(Symbol a, Symbol b) const noexcept {
        const std::uint64_t p = d.characteristic;
        if (d.degree == 1) return static_cast<Symbol>(std::uint64_t{a} * b % p);
        const unsigned e = d.degree;
        std::vector<std::uint64_t> da(e), db(e), prod(2 * e - 1, 0);
        for (unsigned i = 0; i < e; ++i) {
            da[i] = a % p;
            db[i] = b % p;
            a /= static_cast<Symbol>(p);
            b /= static_cast<Symbol>(p);
        }
        for (unsigned i = 0; i < e; ++i) {
            if (da[i] == 0) continue;
            for (unsigned j = 0; j < e; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
        }
        for (std::size_t deg = prod.size() - 1; deg >= e; --deg) {
            const std::uint64_t lead = prod[deg];
            if (lead == 0) continue;
            for (unsigned i = 0; i <= e; ++i) {
                prod[deg - e + i] = (prod[deg - e + i] + (p - lead) * d.modulus[i]) % p;
            }
        }
        std::uint64_t out = 0, place = 1;
        for (unsigned i = 0; i < e; ++i) {
            out += prod[i] * place;
            place *= p;
        }
        return static_cast<Symbol>(out);
    }

    Symbol pow(Symbol a, std::uint64_t n) const noexcept {
        Symbol result = 1;
        while (n > 0) {
            if (n & 1) result = mul(result, a);
            a = mul(a, a);
            n >>= 1;
        }
        return result;
    }
};

__extension__ typedef unsigned __int128 uint128;

constexpr std::uint64_t kTableLimit = std::uint64_t{1} << 16;

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t f = 3; f * f <= n; f += 2) {
        if (n % f == 0) return false;
    }
    return true;
}

std::vector<std::uint64_t> factorize(std::uint64_t n) {
    std::vector<std::uint64_t> primes;
    for (std::uint64_t f = 2; f * f <= n; f += (f == 2 ? 1 : 2)) {
        while (n % f == 0) {
            primes.push_back(f);
            n /= f;
        }
    }
    if (n > 1) primes.push_back(n);
    return primes;
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) noexcept {
    if (mod == 1) return 0;
    uint128 result = 1, b = base % mod;
    while (exp > 0) {
        if (exp & 1) result = result * b % mod;
        b = b * b % mod;
        exp >>= 1;
    }
    return static_cast<std::uint64_t>(result);
}

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) noexcept {
    while (b != 0) {
        a %= b;
        std::swap(a, b);
    }
    return a;
}

std::uint64_t multiplicative_order(std::uint64_t g, std::uint64_t n) {
    if (n == 0 || gcd(g % n, n) != 1) {
        throw Error(ErrorCode::NotAUnit,
                    std::to_string(g) + " is not a unit modulo " + std::to_string(n));
    }
    if (n == 1) return 1;
    // Euler phi from the factorization of n
    std::uint64_t phi = n;
    for (std::uint64_t prime : distinct_primes(n)) phi = phi / prime * (prime - 1);
    return order_from_group_order(phi, [&](std::uint64_t d) { return pow_mod(g, d, n) == 1; });
}

std::optional<PrimePower> as_prime_power(std::uint64_t q) noexcept {
    if (q < 2) return std::nullopt;
    const auto primes = factorize(q);
    if (primes.front() != primes.back()) return std::nullopt;
    return PrimePower{static_cast<std::uint32_t>(primes.front()), static_cast<unsigned>(primes.size())};
}

bool is_irreducible(std::span<const Symbol> monic, std::uint32_t p) {
    if (monic.size() < 2 || monic.back() != 1) return false;
    const std::uint64_t e = monic.size() - 1;
    if (e == 1) return true;
    const Poly f(monic.begin(), monic.end());
    // x^(p^e) == x (mod f)
    if (sub_x(frobenius_power_of_x(e, f, p), p) != Poly{}) return false;
    for (std::uint64_t ell : distinct_primes(e)) {
        const Poly h = sub_x(frobenius_power_of_x(e / ell, f, p), p);
        const Poly g = poly_gcd(f, h, p);
        if (g.size() != 1) return false;
    }
    return true;
}

std::string describe(const FieldDesc& desc) {
    std::ostringstream os;
    os << "F_" << desc.order;
    if (desc.degree > 1) {
        os << " = F_" << desc.characteristic << "[t]/(";
        bool first = true;
        for (std::size_t i = desc.modulus.size(); i-- > 0;) {
            const Symbol c = desc.modulus[i];
            if (c == 0) continue;
            if (!first) os << " + ";
            first = false;
            if (c != 1 || i == 0) os << c;
            if (i >= 1) os << "t";
            if (i >= 2) os << "^" << i;
        }
        os << ")";
    }
    return os.str();
}

struct Field::Impl {
    FieldDesc desc;
    bool tabulated = false;
    std::vector<Symbol> exp;  // length 2(q-1)
    std::vector<Symbol> log;  // length q
};

Field field_make(std::uint32_t p, unsigned e) {
    if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
    if (e == 0) throw Error(ErrorCode::InvalidParams, "extension degree must be at least 1");
    std::uint64_t order = 1;
    for (unsigned i = 0; i < e; ++i) {
        order *= p;
        if (order > kMaxOrder) {
            throw Error(ErrorCode::OrderTooLarge,
                        std::to_string(p) + "^" + std::to_string(e) + " exceeds 2^31");
        }
    }

    auto impl = std::make_shared<Field::Impl>();
    impl->desc.characteristic = p;
    impl->desc.degree = e;
    impl->desc.order = order;

    if (e > 1) {
        // c_0 is the most significant digit of the enumeration index, so
        // candidates come out in low-degree-first lexicographic order
        std::vector<Symbol> candidate(e + 1, 0);
        candidate[e] = 1;
        for (std::uint64_t idx = 0; idx < order; ++idx) {
            std::uint64_t rest = idx;
            for (unsigned i = e; i-- > 0;) {
                candidate[i] = static_cast<Symbol>(rest % p);
                rest /= p;
            }
            if (candidate[0] != 0 && is_irreducible(candidate, p)) {
                impl->desc.modulus = candidate;
                break;
            }
        }
    }

    if (order >= 3 && order <= kTableLimit) {
        const Direct direct{impl->desc};
        const std::uint64_t n = order - 1;
        Symbol generator = 0;
        for (Symbol c = 2; c < order; ++c) {
            const auto ord = order_from_group_order(n, [&](std::uint64_t d) { return direct.pow(c, d) == 1; });
            if (ord == n) {
                generator = c;
                break;
            }
        }
        impl->exp.resize(2 * n);
        impl->log.assign(order, 0);
        Symbol x = 1;
        for (std::uint64_t i = 0; i < n; ++i) {
            impl->exp[i] = impl->exp[i + n] = x;
            impl->log[x] = static_cast<Symbol>(i);
            x = direct.mul(x, generator);
        }
        impl->tabulated = true;
    }
    return Field(std::move(impl));
}

Field field_of_order(std::uint64_t q) {
    const auto pp = as_prime_power(q);
    if (!pp) throw Error(ErrorCode::NotPrime, std::to_string(q) + " is not a prime power");
    return field_make(pp->prime, pp->exponent);
}

const FieldDesc& Field::desc() const noexcept { return impl_->desc; }

Symbol Field::add(Symbol a, Symbol b) const noexcept { return Direct{impl_->desc}.add(a, b); }

Symbol Field::neg(Symbol a) const noexcept { return Direct{impl_->desc}.neg(a); }

Symbol Field::sub(Symbol a, Symbol b) const noexcept { return add(a, neg(b)); }

Symbol Field::mul(Symbol a, Symbol b) const noexcept {
    if (impl_->tabulated) {
        if (a == 0 || b == 0) return 0;
        return impl_->exp[impl_->log[a] + impl_->log[b]];
    }
    return Direct{impl_->desc}.mul(a, b);
}

Symbol Field::inv(Symbol a) const {
    if (a == 0) throw Error(ErrorCode::ZeroInverse, "zero has no inverse in " + describe(desc()));
    if (impl_->tabulated) {
        const std::uint64_t n = order() - 1;
        return impl_->exp[(n - impl_->log[a]) % n];
    }
    return pow(a, order() - 2);
}

Symbol Field::pow(Symbol a, std::uint64_t n) const noexcept {
    Symbol result = 1;
    while (n > 0) {
        if (n & 1) result = mul(result, a);
        a = mul(a, a);
        n >>= 1;
    }
    return result;
}

FieldElement Field::element(std::uint64_t code) const {
    if (!contains(code)) {
        throw Error(ErrorCode::InvalidParams,
                    "code " + std::to_string(code) + " outside " + describe(desc()));
    }
    return FieldElement(*this, static_cast<Symbol>(code));
}

FieldElement Field::zero() const { return FieldElement(*this, 0); }
FieldElement Field::one() const { return FieldElement(*this, 1); }

FieldElement::FieldElement(Field field, Symbol code) : field_(std::move(field)), code_(code) {
    if (!field_.contains(code)) {
        throw Error(ErrorCode::InvalidParams,
                    "code " + std::to_string(code) + " outside " + describe(field_.desc()));
    }
}

void FieldElement::require_same_field(const FieldElement& rhs) const {
    if (!(field_ == rhs.field_)) {
        throw Error(ErrorCode::FieldMismatch,
                    describe(field_.desc()) + " vs " + describe(rhs.field_.desc()));
    }
}

FieldElement& FieldElement::operator+=(const FieldElement& rhs) {
    require_same_field(rhs);
    code_ = field_.add(code_, rhs.code_);
    return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& rhs) {
    require_same_field(rhs);
    code_ = field_.sub(code_, rhs.code_);
    return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& rhs) {
    require_same_field(rhs);
    code_ = field_.mul(code_, rhs.code_);
    return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& rhs) {
    require_same_field(rhs);
    code_ = field_.mul(code_, field_.inv(rhs.code_));
    return *this;
}

FieldElement pow(const FieldElement& a, std::uint64_t n) {
    return FieldElement(a.field(), a.field().pow(a.code(), n));
}

FieldElement inverse(const FieldElement& a) { return FieldElement(a.field(), a.field().inv(a.code())); }

std::uint64_t multiplicative_order(const FieldElement& g) {
    if (g.is_zero()) throw Error(ErrorCode::NotAUnit, "zero is not a unit");
    const Field& f = g.field();
    return order_from_group_order(f.order() - 1, [&](std::uint64_t d) { return f.pow(g.code(), d) == 1; });
}

FieldElement find_primitive_root(const Field& field) {
    const std::uint64_t n = field.order() - 1;
    if (n == 1) return field.one();
    for (std::uint64_t c = 2; c < field.order(); ++c) {
        const auto g = field.element(c);
        if (multiplicative_order(g) == n) return g;
    }
    // unreachable: every finite field has a primitive root
    throw Error(ErrorCode::InvalidParams, "no primitive root in " + describe(field.desc()));
}

}  // namespace wozencraft::galois
