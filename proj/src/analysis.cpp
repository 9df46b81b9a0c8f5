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

#include "wozencraft/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace wozencraft {

namespace {

double fourth_root(double x) { return std::sqrt(std::sqrt(x)); }

ClaimCheck at_least(std::string name, double value, double bound) {
    return {std::move(name), value, bound, false, value >= bound - kBoundSlack};
}

ClaimCheck at_most(std::string name, double value, double bound) {
    return {std::move(name), value, bound, true, value <= bound + kBoundSlack};
}

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) return std::numeric_limits<std::uint64_t>::max();
    return a * b;
}

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
    return a > std::numeric_limits<std::uint64_t>::max() - b ? std::numeric_limits<std::uint64_t>::max() : a + b;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t r) {
    if (r > n) return 0;
    r = std::min(r, n - r);
    __extension__ typedef unsigned __int128 wide;
    wide out = 1;
    for (std::uint64_t i = 1; i <= r; ++i) {
        out = out * (n - r + i) / i;
        if (out > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
    }
    return static_cast<std::uint64_t>(out);
}

// lexicographic successor of a w-subset of [0, n)
bool next_combination(std::vector<std::uint64_t>& idx, std::uint64_t n) {
    const std::size_t w = idx.size();
    std::size_t i = w;
    while (i > 0 && idx[i - 1] == n - w + i - 1) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < w; ++j) idx[j] = idx[j - 1] + 1;
    return true;
}

// coefficients in [1, q), first position fastest
bool next_pattern(std::vector<galois::Symbol>& coeffs, std::uint64_t q) {
    for (auto& c : coeffs) {
        if (c + 1 < q) {
            ++c;
            return true;
        }
        c = 1;
    }
    return false;
}

}  // namespace

JProfile j_profile(std::span<const std::uint64_t> sidon, std::span<const std::uint64_t> support, std::uint64_t kprime,
                   std::uint64_t window) {
    if (window > kprime) throw Error(ErrorCode::BadTruncation, "window exceeds k'");
    std::vector<char> in_support(kprime, 0);
    for (std::uint64_t s : support) {
        if (s >= kprime || in_support[s]) {
            throw Error(ErrorCode::InvalidParams, "support must hold distinct indices below k'");
        }
        in_support[s] = 1;
    }
    JProfile profile;
    profile.w = support.size();
    profile.window = window;
    profile.counts.assign(profile.w + 1, 0);
    for (std::uint64_t j = 0; j < window; ++j) {
        std::uint64_t m = 0;
        for (std::uint64_t a : sidon) m += in_support[(j + kprime - a % kprime) % kprime];
        ++profile.counts[m];
    }
    return profile;
}

bool ClaimReport::passed() const noexcept {
    return std::all_of(checks.begin(), checks.end(), [](const ClaimCheck& c) { return c.pass; });
}

void ClaimReport::enforce() const {
    for (const auto& c : checks) {
        if (!c.pass) {
            throw Error(ErrorCode::ClaimViolation, c.name + ": " + std::to_string(c.value) +
                                                       (c.is_upper ? " > " : " < ") + std::to_string(c.bound));
        }
    }
}

ClaimReport check_claims_rate_half(const JProfile& profile, std::uint64_t w, std::uint64_t d, std::uint64_t k) {
    const double wd = static_cast<double>(w * d);
    const double ww = static_cast<double>(w) * (static_cast<double>(w) - 1.0);
    double pairs = 0.0;
    for (std::uint64_t m = 2; m < profile.counts.size(); ++m) {
        pairs += static_cast<double>(m * (m - 1) / 2) * static_cast<double>(profile.counts[m]);
    }
    ClaimReport report;
    report.checks.push_back(at_least("|J1| >= wd - w(w-1)", static_cast<double>(profile.at(1)), wd - ww));
    report.checks.push_back(at_least("|J0| >= k - wd", static_cast<double>(profile.at(0)), static_cast<double>(k) - wd));
    report.checks.push_back(at_most("sum C(m,2)|Jm| <= 2 C(w,2)", pairs, ww));
    return report;
}

ClaimReport check_claims_punctured(const JProfile& profile, std::uint64_t w, std::uint64_t d, std::uint64_t k,
                                   std::uint64_t kept) {
    if (kept == 0 || kept > k) throw Error(ErrorCode::BadTruncation, "kept must lie in (0, k]");
    if (profile.window != kept) throw Error(ErrorCode::InvalidParams, "profile window must equal kept");
    const double m = static_cast<double>(kept);
    const double rest = static_cast<double>(k - kept);
    const double wd = static_cast<double>(w);
    ClaimReport report;
    report.checks.push_back(at_least("|J1^r| >= w(d - sqrt(k-m) - (k-m)^(1/4) - 1) - w^2",
                                     static_cast<double>(profile.at(1)),
                                     wd * (static_cast<double>(d) - std::sqrt(rest) - fourth_root(rest) - 1.0) - wd * wd));
    report.checks.push_back(at_least("|J0^r| >= m - w(sqrt(m) + m^(1/4) + 1)", static_cast<double>(profile.at(0)),
                                     m - wd * lindstrom_bound(m)));
    return report;
}

ClaimReport check_claims_punctured(const JProfile& profile, std::uint64_t w, std::uint64_t d, std::uint64_t k,
                                   Rational rate) {
    return check_claims_punctured(profile, w, d, k, puncture_plan(rate, k));
}

TheoremBound theorem_lower_bound(const CodeParams& params) {
    TheoremBound bound;
    if (params.alpha_coeffs != build_alpha_star(params) || !verify_sidon(params.sidon.elements, params.sidon.modulus).is_sidon) {
        bound.note = "alpha is not alpha* of a verified Sidon set";
        return bound;
    }
    bound.applies = true;
    const auto d = static_cast<double>(params.d);
    if (params.kept == params.k) {
        bound.value = params.d;
        bound.raw = d;
        bound.note = "rate 1/2: distance >= d";
        return bound;
    }
    const double m = static_cast<double>(params.kept);
    const double rest = static_cast<double>(params.k - params.kept);
    const double first = d - std::sqrt(rest) - fourth_root(rest) - 1.0;
    const double second = m / lindstrom_bound(m);
    bound.raw = std::min(first, second);
    if (bound.raw < 1.0) {
        bound.value = 0;
        bound.note = "punctured bound is vacuous at this k (" + std::to_string(bound.raw) + " < 1)";
    } else {
        bound.value = static_cast<std::uint64_t>(std::floor(bound.raw + kBoundSlack));
        bound.note = "punctured: distance >= floor(min(d - sqrt(k-m) - (k-m)^(1/4) - 1, m/(sqrt m + m^(1/4) + 1)))";
    }
    return bound;
}

std::uint64_t certificate_size(std::uint64_t q, std::uint64_t kprime, std::uint64_t c) {
    std::uint64_t total = 0, units = 1;
    for (std::uint64_t w = 1; w < c; ++w) {
        units = saturating_mul(units, q - 1);
        total = saturating_add(total, saturating_mul(binomial(kprime, w), units));
    }
    return total;
}

Certificate certify_distance(const WozencraftCode& code, std::uint64_t c, DistanceMode mode, std::uint64_t budget) {
    if (c == 0) throw Error(ErrorCode::InvalidParams, "certificate target must be at least 1");
    const std::uint64_t kprime = code.ring().kprime();
    const std::uint64_t q = code.q();
    const std::uint64_t size = certificate_size(q, kprime, c);
    if (size > budget) {
        throw Error(ErrorCode::BudgetExceeded,
                    std::to_string(size) + " ring elements exceed budget " + std::to_string(budget));
    }
    const galois::Field& field = code.field();
    const std::uint64_t limit = mode == DistanceMode::RateHalf ? code.k() : code.kept();
    const std::uint64_t scope = mode == DistanceMode::RateHalf ? kprime : code.kept();

    std::vector<std::pair<std::uint64_t, galois::Symbol>> alpha_terms;
    for (std::uint64_t i = 0; i < kprime; ++i) {
        if (code.alpha()[i] != 0) alpha_terms.emplace_back(i, code.alpha()[i]);
    }

    Certificate cert;
    cert.target = c;
    cert.mode = mode;
    SymbolVector product(kprime);
    for (std::uint64_t w = 1; w < c && w <= kprime; ++w) {
        const std::uint64_t need = c - w;
        std::vector<std::uint64_t> support(w);
        std::iota(support.begin(), support.end(), 0);
        do {
            std::vector<galois::Symbol> coeffs(w, 1);
            do {
                std::fill(product.begin(), product.end(), 0);
                for (std::size_t t = 0; t < w; ++t) {
                    for (auto [a, coeff] : alpha_terms) {
                        const std::uint64_t j = (support[t] + a) % kprime;
                        product[j] = field.add(product[j], field.mul(coeffs[t], coeff));
                    }
                }
                ++cert.examined;
                const std::uint64_t weight = hamming_weight(std::span(product).first(scope));
                if (weight < need || weight + need > limit) {
                    SymbolVector y(kprime, 0);
                    for (std::size_t t = 0; t < w; ++t) y[support[t]] = coeffs[t];
                    cert.pass = false;
                    cert.violation = RingElement(std::move(y));
                    cert.violation_weight = weight;
                    return cert;
                }
            } while (next_pattern(coeffs, q));
        } while (next_combination(support, kprime));
    }
    return cert;
}

double q_ary_entropy(std::uint64_t q, double x) {
    const double lq = std::log(static_cast<double>(q));
    auto xlogx = [&](double v) { return v <= 0.0 ? 0.0 : v * std::log(v) / lq; };
    return x * std::log(static_cast<double>(q - 1)) / lq - xlogx(x) - xlogx(1.0 - x);
}

GvReport gv_report(std::uint64_t q, std::uint64_t n, double rate) {
    if (!(rate >= 0.0 && rate <= 1.0)) throw Error(ErrorCode::RateOutOfRange, "rate must lie in [0, 1]");
    const double target = 1.0 - rate;
    double lo = 0.0, hi = 1.0 - 1.0 / static_cast<double>(q);
    if (rate == 1.0) return {0.0, 0.0, 0.0};
    if (rate == 0.0) return {1.0, hi, hi * static_cast<double>(n)};
    for (int iter = 0; iter < 200 && hi - lo > 1e-15; ++iter) {
        const double mid = 0.5 * (lo + hi);
        (q_ary_entropy(q, mid) < target ? lo : hi) = mid;
    }
    const double delta = 0.5 * (lo + hi);
    return {target, delta, delta * static_cast<double>(n)};
}

GvReport gv_report(std::uint64_t q, std::uint64_t n, Rational rate) { return gv_report(q, n, rate.value()); }

std::vector<std::uint64_t> EnsembleReport::histogram() const {
    std::vector<std::uint64_t> h(length + 1, 0);
    for (const auto& s : samples) ++h[s.distance];
    return h;
}

EnsembleReport run_ensemble(const CodeParams& params, std::uint64_t samples, std::uint64_t seed,
                            const SearchOptions& options) {
    SearchOptions full = options;
    full.prove_at_least.reset();
    EnsembleReport report;
    report.length = params.length();
    report.gv = gv_report(params.q, params.length(), params.rate);
    report.alpha_star_distance = *exact_min_distance(WozencraftCode(params), full).exact_distance;
    Xorshift64Star rng(seed);
    report.samples.reserve(samples);
    for (std::uint64_t i = 0; i < samples; ++i) {
        SymbolVector alpha = sample_random_alpha(params.q, params.k, rng);
        const WozencraftCode code(galois::field_of_order(params.q), params.kprime, alpha, params.kept);
        const std::uint64_t distance = *exact_min_distance(code, full).exact_distance;
        report.samples.push_back({std::move(alpha), distance});
    }
    return report;
}

}  // namespace wozencraft
