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

// Distance verification for Wozencraft codes: J-profiles of shifted Sidon
// sets against a message support, the counting claims built on them,
// low-weight certificates, exhaustive minimum distance, and the q-ary GV
// baseline.

#ifndef WOZENCRAFT_ANALYSIS_HPP
#define WOZENCRAFT_ANALYSIS_HPP

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wozencraft/codec.hpp"

namespace wozencraft {

inline constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 28;

// -- J-profiles and claims ------------------------------------------------

/// counts[m] = |J_m| = #{j in [0, window) : |(j - A) mod k' intersect S| = m}.
struct JProfile {
    std::uint64_t w = 0;
    std::uint64_t window = 0;
    std::vector<std::uint64_t> counts;

    std::uint64_t at(std::uint64_t m) const noexcept { return m < counts.size() ? counts[m] : 0; }
};

/// S must hold distinct indices in [0, k'); window <= k'.
JProfile j_profile(std::span<const std::uint64_t> sidon, std::span<const std::uint64_t> support, std::uint64_t kprime,
                   std::uint64_t window);

struct ClaimCheck {
    std::string name;
    double value;
    double bound;
    /// true: value <= bound is required; false: value >= bound.
    bool is_upper;
    bool pass;

    double slack() const noexcept { return is_upper ? bound - value : value - bound; }
};

struct ClaimReport {
    std::vector<ClaimCheck> checks;

    bool passed() const noexcept;
    /// Throws ClaimViolation naming the first failing check.
    void enforce() const;
};

/// |J_1| >= wd - w(w-1), |J_0| >= k - wd, sum_m C(m,2)|J_m| <= 2 C(w,2).
/// Expects a profile over the full window k'.
ClaimReport check_claims_rate_half(const JProfile& profile, std::uint64_t w, std::uint64_t d, std::uint64_t k);

/// With window m = kept:
/// |J_1| >= w(d - sqrt(k-m) - (k-m)^(1/4) - 1) - w^2,
/// |J_0| >= m - w(sqrt(m) + m^(1/4) + 1).
ClaimReport check_claims_punctured(const JProfile& profile, std::uint64_t w, std::uint64_t d, std::uint64_t k,
                                   std::uint64_t kept);
ClaimReport check_claims_punctured(const JProfile& profile, std::uint64_t w, std::uint64_t d, std::uint64_t k,
                                   Rational rate);

// -- Lower bounds ---------------------------------------------------------

enum class DistanceMode { RateHalf, Punctured };

struct TheoremBound {
    /// Lower bound on the distance implied by the construction; 0 if vacuous.
    std::uint64_t value = 0;
    /// The real-valued expression before flooring.
    double raw = 0.0;
    bool applies = false;
    std::string note;
};

/// d for rate 1/2; for kept m < k, floor(min(d - sqrt(k-m) - (k-m)^(1/4) - 1,
/// m / (sqrt(m) + m^(1/4) + 1))). Only applies when alpha is alpha* of a
/// verified Sidon set.
TheoremBound theorem_lower_bound(const CodeParams& params);

struct Certificate {
    bool pass = true;
    std::uint64_t target = 0;
    DistanceMode mode = DistanceMode::RateHalf;
    std::uint64_t examined = 0;
    /// First y (lexicographic support, odometer coefficients) violating the
    /// two-sided condition, and the weight of alpha y that broke it.
    std::optional<RingElement> violation;
    std::uint64_t violation_weight = 0;
};

/// sum_{w=1}^{c-1} C(k', w) (q-1)^w, saturating at UINT64_MAX.
std::uint64_t certificate_size(std::uint64_t q, std::uint64_t kprime, std::uint64_t c);

/// Checks c - wt~(y) <= W(alpha y) <= L - (c - wt~(y)) for every y in R with
/// 1 <= wt~(y) <= c - 1. RateHalf: W = wt~, L = k. Punctured: W is the weight
/// of the first kept coefficients, L = kept. A pass proves distance >= c.
/// Throws BudgetExceeded when certificate_size exceeds `budget`.
Certificate certify_distance(const WozencraftCode& code, std::uint64_t c, DistanceMode mode,
                             std::uint64_t budget = kDefaultBudget);

// -- Exhaustive search ----------------------------------------------------

struct SearchOptions {
    std::uint64_t budget = kDefaultBudget;
    /// Stop at the first message (ascending code) whose codeword weighs less.
    std::optional<std::uint64_t> prove_at_least;
    /// 0 picks the hardware concurrency.
    unsigned workers = 1;
};

struct DistanceReport {
    std::uint64_t certified_lower_bound = 0;
    /// "none", "claims" or "enumeration".
    std::string method = "none";
    std::optional<std::uint64_t> exact_distance;
    std::optional<SymbolVector> witness;
    /// Integer code sum y_i q^i of the witness.
    std::optional<std::uint64_t> witness_code;
    std::optional<std::uint64_t> witness_weight;
    /// Messages examined in ascending order (up to the disproof, if any).
    std::uint64_t search_space = 0;
    std::optional<std::uint64_t> prove_at_least;
    bool disproved = false;
    std::chrono::duration<double> elapsed{0.0};
};

/// Minimum codeword weight over all nonzero messages. The witness is the
/// smallest message code among the minima, independent of `workers`.
/// Throws BudgetExceeded when q^k - 1 > budget.
DistanceReport exact_min_distance(const WozencraftCode& code, const SearchOptions& options = {});

/// histogram[w] = number of messages (zero included) with codeword weight w.
std::vector<std::uint64_t> weight_distribution(const WozencraftCode& code, std::uint64_t budget = kDefaultBudget,
                                               unsigned workers = 1);

/// Integer code of a message and back (y_0 least significant).
std::uint64_t message_code(std::span<const galois::Symbol> message, std::uint64_t q);
SymbolVector message_from_code(std::uint64_t code, std::uint64_t q, std::uint64_t k);

// -- GV baseline ----------------------------------------------------------

/// h_q(x) = x log_q(q-1) - x log_q x - (1-x) log_q(1-x).
double q_ary_entropy(std::uint64_t q, double x);

struct GvReport {
    double entropy_target;  // 1 - R
    double delta;           // h_q^{-1}(1 - R) on [0, 1 - 1/q]
    double distance;        // delta * n
};

GvReport gv_report(std::uint64_t q, std::uint64_t n, double rate);
GvReport gv_report(std::uint64_t q, std::uint64_t n, Rational rate);

// -- Ensemble -------------------------------------------------------------

struct EnsembleSample {
    SymbolVector alpha;
    std::uint64_t distance;
};

struct EnsembleReport {
    std::vector<EnsembleSample> samples;
    std::uint64_t alpha_star_distance = 0;
    GvReport gv;
    std::uint64_t length = 0;

    /// histogram[d] = number of random alphas with distance d.
    std::vector<std::uint64_t> histogram() const;
};

/// Random alphas drawn in sequence from one Xorshift64Star seeded with `seed`.
EnsembleReport run_ensemble(const CodeParams& params, std::uint64_t samples, std::uint64_t seed,
                            const SearchOptions& options = {});

}  // namespace wozencraft

#endif  // WOZENCRAFT_ANALYSIS_HPP
