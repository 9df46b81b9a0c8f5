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

// Exhaustive enumeration over all q^k messages. The message space is cut into
// fixed-size chunks of ascending integer codes; workers claim chunks from a
// shared counter and results are merged in chunk order, so the outcome never
// depends on the number of workers.

#include <algorithm>
#include <atomic>
#include <bit>
#include <limits>
#include <thread>

#include "wozencraft/analysis.hpp"

namespace wozencraft {

namespace {

constexpr std::uint64_t kChunk = std::uint64_t{1} << 16;
constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();

std::uint64_t message_space(std::uint64_t q, std::uint64_t k) {
    std::uint64_t total = 1;
    for (std::uint64_t i = 0; i < k; ++i) {
        if (total > std::numeric_limits<std::uint64_t>::max() / q) return kNone;
        total *= q;
    }
    return total;
}

template <class Task>
void run_chunks(std::uint64_t chunks, unsigned workers, Task&& task) {
    if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, chunks));
    std::atomic<std::uint64_t> next{0};
    auto loop = [&] {
        for (std::uint64_t c = next.fetch_add(1); c < chunks; c = next.fetch_add(1)) task(c);
    };
    if (workers <= 1) {
        loop();
        return;
    }
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned i = 0; i < workers; ++i) pool.emplace_back(loop);
}

// Visits messages begin..end-1 in ascending code order; visit(code, weight)
// returns false to stop early.
class Scanner {
   public:
    explicit Scanner(const WozencraftCode& code) : field_(code.field()), g_(code.generator_matrix()) {
        binary_ = g_.q == 2 && g_.n <= 64;
        if (binary_) {
            // prefix_[t] = rows 0..t XORed: the change from m to m + 1 when m ends in t ones
            std::uint64_t acc = 0;
            for (std::uint64_t i = 0; i < g_.k; ++i) {
                acc ^= row_mask(i);
                prefix_.push_back(acc);
            }
        }
    }

    template <class Visit>
    void scan(std::uint64_t begin, std::uint64_t end, Visit&& visit) const {
        if (begin >= end) return;
        if (binary_) {
            scan_binary(begin, end, visit);
        } else {
            scan_general(begin, end, visit);
        }
    }

   private:
    std::uint64_t row_mask(std::uint64_t i) const {
        std::uint64_t mask = 0;
        for (std::uint64_t j = 0; j < g_.n; ++j) mask |= std::uint64_t{g_.at(i, j) != 0} << j;
        return mask;
    }

    template <class Visit>
    void scan_binary(std::uint64_t begin, std::uint64_t end, Visit& visit) const {
        std::uint64_t word = 0;
        for (std::uint64_t i = 0; i < g_.k; ++i) {
            if ((begin >> i) & 1) word ^= prefix_[i] ^ (i ? prefix_[i - 1] : 0);
        }
        for (std::uint64_t m = begin;;) {
            if (!visit(m, static_cast<std::uint64_t>(std::popcount(word)))) return;
            if (++m == end) return;
            word ^= prefix_[static_cast<std::uint64_t>(std::countr_zero(m))];
        }
    }

    template <class Visit>
    void scan_general(std::uint64_t begin, std::uint64_t end, Visit& visit) const {
        const std::uint64_t q = g_.q;
        SymbolVector digits = message_from_code(begin, q, g_.k);
        SymbolVector word = multiply(digits, g_, field_);
        std::uint64_t weight = hamming_weight(word);
        for (std::uint64_t m = begin;;) {
            if (!visit(m, weight)) return;
            if (++m == end) return;
            for (std::uint64_t i = 0; i < g_.k; ++i) {
                const galois::Symbol old = digits[i];
                const galois::Symbol now = static_cast<galois::Symbol>((old + 1) % q);
                digits[i] = now;
                const galois::Symbol delta = field_.sub(now, old);
                for (std::uint64_t j = 0; j < g_.n; ++j) {
                    const galois::Symbol e = g_.at(i, j);
                    if (e == 0) continue;
                    const galois::Symbol before = word[j];
                    word[j] = field_.add(before, field_.mul(delta, e));
                    weight = weight - (before != 0) + (word[j] != 0);
                }
                if (now != 0) break;
            }
        }
    }

    galois::Field field_;
    GeneratorMatrix g_;
    bool binary_ = false;
    std::vector<std::uint64_t> prefix_;
};

struct ChunkBest {
    std::uint64_t weight = kNone;
    std::uint64_t code = kNone;
};

}  // namespace

std::uint64_t message_code(std::span<const galois::Symbol> message, std::uint64_t q) {
    std::uint64_t code = 0;
    for (std::size_t i = message.size(); i-- > 0;) code = code * q + message[i];
    return code;
}

SymbolVector message_from_code(std::uint64_t code, std::uint64_t q, std::uint64_t k) {
    SymbolVector message(k);
    for (auto& s : message) {
        s = static_cast<galois::Symbol>(code % q);
        code /= q;
    }
    return message;
}

DistanceReport exact_min_distance(const WozencraftCode& code, const SearchOptions& options) {
    const auto start = std::chrono::steady_clock::now();
    const std::uint64_t total = message_space(code.q(), code.k());
    if (total == kNone || total - 1 > options.budget) {
        throw Error(ErrorCode::BudgetExceeded, "q^k - 1 messages exceed budget " + std::to_string(options.budget));
    }
    const Scanner scanner(code);
    const std::uint64_t chunks = (total + kChunk - 1) / kChunk;
    std::vector<ChunkBest> best(chunks);
    std::atomic<std::uint64_t> first_hit{kNone};
    const std::uint64_t threshold = options.prove_at_least.value_or(0);

    run_chunks(chunks, options.workers, [&](std::uint64_t c) {
        if (options.prove_at_least && c > first_hit.load()) return;
        const std::uint64_t lo = std::max<std::uint64_t>(c * kChunk, 1);
        const std::uint64_t hi = std::min(total, (c + 1) * kChunk);
        ChunkBest local;
        scanner.scan(lo, hi, [&](std::uint64_t m, std::uint64_t w) {
            if (w < local.weight) local = {w, m};
            if (w < threshold) {
                std::uint64_t seen = first_hit.load();
                while (c < seen && !first_hit.compare_exchange_weak(seen, c)) {
                }
                return false;
            }
            return true;
        });
        best[c] = local;
    });

    DistanceReport report;
    report.prove_at_least = options.prove_at_least;
    ChunkBest overall;
    if (const std::uint64_t hit = first_hit.load(); hit != kNone) {
        overall = best[hit];
        report.disproved = true;
        report.search_space = overall.code;
    } else {
        for (const auto& b : best) {
            if (b.weight < overall.weight) overall = b;
        }
        report.exact_distance = overall.weight;
        report.search_space = total - 1;
    }
    if (overall.code != kNone) {
        report.witness_code = overall.code;
        report.witness_weight = overall.weight;
        report.witness = message_from_code(overall.code, code.q(), code.k());
    }
    report.elapsed = std::chrono::steady_clock::now() - start;
    return report;
}

std::vector<std::uint64_t> weight_distribution(const WozencraftCode& code, std::uint64_t budget, unsigned workers) {
    const std::uint64_t total = message_space(code.q(), code.k());
    if (total == kNone || total > budget) {
        throw Error(ErrorCode::BudgetExceeded, "q^k messages exceed budget " + std::to_string(budget));
    }
    const Scanner scanner(code);
    const std::uint64_t chunks = (total + kChunk - 1) / kChunk;
    std::vector<std::vector<std::uint64_t>> partial(chunks);
    run_chunks(chunks, workers, [&](std::uint64_t c) {
        std::vector<std::uint64_t> h(code.length() + 1, 0);
        scanner.scan(c * kChunk, std::min(total, (c + 1) * kChunk), [&](std::uint64_t, std::uint64_t w) {
            ++h[w];
            return true;
        });
        partial[c] = std::move(h);
    });
    std::vector<std::uint64_t> histogram(code.length() + 1, 0);
    for (const auto& h : partial) {
        for (std::size_t w = 0; w < h.size(); ++w) histogram[w] += h[w];
    }
    return histogram;
}

}  // namespace wozencraft
