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

// Acceptance checks: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "wozencraft/analysis.hpp"
#include "wozencraft/param_file.hpp"

using namespace wozencraft;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fixed(double x, int digits = 3) {
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(digits);
    os << x;
    return os.str();
}

struct CliResult {
    int code;
    std::string out;
};

CliResult cli_run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str() + err.str()};
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

fs::path scratch() {
    static const fs::path dir = [] {
        fs::path d = fs::temp_directory_path() / "wozencraft_acceptance";
        fs::remove_all(d);
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t r) {
    std::uint64_t out = 1;
    for (std::uint64_t i = 1; i <= r; ++i) out = out * (n - r + i) / i;
    return out;
}

Outcome construction_pipeline() {
    const auto t0 = Clock::now();
    const fs::path path = scratch() / "c1.txt";
    CliResult r = cli_run({"params", "--q", "2", "--min-k", "10", "--out", path.string()});
    if (r.code != 0) return {false, "params exited " + std::to_string(r.code) + ": " + r.out};
    const CodeParams p = load_param_file(path);
    const double elapsed = seconds_since(t0);
    std::set<std::uint64_t> support;
    for (std::uint64_t i = 0; i < p.alpha_coeffs.size(); ++i)
        if (p.alpha_coeffs[i] != 0) support.insert(i);
    const bool ok = p.kprime == 11 && p.k == 10 && p.d == 3 && p.sidon.order() == 3 && p.sidon.modulus == 8 &&
                    verify_sidon(p.sidon.elements, 8).is_sidon &&
                    support == std::set<std::uint64_t>(p.sidon.elements.begin(), p.sidon.elements.end()) &&
                    elapsed < 1.0;
    std::string set;
    for (auto a : p.sidon.elements) set += (set.empty() ? "" : ",") + std::to_string(a);
    return {ok, "k'=" + std::to_string(p.kprime) + " k=" + std::to_string(p.k) + " d=" + std::to_string(p.d) +
                    " A={" + set + "} supp(alpha*)=A, " + fixed(elapsed) + " s"};
}

Outcome rate_half_exact() {
    const auto t0 = Clock::now();
    const CodeParams p = load_param_file(scratch() / "c1.txt");
    const WozencraftCode code(p);
    const DistanceReport exact = exact_min_distance(code);
    const Certificate cert = certify_distance(code, 3, DistanceMode::RateHalf);
    const double elapsed = seconds_since(t0);
    const std::uint64_t delta = *exact.exact_distance;
    const bool ok = exact.search_space == 1023 && delta >= 3 && cert.pass && cert.target <= delta && elapsed < 1.0;
    return {ok, "distance " + std::to_string(delta) + " over " + std::to_string(exact.search_space) +
                    " messages, certificate c=3 " + (cert.pass ? "PASS" : "FAIL") + ", certified 3 <= exact, " +
                    fixed(elapsed) + " s"};
}

Outcome larger_instance() {
    const CodeParams p = construct_params(2, 28);
    if (p.kprime != 29 || p.k != 28 || p.d != 5 || p.sidon.p != 5) return {false, "unexpected parameters"};
    const WozencraftCode code(p);
    const Certificate cert = certify_distance(code, 5, DistanceMode::RateHalf);
    std::uint64_t expected = 0;
    for (std::uint64_t w = 1; w <= 4; ++w) expected += binomial(29, w);

    SearchOptions single, parallel;
    parallel.workers = 4;
    auto t0 = Clock::now();
    const DistanceReport a = exact_min_distance(code, single);
    const double t_single = seconds_since(t0);
    t0 = Clock::now();
    const DistanceReport b = exact_min_distance(code, parallel);
    const double t_parallel = seconds_since(t0);
    const bool identical = a.exact_distance == b.exact_distance && a.witness == b.witness &&
                           a.search_space == b.search_space;
    const bool ok = cert.pass && cert.examined == expected && a.search_space == (std::uint64_t{1} << 28) - 1 &&
                    *a.exact_distance >= 5 && identical;
    return {ok, "certificate c=5 " + std::string(cert.pass ? "PASS" : "FAIL") + " over " +
                    std::to_string(cert.examined) + " ring elements (sum C(29,w), w=1..4 = " + std::to_string(expected) +
                    "); exact distance " + std::to_string(*a.exact_distance) + " over " +
                    std::to_string(a.search_space) + " messages, 1 worker " + fixed(t_single, 2) + " s, 4 workers " +
                    fixed(t_parallel, 2) + " s, " + (identical ? "identical" : "DIFFERENT")};
}

Outcome sidon_suite() {
    const auto t0 = Clock::now();
    bool ok = true;
    std::string failures;
    for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u}) {
        const SidonSet s = bose_chowla(p);
        if (s.order() != p || s.modulus != std::uint64_t{p} * p - 1 || !verify_sidon(s.elements, s.modulus).is_sidon) {
            ok = false;
            failures += " p=" + std::to_string(p);
        }
    }
    const double elapsed = seconds_since(t0);
    ok = ok && elapsed < 5.0;
    return {ok, "9 primes 2..23" + (failures.empty() ? std::string(" all Sidon of order p") : " failing:" + failures) +
                    ", " + fixed(elapsed) + " s"};
}

Outcome claims_suite() {
    const CodeParams p = construct_params(2, 10);
    const std::uint64_t kprime = 11, window = kept_for_rate(Rational(2, 3), p.k);
    std::vector<std::vector<std::uint64_t>> corpus;
    for (std::uint64_t a = 0; a < kprime; ++a) {
        corpus.push_back({a});
        for (std::uint64_t b = a + 1; b < kprime; ++b) corpus.push_back({a, b});
    }
    const std::size_t exhaustive = corpus.size();
    Xorshift64Star rng(1);
    for (int t = 0; t < 1000; ++t) {
        const std::uint64_t w = 1 + rng.below(3);
        std::set<std::uint64_t> s;
        while (s.size() < w) s.insert(rng.below(kprime));
        corpus.emplace_back(s.begin(), s.end());
    }
    std::uint64_t half_violations = 0, punct_violations = 0;
    for (const auto& s : corpus) {
        half_violations += !check_claims_rate_half(j_profile(p.sidon.elements, s, kprime, kprime), s.size(), p.d, p.k).passed();
        punct_violations +=
            !check_claims_punctured(j_profile(p.sidon.elements, s, kprime, window), s.size(), p.d, p.k, Rational(2, 3))
                 .passed();
    }
    const bool ok = window == 5 && half_violations == 0 && punct_violations == 0;
    return {ok, std::to_string(exhaustive) + " supports with w <= 2 plus 1000 random with w <= 3; violations: rate-1/2 " +
                    std::to_string(half_violations) + ", punctured (window " + std::to_string(window) + ") " +
                    std::to_string(punct_violations)};
}

Outcome lemma_corpus() {
    std::uint64_t checked = 0, violations = 0;
    auto check = [&](const CyclicRing& ring, const SymbolVector& c) {
        const RingElement f(c);
        const std::uint64_t k = ring.k();
        const Weights w = ring.weights(f);
        violations += w.wt < std::min(w.wt_tilde, k - std::min(k, w.wt_tilde));
        for (std::uint64_t m = 1; m <= k; ++m) {
            const std::uint64_t prefix = hamming_weight(std::span(c).first(m));
            violations += *ring.weights(f, m).wt_r < std::min(prefix, m - prefix);
        }
        ++checked;
    };
    const galois::Field f2 = galois::field_make(2, 1);
    for (std::uint64_t kprime : {3u, 5u}) {
        const CyclicRing ring(f2, kprime);
        for (std::uint64_t code = 0; code < (std::uint64_t{1} << kprime); ++code) {
            SymbolVector c(kprime);
            for (std::uint64_t i = 0; i < kprime; ++i) c[i] = code >> i & 1;
            check(ring, c);
        }
    }
    Xorshift64Star rng(1);
    for (std::uint64_t kprime : {11u, 13u}) {
        const CyclicRing ring(f2, kprime);
        for (int t = 0; t < 10000; ++t) {
            SymbolVector c(kprime);
            for (auto& x : c) x = static_cast<galois::Symbol>(rng.below(2));
            check(ring, c);
        }
    }
    return {violations == 0, std::to_string(checked) + " ring elements, all truncations; violations " +
                                 std::to_string(violations)};
}

Outcome irreducibility() {
    bool ok = true;
    std::string detail;
    const std::vector<std::pair<std::uint64_t, std::uint64_t>> good = {{2, 3}, {2, 5}, {2, 11}, {2, 13},
                                                                       {2, 29}, {3, 5}, {3, 7}};
    for (const auto& [q, kp] : good) {
        const auto c = verify_irreducible(q, kp);
        ok = ok && c.irreducible && c.ring_check.value_or(false);
    }
    const auto bad = verify_irreducible(2, 7);
    ok = ok && !bad.irreducible && bad.order == 3;
    return {ok, "7 irreducible cases pass; (2,7) rejected with order " + std::to_string(bad.order)};
}

Outcome puncturing() {
    const CodeParams base = construct_params(2, 10);
    const CodeParams p = with_rate(base, Rational(2, 3));
    const GeneratorMatrix g = generator_matrix(p);
    bool identity = true;
    for (std::uint64_t r = 0; r < g.k; ++r)
        for (std::uint64_t c = 0; c < g.k; ++c) identity = identity && g.at(r, c) == (r == c ? 1u : 0u);
    const std::uint64_t punct = *exact_min_distance(WozencraftCode(p)).exact_distance;
    const std::uint64_t half = *exact_min_distance(WozencraftCode(base)).exact_distance;
    bool monotone = true;
    std::string series;
    std::uint64_t prev = 0;
    for (std::uint64_t kept = 5; kept <= 10; ++kept) {
        const std::uint64_t d = *exact_min_distance(WozencraftCode(with_kept(base, kept))).exact_distance;
        monotone = monotone && d >= prev;
        prev = d;
        series += (series.empty() ? "" : ",") + std::to_string(d);
    }
    const TheoremBound bound = theorem_lower_bound(p);
    const bool ok = p.length() == 15 && g.n == 15 && g.k == 10 && identity && punct >= 1 && punct <= half && monotone;
    return {ok, "n=15 k=10, distance " + std::to_string(punct) + " <= rate-1/2 distance " + std::to_string(half) +
                    ", kept 5..10 -> " + series + "; theorem bound: " + bound.note};
}

Outcome ensemble() {
    const fs::path params = scratch() / "c9.txt";
    if (cli_run({"params", "--q", "2", "--min-k", "10", "--out", params.string()}).code != 0) return {false, "params failed"};
    const std::vector<std::string> args = {"ensemble", "--params", params.string(), "--samples", "200", "--seed", "1"};
    const CliResult a = cli_run(args), b = cli_run(args);
    const EnsembleReport rep = run_ensemble(load_param_file(params), 200, 1);
    std::uint64_t rows = 0;
    std::istringstream lines(a.out);
    bool in_table = false;
    for (std::string line; std::getline(lines, line);) {
        if (line.rfind("sample ", 0) == 0) {
            in_table = true;
            continue;
        }
        if (line.empty()) in_table = false;
        if (in_table) ++rows;
    }
    const double delta = rep.gv.delta;
    const bool ok = a.code == 0 && a.out == b.out && rows == 200 && rep.samples.size() == 200 &&
                    a.out.find("alpha_star_distance        : 4\n") != std::string::npos &&
                    std::abs(q_ary_entropy(2, delta) - 0.5) < 1e-8 && std::abs(delta - 0.110) < 5e-4;
    return {ok, "200 random alphas, alpha* distance " + std::to_string(rep.alpha_star_distance) + ", GV delta " +
                    fixed(delta, 6) + " (n*delta = " + fixed(rep.gv.distance, 3) + "), repeat run " +
                    (a.out == b.out ? "byte-identical" : "DIFFERS")};
}

Outcome determinism() {
    auto once = [](const std::string& tag) {
        const fs::path params = scratch() / ("c10_" + tag + ".txt");
        const fs::path matrix = scratch() / ("c10_" + tag + "_g.txt");
        std::string log;
        log += cli_run({"params", "--q", "2", "--min-k", "10", "--out", params.string()}).out;
        cli_run({"genmat", "--params", params.string(), "--out", matrix.string()});
        const std::string report = cli_run({"distance", "--params", params.string(), "--exact", "--certify", "3"}).out;
        return std::vector<std::string>{slurp(params), slurp(matrix), report};
    };
    const auto a = once("a"), b = once("b");
    const bool ok = a == b && !a[0].empty() && !a[1].empty() && !a[2].empty();
    return {ok, "ParamFile " + std::to_string(a[0].size()) + " B, matrix " + std::to_string(a[1].size()) +
                    " B, report " + std::to_string(a[2].size()) + " B; " + (ok ? "byte-identical" : "DIFFER")};
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"construction pipeline (q=2, k=10)", construction_pipeline},
        {"rate-1/2 exact distance", rate_half_exact},
        {"larger instance (k'=29)", larger_instance},
        {"Sidon suite", sidon_suite},
        {"claims suite at k'=11", claims_suite},
        {"weight lemma corpus", lemma_corpus},
        {"irreducibility", irreducibility},
        {"puncturing at r=2/3", puncturing},
        {"ensemble comparison", ensemble},
        {"determinism", determinism},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failed += !o.pass;
        std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first << " -- "
                  << o.detail << std::endl;
    }
    fs::remove_all(scratch());
    std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << std::endl;
    return failed == 0 ? 0 : 1;
}
