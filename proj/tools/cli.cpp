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

#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "wozencraft/analysis.hpp"
#include "wozencraft/param_file.hpp"
#include "wozencraft/verify.hpp"

namespace wozencraft::cli {

namespace {

using Rows = std::vector<std::pair<std::string, std::string>>;

void print_rows(std::ostream& out, const Rows& rows, bool csv) {
    if (csv) {
        out << "key,value\n";
        for (const auto& [key, value] : rows) out << key << ',' << value << '\n';
        return;
    }
    std::size_t width = 0;
    for (const auto& row : rows) width = std::max(width, row.first.size());
    for (const auto& [key, value] : rows) out << std::left << std::setw(static_cast<int>(width)) << key << " : " << value << '\n';
}

template <class Range>
std::string join(const Range& values, char sep = ',') {
    std::ostringstream os;
    bool first = true;
    for (const auto& v : values) {
        if (!first) os << sep;
        first = false;
        os << v;
    }
    return os.str();
}

std::string fixed(double v, int digits = 6) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(digits) << v;
    return os.str();
}

std::string code_summary(const CodeParams& p) {
    return "q=" + std::to_string(p.q) + " k'=" + std::to_string(p.kprime) + " k=" + std::to_string(p.k) +
           " n=" + std::to_string(p.length()) + " kept=" + std::to_string(p.kept) + " rate=" + p.rate.str();
}

SymbolVector parse_message(const std::string& text, std::uint64_t q) {
    SymbolVector out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        unsigned long long v = 0;
        try {
            v = std::stoull(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != item.size() || v >= q) {
            throw Error(ErrorCode::ParseError, "--message: bad symbol '" + item + "'");
        }
        out.push_back(static_cast<galois::Symbol>(v));
    }
    return out;
}

CodeParams load_with_rate(const std::string& path, const std::optional<std::string>& rate) {
    CodeParams params = load_param_file(path);
    if (rate) params = with_rate(std::move(params), Rational::parse(*rate));
    return params;
}

int exit_code_for(const Error& e) {
    switch (e.code()) {
        case ErrorCode::ClaimViolation:
        case ErrorCode::BoundViolation: return kExitFailed;
        default: return kExitUsage;
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Explicit Wozencraft ensemble codes from Bose-Chowla Sidon sets", "wozencraft"};
    app.require_subcommand(1);

    // params
    auto* params_cmd = app.add_subcommand("params", "find k', d, the Sidon set and alpha*; write a parameter file");
    std::uint64_t q = 2, min_k = 0;
    std::optional<std::string> out_path, rate_text;
    std::optional<std::uint64_t> search_cap;
    params_cmd->add_option("--q", q, "field order (prime power)")->required();
    params_cmd->add_option("--min-k", min_k, "search primes k' > min-k")->required();
    params_cmd->add_option("--out", out_path, "output file (default: stdout)");
    params_cmd->add_option("--rate", rate_text, "rate a/b in [1/2, 1)");
    params_cmd->add_option("--cap", search_cap, "largest k' candidate to try");

    // sidon
    auto* sidon_cmd = app.add_subcommand("sidon", "print a Bose-Chowla Sidon set and check it");
    std::uint32_t sidon_p = 0;
    sidon_cmd->add_option("--p", sidon_p, "prime order")->required();

    // shared
    std::string params_path;
    bool csv = false, timing = false;
    unsigned threads = 1;
    std::uint64_t budget = kDefaultBudget;

    auto* genmat_cmd = app.add_subcommand("genmat", "export the generator matrix");
    std::string genmat_out;
    genmat_cmd->add_option("--params", params_path, "parameter file")->required();
    genmat_cmd->add_option("--rate", rate_text, "puncture to rate a/b");
    genmat_cmd->add_option("--out", genmat_out, "matrix file")->required();

    auto* encode_cmd = app.add_subcommand("encode", "encode one message");
    std::string message_text;
    encode_cmd->add_option("--params", params_path, "parameter file")->required();
    encode_cmd->add_option("--message", message_text, "k comma-separated symbols")->required();
    encode_cmd->add_option("--rate", rate_text, "puncture to rate a/b");

    auto* distance_cmd = app.add_subcommand("distance", "lower bounds and exact minimum distance");
    bool exact = false;
    std::optional<std::uint64_t> certify_target, prove_target;
    distance_cmd->add_option("--params", params_path, "parameter file")->required();
    distance_cmd->add_flag("--exact", exact, "exhaustive search over all messages");
    distance_cmd->add_option("--certify", certify_target, "certify distance >= C by low-weight enumeration");
    distance_cmd->add_option("--budget", budget, "enumeration budget");
    distance_cmd->add_option("--prove-at-least", prove_target, "exhaustive search stopping at the first weight < C");
    distance_cmd->add_option("--rate", rate_text, "puncture to rate a/b");
    distance_cmd->add_option("--threads", threads, "worker threads (0 = all cores)");
    distance_cmd->add_flag("--csv", csv, "key,value output");
    distance_cmd->add_flag("--timing", timing, "include elapsed time");

    auto* verify_cmd = app.add_subcommand("verify", "run the property suite on a parameter file");
    std::uint64_t trials = 1000, seed = 0;
    verify_cmd->add_option("--params", params_path, "parameter file")->required();
    verify_cmd->add_option("--trials", trials, "random samples per randomized check");
    verify_cmd->add_option("--seed", seed, "seed for the randomized checks");
    verify_cmd->add_option("--budget", budget, "enumeration budget");
    verify_cmd->add_option("--threads", threads, "worker threads (0 = all cores)");
    verify_cmd->add_flag("--csv", csv, "key,value output");

    auto* ensemble_cmd = app.add_subcommand("ensemble", "distances of random alphas against alpha* and the GV bound");
    std::uint64_t samples = 0;
    ensemble_cmd->add_option("--params", params_path, "parameter file")->required();
    ensemble_cmd->add_option("--samples", samples, "number of random alphas")->required();
    ensemble_cmd->add_option("--seed", seed, "sampler seed")->required();
    ensemble_cmd->add_option("--budget", budget, "enumeration budget per code");
    ensemble_cmd->add_option("--threads", threads, "worker threads (0 = all cores)");
    ensemble_cmd->add_flag("--csv", csv, "machine-readable output");

    std::vector<const char*> argv{"wozencraft"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*params_cmd) {
            const CodeParams params = construct_params(q, min_k, rate_text ? Rational::parse(*rate_text) : Rational(1, 2),
                                                       search_cap);
            if (out_path) {
                save_param_file(*out_path, params);
                out << "wrote " << *out_path << " (" << code_summary(params) << ")\n";
            } else {
                out << format_param_file(params);
            }
            return kExitOk;
        }

        if (*sidon_cmd) {
            const SidonSet set = bose_chowla(sidon_p);
            const auto verdict = verify_sidon(set.elements, set.modulus);
            const auto excess = find_lindstrom_excess(set);
            Rows rows{{"p", std::to_string(set.p)},
                      {"field", galois::describe(galois::field_make(sidon_p, 2).desc())},
                      {"generator", std::to_string(set.generator_code)},
                      {"modulus", std::to_string(set.modulus)},
                      {"order", std::to_string(set.order())},
                      {"elements", join(set.elements)},
                      {"sidon", verdict.is_sidon ? "PASS" : "FAIL"},
                      {"lindstrom", excess ? "FAIL" : "PASS"}};
            if (verdict.witness) {
                const auto& w = *verdict.witness;
                rows.emplace_back("witness", std::to_string(w[0]) + "-" + std::to_string(w[1]) + " == " +
                                                 std::to_string(w[2]) + "-" + std::to_string(w[3]));
            }
            print_rows(out, rows, false);
            return verdict.is_sidon && set.order() == set.p && !excess ? kExitOk : kExitFailed;
        }

        if (*genmat_cmd) {
            const CodeParams params = load_with_rate(params_path, rate_text);
            const GeneratorMatrix g = generator_matrix(params);
            std::ofstream file(genmat_out, std::ios::binary);
            if (!file) throw Error(ErrorCode::ParseError, "cannot write " + genmat_out);
            write_generator_matrix(file, g);
            out << "wrote " << genmat_out << " (" << g.k << " x " << g.n << " over F_" << g.q << ")\n";
            return kExitOk;
        }

        if (*encode_cmd) {
            const CodeParams params = load_with_rate(params_path, rate_text);
            out << join(encode(parse_message(message_text, params.q), params), ' ') << '\n';
            return kExitOk;
        }

        if (*distance_cmd) {
            const CodeParams params = load_with_rate(params_path, rate_text);
            const WozencraftCode code(params);
            const auto start = std::chrono::steady_clock::now();
            bool failed = false;

            DistanceReport report;
            Rows rows{{"code", code_summary(params)}};
            const TheoremBound bound = theorem_lower_bound(params);
            rows.emplace_back("theorem_bound", std::to_string(bound.value));
            rows.emplace_back("theorem_note", bound.note);
            if (bound.applies && bound.value > 0) {
                report.certified_lower_bound = bound.value;
                report.method = "claims";
            }

            if (certify_target) {
                const DistanceMode mode = params.kept == params.k ? DistanceMode::RateHalf : DistanceMode::Punctured;
                const Certificate cert = certify_distance(code, *certify_target, mode, budget);
                rows.emplace_back("certificate", (cert.pass ? "PASS c=" : "FAIL c=") + std::to_string(cert.target));
                rows.emplace_back("certificate_examined", std::to_string(cert.examined));
                if (cert.violation) {
                    rows.emplace_back("certificate_violation", join(cert.violation->coeffs()));
                    rows.emplace_back("certificate_violation_weight", std::to_string(cert.violation_weight));
                    failed = true;
                }
                if (cert.pass && cert.target > report.certified_lower_bound) {
                    report.certified_lower_bound = cert.target;
                    report.method = "enumeration";
                }
            }

            if (exact || prove_target) {
                SearchOptions options;
                options.budget = budget;
                options.workers = threads;
                options.prove_at_least = prove_target;
                const DistanceReport search = exact_min_distance(code, options);
                report.exact_distance = search.exact_distance;
                report.witness = search.witness;
                report.witness_code = search.witness_code;
                report.witness_weight = search.witness_weight;
                report.search_space = search.search_space;
                report.disproved = search.disproved;
                if (prove_target) {
                    rows.emplace_back("prove_at_least", (search.disproved ? "DISPROVED c=" : "PROVED c=") +
                                                            std::to_string(*prove_target));
                    failed = failed || search.disproved;
                    if (!search.disproved && *prove_target > report.certified_lower_bound) {
                        report.certified_lower_bound = *prove_target;
                        report.method = "enumeration";
                    }
                }
                if (search.exact_distance) rows.emplace_back("exact_distance", std::to_string(*search.exact_distance));
                if (search.witness) {
                    rows.emplace_back("witness", join(*search.witness));
                    rows.emplace_back("witness_code", std::to_string(*search.witness_code));
                    rows.emplace_back("witness_weight", std::to_string(*search.witness_weight));
                }
                rows.emplace_back("search_space", std::to_string(search.search_space));
            }

            rows.emplace_back("certified_lower_bound", std::to_string(report.certified_lower_bound));
            rows.emplace_back("method", report.method);
            if (report.exact_distance) {
                const bool consistent = report.certified_lower_bound <= *report.exact_distance;
                rows.emplace_back("consistency", consistent ? "certified <= exact" : "VIOLATED: certified > exact");
                failed = failed || !consistent;
            }
            if (timing) {
                const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
                rows.emplace_back("elapsed_seconds", fixed(elapsed.count(), 3));
            }
            print_rows(out, rows, csv);
            return failed ? kExitFailed : kExitOk;
        }

        if (*verify_cmd) {
            const CodeParams params = load_param_file(params_path);
            VerifyOptions options;
            options.trials = trials;
            options.seed = seed;
            options.budget = budget;
            options.workers = threads;
            const VerifyReport report = verify_params(params, options);
            if (csv) {
                out << "check,status,detail\n";
                for (const auto& item : report.items) {
                    out << item.name << ',' << (item.pass ? (item.required ? "PASS" : "INFO") : (item.required ? "FAIL" : "FLAG")) << ",\""
                        << item.detail << "\"\n";
                }
            } else {
                out << "verifying " << code_summary(params) << '\n';
                for (const auto& item : report.items) {
                    const char* tag = item.pass ? (item.required ? "PASS" : "INFO") : (item.required ? "FAIL" : "FLAG");
                    out << '[' << tag << "] " << item.name << ": " << item.detail << '\n';
                }
                out << (report.passed() ? "verification passed" : "verification FAILED") << '\n';
            }
            return report.passed() ? kExitOk : kExitFailed;
        }

        if (*ensemble_cmd) {
            const CodeParams params = load_param_file(params_path);
            SearchOptions options;
            options.budget = budget;
            options.workers = threads;
            const EnsembleReport report = run_ensemble(params, samples, seed, options);
            std::uint64_t at_least_star = 0, at_least_gv = 0;
            for (const auto& s : report.samples) {
                at_least_star += s.distance >= report.alpha_star_distance;
                at_least_gv += static_cast<double>(s.distance) >= report.gv.distance;
            }
            const auto histogram = report.histogram();
            Rows rows{{"code", code_summary(params)},
                      {"samples", std::to_string(samples)},
                      {"seed", std::to_string(seed)},
                      {"alpha_star_distance", std::to_string(report.alpha_star_distance)},
                      {"gv_delta", fixed(report.gv.delta)},
                      {"gv_distance", fixed(report.gv.distance)},
                      {"random_at_least_alpha_star", std::to_string(at_least_star)},
                      {"random_at_least_gv", std::to_string(at_least_gv)}};
            if (csv) {
                print_rows(out, rows, true);
                out << "\nsample,distance,alpha\n";
                for (std::size_t i = 0; i < report.samples.size(); ++i) {
                    out << i << ',' << report.samples[i].distance << ',' << join(report.samples[i].alpha, ' ') << '\n';
                }
                out << "\ndistance,count\n";
                for (std::size_t d = 0; d < histogram.size(); ++d) {
                    if (histogram[d]) out << d << ',' << histogram[d] << '\n';
                }
            } else {
                print_rows(out, rows, false);
                out << "\nsample  distance  alpha\n";
                for (std::size_t i = 0; i < report.samples.size(); ++i) {
                    out << std::left << std::setw(6) << i << "  " << std::setw(8) << report.samples[i].distance << "  "
                        << join(report.samples[i].alpha) << '\n';
                }
                out << "\ndistance  count\n";
                for (std::size_t d = 0; d < histogram.size(); ++d) {
                    if (histogram[d]) out << std::left << std::setw(8) << d << "  " << histogram[d] << '\n';
                }
            }
            return kExitOk;
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_code_for(e);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace wozencraft::cli
