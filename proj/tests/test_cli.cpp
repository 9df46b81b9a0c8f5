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

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "wozencraft/codec.hpp"
#include "wozencraft/param_file.hpp"

using namespace wozencraft;
namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

struct TempDir {
    fs::path path;
    TempDir() : path(fs::temp_directory_path() / "wozencraft_cli_test") {
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("params writes the canonical file") {
    TempDir dir;
    const std::string path = dir.file("p10.txt");
    Result r = run({"params", "--q", "2", "--min-k", "10", "--out", path});
    CHECK(r.code == cli::kExitOk);
    CHECK(slurp(path) == format_param_file(construct_params(2, 10)));
    Result to_stdout = run({"params", "--q", "2", "--min-k", "10"});
    CHECK(to_stdout.code == 0);
    CHECK(to_stdout.out == format_param_file(construct_params(2, 10)));
    Result punct = run({"params", "--q", "2", "--min-k", "10", "--rate", "2/3"});
    CHECK(contains(punct.out, "kept = 5\n"));
    CHECK(contains(punct.out, "rate = 2/3\n"));
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run({}).code == cli::kExitUsage);
    CHECK(run({"params", "--q", "2"}).code == cli::kExitUsage);
    CHECK(run({"params", "--q", "6", "--min-k", "10"}).code == cli::kExitUsage);
    CHECK(run({"params", "--q", "4", "--min-k", "10"}).code == cli::kExitUsage);
    CHECK(run({"params", "--q", "2", "--min-k", "10", "--rate", "0.6"}).code == cli::kExitUsage);
    CHECK(run({"sidon", "--p", "4"}).code == cli::kExitUsage);
    CHECK(run({"encode", "--params", "/nonexistent/file", "--message", "1"}).code == cli::kExitUsage);
    CHECK(run({"ensemble", "--params", "x", "--samples", "2"}).code == cli::kExitUsage);
    CHECK(run({"bogus"}).code == cli::kExitUsage);
    CHECK(run({"--help"}).code == cli::kExitOk);
}

TEST_CASE("sidon subcommand") {
    Result r = run({"sidon", "--p", "3"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "elements  : 4,5,7\n"));
    CHECK(contains(r.out, "sidon     : PASS\n"));
}

TEST_CASE("encode, genmat and distance on the k = 10 file") {
    TempDir dir;
    const std::string params = dir.file("p10.txt");
    REQUIRE(run({"params", "--q", "2", "--min-k", "10", "--out", params}).code == 0);

    Result enc = run({"encode", "--params", params, "--message", "1,0,0,0,0,0,0,0,0,0"});
    CHECK(enc.code == 0);
    CHECK(enc.out == "1 0 0 0 0 0 0 0 0 0 0 0 0 0 1 1 0 1 0 0\n");
    CHECK(run({"encode", "--params", params, "--message", "1,0"}).code == cli::kExitUsage);
    CHECK(run({"encode", "--params", params, "--message", "1,0,0,0,0,0,0,0,0,2"}).code == cli::kExitUsage);
    Result enc_r = run({"encode", "--params", params, "--message", "1,0,0,0,0,0,0,0,0,0", "--rate", "2/3"});
    CHECK(enc_r.out == "1 0 0 0 0 0 0 0 0 0 0 0 0 0 1\n");

    const std::string mat = dir.file("g.txt");
    CHECK(run({"genmat", "--params", params, "--out", mat}).code == 0);
    std::ifstream in(mat);
    GeneratorMatrix g = read_generator_matrix(in);
    CHECK(g == generator_matrix(construct_params(2, 10)));
    CHECK(slurp(mat).rfind("2 10 20\n", 0) == 0);
    const std::string mat_r = dir.file("g23.txt");
    CHECK(run({"genmat", "--params", params, "--rate", "2/3", "--out", mat_r}).code == 0);
    CHECK(slurp(mat_r).rfind("2 10 15\n", 0) == 0);

    Result dist = run({"distance", "--params", params, "--exact", "--certify", "3"});
    CHECK(dist.code == 0);
    CHECK(contains(dist.out, "exact_distance        : 4\n"));
    CHECK(contains(dist.out, "certificate           : PASS c=3\n"));
    CHECK(contains(dist.out, "certified_lower_bound : 3\n"));
    CHECK_FALSE(contains(dist.out, "elapsed"));
    CHECK(contains(run({"distance", "--params", params, "--exact", "--timing"}).out, "elapsed"));

    Result csv = run({"distance", "--params", params, "--exact", "--csv"});
    CHECK(csv.out.rfind("key,value\n", 0) == 0);
    CHECK(contains(csv.out, "exact_distance,4\n"));

    Result disproof = run({"distance", "--params", params, "--prove-at-least", "5"});
    CHECK(disproof.code == cli::kExitFailed);
    CHECK(contains(disproof.out, "DISPROVED c=5"));
    Result proof = run({"distance", "--params", params, "--prove-at-least", "4"});
    CHECK(proof.code == 0);

    Result punct = run({"distance", "--params", params, "--exact", "--rate", "2/3"});
    CHECK(punct.code == 0);
    CHECK(contains(punct.out, "exact_distance        : 1\n"));
    CHECK(contains(punct.out, "vacuous"));

    CHECK(run({"distance", "--params", params, "--exact", "--budget", "100"}).code == cli::kExitUsage);
}

TEST_CASE("verify and ensemble") {
    TempDir dir;
    const std::string params = dir.file("p10.txt");
    REQUIRE(run({"params", "--q", "2", "--min-k", "10", "--out", params}).code == 0);
    Result v = run({"verify", "--params", params, "--trials", "100"});
    CHECK(v.code == 0);
    CHECK(contains(v.out, "verification passed"));
    CHECK_FALSE(contains(v.out, "[FAIL]"));
    Result vc = run({"verify", "--params", params, "--trials", "100", "--csv"});
    CHECK(vc.code == 0);
    CHECK(contains(vc.out, "irreducible,PASS"));

    Result e1 = run({"ensemble", "--params", params, "--samples", "20", "--seed", "1"});
    Result e2 = run({"ensemble", "--params", params, "--samples", "20", "--seed", "1"});
    CHECK(e1.code == 0);
    CHECK(e1.out == e2.out);
    CHECK(contains(e1.out, "alpha_star_distance        : 4\n"));
    CHECK(contains(e1.out, "gv_delta                   : 0.110028\n"));
    Result e3 = run({"ensemble", "--params", params, "--samples", "20", "--seed", "2"});
    CHECK(e3.out != e1.out);
    Result ec = run({"ensemble", "--params", params, "--samples", "5", "--seed", "1", "--csv"});
    CHECK(contains(ec.out, "\nsample,distance,alpha\n"));
    CHECK(contains(ec.out, "\ndistance,count\n"));
}

TEST_CASE("a tampered parameter file is rejected") {
    TempDir dir;
    const std::string params = dir.file("bad.txt");
    std::string text = format_param_file(construct_params(2, 10));
    text.replace(text.find("sidon = 4,5,7"), 13, "sidon = 4,5,6");
    std::ofstream(params) << text;
    Result r = run({"verify", "--params", params});
    CHECK(r.code == cli::kExitUsage);
    CHECK(contains(r.err, "InvalidParams"));
}
