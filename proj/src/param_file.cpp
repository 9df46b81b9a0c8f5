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

#include "wozencraft/param_file.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

namespace wozencraft {

namespace {

constexpr std::array<std::string_view, 10> kKeys = {"format", "q",     "kprime",       "k",    "d",
                                                    "sidon_modulus", "sidon", "alpha_coeffs", "rate", "kept"};

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

[[noreturn]] void parse_error(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

std::uint64_t parse_uint(std::string_view key, std::string_view text) {
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
        parse_error("key '" + std::string(key) + "': bad integer '" + std::string(text) + "'");
    }
    return v;
}

std::vector<std::uint64_t> parse_list(std::string_view key, std::string_view text) {
    std::vector<std::uint64_t> out;
    if (text.empty()) return out;
    std::size_t pos = 0;
    while (true) {
        const auto comma = text.find(',', pos);
        out.push_back(parse_uint(key, trim(text.substr(pos, comma - pos))));
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return out;
}

template <class Range>
std::string join(const Range& values) {
    std::string out;
    for (const auto& v : values) {
        if (!out.empty()) out += ',';
        out += std::to_string(v);
    }
    return out;
}

}  // namespace

std::string format_param_file(const CodeParams& params) {
    std::ostringstream os;
    os << "format = " << kParamFormat << '\n'
       << "q = " << params.q << '\n'
       << "kprime = " << params.kprime << '\n'
       << "k = " << params.k << '\n'
       << "d = " << params.d << '\n'
       << "sidon_modulus = " << params.sidon.modulus << '\n'
       << "sidon = " << join(params.sidon.elements) << '\n'
       << "alpha_coeffs = " << join(params.alpha_coeffs) << '\n'
       << "rate = " << params.rate.str() << '\n'
       << "kept = " << params.kept << '\n';
    return os.str();
}

CodeParams parse_param_file(std::string_view text) {
    std::map<std::string, std::string, std::less<>> values;
    std::size_t line_no = 0;
    for (std::size_t pos = 0; pos <= text.size();) {
        const auto nl = text.find('\n', pos);
        const std::string_view line = trim(text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos));
        ++line_no;
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        if (line.empty() || line.front() == '#') continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) parse_error("line " + std::to_string(line_no) + ": expected key = value");
        const std::string key(trim(line.substr(0, eq)));
        if (std::find(kKeys.begin(), kKeys.end(), key) == kKeys.end()) {
            parse_error("line " + std::to_string(line_no) + ": unknown key '" + key + "'");
        }
        if (!values.emplace(key, trim(line.substr(eq + 1))).second) {
            parse_error("line " + std::to_string(line_no) + ": duplicate key '" + key + "'");
        }
    }
    for (std::string_view key : kKeys) {
        if (!values.contains(key)) parse_error("missing key '" + std::string(key) + "'");
    }
    if (values["format"] != kParamFormat) parse_error("unsupported format '" + values["format"] + "'");

    CodeParams params;
    params.q = parse_uint("q", values["q"]);
    params.kprime = parse_uint("kprime", values["kprime"]);
    params.k = parse_uint("k", values["k"]);
    params.d = parse_uint("d", values["d"]);
    params.sidon.p = params.d;
    params.sidon.modulus = parse_uint("sidon_modulus", values["sidon_modulus"]);
    params.sidon.elements = parse_list("sidon", values["sidon"]);
    for (std::uint64_t c : parse_list("alpha_coeffs", values["alpha_coeffs"])) {
        if (c > galois::kMaxOrder) throw Error(ErrorCode::InvalidParams, "alpha coefficient out of range");
        params.alpha_coeffs.push_back(static_cast<galois::Symbol>(c));
    }
    params.rate = Rational::parse(values["rate"]);
    params.kept = parse_uint("kept", values["kept"]);
    if (params.sidon.elements.empty()) throw Error(ErrorCode::InvalidParams, "empty Sidon set");
    validate(params);

    // The generator is not stored; recover it when the set is the canonical one.
    if (params.d <= 46340) {
        const SidonSet canonical = bose_chowla(static_cast<std::uint32_t>(params.d));
        if (canonical.elements == params.sidon.elements) params.sidon.generator_code = canonical.generator_code;
    }
    return params;
}

CodeParams load_param_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_param_file(buf.str());
}

void save_param_file(const std::filesystem::path& path, const CodeParams& params) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorCode::ParseError, "cannot write " + path.string());
    out << format_param_file(params);
}

}  // namespace wozencraft
