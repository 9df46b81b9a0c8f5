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

// Text parameter files:
//
//   format = wozencraft-params-v1
//   q = 2
//   kprime = 11
//   k = 10
//   d = 3
//   sidon_modulus = 8
//   sidon = 4,5,7
//   alpha_coeffs = 0,0,0,0,1,1,0,1,0,0
//   rate = 1/2
//   kept = 10
//
// Blank lines and lines starting with '#' are ignored on load. Keys may appear
// in any order but each exactly once; unknown keys are rejected. alpha is
// over the monomial basis 1, x, ..., x^(k-1) of F_q[x]/(1 + x + ... + x^k).

#ifndef WOZENCRAFT_PARAM_FILE_HPP
#define WOZENCRAFT_PARAM_FILE_HPP

#include <filesystem>
#include <string>
#include <string_view>

#include "wozencraft/params.hpp"

namespace wozencraft {

inline constexpr std::string_view kParamFormat = "wozencraft-params-v1";

std::string format_param_file(const CodeParams& params);

/// Parses and validates. Throws ParseError for syntax, InvalidParams for
/// semantic problems.
CodeParams parse_param_file(std::string_view text);

CodeParams load_param_file(const std::filesystem::path& path);
void save_param_file(const std::filesystem::path& path, const CodeParams& params);

}  // namespace wozencraft

#endif  // WOZENCRAFT_PARAM_FILE_HPP
