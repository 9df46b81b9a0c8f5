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

#ifndef WOZENCRAFT_VERIFY_HPP
#define WOZENCRAFT_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "wozencraft/analysis.hpp"

namespace wozencraft {

struct VerifyItem {
    std::string name;
    bool pass;
    /// Informational items never fail the suite.
    bool required;
    std::string detail;
};

struct VerifyOptions {
    std::uint64_t trials = 1000;
    std::uint64_t seed = 0;
    std::uint64_t budget = kDefaultBudget;
    unsigned workers = 1;
};

struct VerifyReport {
    std::vector<VerifyItem> items;

    bool passed() const noexcept;
};

/// Full property suite for one parameter set: irreducibility, Sidon property
/// and window bounds, the weight-reduction lemmas on random ring elements,
/// the J-profile claims, and the certificate / exact-distance cross-check
/// when they fit in the budget.
VerifyReport verify_params(const CodeParams& params, const VerifyOptions& options = {});

}  // namespace wozencraft

#endif  // WOZENCRAFT_VERIFY_HPP
