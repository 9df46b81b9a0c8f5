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

#ifndef WOZENCRAFT_ERROR_HPP
#define WOZENCRAFT_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace wozencraft {

enum class ErrorCode {
    NotPrime,
    OrderTooLarge,
    ZeroInverse,
    FieldMismatch,
    NotAUnit,
    SearchExhausted,
    NoPrime,
    ContextMismatch,
    BadTruncation,
    DegreeOverflow,
    BadLength,
    RateOutOfRange,
    BudgetExceeded,
    BoundViolation,
    ClaimViolation,
    InvalidParams,
    ParseError,
};

constexpr std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::NotPrime: return "NotPrime";
        case ErrorCode::OrderTooLarge: return "OrderTooLarge";
        case ErrorCode::ZeroInverse: return "ZeroInverse";
        case ErrorCode::FieldMismatch: return "FieldMismatch";
        case ErrorCode::NotAUnit: return "NotAUnit";
        case ErrorCode::SearchExhausted: return "SearchExhausted";
        case ErrorCode::NoPrime: return "NoPrime";
        case ErrorCode::ContextMismatch: return "ContextMismatch";
        case ErrorCode::BadTruncation: return "BadTruncation";
        case ErrorCode::DegreeOverflow: return "DegreeOverflow";
        case ErrorCode::BadLength: return "BadLength";
        case ErrorCode::RateOutOfRange: return "RateOutOfRange";
        case ErrorCode::BudgetExceeded: return "BudgetExceeded";
        case ErrorCode::BoundViolation: return "BoundViolation";
        case ErrorCode::ClaimViolation: return "ClaimViolation";
        case ErrorCode::InvalidParams: return "InvalidParams";
        case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

   private:
    ErrorCode code_;
};

}  // namespace wozencraft

#endif  // WOZENCRAFT_ERROR_HPP
