/* Copyright 2026 The necklace Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */

#include "necklace/core.hpp"

namespace necklace {

const char* to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::InvalidBlock: return "InvalidBlock";
        case ErrorCode::LayerMismatch: return "LayerMismatch";
        case ErrorCode::NotADivisor: return "NotADivisor";
        case ErrorCode::NotAperiodic: return "NotAperiodic";
        case ErrorCode::DivisionByZero: return "DivisionByZero";
        case ErrorCode::ConjugatesCollide: return "ConjugatesCollide";
        case ErrorCode::CoefficientNotInBase: return "CoefficientNotInBase";
        case ErrorCode::BadFactorization: return "BadFactorization";
        case ErrorCode::InvalidAdvice: return "InvalidAdvice";
        case ErrorCode::NotInBaseField: return "NotInBaseField";
        case ErrorCode::ZeroColumn: return "ZeroColumn";
        case ErrorCode::NotBinary: return "NotBinary";
        case ErrorCode::NotPrime: return "NotPrime";
        case ErrorCode::ConstantString: return "ConstantString";
        case ErrorCode::TooBig: return "TooBig";
        case ErrorCode::Internal: return "Internal";
    }
    return "Unknown";
}

void fail(ErrorCode code, const std::string& what) {
    throw Error(code, what);
}

BigCount parse_decimal(std::string_view text) {
    if (text.empty()) fail(ErrorCode::InvalidArgument, "empty integer");
    for (char c : text) {
        if (c < '0' || c > '9') {
            fail(ErrorCode::InvalidArgument, "not a decimal integer: '" + std::string(text) + "'");
        }
    }
    return BigCount(std::string(text), 10);
}

std::string to_decimal(const BigCount& value) {
    return value.get_str(10);
}

BigCount power(const BigCount& base, unsigned long exponent) {
    BigCount result;
    mpz_pow_ui(result.get_mpz_t(), base.get_mpz_t(), exponent);
    return result;
}

std::size_t ceil_log2(const BigCount& q) {
    if (q < 2) fail(ErrorCode::InvalidArgument, "alphabet size must be at least 2");
    BigCount top = q - 1;
    return mpz_sizeinbase(top.get_mpz_t(), 2);
}

std::uint64_t to_u64(const BigCount& value, const char* what) {
    if (value < 0 || mpz_sizeinbase(value.get_mpz_t(), 2) > 64) {
        fail(ErrorCode::TooBig, std::string(what) + " does not fit in 64 bits");
    }
    std::uint64_t out = 0;
    mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, value.get_mpz_t());
    return out;
}

}  // namespace necklace
