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
// Shared vocabulary: arbitrary-precision counts and the library's error type.

#ifndef NECKLACE_CORE_HPP
#define NECKLACE_CORE_HPP

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace necklace {

/// Arbitrary-precision nonnegative integer used for every count, index and rank.
using BigCount = mpz_class;

enum class ErrorCode {
    InvalidArgument,
    InvalidBlock,
    LayerMismatch,
    NotADivisor,
    NotAperiodic,
    DivisionByZero,
    ConjugatesCollide,
    CoefficientNotInBase,
    BadFactorization,
    InvalidAdvice,
    NotInBaseField,
    ZeroColumn,
    NotBinary,
    NotPrime,
    ConstantString,
    TooBig,
    Internal,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& what);

/// Parses a nonnegative decimal integer; rejects signs, blanks and other bases.
BigCount parse_decimal(std::string_view text);

std::string to_decimal(const BigCount& value);

BigCount power(const BigCount& base, unsigned long exponent);

/// Smallest t with 2^t >= q (q >= 2).
std::size_t ceil_log2(const BigCount& q);

/// Converts to a machine word, failing with TooBig when it does not fit.
std::uint64_t to_u64(const BigCount& value, const char* what);

}  // namespace necklace

#endif  // NECKLACE_CORE_HPP
