// Copyright 2026 The SpinPulse Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SPINPULSE_ERROR_H
#define SPINPULSE_ERROR_H

#include <stdexcept>
#include <string>
#include <string_view>

namespace spinpulse {

enum class ErrorCode {
    UnknownGate,
    ArityMismatch,
    QubitOutOfRange,
    MalformedHeader,
    TooManyQubits,
    InvalidParams,
    InvalidArgument,
    EnvironmentExhausted,
    NoExchangeNoise,
    AdiabaticityViolation,
    TraceMissing,
    DimensionUnsupported,
    DimensionMismatch,
    NonAdjacentGate,
    SizeMismatch,
    Io,
};

std::string_view error_code_name(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so callers
/// (and the CLI) can tell usage problems from numerical ones.
class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, const std::string &message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

   private:
    ErrorCode code_;
};

/// Emits a warning on stderr the first time a given key is seen in this process.
void warn_once(std::string_view key, std::string_view message);

}  // namespace spinpulse

#endif
