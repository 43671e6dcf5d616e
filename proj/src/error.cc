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

#include "spinpulse/error.h"

#include <iostream>
#include <mutex>
#include <set>

namespace spinpulse {

std::string_view error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::UnknownGate:
            return "UnknownGate";
        case ErrorCode::ArityMismatch:
            return "ArityMismatch";
        case ErrorCode::QubitOutOfRange:
            return "QubitOutOfRange";
        case ErrorCode::MalformedHeader:
            return "MalformedHeader";
        case ErrorCode::TooManyQubits:
            return "TooManyQubits";
        case ErrorCode::InvalidParams:
            return "InvalidParams";
        case ErrorCode::InvalidArgument:
            return "InvalidArgument";
        case ErrorCode::EnvironmentExhausted:
            return "EnvironmentExhausted";
        case ErrorCode::NoExchangeNoise:
            return "NoExchangeNoise";
        case ErrorCode::AdiabaticityViolation:
            return "AdiabaticityViolation";
        case ErrorCode::TraceMissing:
            return "TraceMissing";
        case ErrorCode::DimensionUnsupported:
            return "DimensionUnsupported";
        case ErrorCode::DimensionMismatch:
            return "DimensionMismatch";
        case ErrorCode::NonAdjacentGate:
            return "NonAdjacentGate";
        case ErrorCode::SizeMismatch:
            return "SizeMismatch";
        case ErrorCode::Io:
            return "Io";
    }
    return "Unknown";
}

void warn_once(std::string_view key, std::string_view message) {
    static std::mutex mutex;
    static std::set<std::string, std::less<>> seen;
    std::lock_guard<std::mutex> lock(mutex);
    if (seen.contains(key)) {
        return;
    }
    seen.emplace(key);
    std::cerr << "warning: " << message << '\n';
}

}  // namespace spinpulse
