// Copyright 2026 The walkport Authors
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

#include "walkport/error.hpp"

namespace walkport {

std::string_view error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidLabel: return "InvalidLabel";
        case ErrorCode::EmptyState: return "EmptyState";
        case ErrorCode::LayoutMismatch: return "LayoutMismatch";
        case ErrorCode::WrongRegisterKind: return "WrongRegisterKind";
        case ErrorCode::NotUnitary: return "NotUnitary";
        case ErrorCode::NonFiniteAmplitude: return "NonFiniteAmplitude";
        case ErrorCode::OutOfBounds: return "OutOfBounds";
        case ErrorCode::UnknownRegister: return "UnknownRegister";
        case ErrorCode::ShapeMismatch: return "ShapeMismatch";
        case ErrorCode::NotNormalized: return "NotNormalized";
        case ErrorCode::MalformedProjector: return "MalformedProjector";
        case ErrorCode::MissingCorrection: return "MissingCorrection";
        case ErrorCode::NoPauliCorrection: return "NoPauliCorrection";
        case ErrorCode::DimensionOverflow: return "DimensionOverflow";
        case ErrorCode::MappingIncomplete: return "MappingIncomplete";
        case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string &message)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

}  // namespace walkport
