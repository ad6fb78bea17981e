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


#pragma once

#include <random>
#include <span>
#include <string_view>
#include <vector>

#include "walkport/protocols.hpp"

namespace walkport::testing {

/// Reads a ket written digit by digit, a '-' binding to the next digit:
/// "1-10010" is {1, -1, 0, 0, 1, 0}.
BasisLabel parse_ket(std::string_view text);

/// One term `coefficient(a_i b_j) |ket>` of a symbolic state.
struct KetTerm {
    int a;
    int b;
    const char *ket;
};

/// prefactor * sum of a_i b_j |ket> over `terms`, evaluated at `payload`.
/// Repeated kets add.
SparseState symbolic_state(const RegisterLayout &layout, std::span<const KetTerm> terms,
                           Amplitude prefactor, const InputPayload &payload);

/// Fixed payload whose products a_i b_j are pairwise distinct.
InputPayload generic_payload(std::size_t width);

/// Basis payload |i> for Alice and |j> for Bob.
InputPayload basis_payload(std::size_t width, std::size_t i, std::size_t j);

std::vector<Amplitude> random_amplitudes(std::size_t n, std::mt19937_64 &rng);

}  // namespace walkport::testing
