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

/**
 * @file
 * Cross-protocol checks: the single-step and two-step two-qubit walks give
 * the same branches under a position-basis mapping, and the cycle walk is
 * the line walk with positions taken mod 4.
 */

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "walkport/branches.hpp"

namespace walkport {

inline constexpr double kEquivalenceTolerance = 1e-10;

/// Pairs position families of two protocols and their outcomes.
struct BasisMapping {
    struct FamilyPair {
        std::string source;
        std::string target;
        /// Source member label to target member label.
        std::vector<std::pair<BasisLabel, BasisLabel>> members;
        /// Source outcome name to target outcome name.
        std::map<std::string, std::string> outcomes;
    };
    std::vector<FamilyPair> pairs;
};

/// Pairs P_i with Q_i, members by rank in descending label order, and each
/// P outcome with the Q outcome whose terms it maps onto. Throws
/// MappingIncomplete when sizes differ or an outcome has no image.
BasisMapping two_qubit_mapping(PositionBasis basis = PositionBasis::Superposed);

/// Single-step target and measured coins to their two-step counterparts.
std::map<std::string, std::string> two_qubit_register_renames();

struct TableMismatch {
    std::string source_position;
    std::string target_position;
    std::string coin;
    std::string source_pauli;
    std::string target_pauli;
    /// Whether the two strings still produce the same state on the
    /// target protocol's residual for the first payload.
    bool acts_identically = false;
};

/// A single term looked up in a simulated state. Misprinted terms are
/// expected not to reproduce.
struct SpotCheck {
    std::string description;
    bool expected = true;
    bool reproduced = false;
};

struct EquivalenceReport {
    std::string claim;
    std::uint64_t seed = 0;
    std::size_t payloads = 0;
    std::size_t branches_compared = 0;
    double max_probability_delta = 0.0;
    double max_state_delta = 0.0;
    std::vector<TableMismatch> table_mismatches;
    std::vector<SpotCheck> spot_checks;
    std::vector<std::string> notes;

    bool passed(double tol = kEquivalenceTolerance) const;
};

nlohmann::json report_to_json(const EquivalenceReport &r);

struct TwoQubitOptions {
    /// Flip one Pauli factor in every two-step reference row of this family.
    std::optional<std::string> corrupt_family;
    /// Also test the one-projector-per-member reading of the families.
    bool check_computational_reading = true;
};

EquivalenceReport check_two_qubit_equivalence(const std::vector<InputPayload> &payloads,
                                              std::uint64_t seed,
                                              const TwoQubitOptions &options = {});

/// Reduces lattice positions of a line state mod 4 onto the cycle layout.
SparseState reduce_mod4(const SparseState &line_state, const RegisterLayout &cycle_layout);

EquivalenceReport check_cycle_line_equivalence(const std::vector<InputPayload> &payloads,
                                               std::uint64_t seed);

}  // namespace walkport
