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
 * Branch enumeration over every (position outcome, coin outcome) pair,
 * correction synthesis, and checks of printed correction tables.
 */

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "walkport/measure.hpp"
#include "walkport/protocols.hpp"

namespace walkport {

inline constexpr double kFidelityTolerance = 1e-10;
inline constexpr std::uint64_t kSynthesisSeed = 0x5eed'7ab1e;

/// Position and coin measurement of one pre-measurement state, before any
/// correction.
struct BranchOutcome {
    std::string family;
    std::string position;
    std::string coin;
    /// Joint probability of both outcomes.
    double probability = 0.0;
    bool vacuous = false;
    /// State of the target coins, renormalized. Empty when vacuous.
    SparseState residual;
};

struct BranchResult {
    std::string family;
    std::string position;
    std::string coin;
    double probability = 0.0;
    bool vacuous = false;
    SparseState residual;
    PauliString correction;
    SparseState corrected;
    /// Against expected_output; 0 for vacuous branches.
    double fidelity = 0.0;
};

/// Measures `pre` (normally run_walks output) in every outcome pair, in
/// family order then coin order. Parallel over position outcomes.
std::vector<BranchOutcome> measure_branches(const ProtocolSpec &spec, const SparseState &pre,
                                            PositionBasis basis = PositionBasis::Superposed);
/// Single-threaded reference for measure_branches.
std::vector<BranchOutcome> measure_branches_serial(const ProtocolSpec &spec,
                                                   const SparseState &pre,
                                                   PositionBasis basis = PositionBasis::Superposed);

/// Runs the walks, measures every branch and applies `table`. Throws
/// MissingCorrection when an outcome pair has no row.
std::vector<BranchResult> enumerate_branches(const ProtocolSpec &spec,
                                             const InputPayload &payload,
                                             const CorrectionTable &table,
                                             PositionBasis basis = PositionBasis::Superposed);
std::vector<BranchResult> enumerate_branches_serial(
    const ProtocolSpec &spec, const InputPayload &payload, const CorrectionTable &table,
    PositionBasis basis = PositionBasis::Superposed);

/// Fidelity of the branch's corrected state with the expected swap of the
/// two payloads.
double verify_branch(const ProtocolSpec &spec, const BranchResult &branch,
                     const InputPayload &payload);

/// For every outcome pair, the first Pauli string (I, X, Z, ZX per target
/// coin, first coin most significant) that restores the payload swap on one
/// random payload and on `confirmations` more. Families restrict the output
/// to the named position families; empty means all. Throws NoPauliCorrection.
CorrectionTable generate_family_tables(const ProtocolSpec &spec,
                                       const std::vector<std::string> &families = {},
                                       PositionBasis basis = PositionBasis::Superposed,
                                       std::uint64_t seed = kSynthesisSeed,
                                       std::size_t confirmations = 20);

/// Synthesized table over every superposed-basis outcome of the protocol,
/// computed once per process.
const CorrectionTable &reference_table(ProtocolId id);

/// The correction table printed alongside each protocol, transcribed row by
/// row, including its mistakes and omissions.
const CorrectionTable &printed_table(ProtocolId id);
/// Raw JSON of the printed table, compiled in from data/tables.
std::string_view printed_table_json(ProtocolId id);

struct RowCheck {
    CorrectionEntry row;
    /// Absent when the reference has no such outcome pair.
    std::optional<PauliString> reference;
    bool agrees = false;
    /// Smallest fidelity the row's own Pauli string achieves over the payloads.
    double min_fidelity = 0.0;
};

struct TableComparison {
    std::vector<RowCheck> rows;
    /// Reference rows inside the printed table's position outcomes that the
    /// printed table omits.
    std::vector<CorrectionEntry> missing;

    std::size_t disagreements() const;
};

/// Checks each row of `table` against `reference` and by direct simulation.
TableComparison compare_tables(const ProtocolSpec &spec, const CorrectionTable &table,
                               const CorrectionTable &reference,
                               const std::vector<InputPayload> &payloads);

}  // namespace walkport
