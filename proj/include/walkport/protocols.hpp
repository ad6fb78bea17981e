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
 * The four bidirectional teleportation protocols as data: register layout,
 * initial product state, four walk steps, measurement plan and target coins.
 */

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "walkport/hilbert.hpp"
#include "walkport/measure.hpp"
#include "walkport/walkops.hpp"

namespace walkport {

enum class ProtocolId { Line1Q, Cycle1Q, SingleStep2Q, TwoStep2Q };

inline constexpr std::array<ProtocolId, 4> kAllProtocols = {
    ProtocolId::Line1Q, ProtocolId::Cycle1Q, ProtocolId::SingleStep2Q, ProtocolId::TwoStep2Q};

/// "line1q", "cycle1q", "single2q", "twostep2q".
std::string_view protocol_key(ProtocolId id);
std::optional<ProtocolId> parse_protocol(std::string_view key);
/// Number of amplitudes in each party's payload: 2 or 4.
std::size_t payload_width(ProtocolId id);

/// Alice's and Bob's unknown states, first qubit most significant.
struct InputPayload {
    std::vector<Amplitude> alice;
    std::vector<Amplitude> bob;
};

/// Normalized complex-Gaussian vectors, deterministic in `seed`.
std::vector<InputPayload> random_payloads(std::size_t width, std::size_t count,
                                          std::uint64_t seed);

/// One tensor factor of the initial state.
struct InitialFactor {
    enum class Source { Fixed, Alice, Bob };

    std::vector<std::string> registers;
    Source source = Source::Fixed;
    /// Used when source is Fixed.
    std::vector<std::pair<BasisLabel, Amplitude>> fixed;
};

struct MeasurementPlan {
    std::vector<std::string> position_registers;
    std::vector<PositionComponent> components;
    /// Empty for the single-qubit protocols, "P" or "Q" otherwise.
    std::string family_prefix;
    /// Measured coins, one group per party.
    std::vector<std::vector<std::string>> coin_groups;

    std::vector<std::string> measured_coins() const;
};

struct ProtocolSpec {
    ProtocolId id = ProtocolId::Line1Q;
    RegisterLayout layout;
    std::vector<InitialFactor> initial;
    std::array<WalkStep, 4> steps;
    MeasurementPlan plan;
    /// Alice's output coins; after correction they hold Bob's state.
    std::vector<std::string> alice_targets;
    /// Bob's output coins; after correction they hold Alice's state.
    std::vector<std::string> bob_targets;

    std::vector<std::string> targets() const;
    /// Layout of the registers left after position and coin measurement.
    RegisterLayout target_layout() const;
};

/// `bound` applies to lattice registers only.
ProtocolSpec make_protocol(ProtocolId id, int bound = kDefaultLatticeBound);

/// Throws ShapeMismatch or NotNormalized.
void check_payload(const ProtocolSpec &spec, const InputPayload &payload,
                   double tol = kNormTolerance);

SparseState build_initial(const ProtocolSpec &spec, const InputPayload &payload);

/// psi_0 through psi_4.
std::vector<SparseState> walk_trajectory(const ProtocolSpec &spec, const InputPayload &payload);

/// W4 W3 W2 W1 applied to the initial state.
SparseState run_walks(const ProtocolSpec &spec, const InputPayload &payload);

std::vector<PositionFamily> position_families(const ProtocolSpec &spec,
                                              PositionBasis basis = PositionBasis::Superposed);
std::vector<ProjectorSpec> coin_outcomes(const ProtocolSpec &spec);

/// Bob's state on Alice's targets followed by Alice's state on Bob's.
SparseState expected_output(const ProtocolSpec &spec, const InputPayload &payload);

}  // namespace walkport
