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
 * Projective measurement primitives: projectors onto (possibly superposed)
 * position outcomes and coin outcomes, Pauli correction strings and
 * correction tables.
 */

#pragma once

#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "walkport/hilbert.hpp"

namespace walkport {

inline constexpr double kProjectorTolerance = 1e-12;
inline constexpr double kVacuousProbability = 1e-14;

/// One measurement outcome: a normalized vector over the joint basis of
/// `targets`, listed as (partial label, amplitude) terms.
struct ProjectorSpec {
    std::string name;
    std::string display;
    std::vector<std::string> targets;
    std::vector<std::pair<BasisLabel, Amplitude>> terms;
};

/// Throws MalformedProjector when the norm is off by more than `tol` or a
/// label is repeated.
void check_projector(const ProjectorSpec &p, double tol = kProjectorTolerance);
/// Also checks pairwise orthogonality.
void check_projector_family(std::span<const ProjectorSpec> family,
                            double tol = kProjectorTolerance);

struct Projection {
    /// Squared norm of the projected component.
    double probability = 0.0;
    /// State of the unmeasured registers, renormalized. Empty when vacuous.
    SparseState residual;
    bool vacuous = false;
};

Projection project(const SparseState &s, const ProjectorSpec &p);

/// A summand of a position register's value. Inside a family each active
/// component contributes +magnitude or -magnitude; inactive ones contribute 0.
/// `bit` is the component's weight in the family index.
struct PositionComponent {
    std::string reg;
    int magnitude = 0;
    int bit = 0;
};

enum class PositionBasis {
    /// Hadamard-type sign combinations over each family's members.
    Superposed,
    /// One projector per family member.
    Computational,
};

/// The set of position labels reached by one choice of active components,
/// together with the orthonormal outcomes spanning it.
struct PositionFamily {
    std::string name;
    int index = 0;
    std::string display;
    std::vector<std::string> registers;
    /// Sorted in descending label order.
    std::vector<BasisLabel> members;
    std::vector<ProjectorSpec> outcomes;
};

/// Enumerates one family per subset of components. With an empty `prefix`
/// families are named after their all-positive member ("02"); otherwise
/// "<prefix><index>" ("P3"). Outcome names append the sign pattern, one
/// character per sign-bearing component: "02[-]", "P3[+-]".
std::vector<PositionFamily> generate_position_families(
    const RegisterLayout &layout, const std::vector<std::string> &position_registers,
    const std::vector<PositionComponent> &components, const std::string &prefix,
    PositionBasis basis = PositionBasis::Superposed);

/// X-basis (|+>/|->) outcomes over the measured coins. Groups are printed
/// back to back, comma-separated when any group holds more than one coin:
/// "+-" for {A2},{B2}; "++,+-" for {A3,A4},{B3,B4}.
std::vector<ProjectorSpec> generate_coin_outcomes(
    const std::vector<std::vector<std::string>> &groups);

enum class PauliOp { I, X, Z, ZX };

std::string_view pauli_op_name(PauliOp op);
PauliOp parse_pauli_op(std::string_view text);
CoinGate pauli_gate(PauliOp op);

struct PauliFactor {
    std::string reg;
    PauliOp op = PauliOp::I;

    bool operator==(const PauliFactor &) const = default;
};

/// Factors act right to left, as in a printed operator product.
using PauliString = std::vector<PauliFactor>;

SparseState apply_pauli_string(const SparseState &s, const PauliString &pauli);
std::string format_pauli(const PauliString &pauli);

/// Per-register (x, z) flip parity. Two strings implement the same operator
/// up to a global phase exactly when their signatures agree.
std::map<std::string, std::pair<bool, bool>> pauli_signature(const PauliString &pauli);
bool pauli_equivalent(const PauliString &a, const PauliString &b);

/// Canonical form: one factor per register with a non-identity signature,
/// registers in the given order.
PauliString canonical_pauli(const PauliString &pauli, const std::vector<std::string> &order);

PauliString rename_pauli(const PauliString &pauli,
                         const std::map<std::string, std::string> &renames);

struct CorrectionEntry {
    std::string position;
    std::string coin;
    PauliString pauli;
};

class CorrectionTable {
  public:
    std::string protocol;
    std::string source;

    /// Replaces an existing row for the same outcome pair.
    void add(CorrectionEntry entry);
    const CorrectionEntry *find(const std::string &position, const std::string &coin) const;
    const std::vector<CorrectionEntry> &rows() const { return rows_; }
    std::size_t size() const { return rows_.size(); }

  private:
    std::vector<CorrectionEntry> rows_;
    std::map<std::pair<std::string, std::string>, std::size_t> index_;
};

nlohmann::json table_to_json(const CorrectionTable &table);
CorrectionTable table_from_json(const nlohmann::json &j);

/// |<expected|actual>|^2 for normalized states on the same layout.
double fidelity(const SparseState &expected, const SparseState &actual);

/// Nearest k/2^n (n <= 16) within `tol`, e.g. "1/16"; empty when none.
std::string dyadic_string(double value, double tol = 1e-9);

}  // namespace walkport
