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

#include <map>
#include <string>
#include <vector>

#include "walkport/hilbert.hpp"

namespace walkport {

enum class ShiftKind { Right1, Left1, Right2, Left2 };

int shift_offset(ShiftKind kind);
ShiftKind inverse(ShiftKind kind);
std::string_view shift_name(ShiftKind kind);

/// Control-coin outcome tuple (in the order of ConditionedShift::controls)
/// to the move applied to the position register.
using ShiftRule = std::map<std::vector<int>, ShiftKind>;

/// A position shift selected by the joint value of one or more coins.
/// Lattice registers raise OutOfBounds on exit; cycles wrap.
struct ConditionedShift {
    std::string position;
    std::vector<std::string> controls;
    ShiftRule rule;

    /// Twin whose rule applies the inverse move for every outcome.
    ConditionedShift inverted() const;
};

struct CoinGateOp {
    std::string coin;
    CoinGate gate;
};

/// One W_k: pre-gates in listed order, then every shift. Shifts within a step
/// act on distinct position registers and never on their own controls, so
/// their relative order does not matter.
struct WalkStep {
    std::string name;
    std::vector<CoinGateOp> pre_gates;
    std::vector<ConditionedShift> shifts;
};

/// {0 -> Right1, 1 -> Left1}: S on coin 0, S^dagger on coin 1.
ShiftRule single_coin_shift_rule();

/// {00 -> Right2, 01 -> Right1, 10 -> Left1, 11 -> Left2}. The 01/10
/// assignment follows the operator definitions of the two-coin walk, whose
/// expanded states agree with it; the accompanying figure caption has the
/// two single-step directions the other way round.
ShiftRule two_coin_shift_rule();

/// Rule for one lattice of a pair shifted jointly by a coin pair: the
/// lattice at `slot` moves right when coin `slot` reads 0, left otherwise.
ShiftRule paired_shift_rule(int slot);

/// Throws ShapeMismatch if the rule is not total over all control outcomes.
void check_rule_total(const ConditionedShift &cs);

SparseState apply_conditioned_shift(const SparseState &s, const ConditionedShift &cs);
SparseState apply_walk_step(const SparseState &s, const WalkStep &step);

}  // namespace walkport
