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

#include "walkport/walkops.hpp"

namespace walkport {

int shift_offset(ShiftKind kind) {
    switch (kind) {
        case ShiftKind::Right1: return 1;
        case ShiftKind::Left1: return -1;
        case ShiftKind::Right2: return 2;
        case ShiftKind::Left2: return -2;
    }
    return 0;
}

ShiftKind inverse(ShiftKind kind) {
    switch (kind) {
        case ShiftKind::Right1: return ShiftKind::Left1;
        case ShiftKind::Left1: return ShiftKind::Right1;
        case ShiftKind::Right2: return ShiftKind::Left2;
        case ShiftKind::Left2: return ShiftKind::Right2;
    }
    return kind;
}

std::string_view shift_name(ShiftKind kind) {
    switch (kind) {
        case ShiftKind::Right1: return "Right1";
        case ShiftKind::Left1: return "Left1";
        case ShiftKind::Right2: return "Right2";
        case ShiftKind::Left2: return "Left2";
    }
    return "?";
}

ConditionedShift ConditionedShift::inverted() const {
    ConditionedShift out = *this;
    for (auto &[outcome, kind] : out.rule) {
        kind = inverse(kind);
    }
    return out;
}

ShiftRule single_coin_shift_rule() {
    return {{{0}, ShiftKind::Right1}, {{1}, ShiftKind::Left1}};
}

ShiftRule two_coin_shift_rule() {
    return {
        {{0, 0}, ShiftKind::Right2},
        {{0, 1}, ShiftKind::Right1},
        {{1, 0}, ShiftKind::Left1},
        {{1, 1}, ShiftKind::Left2},
    };
}

ShiftRule paired_shift_rule(int slot) {
    ShiftRule rule;
    for (int c0 = 0; c0 < 2; ++c0) {
        for (int c1 = 0; c1 < 2; ++c1) {
            const int ctl = slot == 0 ? c0 : c1;
            rule[{c0, c1}] = ctl == 0 ? ShiftKind::Right1 : ShiftKind::Left1;
        }
    }
    return rule;
}

void check_rule_total(const ConditionedShift &cs) {
    const std::size_t expected = std::size_t{1} << cs.controls.size();
    bool total = cs.rule.size() == expected;
    for (const auto &[outcome, kind] : cs.rule) {
        total = total && outcome.size() == cs.controls.size();
        for (int v : outcome) {
            total = total && (v == 0 || v == 1);
        }
    }
    if (!total) {
        throw Error(ErrorCode::ShapeMismatch,
                    "shift rule on " + cs.position + " is not total over its controls");
    }
}

SparseState apply_conditioned_shift(const SparseState &s, const ConditionedShift &cs) {
    check_rule_total(cs);
    const RegisterLayout &layout = s.layout();
    const std::size_t pos = layout.index_of(cs.position);
    const RegisterSpec &reg = layout[pos];
    if (reg.kind == RegisterKind::Coin) {
        throw Error(ErrorCode::WrongRegisterKind, cs.position + " is not a position register");
    }
    std::vector<std::size_t> ctl = layout.indices_of(cs.controls);
    for (std::size_t c : ctl) {
        if (layout[c].kind != RegisterKind::Coin) {
            throw Error(ErrorCode::WrongRegisterKind, layout[c].name + " is not a coin");
        }
    }

    std::vector<int> outcome(ctl.size());
    SparseState::AmpMap out;
    for (const auto &[label, amp] : s.amplitudes()) {
        for (std::size_t k = 0; k < ctl.size(); ++k) {
            outcome[k] = label[ctl[k]];
        }
        int next = label[pos] + shift_offset(cs.rule.at(outcome));
        if (reg.kind == RegisterKind::Cycle) {
            next = ((next % reg.extent) + reg.extent) % reg.extent;
        } else if (!reg.admits(next)) {
            throw Error(ErrorCode::OutOfBounds,
                        "shift moves " + cs.position + " to " + std::to_string(next) +
                            " outside [-" + std::to_string(reg.extent) + ", " +
                            std::to_string(reg.extent) + "]");
        }
        BasisLabel moved = label;
        moved[pos] = next;
        // The map is a bijection on labels, so no two inputs collide.
        out.emplace(std::move(moved), amp);
    }
    return SparseState(layout, std::move(out), s.epsilon());
}

SparseState apply_walk_step(const SparseState &s, const WalkStep &step) {
    SparseState current = s;
    for (const auto &g : step.pre_gates) {
        current = apply_coin_gate(current, g.coin, g.gate);
    }
    for (const auto &cs : step.shifts) {
        current = apply_conditioned_shift(current, cs);
    }
    return current;
}

}  // namespace walkport
