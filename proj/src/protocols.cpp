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

#include "walkport/protocols.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace walkport {

namespace {

using Factor = InitialFactor;

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

Factor fixed(std::vector<std::string> regs, std::vector<std::pair<BasisLabel, Amplitude>> terms) {
    return {std::move(regs), Factor::Source::Fixed, std::move(terms)};
}

Factor zeros(std::vector<std::string> regs) {
    BasisLabel label(regs.size(), 0);
    return fixed(std::move(regs), {{label, 1.0}});
}

Factor plus(std::string reg) {
    return fixed({std::move(reg)}, {{{0}, kInvSqrt2}, {{1}, kInvSqrt2}});
}

ConditionedShift single(std::string position, std::string coin) {
    return {std::move(position), {std::move(coin)}, single_coin_shift_rule()};
}

/// Both lattices of a pair moved by a coin pair, first coin driving the first lattice.
std::vector<ConditionedShift> paired(const std::string &p0, const std::string &p1,
                                     const std::string &c0, const std::string &c1) {
    return {{p0, {c0, c1}, paired_shift_rule(0)}, {p1, {c0, c1}, paired_shift_rule(1)}};
}

ConditionedShift double_step(std::string position, std::string c0, std::string c1) {
    return {std::move(position), {std::move(c0), std::move(c1)}, two_coin_shift_rule()};
}

std::vector<CoinGateOp> hadamards(std::initializer_list<const char *> coins) {
    std::vector<CoinGateOp> out;
    for (const char *c : coins) {
        out.push_back({c, CoinGate::hadamard()});
    }
    return out;
}

ProtocolSpec single_qubit(ProtocolId id, int bound) {
    const bool cycle = id == ProtocolId::Cycle1Q;
    ProtocolSpec spec;
    spec.id = id;
    auto position = [&](const char *name) {
        return cycle ? RegisterSpec::cycle(name, 4) : RegisterSpec::lattice(name, bound);
    };
    spec.layout = RegisterLayout({position("A1"), position("B1"), RegisterSpec::coin("A2"),
                                  RegisterSpec::coin("A3"), RegisterSpec::coin("B2"),
                                  RegisterSpec::coin("B3")});
    spec.initial = {zeros({"A1", "B1"}),
                    {{"A2"}, Factor::Source::Alice, {}},
                    cycle ? plus("A3") : zeros({"A3"}),
                    {{"B2"}, Factor::Source::Bob, {}},
                    cycle ? plus("B3") : zeros({"B3"})};
    // On the cycle the output coins start in |+>, which takes the place of
    // the Hadamards applied before the third and fourth walks on the line.
    spec.steps[0] = {"W1", {}, {single("A1", "A2")}};
    spec.steps[1] = {"W2", {}, {single("B1", "B2")}};
    spec.steps[2] = {"W3", cycle ? std::vector<CoinGateOp>{} : hadamards({"A3"}),
                     {single("B1", "A3")}};
    spec.steps[3] = {"W4", cycle ? std::vector<CoinGateOp>{} : hadamards({"B3"}),
                     {single("A1", "B3")}};
    spec.plan.position_registers = {"A1", "B1"};
    spec.plan.components = {{"A1", 2, 2}, {"B1", 2, 1}};
    spec.plan.coin_groups = {{"A2"}, {"B2"}};
    spec.alice_targets = {"A3"};
    spec.bob_targets = {"B3"};
    return spec;
}

ProtocolSpec single_step_two_qubit(int bound) {
    ProtocolSpec spec;
    spec.id = ProtocolId::SingleStep2Q;
    std::vector<RegisterSpec> regs;
    for (const char *name : {"A1", "A2", "B1", "B2"}) {
        regs.push_back(RegisterSpec::lattice(name, bound));
    }
    for (const char *name : {"A3", "A4", "A5", "A6", "B3", "B4", "B5", "B6"}) {
        regs.push_back(RegisterSpec::coin(name));
    }
    spec.layout = RegisterLayout(std::move(regs));
    spec.initial = {zeros({"A1", "A2", "B1", "B2"}),
                    {{"A3", "A4"}, Factor::Source::Alice, {}},
                    zeros({"A5", "A6"}),
                    {{"B3", "B4"}, Factor::Source::Bob, {}},
                    zeros({"B5", "B6"})};
    spec.steps[0] = {"W1", {}, paired("A1", "A2", "A3", "A4")};
    spec.steps[1] = {"W2", {}, paired("B1", "B2", "B3", "B4")};
    spec.steps[2] = {"W3", hadamards({"A5", "A6"}), paired("B1", "B2", "A5", "A6")};
    spec.steps[3] = {"W4", hadamards({"B5", "B6"}), paired("A1", "A2", "B5", "B6")};
    spec.plan.position_registers = {"A1", "A2", "B1", "B2"};
    spec.plan.components = {{"A1", 2, 2}, {"A2", 2, 1}, {"B1", 2, 8}, {"B2", 2, 4}};
    spec.plan.family_prefix = "P";
    spec.plan.coin_groups = {{"A3", "A4"}, {"B3", "B4"}};
    spec.alice_targets = {"A5", "A6"};
    spec.bob_targets = {"B5", "B6"};
    return spec;
}

ProtocolSpec two_step_two_qubit(int bound) {
    ProtocolSpec spec;
    spec.id = ProtocolId::TwoStep2Q;
    std::vector<RegisterSpec> regs{RegisterSpec::lattice("A1", bound),
                                   RegisterSpec::lattice("B1", bound)};
    for (const char *name : {"A2", "A3", "A4", "A5", "B2", "B3", "B4", "B5"}) {
        regs.push_back(RegisterSpec::coin(name));
    }
    spec.layout = RegisterLayout(std::move(regs));
    spec.initial = {zeros({"A1", "B1"}),
                    {{"A2", "A3"}, Factor::Source::Alice, {}},
                    zeros({"A4", "A5"}),
                    {{"B2", "B3"}, Factor::Source::Bob, {}},
                    zeros({"B4", "B5"})};
    spec.steps[0] = {"W1", {}, {double_step("A1", "A2", "A3")}};
    spec.steps[1] = {"W2", {}, {double_step("B1", "B2", "B3")}};
    spec.steps[2] = {"W3", hadamards({"A4", "A5"}), {double_step("B1", "A4", "A5")}};
    spec.steps[3] = {"W4", hadamards({"B4", "B5"}), {double_step("A1", "B4", "B5")}};
    // Every reachable position is 3x + y with x, y in {-1, 0, 1}; the two
    // summands play the role of the two lattices of the single-step walk.
    spec.plan.position_registers = {"A1", "B1"};
    spec.plan.components = {{"A1", 3, 2}, {"A1", 1, 1}, {"B1", 3, 8}, {"B1", 1, 4}};
    spec.plan.family_prefix = "Q";
    spec.plan.coin_groups = {{"A2", "A3"}, {"B2", "B3"}};
    spec.alice_targets = {"A4", "A5"};
    spec.bob_targets = {"B4", "B5"};
    return spec;
}

std::vector<std::pair<BasisLabel, Amplitude>> payload_terms(const std::vector<Amplitude> &amps,
                                                            std::size_t qubits) {
    std::vector<std::pair<BasisLabel, Amplitude>> terms;
    for (std::size_t i = 0; i < amps.size(); ++i) {
        BasisLabel label(qubits);
        for (std::size_t k = 0; k < qubits; ++k) {
            label[k] = static_cast<int>((i >> (qubits - 1 - k)) & 1U);
        }
        terms.emplace_back(std::move(label), amps[i]);
    }
    return terms;
}

}  // namespace

std::string_view protocol_key(ProtocolId id) {
    switch (id) {
        case ProtocolId::Line1Q: return "line1q";
        case ProtocolId::Cycle1Q: return "cycle1q";
        case ProtocolId::SingleStep2Q: return "single2q";
        case ProtocolId::TwoStep2Q: return "twostep2q";
    }
    return "?";
}

std::optional<ProtocolId> parse_protocol(std::string_view key) {
    for (ProtocolId id : kAllProtocols) {
        if (protocol_key(id) == key) {
            return id;
        }
    }
    return std::nullopt;
}

std::size_t payload_width(ProtocolId id) {
    return id == ProtocolId::Line1Q || id == ProtocolId::Cycle1Q ? 2 : 4;
}

std::vector<InputPayload> random_payloads(std::size_t width, std::size_t count,
                                          std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal;
    auto draw = [&] {
        std::vector<Amplitude> v(width);
        double norm = 0.0;
        for (auto &a : v) {
            a = {normal(rng), normal(rng)};
            norm += std::norm(a);
        }
        for (auto &a : v) {
            a /= std::sqrt(norm);
        }
        return v;
    };
    std::vector<InputPayload> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        InputPayload p;
        p.alice = draw();
        p.bob = draw();
        out.push_back(std::move(p));
    }
    return out;
}

std::vector<std::string> MeasurementPlan::measured_coins() const {
    std::vector<std::string> out;
    for (const auto &g : coin_groups) {
        out.insert(out.end(), g.begin(), g.end());
    }
    return out;
}

std::vector<std::string> ProtocolSpec::targets() const {
    std::vector<std::string> out = alice_targets;
    out.insert(out.end(), bob_targets.begin(), bob_targets.end());
    return out;
}

RegisterLayout ProtocolSpec::target_layout() const {
    std::vector<RegisterSpec> regs;
    for (const auto &name : targets()) {
        regs.push_back(layout[layout.index_of(name)]);
    }
    return RegisterLayout(std::move(regs));
}

ProtocolSpec make_protocol(ProtocolId id, int bound) {
    if (bound < 1) {
        throw Error(ErrorCode::OutOfBounds, "lattice bound must be positive");
    }
    switch (id) {
        case ProtocolId::Line1Q:
        case ProtocolId::Cycle1Q: return single_qubit(id, bound);
        case ProtocolId::SingleStep2Q: return single_step_two_qubit(bound);
        case ProtocolId::TwoStep2Q: return two_step_two_qubit(bound);
    }
    throw Error(ErrorCode::ShapeMismatch, "unknown protocol");
}

void check_payload(const ProtocolSpec &spec, const InputPayload &payload, double tol) {
    const std::size_t width = payload_width(spec.id);
    for (const auto *v : {&payload.alice, &payload.bob}) {
        const char *who = v == &payload.alice ? "alice" : "bob";
        if (v->size() != width) {
            throw Error(ErrorCode::ShapeMismatch, std::string(who) + " payload needs " +
                                                      std::to_string(width) + " amplitudes, got " +
                                                      std::to_string(v->size()));
        }
        double norm = 0.0;
        for (const auto &a : *v) {
            if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
                throw Error(ErrorCode::NonFiniteAmplitude, std::string(who) + " payload");
            }
            norm += std::norm(a);
        }
        if (std::abs(norm - 1.0) > tol) {
            throw Error(ErrorCode::NotNormalized,
                        std::string(who) + " payload has squared norm " + std::to_string(norm));
        }
    }
}

SparseState build_initial(const ProtocolSpec &spec, const InputPayload &payload) {
    check_payload(spec, payload);
    const RegisterLayout &layout = spec.layout;
    std::vector<std::pair<BasisLabel, Amplitude>> acc{{BasisLabel(layout.size(), 0), 1.0}};
    for (const auto &f : spec.initial) {
        const std::vector<std::size_t> idx = layout.indices_of(f.registers);
        std::vector<std::pair<BasisLabel, Amplitude>> terms;
        switch (f.source) {
            case Factor::Source::Fixed: terms = f.fixed; break;
            case Factor::Source::Alice: terms = payload_terms(payload.alice, idx.size()); break;
            case Factor::Source::Bob: terms = payload_terms(payload.bob, idx.size()); break;
        }
        std::vector<std::pair<BasisLabel, Amplitude>> next;
        for (const auto &[label, amp] : acc) {
            for (const auto &[part, factor] : terms) {
                BasisLabel merged = label;
                for (std::size_t k = 0; k < idx.size(); ++k) {
                    merged[idx[k]] = part[k];
                }
                next.emplace_back(std::move(merged), amp * factor);
            }
        }
        acc = std::move(next);
    }
    return superpose(layout, acc);
}

std::vector<SparseState> walk_trajectory(const ProtocolSpec &spec, const InputPayload &payload) {
    std::vector<SparseState> out{build_initial(spec, payload)};
    for (const auto &step : spec.steps) {
        out.push_back(prune(apply_walk_step(out.back(), step)));
    }
    return out;
}

SparseState run_walks(const ProtocolSpec &spec, const InputPayload &payload) {
    return walk_trajectory(spec, payload).back();
}

std::vector<PositionFamily> position_families(const ProtocolSpec &spec, PositionBasis basis) {
    return generate_position_families(spec.layout, spec.plan.position_registers,
                                      spec.plan.components, spec.plan.family_prefix, basis);
}

std::vector<ProjectorSpec> coin_outcomes(const ProtocolSpec &spec) {
    return generate_coin_outcomes(spec.plan.coin_groups);
}

SparseState expected_output(const ProtocolSpec &spec, const InputPayload &payload) {
    check_payload(spec, payload);
    const std::size_t na = spec.alice_targets.size();
    const std::size_t nb = spec.bob_targets.size();
    std::vector<std::pair<BasisLabel, Amplitude>> terms;
    for (const auto &[bl, b] : payload_terms(payload.bob, na)) {
        for (const auto &[al, a] : payload_terms(payload.alice, nb)) {
            BasisLabel label = bl;
            label.insert(label.end(), al.begin(), al.end());
            terms.emplace_back(std::move(label), b * a);
        }
    }
    return superpose(spec.target_layout(), terms);
}

}  // namespace walkport
