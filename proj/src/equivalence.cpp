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

#include "walkport/equivalence.hpp"

#include <algorithm>
#include <cmath>

namespace walkport {

namespace {

std::string family_of(const std::string &position) {
    return position.substr(0, position.find('['));
}

bool same_terms(const std::vector<std::pair<BasisLabel, Amplitude>> &a,
                const std::vector<std::pair<BasisLabel, Amplitude>> &b) {
    if (a.size() != b.size()) {
        return false;
    }
    std::map<BasisLabel, Amplitude> lhs(a.begin(), a.end());
    for (const auto &[label, amp] : b) {
        auto it = lhs.find(label);
        if (it == lhs.end() || std::abs(it->second - amp) > kProjectorTolerance) {
            return false;
        }
    }
    return true;
}

using BranchIndex = std::map<std::pair<std::string, std::string>, const BranchResult *>;

BranchIndex index_branches(const std::vector<BranchResult> &branches) {
    BranchIndex index;
    for (const auto &b : branches) {
        index[{b.position, b.coin}] = &b;
    }
    return index;
}

/// Number of position families for which a Pauli correction exists under
/// the one-projector-per-member reading.
std::size_t computational_families(const ProtocolSpec &spec, std::vector<std::string> *failed) {
    std::size_t ok = 0;
    for (const auto &f : position_families(spec, PositionBasis::Computational)) {
        try {
            generate_family_tables(spec, {f.name}, PositionBasis::Computational, kSynthesisSeed, 2);
            ++ok;
        } catch (const Error &e) {
            if (e.code() != ErrorCode::NoPauliCorrection) {
                throw;
            }
            failed->push_back(f.name);
        }
    }
    return ok;
}

std::string join(const std::vector<std::string> &items) {
    std::string out;
    for (const auto &s : items) {
        out += (out.empty() ? "" : ",") + s;
    }
    return out;
}

}  // namespace

bool EquivalenceReport::passed(double tol) const {
    bool ok = max_probability_delta <= tol && max_state_delta <= tol && table_mismatches.empty();
    for (const auto &s : spot_checks) {
        ok = ok && s.expected == s.reproduced;
    }
    return ok;
}

nlohmann::json report_to_json(const EquivalenceReport &r) {
    nlohmann::json mismatches = nlohmann::json::array();
    for (const auto &m : r.table_mismatches) {
        mismatches.push_back({{"source_position", m.source_position},
                              {"target_position", m.target_position},
                              {"coin", m.coin},
                              {"source_pauli", m.source_pauli},
                              {"target_pauli", m.target_pauli},
                              {"acts_identically", m.acts_identically}});
    }
    nlohmann::json spots = nlohmann::json::array();
    for (const auto &s : r.spot_checks) {
        spots.push_back(
            {{"term", s.description}, {"expected", s.expected}, {"reproduced", s.reproduced}});
    }
    return {{"schema", 1},
            {"claim", r.claim},
            {"payload_seed", r.seed},
            {"payloads", r.payloads},
            {"branches_compared", r.branches_compared},
            {"max_probability_delta", r.max_probability_delta},
            {"max_state_delta", r.max_state_delta},
            {"table_mismatches", std::move(mismatches)},
            {"spot_checks", std::move(spots)},
            {"notes", r.notes},
            {"passed", r.passed()}};
}

BasisMapping two_qubit_mapping(PositionBasis basis) {
    const auto p = position_families(make_protocol(ProtocolId::SingleStep2Q), basis);
    const auto q = position_families(make_protocol(ProtocolId::TwoStep2Q), basis);
    if (p.size() != q.size()) {
        throw Error(ErrorCode::MappingIncomplete, "family counts differ");
    }
    BasisMapping mapping;
    for (std::size_t i = 0; i < p.size(); ++i) {
        const PositionFamily &src = p[i];
        const PositionFamily &dst = q[i];
        if (src.members.size() != dst.members.size() || src.outcomes.size() != dst.outcomes.size()) {
            throw Error(ErrorCode::MappingIncomplete, src.name + " and " + dst.name + " differ in size");
        }
        BasisMapping::FamilyPair pair;
        pair.source = src.name;
        pair.target = dst.name;
        std::map<BasisLabel, BasisLabel> image;
        for (std::size_t m = 0; m < src.members.size(); ++m) {
            pair.members.emplace_back(src.members[m], dst.members[m]);
            image[src.members[m]] = dst.members[m];
        }
        for (const auto &o : src.outcomes) {
            std::vector<std::pair<BasisLabel, Amplitude>> mapped;
            for (const auto &[label, amp] : o.terms) {
                mapped.emplace_back(image.at(label), amp);
            }
            auto it = std::find_if(dst.outcomes.begin(), dst.outcomes.end(),
                                   [&](const ProjectorSpec &t) { return same_terms(mapped, t.terms); });
            if (it == dst.outcomes.end()) {
                throw Error(ErrorCode::MappingIncomplete, "outcome " + o.name + " has no image");
            }
            pair.outcomes[o.name] = it->name;
        }
        mapping.pairs.push_back(std::move(pair));
    }
    return mapping;
}

std::map<std::string, std::string> two_qubit_register_renames() {
    return {{"A3", "A2"}, {"A4", "A3"}, {"A5", "A4"}, {"A6", "A5"},
            {"B3", "B2"}, {"B4", "B3"}, {"B5", "B4"}, {"B6", "B5"}};
}

EquivalenceReport check_two_qubit_equivalence(const std::vector<InputPayload> &payloads,
                                              std::uint64_t seed, const TwoQubitOptions &options) {
    const ProtocolSpec single = make_protocol(ProtocolId::SingleStep2Q);
    const ProtocolSpec two = make_protocol(ProtocolId::TwoStep2Q);
    const BasisMapping mapping = two_qubit_mapping();
    const auto renames = two_qubit_register_renames();

    const CorrectionTable &single_table = reference_table(ProtocolId::SingleStep2Q);
    CorrectionTable two_table = reference_table(ProtocolId::TwoStep2Q);
    if (options.corrupt_family) {
        CorrectionTable corrupted;
        corrupted.protocol = two_table.protocol;
        corrupted.source = "corrupted";
        for (CorrectionEntry row : two_table.rows()) {
            if (family_of(row.position) == *options.corrupt_family) {
                row.pauli.push_back({two.alice_targets.front(), PauliOp::X});
            }
            corrupted.add(std::move(row));
        }
        two_table = std::move(corrupted);
    }

    std::map<std::string, std::string> position_map;
    for (const auto &pair : mapping.pairs) {
        position_map.insert(pair.outcomes.begin(), pair.outcomes.end());
    }

    EquivalenceReport report;
    report.claim = "single-step and two-step two-qubit walks are equivalent";
    report.seed = seed;
    report.payloads = payloads.size();

    std::vector<BranchResult> first_two;
    for (const auto &payload : payloads) {
        const auto s = enumerate_branches(single, payload, single_table);
        const auto t = enumerate_branches(two, payload, two_table);
        const BranchIndex t_index = index_branches(t);
        for (const auto &b : s) {
            auto it = t_index.find({position_map.at(b.position), b.coin});
            if (it == t_index.end()) {
                throw Error(ErrorCode::MappingIncomplete, "no two-step branch for " + b.position);
            }
            const BranchResult &other = *it->second;
            ++report.branches_compared;
            report.max_probability_delta =
                std::max(report.max_probability_delta, std::abs(b.probability - other.probability));
            if (b.vacuous != other.vacuous) {
                report.max_state_delta = std::max(report.max_state_delta, 1.0);
                continue;
            }
            if (b.vacuous) {
                continue;
            }
            const double residual = max_entry_delta_up_to_phase(
                other.residual, rename_registers(b.residual, renames));
            const double corrected = max_entry_delta_up_to_phase(
                other.corrected, rename_registers(b.corrected, renames));
            report.max_state_delta = std::max({report.max_state_delta, residual, corrected});
        }
        if (first_two.empty()) {
            first_two = t;
        }
    }

    const BranchIndex first_index = index_branches(first_two);
    for (const auto &row : single_table.rows()) {
        const std::string target_position = position_map.at(row.position);
        const CorrectionEntry *other = two_table.find(target_position, row.coin);
        const PauliString renamed = rename_pauli(row.pauli, renames);
        if (other != nullptr && pauli_equivalent(renamed, other->pauli)) {
            continue;
        }
        TableMismatch m;
        m.source_position = row.position;
        m.target_position = target_position;
        m.coin = row.coin;
        m.source_pauli = format_pauli(row.pauli);
        m.target_pauli = other ? format_pauli(other->pauli) : "(missing)";
        if (auto it = first_index.find({target_position, row.coin});
            other && it != first_index.end() && !it->second->vacuous) {
            const SparseState &res = it->second->residual;
            m.acts_identically = max_entry_delta_up_to_phase(apply_pauli_string(res, renamed),
                                                             apply_pauli_string(res, other->pauli)) <=
                                 kEquivalenceTolerance;
        }
        report.table_mismatches.push_back(std::move(m));
    }

    // The printed |0000> and |00> tables, row by row under the same renaming.
    const CorrectionTable &t3 = printed_table(ProtocolId::SingleStep2Q);
    const CorrectionTable &t4 = printed_table(ProtocolId::TwoStep2Q);
    std::size_t shared = 0;
    std::size_t agree = 0;
    for (const auto &row : t3.rows()) {
        if (const auto *other = t4.find(position_map.at(row.position), row.coin)) {
            ++shared;
            agree += pauli_equivalent(rename_pauli(row.pauli, renames), other->pauli) ? 1 : 0;
        }
    }
    report.notes.push_back("printed tables: " + std::to_string(agree) + " of " +
                           std::to_string(shared) + " shared rows agree under renaming");

    if (options.check_computational_reading) {
        for (const ProtocolSpec *spec : {&single, &two}) {
            std::vector<std::string> failed;
            const std::size_t ok = computational_families(*spec, &failed);
            report.notes.push_back(
                std::string(protocol_key(spec->id)) + " computational reading: " +
                std::to_string(ok) + " of " + std::to_string(ok + failed.size()) +
                " families admit Pauli corrections" +
                (failed.empty() ? "" : " (no correction for " + join(failed) + ")"));
        }
        report.notes.push_back("superposed reading: all families admit Pauli corrections");
    }
    return report;
}

SparseState reduce_mod4(const SparseState &line_state, const RegisterLayout &cycle_layout) {
    const RegisterLayout &line = line_state.layout();
    if (line.size() != cycle_layout.size()) {
        throw Error(ErrorCode::LayoutMismatch, "layouts differ in register count");
    }
    SparseState::AmpMap amps;
    for (const auto &[label, amp] : line_state.amplitudes()) {
        BasisLabel reduced = label;
        for (std::size_t i = 0; i < label.size(); ++i) {
            if (line[i].name != cycle_layout[i].name) {
                throw Error(ErrorCode::LayoutMismatch, "register " + line[i].name + " vs " +
                                                           cycle_layout[i].name);
            }
            if (cycle_layout[i].kind == RegisterKind::Cycle) {
                const int n = cycle_layout[i].extent;
                reduced[i] = ((label[i] % n) + n) % n;
            }
        }
        amps[reduced] += amp;
    }
    return prune(SparseState(cycle_layout, std::move(amps), line_state.epsilon()));
}

EquivalenceReport check_cycle_line_equivalence(const std::vector<InputPayload> &payloads,
                                               std::uint64_t seed) {
    const ProtocolSpec line = make_protocol(ProtocolId::Line1Q);
    const ProtocolSpec cycle = make_protocol(ProtocolId::Cycle1Q);

    EquivalenceReport report;
    report.claim = "cycle walk equals the line walk with positions taken mod 4";
    report.seed = seed;
    report.payloads = payloads.size();

    for (const auto &payload : payloads) {
        const SparseState line_state = run_walks(line, payload);
        const SparseState cycle_state = run_walks(cycle, payload);
        report.max_state_delta = std::max(
            report.max_state_delta, max_entry_delta(reduce_mod4(line_state, cycle.layout), cycle_state));
        ++report.branches_compared;
    }

    report.notes.push_back("compared whole pre-measurement states, one per payload");

    // Cycle position outcomes against the line outcomes they fold from.
    const std::map<std::string, std::string> fold{
        {"00", "00"}, {"02", "02[+]"}, {"20", "20[+]"}, {"22", "22[++]"}};
    auto compare = [&](const CorrectionTable &cycle_table, const CorrectionTable &line_table) {
        for (const auto &row : cycle_table.rows()) {
            const std::string line_position = fold.count(row.position) ? fold.at(row.position) : "";
            const CorrectionEntry *other = line_table.find(line_position, row.coin);
            if (other != nullptr && pauli_equivalent(row.pauli, other->pauli)) {
                continue;
            }
            report.table_mismatches.push_back({row.position, line_position, row.coin,
                                               format_pauli(row.pauli),
                                               other ? format_pauli(other->pauli) : "(missing)",
                                               false});
        }
    };
    compare(printed_table(ProtocolId::Cycle1Q), printed_table(ProtocolId::Line1Q));
    compare(reference_table(ProtocolId::Cycle1Q), reference_table(ProtocolId::Line1Q));

    const TableComparison printed = compare_tables(cycle, printed_table(ProtocolId::Cycle1Q),
                                                   reference_table(ProtocolId::Cycle1Q), payloads);
    std::size_t verified = 0;
    for (const auto &r : printed.rows) {
        verified += r.min_fidelity >= 1.0 - kFidelityTolerance ? 1 : 0;
    }
    report.notes.push_back("cycle printed table: " + std::to_string(verified) + " of " +
                           std::to_string(printed.rows.size()) + " rows restore the payloads");
    if (verified != printed.rows.size() || !printed.missing.empty()) {
        report.table_mismatches.push_back(
            {"*", "*", "*", "printed cycle table", "fails simulation", false});
    }

    // Term lookups in the first payload's cycle states.
    if (!payloads.empty()) {
        const InputPayload &p = payloads.front();
        const auto &a = p.alice;
        const auto &b = p.bob;
        const SparseState psi1 = run_walks(cycle, p);
        const SparseState line1 = run_walks(line, p);
        auto near = [](Amplitude x, Amplitude y) { return std::abs(x - y) <= 1e-12; };
        report.spot_checks.push_back(
            {"cycle psi1 a1b0 |2,2,1,0,0,1>", true,
             near(psi1.amplitude({2, 2, 1, 0, 0, 1}), 0.5 * a[1] * b[0])});
        report.spot_checks.push_back(
            {"line psi4 a1b0 |-2,2,1,0,0,1> folds onto cycle |2,2,1,0,0,1>", true,
             near(line1.amplitude({-2, 2, 1, 0, 0, 1}), psi1.amplitude({2, 2, 1, 0, 0, 1}))});

        ProjectorSpec origin{"00", "|0,0>", {"A1", "B1"}, {{{0, 0}, 1.0}}};
        const Projection psi2 = project(psi1, origin);
        const double scale = std::sqrt(psi2.probability);
        auto term = [&](const BasisLabel &label) { return psi2.residual.amplitude(label) * scale; };
        report.spot_checks.push_back(
            {"cycle psi2 a1b1 |1,1,1,1> (as printed)", false, near(term({1, 1, 1, 1}), 0.5 * a[1] * b[1])});
        report.spot_checks.push_back(
            {"cycle psi2 a1b1 |1,0,1,0>", true, near(term({1, 0, 1, 0}), 0.5 * a[1] * b[1])});
        report.spot_checks.push_back(
            {"cycle psi2 a0b0 |0,1,0,1>", true, near(term({0, 1, 0, 1}), 0.5 * a[0] * b[0])});
    }
    return report;
}

}  // namespace walkport
