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

#include "walkport/branches.hpp"

#include <algorithm>
#include <bit>
#include <exception>
#include <map>
#include <mutex>
#include <set>

namespace walkport {

namespace {

struct PositionOutcomeRef {
    const PositionFamily *family;
    const ProjectorSpec *outcome;
};

std::vector<PositionOutcomeRef> flatten(const std::vector<PositionFamily> &families) {
    std::vector<PositionOutcomeRef> out;
    for (const auto &f : families) {
        for (const auto &o : f.outcomes) {
            out.push_back({&f, &o});
        }
    }
    return out;
}

void measure_position(const RegisterLayout &targets, const SparseState &pre,
                      const PositionOutcomeRef &pos, const std::vector<ProjectorSpec> &coins,
                      BranchOutcome *out) {
    const Projection pp = project(pre, *pos.outcome);
    for (std::size_t c = 0; c < coins.size(); ++c) {
        BranchOutcome &b = out[c];
        b.family = pos.family->name;
        b.position = pos.outcome->name;
        b.coin = coins[c].name;
        if (pp.vacuous) {
            b.vacuous = true;
            b.residual = SparseState(targets, {});
            continue;
        }
        Projection pc = project(pp.residual, coins[c]);
        b.probability = pp.probability * pc.probability;
        b.vacuous = pc.vacuous || b.probability < kVacuousProbability;
        b.residual = b.vacuous ? SparseState(targets, {}) : std::move(pc.residual);
    }
}

std::vector<BranchOutcome> measure_impl(const ProtocolSpec &spec, const SparseState &pre,
                                        PositionBasis basis, bool parallel) {
    const auto families = position_families(spec, basis);
    const auto positions = flatten(families);
    const auto coins = coin_outcomes(spec);
    const RegisterLayout targets = spec.target_layout();
    std::vector<BranchOutcome> out(positions.size() * coins.size());

    std::exception_ptr failure;
    std::mutex failure_mutex;
    const auto n = static_cast<std::ptrdiff_t>(positions.size());
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        try {
            measure_position(targets, pre, positions[i], coins, &out[i * coins.size()]);
        } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) {
                failure = std::current_exception();
            }
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
    return out;
}

void correct(const CorrectionTable &table, const SparseState &expected, const BranchOutcome &o,
             BranchResult &r) {
    const CorrectionEntry *row = table.find(o.position, o.coin);
    if (row == nullptr) {
        throw Error(ErrorCode::MissingCorrection,
                    "no correction for position " + o.position + ", coin " + o.coin);
    }
    r.family = o.family;
    r.position = o.position;
    r.coin = o.coin;
    r.probability = o.probability;
    r.vacuous = o.vacuous;
    r.residual = o.residual;
    r.correction = row->pauli;
    if (o.vacuous) {
        r.corrected = o.residual;
        r.fidelity = 0.0;
        return;
    }
    r.corrected = apply_pauli_string(o.residual, row->pauli);
    r.fidelity = fidelity(expected, r.corrected);
}

std::vector<BranchResult> enumerate_impl(const ProtocolSpec &spec, const InputPayload &payload,
                                         const CorrectionTable &table, PositionBasis basis,
                                         bool parallel) {
    const SparseState pre = run_walks(spec, payload);
    const auto outcomes = measure_impl(spec, pre, basis, parallel);
    const SparseState expected = expected_output(spec, payload);
    std::vector<BranchResult> out(outcomes.size());

    std::exception_ptr failure;
    std::mutex failure_mutex;
    const auto n = static_cast<std::ptrdiff_t>(outcomes.size());
#pragma omp parallel for schedule(static) if (parallel)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        try {
            correct(table, expected, outcomes[i], out[i]);
        } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) {
                failure = std::current_exception();
            }
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
    return out;
}

/// Dense amplitudes over the target coins, first coin most significant.
std::vector<Amplitude> coin_vector(const SparseState &s) {
    const std::size_t k = s.layout().size();
    std::vector<Amplitude> v(std::size_t{1} << k);
    for (const auto &[label, amp] : s.amplitudes()) {
        std::size_t index = 0;
        for (int bit : label) {
            index = (index << 1) | static_cast<std::size_t>(bit);
        }
        v[index] = amp;
    }
    return v;
}

struct PauliMasks {
    std::size_t x = 0;
    std::size_t z = 0;
};

PauliMasks candidate_masks(std::size_t candidate, std::size_t k) {
    PauliMasks m;
    for (std::size_t i = 0; i < k; ++i) {
        const std::size_t op = (candidate >> (2 * (k - 1 - i))) & 3U;
        const std::size_t bit = std::size_t{1} << (k - 1 - i);
        if (op == 1 || op == 3) {
            m.x |= bit;
        }
        if (op == 2 || op == 3) {
            m.z |= bit;
        }
    }
    return m;
}

/// |<expected| Z^z X^x |residual>|^2 on dense coin vectors.
double masked_fidelity(const std::vector<Amplitude> &expected,
                       const std::vector<Amplitude> &residual, PauliMasks m) {
    Amplitude overlap{};
    for (std::size_t l = 0; l < residual.size(); ++l) {
        const std::size_t moved = l ^ m.x;
        const double sign = (std::popcount(moved & m.z) & 1) ? -1.0 : 1.0;
        overlap += std::conj(expected[moved]) * residual[l] * sign;
    }
    return std::norm(overlap);
}

PauliString masks_to_pauli(std::size_t candidate, const std::vector<std::string> &targets) {
    const std::size_t k = targets.size();
    PauliString out;
    for (std::size_t i = 0; i < k; ++i) {
        const auto op = static_cast<PauliOp>((candidate >> (2 * (k - 1 - i))) & 3U);
        if (op != PauliOp::I) {
            out.push_back({targets[i], op});
        }
    }
    return out;
}

struct PayloadBranches {
    std::vector<Amplitude> expected;
    std::vector<BranchOutcome> outcomes;
    std::vector<std::vector<Amplitude>> residuals;
};

PayloadBranches measure_payload(const ProtocolSpec &spec, const InputPayload &payload,
                                PositionBasis basis) {
    PayloadBranches out;
    out.expected = coin_vector(expected_output(spec, payload));
    out.outcomes = measure_impl(spec, run_walks(spec, payload), basis, true);
    for (const auto &o : out.outcomes) {
        out.residuals.push_back(coin_vector(o.residual));
    }
    return out;
}

}  // namespace

std::vector<BranchOutcome> measure_branches(const ProtocolSpec &spec, const SparseState &pre,
                                            PositionBasis basis) {
    return measure_impl(spec, pre, basis, true);
}

std::vector<BranchOutcome> measure_branches_serial(const ProtocolSpec &spec,
                                                   const SparseState &pre, PositionBasis basis) {
    return measure_impl(spec, pre, basis, false);
}

std::vector<BranchResult> enumerate_branches(const ProtocolSpec &spec,
                                             const InputPayload &payload,
                                             const CorrectionTable &table, PositionBasis basis) {
    return enumerate_impl(spec, payload, table, basis, true);
}

std::vector<BranchResult> enumerate_branches_serial(const ProtocolSpec &spec,
                                                    const InputPayload &payload,
                                                    const CorrectionTable &table,
                                                    PositionBasis basis) {
    return enumerate_impl(spec, payload, table, basis, false);
}

double verify_branch(const ProtocolSpec &spec, const BranchResult &branch,
                     const InputPayload &payload) {
    if (branch.vacuous) {
        return 0.0;
    }
    return fidelity(expected_output(spec, payload), branch.corrected);
}

CorrectionTable generate_family_tables(const ProtocolSpec &spec,
                                       const std::vector<std::string> &families,
                                       PositionBasis basis, std::uint64_t seed,
                                       std::size_t confirmations) {
    const auto payloads = random_payloads(payload_width(spec.id), 1 + confirmations, seed);
    std::vector<PayloadBranches> runs;
    for (const auto &p : payloads) {
        runs.push_back(measure_payload(spec, p, basis));
    }
    const std::vector<std::string> targets = spec.targets();
    const std::size_t k = targets.size();
    const std::size_t n_candidates = std::size_t{1} << (2 * k);

    CorrectionTable table;
    table.protocol = std::string(protocol_key(spec.id));
    table.source = "synthesized";
    const auto &outcomes = runs.front().outcomes;
    for (std::size_t j = 0; j < outcomes.size(); ++j) {
        const auto &o = outcomes[j];
        if (!families.empty() &&
            std::find(families.begin(), families.end(), o.family) == families.end()) {
            continue;
        }
        bool any_live = false;
        std::optional<std::size_t> found;
        for (std::size_t c = 0; c < n_candidates && !found; ++c) {
            const PauliMasks m = candidate_masks(c, k);
            bool ok = true;
            for (const auto &run : runs) {
                if (run.outcomes[j].vacuous) {
                    continue;
                }
                any_live = true;
                if (masked_fidelity(run.expected, run.residuals[j], m) < 1.0 - kFidelityTolerance) {
                    ok = false;
                    break;
                }
            }
            if (!any_live) {
                break;
            }
            if (ok) {
                found = c;
            }
        }
        if (!any_live) {
            // No payload reaches this outcome, so any correction will do.
            found = 0;
        }
        if (!found) {
            throw Error(ErrorCode::NoPauliCorrection, "no Pauli string corrects position " +
                                                          o.position + ", coin " + o.coin);
        }
        table.add({o.position, o.coin, masks_to_pauli(*found, targets)});
    }
    return table;
}

const CorrectionTable &reference_table(ProtocolId id) {
    static std::mutex mutex;
    static std::map<ProtocolId, CorrectionTable> cache;
    std::lock_guard lock(mutex);
    auto it = cache.find(id);
    if (it == cache.end()) {
        it = cache.emplace(id, generate_family_tables(make_protocol(id))).first;
    }
    return it->second;
}

const CorrectionTable &printed_table(ProtocolId id) {
    static std::mutex mutex;
    static std::map<ProtocolId, CorrectionTable> cache;
    std::lock_guard lock(mutex);
    auto it = cache.find(id);
    if (it == cache.end()) {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(printed_table_json(id));
        } catch (const nlohmann::json::exception &e) {
            throw Error(ErrorCode::ParseError, e.what());
        }
        it = cache.emplace(id, table_from_json(j)).first;
    }
    return it->second;
}

std::size_t TableComparison::disagreements() const {
    std::size_t n = missing.size();
    for (const auto &r : rows) {
        n += r.agrees ? 0 : 1;
    }
    return n;
}

TableComparison compare_tables(const ProtocolSpec &spec, const CorrectionTable &table,
                               const CorrectionTable &reference,
                               const std::vector<InputPayload> &payloads) {
    std::vector<PayloadBranches> runs;
    for (const auto &p : payloads) {
        runs.push_back(measure_payload(spec, p, PositionBasis::Superposed));
    }
    std::map<std::pair<std::string, std::string>, std::size_t> index;
    if (!runs.empty()) {
        for (std::size_t j = 0; j < runs.front().outcomes.size(); ++j) {
            const auto &o = runs.front().outcomes[j];
            index[{o.position, o.coin}] = j;
        }
    }
    const std::vector<std::string> targets = spec.targets();

    TableComparison out;
    std::set<std::string> positions;
    for (const auto &row : table.rows()) {
        positions.insert(row.position);
        RowCheck check;
        check.row = row;
        if (const auto *ref = reference.find(row.position, row.coin)) {
            check.reference = ref->pauli;
            check.agrees = pauli_equivalent(row.pauli, ref->pauli);
        }
        auto it = index.find({row.position, row.coin});
        if (it != index.end()) {
            const PauliString canonical = canonical_pauli(row.pauli, targets);
            PauliMasks m;
            for (std::size_t i = 0; i < targets.size(); ++i) {
                for (const auto &f : canonical) {
                    if (f.reg != targets[i]) {
                        continue;
                    }
                    const std::size_t bit = std::size_t{1} << (targets.size() - 1 - i);
                    if (f.op == PauliOp::X || f.op == PauliOp::ZX) {
                        m.x |= bit;
                    }
                    if (f.op == PauliOp::Z || f.op == PauliOp::ZX) {
                        m.z |= bit;
                    }
                }
            }
            double worst = 1.0;
            for (const auto &run : runs) {
                if (!run.outcomes[it->second].vacuous) {
                    worst = std::min(worst, masked_fidelity(run.expected, run.residuals[it->second], m));
                }
            }
            check.min_fidelity = worst;
        } else {
            check.agrees = false;
        }
        out.rows.push_back(std::move(check));
    }
    for (const auto &ref : reference.rows()) {
        if (positions.count(ref.position) && table.find(ref.position, ref.coin) == nullptr) {
            out.missing.push_back(ref);
        }
    }
    return out;
}

}  // namespace walkport
