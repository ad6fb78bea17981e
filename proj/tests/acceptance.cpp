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


// Acceptance run: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>

#include "reference_kets.hpp"
#include "test_util.hpp"
#include "walkport/cli.hpp"
#include "walkport/equivalence.hpp"
#include "walkport/oracle.hpp"

using namespace walkport;
using namespace walkport::testing;

namespace {

constexpr std::uint64_t kSeed = 20260101;
constexpr double kFidelityTol = 1e-9;
constexpr double kProbabilityTol = 1e-10;
constexpr double kTotalTol = 1e-9;
constexpr double kTermTol = 1e-12;
constexpr double kEquivTol = 1e-10;
constexpr double kPropertyTol = 1e-12;

struct Outcome {
    bool passed = true;
    std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(const char *f, double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), f, v);
    return buf;
}

// Family name of an outcome: "02[+]" -> "02", "P3[+-]" -> "P3".
std::string family_of(const std::string &position) {
    return position.substr(0, position.find('['));
}

/// Every term of `want` reproduced within kTermTol and nothing else present.
bool reproduces(const SparseState &got, const SparseState &want) {
    return got.size() == want.size() && max_entry_delta(got, want) <= kTermTol;
}

Outcome line_protocol() {
    const auto t0 = std::chrono::steady_clock::now();
    const auto spec = make_protocol(ProtocolId::Line1Q);
    const std::map<std::string, std::pair<int, double>> classes{
        {"00", {4, 1.0 / 16}}, {"02", {8, 1.0 / 32}}, {"20", {8, 1.0 / 32}}, {"22", {16, 1.0 / 64}}};
    Outcome o;
    double worst_fid = 1.0, worst_prob = 0.0, worst_total = 0.0;
    for (const auto &p : random_payloads(2, 100, kSeed)) {
        const auto branches = enumerate_branches(spec, p, reference_table(spec.id));
        o.passed = o.passed && branches.size() == 36;
        std::map<std::string, int> counts;
        double total = 0.0;
        for (const auto &b : branches) {
            const auto &[count, prob] = classes.at(family_of(b.position));
            ++counts[family_of(b.position)];
            worst_prob = std::max(worst_prob, std::abs(b.probability - prob));
            worst_fid = std::min(worst_fid, b.fidelity);
            total += b.probability;
        }
        for (const auto &[family, c] : classes) {
            o.passed = o.passed && counts[family] == c.first;
        }
        worst_total = std::max(worst_total, std::abs(total - 1.0));
    }
    const double secs = seconds_since(t0);
    o.passed = o.passed && worst_fid >= 1.0 - kFidelityTol && worst_prob <= kProbabilityTol &&
               worst_total <= kTotalTol && secs < 5.0;
    o.detail = "100 payloads x 36 branches (00: 4 at 1/16, 02/20: 16 at 1/32, 22: 16 at 1/64), "
               "min fidelity " + fmt("%.15f", worst_fid) + ", max prob error " +
               fmt("%.1e", worst_prob) + ", max |total-1| " + fmt("%.1e", worst_total) + ", " +
               fmt("%.2f", secs) + " s";
    return o;
}

Outcome intermediate_states() {
    const auto spec = make_protocol(ProtocolId::Line1Q);
    std::vector<InputPayload> payloads{generic_payload(2)};
    for (const auto &p : random_payloads(2, 9, kSeed + 1)) {
        payloads.push_back(p);
    }
    Outcome o;
    for (const auto &p : payloads) {
        const auto traj = walk_trajectory(spec, p);
        o.passed = o.passed && reproduces(traj[1], symbolic_state(spec.layout, kLinePsi1, 1.0, p)) &&
                   reproduces(traj[2], symbolic_state(spec.layout, kLinePsi2, 1.0, p)) &&
                   reproduces(traj[3], symbolic_state(spec.layout, kLinePsi3, M_SQRT1_2, p)) &&
                   reproduces(traj[4], symbolic_state(spec.layout, kLinePsi4, 0.5, p));
    }
    o.detail = "4/4/8/16 terms after W1..W4 on " + std::to_string(payloads.size()) +
               " payloads, coefficient tolerance 1e-12";
    return o;
}

Outcome cycle_protocol() {
    const auto spec = make_protocol(ProtocolId::Cycle1Q);
    const auto payloads = random_payloads(2, 100, kSeed + 2);
    Outcome o;
    bool terms = true;
    double zero_fid = 1.0;
    for (const auto &p : payloads) {
        terms = terms && reproduces(run_walks(spec, p), symbolic_state(spec.layout, kCycleFinal, 0.5, p));
        for (const auto &b : enumerate_branches(spec, p, reference_table(spec.id))) {
            if (b.position == "00" && b.coin == "++") {
                zero_fid = std::min(zero_fid, b.fidelity);
            }
        }
    }
    const auto printed = compare_tables(spec, printed_table(spec.id), reference_table(spec.id),
                                        random_payloads(2, 25, kSeed + 3));
    double printed_fid = 1.0;
    for (const auto &r : printed.rows) {
        printed_fid = std::min(printed_fid, r.min_fidelity);
    }
    const auto equiv = check_cycle_line_equivalence(random_payloads(2, 25, kSeed + 4), kSeed + 4);
    std::string misprint = "misprint not surfaced";
    bool spots = equiv.spot_checks.size() == 5;
    for (const auto &s : equiv.spot_checks) {
        spots = spots && s.expected == s.reproduced;
        if (!s.expected && !s.reproduced) {
            misprint = "'" + s.description + "' does not reproduce (|1,0,1,0> does)";
        }
    }
    o.passed = terms && zero_fid >= 1.0 - kFidelityTol && printed.rows.size() == 16 &&
               printed.disagreements() == 0 && printed.missing.empty() &&
               printed_fid >= 1.0 - kFidelityTol && equiv.max_state_delta <= kEquivTol &&
               equiv.table_mismatches.empty() && spots;
    o.detail = std::string("16 terms ") + (terms ? "reproduced" : "NOT reproduced") +
               ", (00,++) min fidelity " + fmt("%.15f", zero_fid) + ", printed table " +
               std::to_string(printed.rows.size() - printed.disagreements()) + "/16 rows verify" +
               ", mod-4 delta " + fmt("%.1e", equiv.max_state_delta) + ", " + misprint;
    return o;
}

Outcome two_qubit_protocol(ProtocolId id, const std::string &zero) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto spec = make_protocol(id);
    const auto &table = reference_table(id);
    Outcome o;
    double worst_zero = 0.0, worst_mass = 0.0, worst_total = 0.0, worst_fid = 1.0;
    double worst_amp = 0.0;
    for (const auto &p : random_payloads(4, 100, kSeed + 5)) {
        const auto branches = enumerate_branches(spec, p, table);
        double total = 0.0, mass = 0.0;
        std::size_t zero_rows = 0;
        for (const auto &b : branches) {
            total += b.probability;
            worst_fid = std::min(worst_fid, b.fidelity);
            if (b.position != zero) {
                continue;
            }
            ++zero_rows;
            mass += b.probability;
            if (b.coin == "++,++") {
                worst_zero = std::max(worst_zero, std::abs(b.probability - 1.0 / 256));
                // Unnormalized amplitudes carry the 1/16 prefactor.
                const auto raw = scaled(b.residual, std::sqrt(b.probability));
                worst_amp = std::max(worst_amp,
                                     max_entry_delta(raw, symbolic_state(spec.target_layout(),
                                                                         kTwoQubitZeroBranch,
                                                                         1.0 / 16, p)));
            }
        }
        o.passed = o.passed && branches.size() == 1296 && zero_rows == 16;
        worst_mass = std::max(worst_mass, std::abs(mass - 1.0 / 16));
        worst_total = std::max(worst_total, std::abs(total - 1.0));
    }
    const auto printed =
        compare_tables(spec, printed_table(id), table, random_payloads(4, 10, kSeed + 6));
    std::string flagged;
    for (const auto &r : printed.rows) {
        if (!r.agrees) {
            flagged += " (" + r.row.coin + ")";
        }
    }
    for (const auto &m : printed.missing) {
        flagged += " missing(" + m.coin + ")";
    }
    const double secs = seconds_since(t0);
    o.passed = o.passed && worst_zero <= kProbabilityTol && worst_mass <= kProbabilityTol &&
               worst_amp <= kTermTol && worst_fid >= 1.0 - kFidelityTol &&
               worst_total <= kTotalTol && secs < 60.0;
    o.detail = "100 payloads x 1296 branches, (" + zero + ",++,++) prob error " +
               fmt("%.1e", worst_zero) + ", 1/16 amplitude prefactor error " +
               fmt("%.1e", worst_amp) + ", min fidelity " + fmt("%.15f", worst_fid) +
               ", max |total-1| " + fmt("%.1e", worst_total) + ", printed rows flagged:" +
               (flagged.empty() ? " none" : flagged) + ", " + fmt("%.2f", secs) + " s";
    return o;
}

Outcome equivalence() {
    const auto r = check_two_qubit_equivalence(random_payloads(4, 25, kSeed + 7), kSeed + 7);
    Outcome o;
    o.passed = r.passed(kEquivTol) && r.table_mismatches.empty() && r.payloads == 25 &&
               r.branches_compared == 25 * 1296;
    o.detail = std::to_string(r.branches_compared) + " branch pairs, max prob delta " +
               fmt("%.1e", r.max_probability_delta) + ", max state delta " +
               fmt("%.1e", r.max_state_delta) + ", " + std::to_string(r.table_mismatches.size()) +
               " table mismatches over 16 families";
    return o;
}

Outcome oracle() {
    Outcome o;
    std::ostringstream os;
    for (auto id : kAllProtocols) {
        const auto r = oracle_check(id, random_payloads(payload_width(id), 25, kSeed + 8));
        o.passed = o.passed && r.unitarity < kEquivTol && r.state_delta <= kEquivTol;
        os << (os.tellp() > 0 ? ", " : "") << protocol_key(id) << " delta "
           << fmt("%.1e", r.state_delta) << " unitarity " << fmt("%.1e", r.unitarity);
    }
    o.detail = "25 payloads each: " + os.str();
    return o;
}

Outcome properties() {
    std::mt19937_64 rng(kSeed + 9);
    std::size_t cases = 0;
    std::map<std::string, std::size_t> failures;
    auto pick = [&](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };

    // Norm preservation along every trajectory.
    for (int i = 0; i < 300; ++i, ++cases) {
        const auto id = kAllProtocols[pick(4)];
        const auto p = random_payloads(payload_width(id), 1, rng()).front();
        for (const auto &s : walk_trajectory(make_protocol(id), p)) {
            if (std::abs(s.norm_squared() - 1.0) > kPropertyTol) {
                ++failures["norm"];
                break;
            }
        }
    }
    // Linearity of each walk step on intermediate states.
    for (int i = 0; i < 300; ++i, ++cases) {
        const auto id = kAllProtocols[pick(4)];
        const auto spec = make_protocol(id);
        const auto k = pick(4);
        const auto ps = random_payloads(payload_width(id), 2, rng());
        const auto x = walk_trajectory(spec, ps[0])[k];
        const auto y = walk_trajectory(spec, ps[1])[k];
        const auto ab = random_amplitudes(2, rng);
        const auto lhs = apply_walk_step(linear_combination(ab[0], x, ab[1], y), spec.steps[k]);
        const auto rhs = linear_combination(ab[0], apply_walk_step(x, spec.steps[k]), ab[1],
                                            apply_walk_step(y, spec.steps[k]));
        if (max_entry_delta(lhs, rhs) > kPropertyTol) {
            ++failures["linearity"];
        }
    }
    // Position and coin outcome families are complete on what they measure.
    for (int i = 0; i < 300; ++i, ++cases) {
        const auto id = kAllProtocols[pick(4)];
        const auto spec = make_protocol(id);
        const auto p = random_payloads(payload_width(id), 1, rng()).front();
        double total = 0.0;
        for (const auto &b : measure_branches(spec, run_walks(spec, p))) {
            total += b.probability;
        }
        const auto families = position_families(spec);
        const auto &f = families[pick(families.size())];
        bool valid = true;
        try {
            check_projector_family(f.outcomes);
            check_projector_family(coin_outcomes(spec));
        } catch (const Error &) {
            valid = false;
        }
        if (!valid || std::abs(total - 1.0) > kPropertyTol) {
            ++failures["completeness"];
        }
    }
    // Serialized reports are byte-identical across runs.
    for (int i = 0; i < 100; ++i, ++cases) {
        const auto id = kAllProtocols[i % 4];
        const std::vector<std::string> args{"run", std::string(protocol_key(id)), "--seed",
                                            std::to_string(rng() % 100000), "--count", "1"};
        std::ostringstream a, b, err;
        const int ca = run_cli(args, a, err);
        const int cb = run_cli(args, b, err);
        if (ca != kExitOk || cb != kExitOk || a.str() != b.str() || a.str().empty()) {
            ++failures["determinism"];
        }
    }
    Outcome o;
    o.passed = failures.empty() && cases >= 1000;
    o.detail = std::to_string(cases) + " cases (300 norm, 300 linearity, 300 completeness, "
               "100 determinism)";
    for (const auto &[name, n] : failures) {
        o.detail += ", " + std::to_string(n) + " " + name + " failures";
    }
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"line protocol branches", line_protocol},
        {"line intermediate states", intermediate_states},
        {"cycle protocol", cycle_protocol},
        {"single-step two-qubit protocol",
         [] { return two_qubit_protocol(ProtocolId::SingleStep2Q, "P0"); }},
        {"two-step two-qubit protocol",
         [] { return two_qubit_protocol(ProtocolId::TwoStep2Q, "Q0"); }},
        {"two-qubit equivalence", equivalence},
        {"dense oracle agreement", oracle},
        {"property suite", properties},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception &e) {
            o = {false, std::string("threw: ") + e.what()};
        }
        failed += o.passed ? 0 : 1;
        std::printf("%s criterion %zu: %s: %s\n", o.passed ? "PASS" : "FAIL", i + 1,
                    criteria[i].first.c_str(), o.detail.c_str());
        std::fflush(stdout);
    }
    return failed;
}
