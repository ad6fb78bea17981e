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

#include "walkport/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace walkport {

namespace {

std::string fixed(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
    return buf;
}

std::string pad(std::string s, std::size_t width) {
    if (s.size() < width) {
        s.append(width - s.size(), ' ');
    }
    return s;
}

}  // namespace

double PayloadRun::total_probability() const {
    double total = 0.0;
    for (const auto &b : branches) {
        total += b.probability;
    }
    return total;
}

double PayloadRun::min_fidelity() const {
    double worst = 1.0;
    for (const auto &b : branches) {
        if (!b.vacuous) {
            worst = std::min(worst, b.fidelity);
        }
    }
    return worst;
}

bool PayloadRun::passed(double fidelity_tol) const {
    return min_fidelity() >= 1.0 - fidelity_tol &&
           std::abs(total_probability() - 1.0) <= kRunProbabilityTolerance;
}

nlohmann::json amplitudes_to_json(const std::vector<Amplitude> &v) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto &a : v) {
        out.push_back({a.real(), a.imag()});
    }
    return out;
}

nlohmann::json branch_to_json(const BranchResult &b) {
    nlohmann::json j = {{"family", b.family},
                        {"position", b.position},
                        {"coin", b.coin},
                        {"probability", b.probability},
                        {"vacuous", b.vacuous},
                        {"correction", format_pauli(b.correction)},
                        {"fidelity", b.fidelity}};
    if (const std::string d = dyadic_string(b.probability); !d.empty()) {
        j["probability_dyadic"] = d;
    }
    return j;
}

nlohmann::json payload_run_to_json(const PayloadRun &run, std::size_t index) {
    nlohmann::json branches = nlohmann::json::array();
    for (const auto &b : run.branches) {
        branches.push_back(branch_to_json(b));
    }
    return {{"index", index},
            {"alice", amplitudes_to_json(run.payload.alice)},
            {"bob", amplitudes_to_json(run.payload.bob)},
            {"total_probability", run.total_probability()},
            {"min_fidelity", run.min_fidelity()},
            {"passed", run.passed()},
            {"branches", std::move(branches)}};
}

std::string format_branches(const std::vector<BranchResult> &branches) {
    std::ostringstream os;
    os << pad("position", 12) << pad("coin", 8) << pad("probability", 14) << pad("fidelity", 14)
       << "correction\n";
    for (const auto &b : branches) {
        std::string p = dyadic_string(b.probability);
        if (p.empty()) {
            p = fixed(b.probability, 10);
        }
        os << pad(b.position, 12) << pad(b.coin, 8) << pad(p, 14)
           << pad(b.vacuous ? "vacuous" : fixed(b.fidelity, 10), 14) << format_pauli(b.correction)
           << '\n';
    }
    return os.str();
}

nlohmann::json table_comparison_to_json(const TableComparison &c) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto &r : c.rows) {
        rows.push_back({{"position", r.row.position},
                        {"coin", r.row.coin},
                        {"printed", format_pauli(r.row.pauli)},
                        {"synthesized", r.reference ? format_pauli(*r.reference) : "(none)"},
                        {"agrees", r.agrees},
                        {"min_fidelity", r.min_fidelity}});
    }
    nlohmann::json missing = nlohmann::json::array();
    for (const auto &m : c.missing) {
        missing.push_back(
            {{"position", m.position}, {"coin", m.coin}, {"synthesized", format_pauli(m.pauli)}});
    }
    return {{"rows", std::move(rows)},
            {"missing", std::move(missing)},
            {"disagreements", c.disagreements()}};
}

std::string format_table_comparison(const TableComparison &c) {
    std::ostringstream os;
    for (const auto &r : c.rows) {
        os << (r.agrees ? "  ok    " : "  FLAG  ") << pad(r.row.position, 10) << pad(r.row.coin, 8)
           << "printed " << format_pauli(r.row.pauli);
        if (!r.agrees) {
            os << "  synthesized " << (r.reference ? format_pauli(*r.reference) : "(none)")
               << "  printed fidelity " << fixed(r.min_fidelity, 6);
        }
        os << '\n';
    }
    for (const auto &m : c.missing) {
        os << "  MISSING " << pad(m.position, 10) << pad(m.coin, 8) << "synthesized "
           << format_pauli(m.pauli) << '\n';
    }
    os << c.rows.size() << " printed rows, " << c.disagreements() << " flagged\n";
    return os.str();
}

nlohmann::json oracle_report_to_json(const OracleReport &r) {
    return {{"protocol", protocol_key(r.id)},
            {"bound", r.bound},
            {"dimension", r.dimension},
            {"payloads", r.payloads},
            {"unitarity_defect", r.unitarity},
            {"max_state_delta", r.state_delta}};
}

std::string format_equivalence(const EquivalenceReport &r) {
    std::ostringstream os;
    os << "claim: " << r.claim << '\n'
       << "payloads: " << r.payloads << " (seed " << r.seed << ")\n"
       << "branches compared: " << r.branches_compared << '\n'
       << "max probability delta: " << r.max_probability_delta << '\n'
       << "max state delta: " << r.max_state_delta << '\n';
    for (const auto &m : r.table_mismatches) {
        os << "mismatch: " << m.source_position << " / " << m.target_position << " coin " << m.coin
           << ": " << m.source_pauli << " vs " << m.target_pauli
           << (m.acts_identically ? " (same action)" : "") << '\n';
    }
    for (const auto &s : r.spot_checks) {
        os << (s.expected == s.reproduced ? "ok   " : "FAIL ") << s.description << ": "
           << (s.reproduced ? "reproduced" : "not reproduced") << '\n';
    }
    for (const auto &n : r.notes) {
        os << "note: " << n << '\n';
    }
    os << (r.passed() ? "PASSED" : "FAILED") << '\n';
    return os.str();
}

}  // namespace walkport
