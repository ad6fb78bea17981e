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

#include <string>
#include <vector>

#include "json.hpp"
#include "walkport/branches.hpp"
#include "walkport/equivalence.hpp"
#include "walkport/oracle.hpp"

namespace walkport {

inline constexpr double kRunFidelityTolerance = 1e-9;
inline constexpr double kRunProbabilityTolerance = 1e-9;

/// Outcome of one payload in a `run` report.
struct PayloadRun {
    InputPayload payload;
    std::vector<BranchResult> branches;

    double total_probability() const;
    /// Smallest fidelity over non-vacuous branches.
    double min_fidelity() const;
    bool passed(double fidelity_tol = kRunFidelityTolerance) const;
};

nlohmann::json amplitudes_to_json(const std::vector<Amplitude> &v);
nlohmann::json branch_to_json(const BranchResult &b);
nlohmann::json payload_run_to_json(const PayloadRun &run, std::size_t index);

/// Fixed-width branch listing for the text format.
std::string format_branches(const std::vector<BranchResult> &branches);

nlohmann::json table_comparison_to_json(const TableComparison &c);
std::string format_table_comparison(const TableComparison &c);

nlohmann::json oracle_report_to_json(const OracleReport &r);

std::string format_equivalence(const EquivalenceReport &r);

}  // namespace walkport
