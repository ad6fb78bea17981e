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

#include <gtest/gtest.h>

#include "test_util.hpp"

using namespace walkport;

TEST(two_qubit_mapping, pairs_every_family) {
    const auto m = two_qubit_mapping();
    ASSERT_EQ(m.pairs.size(), 16u);
    for (std::size_t i = 0; i < m.pairs.size(); ++i) {
        EXPECT_EQ(m.pairs[i].source, "P" + std::to_string(i));
        EXPECT_EQ(m.pairs[i].target, "Q" + std::to_string(i));
        EXPECT_EQ(m.pairs[i].outcomes.size(), m.pairs[i].members.size());
    }
    // P1 = {|0200>, |0-200>} pairs with Q1 = {|10>, |-10>} by rank.
    EXPECT_EQ(m.pairs[1].members[0].first, (BasisLabel{0, 2, 0, 0}));
    EXPECT_EQ(m.pairs[1].members[0].second, (BasisLabel{1, 0}));
    EXPECT_EQ(m.pairs[1].outcomes.at("P1[-]"), "Q1[-]");
}

TEST(two_qubit_mapping, register_renames) {
    const auto r = two_qubit_register_renames();
    EXPECT_EQ(r.at("A5"), "A4");
    EXPECT_EQ(r.at("B6"), "B5");
    EXPECT_EQ(r.at("A3"), "A2");
}

TEST(two_qubit_equivalence, holds_on_random_payloads) {
    const auto payloads = random_payloads(4, 3, 71);
    TwoQubitOptions options;
    options.check_computational_reading = false;
    const auto r = check_two_qubit_equivalence(payloads, 71, options);
    EXPECT_TRUE(r.passed());
    EXPECT_EQ(r.branches_compared, 3u * 1296);
    EXPECT_LE(r.max_probability_delta, 1e-10);
    EXPECT_LE(r.max_state_delta, 1e-10);
    EXPECT_TRUE(r.table_mismatches.empty());
}

TEST(two_qubit_equivalence, corruption_is_reported) {
    TwoQubitOptions options;
    options.corrupt_family = "Q3";
    options.check_computational_reading = false;
    const auto r = check_two_qubit_equivalence(random_payloads(4, 2, 72), 72, options);
    EXPECT_FALSE(r.passed());
    ASSERT_FALSE(r.table_mismatches.empty());
    for (const auto &m : r.table_mismatches) {
        EXPECT_EQ(m.target_position.substr(0, 2), "Q3");
    }
    EXPECT_GT(r.max_state_delta, 0.1);
}

TEST(two_qubit_equivalence, computational_reading_is_reported) {
    const auto r = check_two_qubit_equivalence(random_payloads(4, 1, 73), 73);
    EXPECT_TRUE(r.passed());
    bool mentioned = false;
    for (const auto &n : r.notes) {
        mentioned = mentioned || n.find("computational reading") != std::string::npos;
    }
    EXPECT_TRUE(mentioned);
}

TEST(cycle_line_equivalence, holds_and_flags_misprint) {
    const auto r = check_cycle_line_equivalence(random_payloads(2, 5, 74), 74);
    EXPECT_TRUE(r.passed());
    EXPECT_LE(r.max_state_delta, 1e-10);
    ASSERT_EQ(r.spot_checks.size(), 5u);
    for (const auto &s : r.spot_checks) {
        EXPECT_EQ(s.reproduced, s.expected) << s.description;
    }
    EXPECT_FALSE(r.spot_checks[2].expected);
}

TEST(cycle_line_equivalence, reduce_mod4) {
    const auto line = make_protocol(ProtocolId::Line1Q);
    const auto cycle = make_protocol(ProtocolId::Cycle1Q);
    const auto s = basis_state(line.layout, {-2, 1, 0, 1, 1, 0});
    const auto r = reduce_mod4(s, cycle.layout);
    EXPECT_EQ(r.amplitude({2, 1, 0, 1, 1, 0}), Amplitude(1.0));
}

TEST(equivalence_report, json_shape) {
    const auto r = check_cycle_line_equivalence(random_payloads(2, 1, 75), 75);
    const auto j = report_to_json(r);
    EXPECT_EQ(j.at("schema"), 1);
    EXPECT_EQ(j.at("payloads"), 1);
    EXPECT_TRUE(j.at("passed").get<bool>());
    EXPECT_EQ(j.at("spot_checks").size(), 5u);
}
