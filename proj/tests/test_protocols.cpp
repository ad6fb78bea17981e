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

#include <gtest/gtest.h>

#include <cmath>

#include "reference_kets.hpp"
#include "test_util.hpp"

using namespace walkport;
using walkport::testing::basis_payload;
using walkport::testing::generic_payload;
using walkport::testing::KetTerm;
using walkport::testing::symbolic_state;
using namespace walkport::testing;

namespace {

std::vector<std::string> names(const RegisterLayout &layout) {
    std::vector<std::string> out;
    for (const auto &r : layout) {
        out.push_back(r.name);
    }
    return out;
}

void expect_same_state(const SparseState &got, const SparseState &want, double tol) {
    EXPECT_EQ(got.size(), want.size());
    EXPECT_LT(max_entry_delta(got, want), tol);
}

}  // namespace

TEST(protocol, keys_round_trip) {
    for (auto id : kAllProtocols) {
        EXPECT_EQ(parse_protocol(protocol_key(id)), id);
    }
    EXPECT_FALSE(parse_protocol("line").has_value());
    EXPECT_EQ(payload_width(ProtocolId::Line1Q), 2u);
    EXPECT_EQ(payload_width(ProtocolId::TwoStep2Q), 4u);
}

TEST(protocol, layouts) {
    using V = std::vector<std::string>;
    EXPECT_EQ(names(make_protocol(ProtocolId::Line1Q).layout), (V{"A1", "B1", "A2", "A3", "B2", "B3"}));
    EXPECT_EQ(make_protocol(ProtocolId::Cycle1Q).layout[0].kind, RegisterKind::Cycle);
    EXPECT_EQ(names(make_protocol(ProtocolId::SingleStep2Q).layout),
              (V{"A1", "A2", "B1", "B2", "A3", "A4", "A5", "A6", "B3", "B4", "B5", "B6"}));
    EXPECT_EQ(names(make_protocol(ProtocolId::TwoStep2Q).layout),
              (V{"A1", "B1", "A2", "A3", "A4", "A5", "B2", "B3", "B4", "B5"}));
    EXPECT_EQ(make_protocol(ProtocolId::Line1Q, 5).layout[0].extent, 5);
    EXPECT_THROW(make_protocol(ProtocolId::Line1Q, 0), Error);
}

TEST(protocol, random_payloads_are_seeded_and_normalized) {
    const auto p = random_payloads(4, 10, 99);
    const auto q = random_payloads(4, 10, 99);
    const auto r = random_payloads(4, 10, 100);
    ASSERT_EQ(p.size(), 10u);
    EXPECT_EQ(p[3].alice, q[3].alice);
    EXPECT_NE(p[3].alice, r[3].alice);
    for (const auto &x : p) {
        double n = 0.0;
        for (auto a : x.bob) {
            n += std::norm(a);
        }
        EXPECT_NEAR(n, 1.0, 1e-14);
    }
}

TEST(protocol, payload_validation) {
    const auto spec = make_protocol(ProtocolId::Line1Q);
    auto expect_code = [&](InputPayload p, ErrorCode code) {
        try {
            check_payload(spec, p);
            FAIL();
        } catch (const Error &e) {
            EXPECT_EQ(e.code(), code);
        }
    };
    expect_code({{1.0}, {1.0, 0.0}}, ErrorCode::ShapeMismatch);
    expect_code({{NAN, 0.0}, {1.0, 0.0}}, ErrorCode::NonFiniteAmplitude);
    expect_code({{1.0, 1.0}, {1.0, 0.0}}, ErrorCode::NotNormalized);
    EXPECT_NO_THROW(check_payload(spec, generic_payload(2)));
}

TEST(protocol, line_initial_state_expands_by_hand) {
    const auto spec = make_protocol(ProtocolId::Line1Q);
    const auto p = generic_payload(2);
    const KetTerm terms[] = {{0, 0, "000000"}, {0, 1, "000010"}, {1, 0, "001000"}, {1, 1, "001010"}};
    expect_same_state(build_initial(spec, p), symbolic_state(spec.layout, terms, 1.0, p), 1e-15);
}

TEST(protocol, cycle_initial_state_has_plus_coins) {
    const auto spec = make_protocol(ProtocolId::Cycle1Q);
    const auto s = build_initial(spec, basis_payload(2, 0, 1));
    ASSERT_EQ(s.size(), 4u);
    EXPECT_NEAR(s.amplitude({0, 0, 0, 1, 1, 1}).real(), 0.5, 1e-15);
}

TEST(protocol, single2q_initial_state_expands_by_hand) {
    const auto spec = make_protocol(ProtocolId::SingleStep2Q);
    InputPayload p{{0.5, 0.5, 0.5, 0.5}, {1.0, 0.0, 0.0, 0.0}};
    const auto s = build_initial(spec, p);
    ASSERT_EQ(s.size(), 4u);
    for (const char *ket : {"000000000000", "000001000000", "000010000000", "000011000000"}) {
        EXPECT_NEAR(s.amplitude(walkport::testing::parse_ket(ket)).real(), 0.5, 1e-15) << ket;
    }
}

TEST(protocol, line_intermediate_states_match_hand_expansion) {
    const auto spec = make_protocol(ProtocolId::Line1Q);
    const auto p = generic_payload(2);
    const auto traj = walk_trajectory(spec, p);
    ASSERT_EQ(traj.size(), 5u);
    expect_same_state(traj[1], symbolic_state(spec.layout, kLinePsi1, 1.0, p), 1e-12);
    expect_same_state(traj[2], symbolic_state(spec.layout, kLinePsi2, 1.0, p), 1e-12);
    expect_same_state(traj[3], symbolic_state(spec.layout, kLinePsi3, M_SQRT1_2, p), 1e-12);
    expect_same_state(traj[4], symbolic_state(spec.layout, kLinePsi4, 0.5, p), 1e-12);
}

TEST(protocol, cycle_final_state_has_sixteen_terms) {
    const auto spec = make_protocol(ProtocolId::Cycle1Q);
    const auto p = generic_payload(2);
    expect_same_state(run_walks(spec, p), symbolic_state(spec.layout, kCycleFinal, 0.5, p), 1e-12);
}

TEST(protocol, two_qubit_basis_blocks) {
    const auto p = basis_payload(4, 0, 0);
    const auto single = make_protocol(ProtocolId::SingleStep2Q);
    expect_same_state(run_walks(single, p), symbolic_state(single.layout, kSingle2QBlock, 0.25, p),
                      1e-12);
    const auto two = make_protocol(ProtocolId::TwoStep2Q);
    expect_same_state(run_walks(two, p), symbolic_state(two.layout, kTwoStepBlock, 0.25, p), 1e-12);
}

TEST(protocol, walks_preserve_norm_property) {
    for (auto id : kAllProtocols) {
        const auto spec = make_protocol(id);
        for (const auto &p : random_payloads(payload_width(id), 10, 31)) {
            for (const auto &s : walk_trajectory(spec, p)) {
                EXPECT_NEAR(s.norm_squared(), 1.0, 1e-12) << protocol_key(id);
            }
        }
    }
}

TEST(protocol, too_small_bound_is_out_of_bounds) {
    const auto spec = make_protocol(ProtocolId::TwoStep2Q, 3);
    try {
        run_walks(spec, generic_payload(4));
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::OutOfBounds);
    }
}

TEST(protocol, expected_output_swaps_payloads) {
    const auto spec = make_protocol(ProtocolId::Line1Q);
    const auto p = generic_payload(2);
    const auto out = expected_output(spec, p);
    EXPECT_EQ(names(out.layout()), (std::vector<std::string>{"A3", "B3"}));
    EXPECT_NEAR(std::abs(out.amplitude({1, 0}) - p.bob[1] * p.alice[0]), 0.0, 1e-15);
}
