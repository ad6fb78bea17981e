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


#include "walkport/oracle.hpp"

#include <gtest/gtest.h>

#include <random>

#include "test_util.hpp"

using namespace walkport;
using walkport::testing::generic_payload;
using walkport::testing::random_amplitudes;

namespace {

DenseState random_dense(const RegisterLayout &layout, std::mt19937_64 &rng) {
    const auto amps = random_amplitudes(layout.dimension(), rng);
    Eigen::VectorXcd v(amps.size());
    for (std::size_t i = 0; i < amps.size(); ++i) {
        v[i] = amps[i];
    }
    v.normalize();
    return DenseState(layout, v);
}

}  // namespace

TEST(dense_state, mixed_radix_indexing) {
    const RegisterLayout layout({RegisterSpec::lattice("X", 2), RegisterSpec::coin("c")});
    const DenseState d(layout, Eigen::VectorXcd::Zero(10));
    // First register most significant, digit = value - min.
    EXPECT_EQ(d.index_of({-2, 0}), 0u);
    EXPECT_EQ(d.index_of({-2, 1}), 1u);
    EXPECT_EQ(d.index_of({-1, 0}), 2u);
    EXPECT_EQ(d.index_of({2, 1}), 9u);
    for (std::uint64_t i = 0; i < 10; ++i) {
        EXPECT_EQ(d.index_of(d.label_of(i)), i);
    }
}

TEST(dense_state, round_trip_through_sparse) {
    const auto spec = make_protocol(ProtocolId::Line1Q, 3);
    const auto s = build_initial(spec, generic_payload(2));
    const auto back = sparsify(densify(s));
    EXPECT_EQ(back.size(), s.size());
    EXPECT_EQ(max_entry_delta(back, s), 0.0);
    try {
        densify(s, 10);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::DimensionOverflow);
    }
    EXPECT_THROW(DenseState(spec.layout, Eigen::VectorXcd::Zero(3)), Error);
}

TEST(walk_matrix, every_step_is_unitary) {
    for (auto id : kAllProtocols) {
        const auto spec = make_protocol(id, oracle_bound(id));
        for (std::size_t k = 0; k < 4; ++k) {
            const auto op = dense_walk_matrix(spec, k);
            EXPECT_LT(unitarity_defect(op.matrix), 1e-12) << protocol_key(id) << " W" << k + 1;
        }
    }
}

TEST(walk_matrix, full_matrix_matches_sparse_step) {
    // Cycle layout is 256-dimensional, small enough to build each W_k whole.
    const auto spec = make_protocol(ProtocolId::Cycle1Q);
    auto sparse = build_initial(spec, generic_payload(2));
    for (std::size_t k = 0; k < 4; ++k) {
        const auto w = full_walk_matrix(spec, k);
        EXPECT_LT(unitarity_defect(w), 1e-12);
        const Eigen::VectorXcd dense_next = w * densify(sparse).data();
        sparse = apply_walk_step(sparse, spec.steps[k]);
        EXPECT_LT((dense_next - densify(sparse).data()).cwiseAbs().maxCoeff(), 1e-14);
    }
    EXPECT_THROW(full_walk_matrix(make_protocol(ProtocolId::TwoStep2Q), 0), Error);
}

TEST(walk_matrix, unitarity_defect_detects_non_unitary) {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(3, 3);
    EXPECT_EQ(unitarity_defect(m), 0.0);
    m(0, 1) = 0.5;
    EXPECT_GT(unitarity_defect(m), 0.1);
}

TEST(apply_local, parallel_matches_serial_property) {
    std::mt19937_64 rng(61);
    for (auto id : {ProtocolId::Line1Q, ProtocolId::Cycle1Q, ProtocolId::TwoStep2Q}) {
        const auto spec = make_protocol(id, id == ProtocolId::Line1Q ? 3 : oracle_bound(id));
        for (std::size_t k = 0; k < 4; ++k) {
            const auto op = dense_walk_matrix(spec, k);
            const auto s = random_dense(spec.layout, rng);
            const auto a = apply_local(op, s);
            const auto b = apply_local_serial(op, s);
            EXPECT_LT((a.data() - b.data()).cwiseAbs().maxCoeff(), 1e-14);
            EXPECT_NEAR(a.data().squaredNorm(), 1.0, 1e-12);
        }
    }
}

TEST(dense_initial, matches_sparse_initial) {
    for (auto id : kAllProtocols) {
        const auto spec = make_protocol(id, oracle_bound(id));
        const auto p = random_payloads(payload_width(id), 1, 62).front();
        EXPECT_LT(max_entry_delta(sparsify(dense_initial(spec, p)), build_initial(spec, p)), 1e-15);
    }
}

TEST(oracle_check, all_protocols_agree) {
    for (auto id : kAllProtocols) {
        const auto r = oracle_check(id, random_payloads(payload_width(id), 3, 63));
        EXPECT_EQ(r.payloads, 3u);
        EXPECT_LT(r.unitarity, 1e-10) << protocol_key(id);
        EXPECT_LT(r.state_delta, 1e-10) << protocol_key(id);
    }
}

TEST(oracle_check, serial_dense_run_agrees) {
    const auto spec = make_protocol(ProtocolId::TwoStep2Q, oracle_bound(ProtocolId::TwoStep2Q));
    const auto p = generic_payload(4);
    const auto a = dense_run(spec, p, true);
    const auto b = dense_run(spec, p, false);
    EXPECT_LT((a.data() - b.data()).cwiseAbs().maxCoeff(), 1e-14);
}
