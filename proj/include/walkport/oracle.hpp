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

/**
 * @file
 * Dense state vectors and explicit walk-step matrices, used as an
 * independent check of the sparse engine.
 *
 * Each walk step is assembled literally as a sum over control outcomes of
 * Kronecker products of shift matrices and coin projectors, times the
 * Kronecker product of its pre-gates. Lattice shift matrices wrap around at
 * +-B so the finite matrix stays unitary; the protocols never reach the
 * boundary, which the sparse engine enforces by raising OutOfBounds.
 */

#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "walkport/protocols.hpp"

namespace walkport {

inline constexpr std::uint64_t kDenseDimensionCap = std::uint64_t{1} << 26;
inline constexpr std::uint64_t kFullMatrixCap = 4096;

/// Flat amplitudes in mixed-radix order: first register most significant,
/// digit = value - min_value.
class DenseState {
  public:
    DenseState() = default;
    DenseState(RegisterLayout layout, Eigen::VectorXcd data);

    const RegisterLayout &layout() const { return layout_; }
    const Eigen::VectorXcd &data() const { return data_; }
    Eigen::VectorXcd &data() { return data_; }

    std::uint64_t index_of(const BasisLabel &label) const;
    BasisLabel label_of(std::uint64_t index) const;

  private:
    RegisterLayout layout_;
    Eigen::VectorXcd data_;
};

/// Throws DimensionOverflow above `cap`.
DenseState densify(const SparseState &s, std::uint64_t cap = kDenseDimensionCap);
SparseState sparsify(const DenseState &d, double epsilon = kPruneTolerance);

/// Matrix of one walk step restricted to the registers it touches.
struct LocalOperator {
    /// Layout positions, ascending; the matrix uses the same mixed-radix order.
    std::vector<std::size_t> registers;
    Eigen::MatrixXcd matrix;
};

LocalOperator dense_walk_matrix(const ProtocolSpec &spec, std::size_t step);

/// The same step over the whole layout. Throws DimensionOverflow above `cap`.
Eigen::MatrixXcd full_walk_matrix(const ProtocolSpec &spec, std::size_t step,
                                  std::uint64_t cap = kFullMatrixCap);

/// max |U^dagger U - I|.
double unitarity_defect(const Eigen::MatrixXcd &u);

/// Gathers every fiber of the operator's registers into a matrix, multiplies
/// once and scatters back. Parallel over fibers.
DenseState apply_local(const LocalOperator &op, const DenseState &s);
/// Entry-by-entry reference for apply_local.
DenseState apply_local_serial(const LocalOperator &op, const DenseState &s);

/// Kronecker product of the initial factors. Throws ShapeMismatch if the
/// factors are not contiguous in layout order.
DenseState dense_initial(const ProtocolSpec &spec, const InputPayload &payload,
                         std::uint64_t cap = kDenseDimensionCap);

DenseState dense_run(const ProtocolSpec &spec, const InputPayload &payload, bool parallel = true);

/// Smallest lattice bound the oracle uses for each protocol: enough to hold
/// every reachable position.
int oracle_bound(ProtocolId id);

struct OracleReport {
    ProtocolId id = ProtocolId::Line1Q;
    int bound = 0;
    std::uint64_t dimension = 0;
    std::size_t payloads = 0;
    /// Worst unitarity defect over the four local step matrices.
    double unitarity = 0.0;
    /// Worst entrywise gap between sparse and dense pre-measurement states.
    double state_delta = 0.0;
};

OracleReport oracle_check(ProtocolId id, const std::vector<InputPayload> &payloads);

}  // namespace walkport
