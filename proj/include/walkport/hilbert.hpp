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
 * Sparse state vectors over tensor products of heterogeneous registers.
 *
 * A register is a bounded lattice (values -B..B), a cycle (values 0..N-1)
 * or a coin qubit (values 0, 1). A basis label holds one value per register
 * in layout order and labels are compared lexicographically, so iteration
 * and serialization order is fixed. States are values: every operation
 * returns a new state.
 */

#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "walkport/error.hpp"

namespace walkport {

using Amplitude = std::complex<double>;
using BasisLabel = std::vector<int>;

inline constexpr double kPruneTolerance = 1e-12;
inline constexpr double kNormTolerance = 1e-10;
inline constexpr int kDefaultLatticeBound = 8;

enum class RegisterKind { Lattice, Cycle, Coin };
enum class RegisterRole { Position, Coin };

struct RegisterSpec {
    std::string name;
    RegisterKind kind = RegisterKind::Coin;
    /// Lattice bound B or cycle modulus N; unused for coins.
    int extent = 0;

    static RegisterSpec lattice(std::string name, int bound);
    static RegisterSpec cycle(std::string name, int modulus);
    static RegisterSpec coin(std::string name);

    RegisterRole role() const {
        return kind == RegisterKind::Coin ? RegisterRole::Coin : RegisterRole::Position;
    }
    int min_value() const;
    int max_value() const;
    int dimension() const { return max_value() - min_value() + 1; }
    bool admits(int value) const { return value >= min_value() && value <= max_value(); }

    bool operator==(const RegisterSpec &) const = default;
};

class RegisterLayout {
  public:
    RegisterLayout() = default;
    explicit RegisterLayout(std::vector<RegisterSpec> registers);

    std::size_t size() const { return registers_.size(); }
    const RegisterSpec &operator[](std::size_t i) const { return registers_[i]; }
    const std::vector<RegisterSpec> &registers() const { return registers_; }
    auto begin() const { return registers_.begin(); }
    auto end() const { return registers_.end(); }

    /// Throws UnknownRegister.
    std::size_t index_of(std::string_view name) const;
    bool contains(std::string_view name) const;
    std::vector<std::size_t> indices_of(std::span<const std::string> names) const;

    /// Product of register dimensions; saturates at UINT64_MAX.
    std::uint64_t dimension() const;

    /// Layout with the given register positions removed, order preserved.
    RegisterLayout without(std::span<const std::size_t> removed) const;
    /// Same layout with every lattice bound replaced.
    RegisterLayout with_lattice_bound(int bound) const;

    bool valid_label(const BasisLabel &label) const;
    /// Throws InvalidLabel naming the first offending register.
    void check_label(const BasisLabel &label) const;

    bool operator==(const RegisterLayout &) const = default;

  private:
    std::vector<RegisterSpec> registers_;
};

/// 2x2 single-coin gate, row-major.
struct CoinGate {
    std::array<Amplitude, 4> m{};

    Amplitude operator()(int row, int col) const { return m[2 * row + col]; }
    bool is_unitary(double tol = kPruneTolerance) const;
    CoinGate operator*(const CoinGate &rhs) const;

    static CoinGate identity();
    static CoinGate hadamard();
    static CoinGate pauli_x();
    static CoinGate pauli_z();
};

class SparseState {
  public:
    using AmpMap = std::map<BasisLabel, Amplitude>;

    SparseState() = default;
    /// Validates every label and amplitude; does not prune.
    SparseState(RegisterLayout layout, AmpMap amps, double epsilon = kPruneTolerance);

    const RegisterLayout &layout() const { return layout_; }
    const AmpMap &amplitudes() const { return amps_; }
    double epsilon() const { return epsilon_; }
    std::size_t size() const { return amps_.size(); }
    bool empty() const { return amps_.empty(); }

    Amplitude amplitude(const BasisLabel &label) const;
    double norm_squared() const;
    bool is_normalized(double tol = kNormTolerance) const;

  private:
    RegisterLayout layout_;
    AmpMap amps_;
    double epsilon_ = kPruneTolerance;
};

SparseState basis_state(const RegisterLayout &layout, const BasisLabel &label);

/// Weighted sum of basis labels; duplicates merge additively, result pruned.
SparseState superpose(const RegisterLayout &layout,
                      const std::vector<std::pair<BasisLabel, Amplitude>> &terms,
                      double epsilon = kPruneTolerance);

/// <x|y>, conjugating x.
Amplitude inner_product(const SparseState &x, const SparseState &y);

SparseState apply_coin_gate(const SparseState &s, std::string_view coin, const CoinGate &gate);

SparseState prune(const SparseState &s);

SparseState scaled(const SparseState &s, Amplitude factor);
SparseState normalized(const SparseState &s);
/// alpha*x + beta*y over a common layout, pruned.
SparseState linear_combination(Amplitude alpha, const SparseState &x, Amplitude beta,
                               const SparseState &y);

/// Largest |x(l) - y(l)| over the union of supports. Layouts must carry the
/// same register names and kinds; lattice bounds may differ.
double max_entry_delta(const SparseState &x, const SparseState &y);

/// Same as max_entry_delta after rotating y by the global phase that best
/// aligns it with x.
double max_entry_delta_up_to_phase(const SparseState &x, const SparseState &y);

/// Relabels registers; `renames` maps old name to new name.
SparseState rename_registers(const SparseState &s,
                             const std::map<std::string, std::string> &renames);

nlohmann::json layout_to_json(const RegisterLayout &layout);
RegisterLayout layout_from_json(const nlohmann::json &j);
nlohmann::json state_to_json(const SparseState &s);
SparseState state_from_json(const nlohmann::json &j);

/// Human-readable ket such as "|-2,2,1,0,0,1>".
std::string format_label(const BasisLabel &label);

}  // namespace walkport
