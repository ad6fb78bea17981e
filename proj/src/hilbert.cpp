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

#include "walkport/hilbert.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace walkport {

RegisterSpec RegisterSpec::lattice(std::string name, int bound) {
    if (bound < 1) {
        throw Error(ErrorCode::InvalidLabel, "lattice bound must be positive for " + name);
    }
    return RegisterSpec{std::move(name), RegisterKind::Lattice, bound};
}

RegisterSpec RegisterSpec::cycle(std::string name, int modulus) {
    if (modulus < 1) {
        throw Error(ErrorCode::InvalidLabel, "cycle modulus must be positive for " + name);
    }
    return RegisterSpec{std::move(name), RegisterKind::Cycle, modulus};
}

RegisterSpec RegisterSpec::coin(std::string name) {
    return RegisterSpec{std::move(name), RegisterKind::Coin, 2};
}

int RegisterSpec::min_value() const {
    switch (kind) {
        case RegisterKind::Lattice: return -extent;
        case RegisterKind::Cycle: return 0;
        case RegisterKind::Coin: return 0;
    }
    return 0;
}

int RegisterSpec::max_value() const {
    switch (kind) {
        case RegisterKind::Lattice: return extent;
        case RegisterKind::Cycle: return extent - 1;
        case RegisterKind::Coin: return 1;
    }
    return 0;
}

RegisterLayout::RegisterLayout(std::vector<RegisterSpec> registers)
    : registers_(std::move(registers)) {
    for (std::size_t i = 0; i < registers_.size(); ++i) {
        for (std::size_t j = i + 1; j < registers_.size(); ++j) {
            if (registers_[i].name == registers_[j].name) {
                throw Error(ErrorCode::LayoutMismatch,
                            "duplicate register name " + registers_[i].name);
            }
        }
    }
}

std::size_t RegisterLayout::index_of(std::string_view name) const {
    for (std::size_t i = 0; i < registers_.size(); ++i) {
        if (registers_[i].name == name) {
            return i;
        }
    }
    throw Error(ErrorCode::UnknownRegister, "no register named " + std::string(name));
}

bool RegisterLayout::contains(std::string_view name) const {
    return std::any_of(registers_.begin(), registers_.end(),
                       [&](const RegisterSpec &r) { return r.name == name; });
}

std::vector<std::size_t> RegisterLayout::indices_of(std::span<const std::string> names) const {
    std::vector<std::size_t> out;
    out.reserve(names.size());
    for (const auto &n : names) {
        out.push_back(index_of(n));
    }
    return out;
}

std::uint64_t RegisterLayout::dimension() const {
    std::uint64_t dim = 1;
    for (const auto &r : registers_) {
        auto d = static_cast<std::uint64_t>(r.dimension());
        if (dim > std::numeric_limits<std::uint64_t>::max() / d) {
            return std::numeric_limits<std::uint64_t>::max();
        }
        dim *= d;
    }
    return dim;
}

RegisterLayout RegisterLayout::without(std::span<const std::size_t> removed) const {
    std::vector<RegisterSpec> kept;
    for (std::size_t i = 0; i < registers_.size(); ++i) {
        if (std::find(removed.begin(), removed.end(), i) == removed.end()) {
            kept.push_back(registers_[i]);
        }
    }
    return RegisterLayout(std::move(kept));
}

RegisterLayout RegisterLayout::with_lattice_bound(int bound) const {
    std::vector<RegisterSpec> regs = registers_;
    for (auto &r : regs) {
        if (r.kind == RegisterKind::Lattice) {
            r = RegisterSpec::lattice(r.name, bound);
        }
    }
    return RegisterLayout(std::move(regs));
}

bool RegisterLayout::valid_label(const BasisLabel &label) const {
    if (label.size() != registers_.size()) {
        return false;
    }
    for (std::size_t i = 0; i < label.size(); ++i) {
        if (!registers_[i].admits(label[i])) {
            return false;
        }
    }
    return true;
}

void RegisterLayout::check_label(const BasisLabel &label) const {
    if (label.size() != registers_.size()) {
        throw Error(ErrorCode::InvalidLabel,
                    "label " + format_label(label) + " has " + std::to_string(label.size()) +
                        " values for " + std::to_string(registers_.size()) + " registers");
    }
    for (std::size_t i = 0; i < label.size(); ++i) {
        if (!registers_[i].admits(label[i])) {
            throw Error(ErrorCode::InvalidLabel,
                        "value " + std::to_string(label[i]) + " outside register " +
                            registers_[i].name + " in " + format_label(label));
        }
    }
}

bool CoinGate::is_unitary(double tol) const {
    // G^dagger G == I
    for (int r = 0; r < 2; ++r) {
        for (int c = 0; c < 2; ++c) {
            Amplitude acc = std::conj((*this)(0, r)) * (*this)(0, c) +
                            std::conj((*this)(1, r)) * (*this)(1, c);
            Amplitude expected = r == c ? 1.0 : 0.0;
            if (std::abs(acc - expected) > tol) {
                return false;
            }
        }
    }
    return true;
}

CoinGate CoinGate::operator*(const CoinGate &rhs) const {
    CoinGate out;
    for (int r = 0; r < 2; ++r) {
        for (int c = 0; c < 2; ++c) {
            out.m[2 * r + c] = (*this)(r, 0) * rhs(0, c) + (*this)(r, 1) * rhs(1, c);
        }
    }
    return out;
}

CoinGate CoinGate::identity() { return CoinGate{{1.0, 0.0, 0.0, 1.0}}; }

CoinGate CoinGate::hadamard() {
    const double h = 1.0 / std::sqrt(2.0);
    return CoinGate{{h, h, h, -h}};
}

CoinGate CoinGate::pauli_x() { return CoinGate{{0.0, 1.0, 1.0, 0.0}}; }

CoinGate CoinGate::pauli_z() { return CoinGate{{1.0, 0.0, 0.0, -1.0}}; }

SparseState::SparseState(RegisterLayout layout, AmpMap amps, double epsilon)
    : layout_(std::move(layout)), amps_(std::move(amps)), epsilon_(epsilon) {
    for (const auto &[label, amp] : amps_) {
        layout_.check_label(label);
        if (!std::isfinite(amp.real()) || !std::isfinite(amp.imag())) {
            throw Error(ErrorCode::NonFiniteAmplitude, "at " + format_label(label));
        }
    }
}

Amplitude SparseState::amplitude(const BasisLabel &label) const {
    auto it = amps_.find(label);
    return it == amps_.end() ? Amplitude{} : it->second;
}

double SparseState::norm_squared() const {
    double acc = 0.0;
    for (const auto &[label, amp] : amps_) {
        acc += std::norm(amp);
    }
    return acc;
}

bool SparseState::is_normalized(double tol) const { return std::abs(norm_squared() - 1.0) < tol; }

namespace {

SparseState::AmpMap pruned_map(SparseState::AmpMap amps, double epsilon) {
    std::erase_if(amps, [epsilon](const auto &kv) { return std::abs(kv.second) < epsilon; });
    return amps;
}

void require_same_layout(const SparseState &x, const SparseState &y) {
    if (!(x.layout() == y.layout())) {
        throw Error(ErrorCode::LayoutMismatch, "states live on different register layouts");
    }
}

void require_compatible_registers(const RegisterLayout &x, const RegisterLayout &y) {
    bool same = x.size() == y.size();
    for (std::size_t i = 0; same && i < x.size(); ++i) {
        same = x[i].name == y[i].name && x[i].kind == y[i].kind;
    }
    if (!same) {
        throw Error(ErrorCode::LayoutMismatch, "register names or kinds differ");
    }
}

}  // namespace

SparseState basis_state(const RegisterLayout &layout, const BasisLabel &label) {
    layout.check_label(label);
    return SparseState(layout, {{label, Amplitude{1.0}}});
}

SparseState superpose(const RegisterLayout &layout,
                      const std::vector<std::pair<BasisLabel, Amplitude>> &terms, double epsilon) {
    if (terms.empty()) {
        throw Error(ErrorCode::EmptyState, "superpose needs at least one term");
    }
    SparseState::AmpMap amps;
    for (const auto &[label, amp] : terms) {
        layout.check_label(label);
        amps[label] += amp;
    }
    return SparseState(layout, pruned_map(std::move(amps), epsilon), epsilon);
}

Amplitude inner_product(const SparseState &x, const SparseState &y) {
    require_same_layout(x, y);
    const auto &small = x.size() <= y.size() ? x.amplitudes() : y.amplitudes();
    const auto &large = x.size() <= y.size() ? y.amplitudes() : x.amplitudes();
    const bool x_is_small = x.size() <= y.size();
    Amplitude acc{};
    for (const auto &[label, amp] : small) {
        auto it = large.find(label);
        if (it == large.end()) {
            continue;
        }
        acc += x_is_small ? std::conj(amp) * it->second : std::conj(it->second) * amp;
    }
    return acc;
}

SparseState apply_coin_gate(const SparseState &s, std::string_view coin, const CoinGate &gate) {
    const std::size_t idx = s.layout().index_of(coin);
    if (s.layout()[idx].kind != RegisterKind::Coin) {
        throw Error(ErrorCode::WrongRegisterKind,
                    "register " + std::string(coin) + " is not a coin");
    }
    if (!gate.is_unitary()) {
        throw Error(ErrorCode::NotUnitary, "coin gate on " + std::string(coin));
    }
    SparseState::AmpMap out;
    for (const auto &[label, amp] : s.amplitudes()) {
        const int in = label[idx];
        BasisLabel target = label;
        for (int row = 0; row < 2; ++row) {
            const Amplitude g = gate(row, in);
            if (g == Amplitude{}) {
                continue;
            }
            target[idx] = row;
            out[target] += g * amp;
        }
    }
    return SparseState(s.layout(), pruned_map(std::move(out), s.epsilon()), s.epsilon());
}

SparseState prune(const SparseState &s) {
    return SparseState(s.layout(), pruned_map(s.amplitudes(), s.epsilon()), s.epsilon());
}

SparseState scaled(const SparseState &s, Amplitude factor) {
    SparseState::AmpMap out = s.amplitudes();
    for (auto &[label, amp] : out) {
        amp *= factor;
    }
    return SparseState(s.layout(), pruned_map(std::move(out), s.epsilon()), s.epsilon());
}

SparseState normalized(const SparseState &s) {
    const double n = std::sqrt(s.norm_squared());
    if (n == 0.0) {
        throw Error(ErrorCode::EmptyState, "cannot normalize the zero state");
    }
    return scaled(s, 1.0 / n);
}

SparseState linear_combination(Amplitude alpha, const SparseState &x, Amplitude beta,
                               const SparseState &y) {
    require_same_layout(x, y);
    SparseState::AmpMap out;
    for (const auto &[label, amp] : x.amplitudes()) {
        out[label] += alpha * amp;
    }
    for (const auto &[label, amp] : y.amplitudes()) {
        out[label] += beta * amp;
    }
    return SparseState(x.layout(), pruned_map(std::move(out), x.epsilon()), x.epsilon());
}

double max_entry_delta(const SparseState &x, const SparseState &y) {
    require_compatible_registers(x.layout(), y.layout());
    double worst = 0.0;
    for (const auto &[label, amp] : x.amplitudes()) {
        worst = std::max(worst, std::abs(amp - y.amplitude(label)));
    }
    for (const auto &[label, amp] : y.amplitudes()) {
        if (!x.amplitudes().contains(label)) {
            worst = std::max(worst, std::abs(amp));
        }
    }
    return worst;
}

double max_entry_delta_up_to_phase(const SparseState &x, const SparseState &y) {
    require_compatible_registers(x.layout(), y.layout());
    Amplitude overlap{};
    for (const auto &[label, amp] : y.amplitudes()) {
        overlap += std::conj(amp) * x.amplitude(label);
    }
    Amplitude phase{1.0};
    if (std::abs(overlap) > 0.0) {
        phase = overlap / std::abs(overlap);
    }
    SparseState::AmpMap rotated;
    for (const auto &[label, amp] : y.amplitudes()) {
        rotated[label] = amp * phase;
    }
    return max_entry_delta(x, SparseState(y.layout(), std::move(rotated), y.epsilon()));
}

SparseState rename_registers(const SparseState &s,
                             const std::map<std::string, std::string> &renames) {
    std::vector<RegisterSpec> regs = s.layout().registers();
    for (auto &r : regs) {
        if (auto it = renames.find(r.name); it != renames.end()) {
            r.name = it->second;
        }
    }
    return SparseState(RegisterLayout(std::move(regs)), s.amplitudes(), s.epsilon());
}

nlohmann::json layout_to_json(const RegisterLayout &layout) {
    nlohmann::json regs = nlohmann::json::array();
    for (const auto &r : layout) {
        nlohmann::json d;
        d["name"] = r.name;
        switch (r.kind) {
            case RegisterKind::Lattice:
                d["kind"] = "lattice";
                d["bound"] = r.extent;
                break;
            case RegisterKind::Cycle:
                d["kind"] = "cycle";
                d["modulus"] = r.extent;
                break;
            case RegisterKind::Coin:
                d["kind"] = "coin";
                break;
        }
        d["role"] = r.role() == RegisterRole::Position ? "position" : "coin";
        regs.push_back(std::move(d));
    }
    return regs;
}

RegisterLayout layout_from_json(const nlohmann::json &j) {
    std::vector<RegisterSpec> regs;
    try {
        for (const auto &d : j) {
            const auto kind = d.at("kind").get<std::string>();
            const auto name = d.at("name").get<std::string>();
            if (kind == "lattice") {
                regs.push_back(RegisterSpec::lattice(name, d.at("bound").get<int>()));
            } else if (kind == "cycle") {
                regs.push_back(RegisterSpec::cycle(name, d.at("modulus").get<int>()));
            } else if (kind == "coin") {
                regs.push_back(RegisterSpec::coin(name));
            } else {
                throw Error(ErrorCode::ParseError, "unknown register kind " + kind);
            }
        }
    } catch (const nlohmann::json::exception &e) {
        throw Error(ErrorCode::ParseError, e.what());
    }
    return RegisterLayout(std::move(regs));
}

nlohmann::json state_to_json(const SparseState &s) {
    nlohmann::json amps = nlohmann::json::array();
    for (const auto &[label, amp] : s.amplitudes()) {
        amps.push_back({{"label", label}, {"re", amp.real()}, {"im", amp.imag()}});
    }
    return {{"layout", layout_to_json(s.layout())}, {"amps", std::move(amps)}};
}

SparseState state_from_json(const nlohmann::json &j) {
    RegisterLayout layout = layout_from_json(j.at("layout"));
    SparseState::AmpMap amps;
    try {
        for (const auto &a : j.at("amps")) {
            amps[a.at("label").get<BasisLabel>()] +=
                Amplitude{a.at("re").get<double>(), a.at("im").get<double>()};
        }
    } catch (const nlohmann::json::exception &e) {
        throw Error(ErrorCode::ParseError, e.what());
    }
    return SparseState(std::move(layout), std::move(amps));
}

std::string format_label(const BasisLabel &label) {
    std::ostringstream os;
    os << '|';
    for (std::size_t i = 0; i < label.size(); ++i) {
        if (i) {
            os << ',';
        }
        os << label[i];
    }
    os << '>';
    return os.str();
}

}  // namespace walkport
