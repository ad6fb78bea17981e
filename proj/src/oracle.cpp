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

#include <algorithm>
#include <map>
#include <set>

#include <unsupported/Eigen/KroneckerProduct>

namespace walkport {

namespace {

using Index = Eigen::Index;

std::vector<std::uint64_t> strides_of(const RegisterLayout &layout) {
    std::vector<std::uint64_t> strides(layout.size(), 1);
    for (std::size_t i = layout.size(); i-- > 1;) {
        strides[i - 1] = strides[i] * static_cast<std::uint64_t>(layout[i].dimension());
    }
    return strides;
}

/// Flat offsets of every joint value of `regs`, first register most significant.
std::vector<std::uint64_t> offsets_of(const RegisterLayout &layout,
                                      const std::vector<std::size_t> &regs,
                                      const std::vector<std::uint64_t> &strides) {
    std::vector<std::uint64_t> out{0};
    for (std::size_t r : regs) {
        std::vector<std::uint64_t> next;
        next.reserve(out.size() * static_cast<std::size_t>(layout[r].dimension()));
        for (std::uint64_t base : out) {
            for (int d = 0; d < layout[r].dimension(); ++d) {
                next.push_back(base + static_cast<std::uint64_t>(d) * strides[r]);
            }
        }
        out = std::move(next);
    }
    return out;
}

Eigen::MatrixXcd shift_matrix(const RegisterSpec &reg, int offset) {
    const int d = reg.dimension();
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
    for (int src = 0; src < d; ++src) {
        m(((src + offset) % d + d) % d, src) = 1.0;
    }
    return m;
}

Eigen::MatrixXcd coin_projector(int value) {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(2, 2);
    m(value, value) = 1.0;
    return m;
}

Eigen::MatrixXcd to_matrix(const CoinGate &g) {
    Eigen::MatrixXcd m(2, 2);
    m << g(0, 0), g(0, 1), g(1, 0), g(1, 1);
    return m;
}

Eigen::MatrixXcd kron_all(const std::vector<Eigen::MatrixXcd> &factors) {
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Identity(1, 1);
    for (const auto &f : factors) {
        out = Eigen::kroneckerProduct(out, f).eval();
    }
    return out;
}

std::vector<std::size_t> touched_registers(const RegisterLayout &layout, const WalkStep &step) {
    std::set<std::size_t> regs;
    for (const auto &g : step.pre_gates) {
        regs.insert(layout.index_of(g.coin));
    }
    for (const auto &cs : step.shifts) {
        regs.insert(layout.index_of(cs.position));
        for (const auto &c : cs.controls) {
            regs.insert(layout.index_of(c));
        }
    }
    return {regs.begin(), regs.end()};
}

/// E * G over `regs`: E sums, over every joint control outcome, the product
/// of the selected shifts with the projector on that outcome; G is the
/// product of the pre-gates.
Eigen::MatrixXcd build_operator(const RegisterLayout &layout, const WalkStep &step,
                                const std::vector<std::size_t> &regs) {
    std::vector<std::size_t> controls;
    for (const auto &cs : step.shifts) {
        check_rule_total(cs);
        for (const auto &c : cs.controls) {
            const std::size_t idx = layout.index_of(c);
            if (std::find(controls.begin(), controls.end(), idx) == controls.end()) {
                controls.push_back(idx);
            }
        }
    }

    std::uint64_t dim = 1;
    for (std::size_t r : regs) {
        dim *= static_cast<std::uint64_t>(layout[r].dimension());
    }
    Eigen::MatrixXcd e = Eigen::MatrixXcd::Zero(static_cast<Index>(dim), static_cast<Index>(dim));
    for (std::size_t word = 0; word < (std::size_t{1} << controls.size()); ++word) {
        std::map<std::size_t, int> value;
        for (std::size_t k = 0; k < controls.size(); ++k) {
            value[controls[k]] = static_cast<int>((word >> (controls.size() - 1 - k)) & 1U);
        }
        std::vector<Eigen::MatrixXcd> factors;
        for (std::size_t r : regs) {
            const RegisterSpec &reg = layout[r];
            if (auto it = value.find(r); it != value.end()) {
                factors.push_back(coin_projector(it->second));
                continue;
            }
            auto cs = std::find_if(step.shifts.begin(), step.shifts.end(),
                                   [&](const ConditionedShift &s) { return s.position == reg.name; });
            if (cs == step.shifts.end()) {
                factors.push_back(Eigen::MatrixXcd::Identity(reg.dimension(), reg.dimension()));
                continue;
            }
            std::vector<int> outcome;
            for (const auto &c : cs->controls) {
                outcome.push_back(value.at(layout.index_of(c)));
            }
            factors.push_back(shift_matrix(reg, shift_offset(cs->rule.at(outcome))));
        }
        e += kron_all(factors);
    }

    std::vector<Eigen::MatrixXcd> gates;
    for (std::size_t r : regs) {
        const RegisterSpec &reg = layout[r];
        Eigen::MatrixXcd g = Eigen::MatrixXcd::Identity(reg.dimension(), reg.dimension());
        for (const auto &op : step.pre_gates) {
            if (op.coin == reg.name) {
                g = (to_matrix(op.gate) * g).eval();
            }
        }
        gates.push_back(std::move(g));
    }
    return e * kron_all(gates);
}

}  // namespace

DenseState::DenseState(RegisterLayout layout, Eigen::VectorXcd data)
    : layout_(std::move(layout)), data_(std::move(data)) {
    if (static_cast<std::uint64_t>(data_.size()) != layout_.dimension()) {
        throw Error(ErrorCode::ShapeMismatch, "dense data length does not match layout");
    }
}

std::uint64_t DenseState::index_of(const BasisLabel &label) const {
    layout_.check_label(label);
    std::uint64_t index = 0;
    for (std::size_t i = 0; i < label.size(); ++i) {
        index = index * static_cast<std::uint64_t>(layout_[i].dimension()) +
                static_cast<std::uint64_t>(label[i] - layout_[i].min_value());
    }
    return index;
}

BasisLabel DenseState::label_of(std::uint64_t index) const {
    BasisLabel label(layout_.size());
    for (std::size_t i = layout_.size(); i-- > 0;) {
        const auto d = static_cast<std::uint64_t>(layout_[i].dimension());
        label[i] = static_cast<int>(index % d) + layout_[i].min_value();
        index /= d;
    }
    return label;
}

DenseState densify(const SparseState &s, std::uint64_t cap) {
    const std::uint64_t dim = s.layout().dimension();
    if (dim > cap) {
        throw Error(ErrorCode::DimensionOverflow,
                    "dense dimension " + std::to_string(dim) + " exceeds cap " + std::to_string(cap));
    }
    DenseState d(s.layout(), Eigen::VectorXcd::Zero(static_cast<Index>(dim)));
    for (const auto &[label, amp] : s.amplitudes()) {
        d.data()(static_cast<Index>(d.index_of(label))) = amp;
    }
    return d;
}

SparseState sparsify(const DenseState &d, double epsilon) {
    SparseState::AmpMap amps;
    for (Index i = 0; i < d.data().size(); ++i) {
        if (std::abs(d.data()(i)) >= epsilon) {
            amps.emplace(d.label_of(static_cast<std::uint64_t>(i)), d.data()(i));
        }
    }
    return SparseState(d.layout(), std::move(amps), epsilon);
}

LocalOperator dense_walk_matrix(const ProtocolSpec &spec, std::size_t step) {
    const WalkStep &w = spec.steps.at(step);
    LocalOperator op;
    op.registers = touched_registers(spec.layout, w);
    op.matrix = build_operator(spec.layout, w, op.registers);
    return op;
}

Eigen::MatrixXcd full_walk_matrix(const ProtocolSpec &spec, std::size_t step, std::uint64_t cap) {
    const std::uint64_t dim = spec.layout.dimension();
    if (dim > cap) {
        throw Error(ErrorCode::DimensionOverflow,
                    "full matrix dimension " + std::to_string(dim) + " exceeds cap " +
                        std::to_string(cap));
    }
    std::vector<std::size_t> all(spec.layout.size());
    for (std::size_t i = 0; i < all.size(); ++i) {
        all[i] = i;
    }
    return build_operator(spec.layout, spec.steps.at(step), all);
}

double unitarity_defect(const Eigen::MatrixXcd &u) {
    const Eigen::MatrixXcd gram = u.adjoint() * u;
    return (gram - Eigen::MatrixXcd::Identity(u.rows(), u.cols())).cwiseAbs().maxCoeff();
}

DenseState apply_local(const LocalOperator &op, const DenseState &s) {
    const RegisterLayout &layout = s.layout();
    const auto strides = strides_of(layout);
    std::vector<std::size_t> rest;
    for (std::size_t i = 0; i < layout.size(); ++i) {
        if (!std::binary_search(op.registers.begin(), op.registers.end(), i)) {
            rest.push_back(i);
        }
    }
    const auto local = offsets_of(layout, op.registers, strides);
    const auto fibers = offsets_of(layout, rest, strides);
    const auto l = static_cast<Index>(local.size());
    const auto r = static_cast<Index>(fibers.size());
    if (op.matrix.rows() != l || op.matrix.cols() != l) {
        throw Error(ErrorCode::ShapeMismatch, "local operator does not match its registers");
    }

    Eigen::MatrixXcd gathered(l, r);
#pragma omp parallel for schedule(static)
    for (Index j = 0; j < r; ++j) {
        for (Index i = 0; i < l; ++i) {
            gathered(i, j) = s.data()(static_cast<Index>(local[i] + fibers[j]));
        }
    }
    const Eigen::MatrixXcd moved = op.matrix * gathered;
    DenseState out(layout, Eigen::VectorXcd::Zero(s.data().size()));
#pragma omp parallel for schedule(static)
    for (Index j = 0; j < r; ++j) {
        for (Index i = 0; i < l; ++i) {
            out.data()(static_cast<Index>(local[i] + fibers[j])) = moved(i, j);
        }
    }
    return out;
}

DenseState apply_local_serial(const LocalOperator &op, const DenseState &s) {
    const RegisterLayout &layout = s.layout();
    const auto strides = strides_of(layout);
    std::vector<std::size_t> rest;
    for (std::size_t i = 0; i < layout.size(); ++i) {
        if (!std::binary_search(op.registers.begin(), op.registers.end(), i)) {
            rest.push_back(i);
        }
    }
    const auto local = offsets_of(layout, op.registers, strides);
    const auto fibers = offsets_of(layout, rest, strides);
    if (op.matrix.rows() != static_cast<Index>(local.size())) {
        throw Error(ErrorCode::ShapeMismatch, "local operator does not match its registers");
    }
    DenseState out(layout, Eigen::VectorXcd::Zero(s.data().size()));
    for (std::uint64_t base : fibers) {
        for (std::size_t i = 0; i < local.size(); ++i) {
            Amplitude acc{};
            for (std::size_t j = 0; j < local.size(); ++j) {
                acc += op.matrix(static_cast<Index>(i), static_cast<Index>(j)) *
                       s.data()(static_cast<Index>(base + local[j]));
            }
            out.data()(static_cast<Index>(base + local[i])) = acc;
        }
    }
    return out;
}

DenseState dense_initial(const ProtocolSpec &spec, const InputPayload &payload,
                         std::uint64_t cap) {
    check_payload(spec, payload);
    const RegisterLayout &layout = spec.layout;
    if (layout.dimension() > cap) {
        throw Error(ErrorCode::DimensionOverflow, "initial state exceeds dense cap");
    }
    Eigen::VectorXcd acc = Eigen::VectorXcd::Ones(1);
    std::size_t next = 0;
    for (const auto &f : spec.initial) {
        std::vector<RegisterSpec> regs;
        for (const auto &name : f.registers) {
            if (layout.index_of(name) != next++) {
                throw Error(ErrorCode::ShapeMismatch, "initial factors are not in layout order");
            }
            regs.push_back(layout[layout.index_of(name)]);
        }
        const RegisterLayout sub(regs);
        Eigen::VectorXcd v;
        switch (f.source) {
            case InitialFactor::Source::Alice:
                v = Eigen::Map<const Eigen::VectorXcd>(payload.alice.data(),
                                                       static_cast<Index>(payload.alice.size()));
                break;
            case InitialFactor::Source::Bob:
                v = Eigen::Map<const Eigen::VectorXcd>(payload.bob.data(),
                                                       static_cast<Index>(payload.bob.size()));
                break;
            case InitialFactor::Source::Fixed: {
                DenseState part(sub, Eigen::VectorXcd::Zero(static_cast<Index>(sub.dimension())));
                for (const auto &[label, amp] : f.fixed) {
                    part.data()(static_cast<Index>(part.index_of(label))) += amp;
                }
                v = part.data();
                break;
            }
        }
        if (static_cast<std::uint64_t>(v.size()) != sub.dimension()) {
            throw Error(ErrorCode::ShapeMismatch, "initial factor has the wrong dimension");
        }
        acc = Eigen::kroneckerProduct(acc, v).eval();
    }
    if (next != layout.size()) {
        throw Error(ErrorCode::ShapeMismatch, "initial factors do not cover the layout");
    }
    return DenseState(layout, std::move(acc));
}

DenseState dense_run(const ProtocolSpec &spec, const InputPayload &payload, bool parallel) {
    DenseState state = dense_initial(spec, payload);
    for (std::size_t k = 0; k < spec.steps.size(); ++k) {
        const LocalOperator op = dense_walk_matrix(spec, k);
        state = parallel ? apply_local(op, state) : apply_local_serial(op, state);
    }
    return state;
}

int oracle_bound(ProtocolId id) {
    switch (id) {
        case ProtocolId::Line1Q: return kDefaultLatticeBound;
        case ProtocolId::Cycle1Q: return kDefaultLatticeBound;  // no lattice registers
        case ProtocolId::SingleStep2Q: return 2;
        case ProtocolId::TwoStep2Q: return 4;
    }
    return kDefaultLatticeBound;
}

OracleReport oracle_check(ProtocolId id, const std::vector<InputPayload> &payloads) {
    const ProtocolSpec oracle_spec = make_protocol(id, oracle_bound(id));
    const ProtocolSpec sparse_spec = make_protocol(id);
    OracleReport report;
    report.id = id;
    report.bound = oracle_bound(id);
    report.dimension = oracle_spec.layout.dimension();
    report.payloads = payloads.size();
    for (std::size_t k = 0; k < oracle_spec.steps.size(); ++k) {
        report.unitarity =
            std::max(report.unitarity, unitarity_defect(dense_walk_matrix(oracle_spec, k).matrix));
    }
    for (const auto &p : payloads) {
        const SparseState dense = sparsify(dense_run(oracle_spec, p));
        const SparseState sparse = run_walks(sparse_spec, p);
        report.state_delta = std::max(report.state_delta, max_entry_delta(sparse, dense));
    }
    return report;
}

}  // namespace walkport
