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

#include "walkport/measure.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>

namespace walkport {

namespace {

std::string join_values(const BasisLabel &label, const char *sep) {
    std::ostringstream os;
    for (std::size_t i = 0; i < label.size(); ++i) {
        if (i) {
            os << sep;
        }
        os << label[i];
    }
    return os.str();
}

std::string sum_display(const std::vector<std::pair<BasisLabel, Amplitude>> &terms) {
    if (terms.size() == 1) {
        return format_label(terms.front().first);
    }
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < terms.size(); ++i) {
        const bool negative = terms[i].second.real() < 0.0;
        if (i || negative) {
            os << (negative ? '-' : '+');
        }
        os << format_label(terms[i].first);
    }
    os << ')';
    const auto n = terms.size();
    const auto root = static_cast<std::size_t>(std::lround(std::sqrt(static_cast<double>(n))));
    if (root * root == n) {
        os << '/' << root;
    } else {
        os << "/sqrt" << n;
    }
    return os.str();
}

}  // namespace

void check_projector(const ProjectorSpec &p, double tol) {
    double norm = 0.0;
    std::set<BasisLabel> seen;
    for (const auto &[label, amp] : p.terms) {
        if (label.size() != p.targets.size()) {
            throw Error(ErrorCode::MalformedProjector,
                        p.name + ": term " + format_label(label) + " does not match targets");
        }
        if (!seen.insert(label).second) {
            throw Error(ErrorCode::MalformedProjector,
                        p.name + ": repeated term " + format_label(label));
        }
        norm += std::norm(amp);
    }
    if (std::abs(norm - 1.0) > tol) {
        throw Error(ErrorCode::MalformedProjector,
                    p.name + ": squared norm " + std::to_string(norm) + " is not 1");
    }
}

void check_projector_family(std::span<const ProjectorSpec> family, double tol) {
    for (const auto &p : family) {
        check_projector(p, tol);
    }
    for (std::size_t i = 0; i < family.size(); ++i) {
        std::map<BasisLabel, Amplitude> lhs(family[i].terms.begin(), family[i].terms.end());
        for (std::size_t j = i + 1; j < family.size(); ++j) {
            if (family[i].targets != family[j].targets) {
                throw Error(ErrorCode::MalformedProjector,
                            family[i].name + " and " + family[j].name + " target different registers");
            }
            Amplitude overlap{};
            for (const auto &[label, amp] : family[j].terms) {
                if (auto it = lhs.find(label); it != lhs.end()) {
                    overlap += std::conj(it->second) * amp;
                }
            }
            if (std::abs(overlap) > tol) {
                throw Error(ErrorCode::MalformedProjector,
                            family[i].name + " and " + family[j].name + " are not orthogonal");
            }
        }
    }
}

Projection project(const SparseState &s, const ProjectorSpec &p) {
    const RegisterLayout &layout = s.layout();
    const std::vector<std::size_t> targets = layout.indices_of(p.targets);
    std::vector<std::size_t> rest;
    for (std::size_t i = 0; i < layout.size(); ++i) {
        if (std::find(targets.begin(), targets.end(), i) == targets.end()) {
            rest.push_back(i);
        }
    }

    std::map<BasisLabel, Amplitude> bra;
    for (const auto &[label, amp] : p.terms) {
        if (label.size() != targets.size()) {
            throw Error(ErrorCode::MalformedProjector, p.name + ": term arity mismatch");
        }
        bra[label] += std::conj(amp);
    }

    SparseState::AmpMap out;
    BasisLabel key(targets.size());
    BasisLabel remaining(rest.size());
    for (const auto &[label, amp] : s.amplitudes()) {
        for (std::size_t k = 0; k < targets.size(); ++k) {
            key[k] = label[targets[k]];
        }
        auto it = bra.find(key);
        if (it == bra.end()) {
            continue;
        }
        for (std::size_t k = 0; k < rest.size(); ++k) {
            remaining[k] = label[rest[k]];
        }
        out[remaining] += it->second * amp;
    }

    Projection result;
    for (const auto &[label, amp] : out) {
        result.probability += std::norm(amp);
    }
    RegisterLayout residual_layout = layout.without(targets);
    const double eps = s.epsilon();
    if (result.probability > eps * eps) {
        const double scale = 1.0 / std::sqrt(result.probability);
        for (auto &[label, amp] : out) {
            amp *= scale;
        }
        std::erase_if(out, [eps](const auto &kv) { return std::abs(kv.second) < eps; });
        result.residual = SparseState(std::move(residual_layout), std::move(out), eps);
    } else {
        result.residual = SparseState(std::move(residual_layout), {}, eps);
        result.vacuous = true;
    }
    return result;
}

std::vector<PositionFamily> generate_position_families(
    const RegisterLayout &layout, const std::vector<std::string> &position_registers,
    const std::vector<PositionComponent> &components, const std::string &prefix,
    PositionBasis basis) {
    std::vector<RegisterSpec> regs;
    for (const auto &name : position_registers) {
        regs.push_back(layout[layout.index_of(name)]);
    }
    std::vector<std::size_t> comp_reg;
    for (const auto &c : components) {
        auto it = std::find(position_registers.begin(), position_registers.end(), c.reg);
        if (it == position_registers.end()) {
            throw Error(ErrorCode::UnknownRegister, "component on non-position register " + c.reg);
        }
        comp_reg.push_back(static_cast<std::size_t>(it - position_registers.begin()));
    }
    auto reduce = [&](std::size_t r, int v) {
        if (regs[r].kind == RegisterKind::Cycle) {
            const int n = regs[r].extent;
            return ((v % n) + n) % n;
        }
        return v;
    };

    const std::size_t n_comp = components.size();
    std::vector<PositionFamily> families;
    for (std::size_t mask = 0; mask < (std::size_t{1} << n_comp); ++mask) {
        std::vector<std::size_t> active;
        int index = 0;
        for (std::size_t j = 0; j < n_comp; ++j) {
            if ((mask >> j) & 1U) {
                active.push_back(j);
                index += components[j].bit;
            }
        }
        // A component is sign-bearing when +m and -m land on different sites.
        std::vector<std::size_t> signed_comps;
        for (std::size_t j : active) {
            const int m = components[j].magnitude;
            if (reduce(comp_reg[j], m) != reduce(comp_reg[j], -m)) {
                signed_comps.push_back(j);
            }
        }

        auto label_for = [&](std::size_t signs) {
            BasisLabel label(regs.size(), 0);
            for (std::size_t k = 0; k < active.size(); ++k) {
                const std::size_t j = active[k];
                auto pos = std::find(signed_comps.begin(), signed_comps.end(), j);
                bool negative = false;
                if (pos != signed_comps.end()) {
                    const auto rank = static_cast<std::size_t>(pos - signed_comps.begin());
                    negative = (signs >> (signed_comps.size() - 1 - rank)) & 1U;
                }
                label[comp_reg[j]] += negative ? -components[j].magnitude : components[j].magnitude;
            }
            for (std::size_t r = 0; r < regs.size(); ++r) {
                label[r] = reduce(r, label[r]);
                if (!regs[r].admits(label[r])) {
                    throw Error(ErrorCode::OutOfBounds,
                                "family member outside register " + regs[r].name);
                }
            }
            return label;
        };

        PositionFamily fam;
        fam.index = index;
        fam.registers = position_registers;
        const std::size_t n_signs = std::size_t{1} << signed_comps.size();
        std::vector<std::pair<BasisLabel, std::size_t>> members;  // label, sign word
        for (std::size_t signs = 0; signs < n_signs; ++signs) {
            members.emplace_back(label_for(signs), signs);
        }
        std::sort(members.begin(), members.end(), [](const auto &a, const auto &b) { return a.first > b.first; });
        for (const auto &m : members) {
            fam.members.push_back(m.first);
        }
        fam.name = prefix.empty() ? join_values(label_for(0), "") : prefix + std::to_string(index);
        {
            std::ostringstream os;
            os << '{';
            for (std::size_t i = 0; i < fam.members.size(); ++i) {
                os << (i ? "," : "") << format_label(fam.members[i]);
            }
            os << '}';
            fam.display = os.str();
        }

        if (basis == PositionBasis::Superposed) {
            const double amp = 1.0 / std::sqrt(static_cast<double>(members.size()));
            for (std::size_t pattern = 0; pattern < n_signs; ++pattern) {
                ProjectorSpec p;
                p.targets = position_registers;
                std::string signs_text;
                for (std::size_t k = 0; k < signed_comps.size(); ++k) {
                    signs_text += ((pattern >> (signed_comps.size() - 1 - k)) & 1U) ? '-' : '+';
                }
                p.name = signed_comps.empty() ? fam.name : fam.name + "[" + signs_text + "]";
                for (const auto &[label, word] : members) {
                    const int parity = std::popcount(pattern & word) & 1;
                    p.terms.emplace_back(label, parity ? -amp : amp);
                }
                p.display = sum_display(p.terms);
                fam.outcomes.push_back(std::move(p));
            }
        } else {
            for (const auto &label : fam.members) {
                ProjectorSpec p;
                p.targets = position_registers;
                p.name = fam.name + "@" + join_values(label, ",");
                p.terms.emplace_back(label, 1.0);
                p.display = format_label(label);
                fam.outcomes.push_back(std::move(p));
            }
        }
        families.push_back(std::move(fam));
    }
    std::sort(families.begin(), families.end(),
              [](const PositionFamily &a, const PositionFamily &b) { return a.index < b.index; });
    return families;
}

std::vector<ProjectorSpec> generate_coin_outcomes(
    const std::vector<std::vector<std::string>> &groups) {
    std::vector<std::string> coins;
    bool use_comma = false;
    for (const auto &g : groups) {
        coins.insert(coins.end(), g.begin(), g.end());
        use_comma = use_comma || g.size() > 1;
    }
    const std::size_t n = coins.size();
    const double amp = 1.0 / std::sqrt(static_cast<double>(std::size_t{1} << n));
    std::vector<ProjectorSpec> out;
    for (std::size_t pattern = 0; pattern < (std::size_t{1} << n); ++pattern) {
        ProjectorSpec p;
        p.targets = coins;
        std::size_t bit = 0;
        for (std::size_t g = 0; g < groups.size(); ++g) {
            if (g && use_comma) {
                p.name += ',';
            }
            for (std::size_t k = 0; k < groups[g].size(); ++k, ++bit) {
                p.name += ((pattern >> (n - 1 - bit)) & 1U) ? '-' : '+';
            }
        }
        for (std::size_t word = 0; word < (std::size_t{1} << n); ++word) {
            BasisLabel label(n);
            for (std::size_t k = 0; k < n; ++k) {
                label[k] = static_cast<int>((word >> (n - 1 - k)) & 1U);
            }
            const int parity = std::popcount(pattern & word) & 1;
            p.terms.emplace_back(std::move(label), parity ? -amp : amp);
        }
        p.display = "|" + p.name + ">";
        out.push_back(std::move(p));
    }
    return out;
}

std::string_view pauli_op_name(PauliOp op) {
    switch (op) {
        case PauliOp::I: return "I";
        case PauliOp::X: return "X";
        case PauliOp::Z: return "Z";
        case PauliOp::ZX: return "ZX";
    }
    return "?";
}

PauliOp parse_pauli_op(std::string_view text) {
    if (text == "I") return PauliOp::I;
    if (text == "X") return PauliOp::X;
    if (text == "Z") return PauliOp::Z;
    if (text == "ZX") return PauliOp::ZX;
    throw Error(ErrorCode::ParseError, "unknown Pauli op " + std::string(text));
}

CoinGate pauli_gate(PauliOp op) {
    switch (op) {
        case PauliOp::I: return CoinGate::identity();
        case PauliOp::X: return CoinGate::pauli_x();
        case PauliOp::Z: return CoinGate::pauli_z();
        case PauliOp::ZX: return CoinGate::pauli_z() * CoinGate::pauli_x();
    }
    return CoinGate::identity();
}

SparseState apply_pauli_string(const SparseState &s, const PauliString &pauli) {
    SparseState out = s;
    for (auto it = pauli.rbegin(); it != pauli.rend(); ++it) {
        if (it->op != PauliOp::I) {
            out = apply_coin_gate(out, it->reg, pauli_gate(it->op));
        }
    }
    return out;
}

std::string format_pauli(const PauliString &pauli) {
    if (pauli.empty()) {
        return "I";
    }
    std::string out;
    for (const auto &f : pauli) {
        if (!out.empty()) {
            out += ' ';
        }
        out += std::string(pauli_op_name(f.op)) + "_" + f.reg;
    }
    return out;
}

std::map<std::string, std::pair<bool, bool>> pauli_signature(const PauliString &pauli) {
    std::map<std::string, std::pair<bool, bool>> sig;
    for (const auto &f : pauli) {
        auto &[x, z] = sig[f.reg];
        x ^= f.op == PauliOp::X || f.op == PauliOp::ZX;
        z ^= f.op == PauliOp::Z || f.op == PauliOp::ZX;
    }
    std::erase_if(sig, [](const auto &kv) { return !kv.second.first && !kv.second.second; });
    return sig;
}

bool pauli_equivalent(const PauliString &a, const PauliString &b) {
    return pauli_signature(a) == pauli_signature(b);
}

PauliString canonical_pauli(const PauliString &pauli, const std::vector<std::string> &order) {
    const auto sig = pauli_signature(pauli);
    PauliString out;
    for (const auto &reg : order) {
        auto it = sig.find(reg);
        if (it == sig.end()) {
            continue;
        }
        const auto [x, z] = it->second;
        out.push_back({reg, x && z ? PauliOp::ZX : (x ? PauliOp::X : PauliOp::Z)});
    }
    for (const auto &[reg, bits] : sig) {
        if (std::find(order.begin(), order.end(), reg) == order.end()) {
            throw Error(ErrorCode::UnknownRegister, "Pauli factor on unexpected register " + reg);
        }
    }
    return out;
}

PauliString rename_pauli(const PauliString &pauli,
                         const std::map<std::string, std::string> &renames) {
    PauliString out = pauli;
    for (auto &f : out) {
        if (auto it = renames.find(f.reg); it != renames.end()) {
            f.reg = it->second;
        }
    }
    return out;
}

void CorrectionTable::add(CorrectionEntry entry) {
    auto key = std::make_pair(entry.position, entry.coin);
    if (auto it = index_.find(key); it != index_.end()) {
        rows_[it->second] = std::move(entry);
        return;
    }
    index_.emplace(std::move(key), rows_.size());
    rows_.push_back(std::move(entry));
}

const CorrectionEntry *CorrectionTable::find(const std::string &position,
                                             const std::string &coin) const {
    auto it = index_.find({position, coin});
    return it == index_.end() ? nullptr : &rows_[it->second];
}

nlohmann::json table_to_json(const CorrectionTable &table) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto &r : table.rows()) {
        nlohmann::json pauli = nlohmann::json::array();
        for (const auto &f : r.pauli) {
            pauli.push_back({{"reg", f.reg}, {"op", pauli_op_name(f.op)}});
        }
        rows.push_back({{"position", r.position}, {"coin", r.coin}, {"pauli", std::move(pauli)}});
    }
    return {{"schema", 1},
            {"protocol", table.protocol},
            {"source", table.source},
            {"rows", std::move(rows)}};
}

CorrectionTable table_from_json(const nlohmann::json &j) {
    CorrectionTable table;
    try {
        table.protocol = j.value("protocol", "");
        table.source = j.value("source", "");
        for (const auto &r : j.at("rows")) {
            CorrectionEntry e;
            e.position = r.at("position").get<std::string>();
            e.coin = r.at("coin").get<std::string>();
            for (const auto &f : r.at("pauli")) {
                e.pauli.push_back({f.at("reg").get<std::string>(),
                                   parse_pauli_op(f.at("op").get<std::string>())});
            }
            table.add(std::move(e));
        }
    } catch (const nlohmann::json::exception &e) {
        throw Error(ErrorCode::ParseError, e.what());
    }
    return table;
}

double fidelity(const SparseState &expected, const SparseState &actual) {
    return std::norm(inner_product(expected, actual));
}

std::string dyadic_string(double value, double tol) {
    for (int n = 0; n <= 16; ++n) {
        const double denom = std::ldexp(1.0, n);
        const double k = std::round(value * denom);
        if (std::abs(value - k / denom) <= tol) {
            auto num = static_cast<long long>(k);
            auto den = static_cast<long long>(denom);
            const long long g = std::gcd(num, den);
            if (g > 1) {
                num /= g;
                den /= g;
            }
            return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
        }
    }
    return {};
}

}  // namespace walkport
