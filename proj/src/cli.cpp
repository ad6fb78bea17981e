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

#include "walkport/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "walkport/equivalence.hpp"
#include "walkport/oracle.hpp"
#include "walkport/report.hpp"

namespace walkport {

namespace {

struct Config {
    std::string protocol;
    std::string claim;
    std::optional<std::uint64_t> seed;
    std::size_t count = 0;
    std::string alice;
    std::string bob;
    int bound = kDefaultLatticeBound;
    std::optional<double> tol;
    std::string out;
    std::string format = "json";
    std::string table = "reference";
    std::string corrupt;
    std::string families;
};

/// Raised for problems with the command line rather than the physics.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::uint64_t resolve_seed(const Config &c) {
    if (c.seed) {
        return *c.seed;
    }
    if (const char *env = std::getenv("WALKPORT_SEED"); env != nullptr && *env != '\0') {
        try {
            std::size_t used = 0;
            const unsigned long long v = std::stoull(env, &used);
            if (used == std::strlen(env)) {
                return v;
            }
        } catch (const std::exception &) {
        }
        throw ConfigError(std::string("WALKPORT_SEED is not an unsigned integer: ") + env);
    }
    return 1;
}

ProtocolId resolve_protocol(const std::string &key) {
    if (auto id = parse_protocol(key)) {
        return *id;
    }
    throw ConfigError("unknown protocol '" + key + "' (line1q, cycle1q, single2q, twostep2q)");
}

std::vector<Amplitude> checked_payload(const std::string &text, std::size_t width,
                                       const char *who, std::ostream &err) {
    std::vector<Amplitude> v;
    try {
        v = parse_amplitudes(text);
    } catch (const Error &e) {
        throw ConfigError(std::string(who) + ": " + e.what());
    }
    if (v.size() != width) {
        throw ConfigError(std::string(who) + " needs " + std::to_string(width) + " amplitudes");
    }
    double norm = 0.0;
    for (const auto &a : v) {
        norm += std::norm(a);
    }
    const double off = std::abs(norm - 1.0);
    if (off > 1e-8) {
        throw ConfigError(std::string(who) + " is not normalized (squared norm " +
                          std::to_string(norm) + ")");
    }
    if (off > kNormTolerance) {
        err << "warning: renormalizing " << who << " (squared norm off by " << off << ")\n";
        for (auto &a : v) {
            a /= std::sqrt(norm);
        }
    }
    return v;
}

std::vector<InputPayload> resolve_payloads(const Config &c, ProtocolId id, std::size_t default_count,
                                           std::optional<std::uint64_t> *seed_used,
                                           std::ostream &err) {
    if (!c.alice.empty() || !c.bob.empty()) {
        if (c.alice.empty() || c.bob.empty()) {
            throw ConfigError("--alice and --bob must be given together");
        }
        const std::size_t width = payload_width(id);
        InputPayload p{checked_payload(c.alice, width, "--alice", err),
                       checked_payload(c.bob, width, "--bob", err)};
        seed_used->reset();
        return {p};
    }
    const std::uint64_t seed = resolve_seed(c);
    *seed_used = seed;
    return random_payloads(payload_width(id), c.count ? c.count : default_count, seed);
}

CorrectionTable corrupt_table(const CorrectionTable &table, const std::string &family,
                              const std::string &target) {
    CorrectionTable out;
    out.protocol = table.protocol;
    out.source = table.source + "+corrupted";
    bool touched = false;
    for (CorrectionEntry row : table.rows()) {
        if (row.position.substr(0, row.position.find('[')) == family) {
            row.pauli.push_back({target, PauliOp::X});
            touched = true;
        }
        out.add(std::move(row));
    }
    if (!touched) {
        throw ConfigError("--corrupt-table: no rows in family " + family);
    }
    return out;
}

CorrectionTable resolve_table(const Config &c, const ProtocolSpec &spec) {
    CorrectionTable table;
    if (c.table == "reference" || c.table == "synthesized") {
        table = reference_table(spec.id);
    } else if (c.table == "printed") {
        table = printed_table(spec.id);
    } else {
        std::ifstream in(c.table);
        if (!in) {
            throw ConfigError("cannot read table file " + c.table);
        }
        try {
            table = table_from_json(nlohmann::json::parse(in));
        } catch (const nlohmann::json::exception &e) {
            throw ConfigError("table file " + c.table + ": " + e.what());
        } catch (const Error &e) {
            throw ConfigError("table file " + c.table + ": " + e.what());
        }
    }
    if (!c.corrupt.empty()) {
        table = corrupt_table(table, c.corrupt, spec.alice_targets.front());
    }
    return table;
}

void emit(const Config &c, const std::string &text, std::ostream &out) {
    if (c.out.empty()) {
        out << text;
        return;
    }
    std::ofstream file(c.out);
    if (!file) {
        throw ConfigError("cannot write " + c.out);
    }
    file << text;
}

std::string dump(const nlohmann::json &j) { return j.dump(2) + "\n"; }

nlohmann::json seed_json(const std::optional<std::uint64_t> &seed) {
    return seed ? nlohmann::json(*seed) : nlohmann::json(nullptr);
}

int cmd_run(const Config &c, std::ostream &out, std::ostream &err) {
    const ProtocolId id = resolve_protocol(c.protocol);
    const ProtocolSpec spec = make_protocol(id, c.bound);
    std::optional<std::uint64_t> seed;
    const auto payloads = resolve_payloads(c, id, 1, &seed, err);
    const CorrectionTable table = resolve_table(c, spec);
    const double tol = c.tol.value_or(kRunFidelityTolerance);

    std::vector<PayloadRun> runs;
    for (const auto &p : payloads) {
        runs.push_back({p, enumerate_branches(spec, p, table)});
    }

    bool passed = true;
    double worst_fidelity = 1.0;
    double worst_total = 0.0;
    std::size_t branches = 0;
    for (const auto &r : runs) {
        passed = passed && r.passed(tol);
        worst_fidelity = std::min(worst_fidelity, r.min_fidelity());
        worst_total = std::max(worst_total, std::abs(r.total_probability() - 1.0));
        branches += r.branches.size();
    }

    if (c.format == "text") {
        std::ostringstream os;
        os << "protocol " << protocol_key(id) << ", table " << table.source << ", "
           << runs.size() << " payload(s)";
        if (seed) {
            os << ", seed " << *seed;
        }
        os << "\n";
        for (std::size_t i = 0; i < runs.size(); ++i) {
            os << "\npayload " << i << ": total probability " << runs[i].total_probability()
               << ", min fidelity " << runs[i].min_fidelity() << "\n"
               << format_branches(runs[i].branches);
        }
        os << "\n" << branches << " branches, min fidelity " << worst_fidelity
           << ", max |total probability - 1| " << worst_total << "\n"
           << (passed ? "PASSED" : "FAILED") << "\n";
        emit(c, os.str(), out);
    } else {
        nlohmann::json list = nlohmann::json::array();
        for (std::size_t i = 0; i < runs.size(); ++i) {
            list.push_back(payload_run_to_json(runs[i], i));
        }
        emit(c,
             dump({{"schema", 1},
                   {"command", "run"},
                   {"protocol", protocol_key(id)},
                   {"seed", seed_json(seed)},
                   {"bound", c.bound},
                   {"table", table.source},
                   {"fidelity_tolerance", tol},
                   {"payloads", std::move(list)},
                   {"summary",
                    {{"payloads", runs.size()},
                     {"branches", branches},
                     {"min_fidelity", worst_fidelity},
                     {"max_probability_error", worst_total},
                     {"passed", passed}}}}),
             out);
    }
    return passed ? kExitOk : kExitVerificationFailed;
}

int cmd_equiv(const Config &c, std::ostream &out, std::ostream &err) {
    const std::uint64_t seed = resolve_seed(c);
    EquivalenceReport report;
    if (c.claim == "two-qubit") {
        std::optional<std::uint64_t> used;
        const auto payloads = resolve_payloads(c, ProtocolId::TwoStep2Q, 25, &used, err);
        TwoQubitOptions options;
        if (!c.corrupt.empty()) {
            options.corrupt_family = c.corrupt;
        }
        report = check_two_qubit_equivalence(payloads, used.value_or(0), options);
    } else if (c.claim == "cycle-line") {
        if (!c.corrupt.empty()) {
            throw ConfigError("--corrupt-table applies to the two-qubit claim only");
        }
        std::optional<std::uint64_t> used;
        const auto payloads = resolve_payloads(c, ProtocolId::Cycle1Q, 25, &used, err);
        report = check_cycle_line_equivalence(payloads, used.value_or(seed));
    } else {
        throw ConfigError("unknown claim '" + c.claim + "' (two-qubit, cycle-line)");
    }
    const double tol = c.tol.value_or(kEquivalenceTolerance);
    const bool passed = report.passed(tol);
    if (c.format == "text") {
        emit(c, format_equivalence(report), out);
    } else {
        nlohmann::json j = report_to_json(report);
        j["command"] = "equiv";
        j["passed"] = passed;
        emit(c, dump(j), out);
    }
    return passed ? kExitOk : kExitVerificationFailed;
}

int cmd_tables(const Config &c, std::ostream &out, std::ostream &err) {
    const ProtocolId id = resolve_protocol(c.protocol);
    const ProtocolSpec spec = make_protocol(id, c.bound);
    const std::vector<std::string> families = parse_family_list(c.families);
    std::vector<std::string> known;
    for (const auto &f : position_families(spec)) {
        known.push_back(f.name);
    }
    for (const auto &f : families) {
        if (std::find(known.begin(), known.end(), f) == known.end()) {
            throw ConfigError("unknown family '" + f + "' for " + c.protocol);
        }
    }

    std::optional<std::uint64_t> seed;
    Config probe = c;
    probe.count = c.count ? c.count : 5;
    const auto payloads = resolve_payloads(probe, id, 5, &seed, err);
    const CorrectionTable &printed = printed_table(id);
    const CorrectionTable &reference = reference_table(id);
    const TableComparison comparison = compare_tables(spec, printed, reference, payloads);

    std::map<std::string, CorrectionTable> per_family;
    for (const auto &f : families) {
        per_family.emplace(f, generate_family_tables(spec, {f}));
    }

    if (!c.out.empty()) {
        const std::filesystem::path dir(c.out);
        std::error_code ec;
        std::filesystem::create_directories(dir, ec);
        if (ec) {
            throw ConfigError("cannot create " + c.out + ": " + ec.message());
        }
        auto write = [&](const std::string &name, const nlohmann::json &j) {
            std::ofstream file(dir / name);
            if (!file) {
                throw ConfigError("cannot write " + (dir / name).string());
            }
            file << dump(j);
        };
        const std::string key(protocol_key(id));
        write(key + "_printed.json", table_to_json(printed));
        write(key + "_synthesized.json", table_to_json(reference));
        for (const auto &[name, table] : per_family) {
            write(key + "_" + name + ".json", table_to_json(table));
        }
    }

    if (c.format == "text") {
        std::ostringstream os;
        os << "protocol " << protocol_key(id) << ": printed table " << printed.size()
           << " rows, synthesized table " << reference.size() << " rows\n"
           << format_table_comparison(comparison);
        for (const auto &[name, table] : per_family) {
            os << "family " << name << ": " << table.size() << " synthesized rows\n";
        }
        out << os.str();
    } else {
        nlohmann::json fam = nlohmann::json::object();
        for (const auto &[name, table] : per_family) {
            fam[name] = table_to_json(table);
        }
        nlohmann::json j = {{"schema", 1},
                            {"command", "tables"},
                            {"protocol", protocol_key(id)},
                            {"seed", seed_json(seed)},
                            {"comparison", table_comparison_to_json(comparison)},
                            {"families", std::move(fam)}};
        if (c.out.empty()) {
            j["printed"] = table_to_json(printed);
            j["synthesized"] = table_to_json(reference);
        }
        out << dump(j);
    }
    return kExitOk;
}

int cmd_oracle(const Config &c, std::ostream &out, std::ostream &err) {
    std::vector<ProtocolId> ids;
    if (c.protocol.empty() || c.protocol == "all") {
        ids.assign(kAllProtocols.begin(), kAllProtocols.end());
    } else {
        ids.push_back(resolve_protocol(c.protocol));
    }
    const double tol = c.tol.value_or(1e-10);
    bool passed = true;
    nlohmann::json reports = nlohmann::json::array();
    std::ostringstream text;
    std::optional<std::uint64_t> seed;
    for (ProtocolId id : ids) {
        const auto payloads = resolve_payloads(c, id, 25, &seed, err);
        const OracleReport r = oracle_check(id, payloads);
        const bool ok = r.unitarity < tol && r.state_delta < tol;
        passed = passed && ok;
        nlohmann::json j = oracle_report_to_json(r);
        j["passed"] = ok;
        reports.push_back(std::move(j));
        text << protocol_key(id) << ": bound " << r.bound << ", dimension " << r.dimension
             << ", unitarity defect " << r.unitarity << ", max state delta " << r.state_delta
             << (ok ? "  ok" : "  FAIL") << "\n";
    }
    if (c.format == "text") {
        text << (passed ? "PASSED" : "FAILED") << "\n";
        emit(c, text.str(), out);
    } else {
        emit(c,
             dump({{"schema", 1},
                   {"command", "oracle-check"},
                   {"seed", seed_json(seed)},
                   {"tolerance", tol},
                   {"reports", std::move(reports)},
                   {"passed", passed}}),
             out);
    }
    return passed ? kExitOk : kExitVerificationFailed;
}

void add_common(CLI::App *cmd, Config &c) {
    cmd->add_option("--seed", c.seed, "Payload seed (falls back to WALKPORT_SEED, then 1)");
    cmd->add_option("--count", c.count, "Number of random payloads");
    cmd->add_option("--alice", c.alice, "Alice's amplitudes, comma-separated re:im pairs");
    cmd->add_option("--bob", c.bob, "Bob's amplitudes, comma-separated re:im pairs");
    cmd->add_option("--tol", c.tol, "Verification tolerance");
    cmd->add_option("--out", c.out, "Write the report here instead of stdout");
    cmd->add_option("--format", c.format, "Report format")
        ->check(CLI::IsMember({"json", "text"}));
}

}  // namespace

std::vector<Amplitude> parse_amplitudes(const std::string &text) {
    auto number = [&](const std::string &s) {
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(s, &used);
        } catch (const std::exception &) {
            used = 0;
        }
        if (used == 0 || used != s.size() || !std::isfinite(v)) {
            throw Error(ErrorCode::ParseError, "bad number '" + s + "' in '" + text + "'");
        }
        return v;
    };
    std::vector<Amplitude> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto colon = item.find(':');
        if (colon == std::string::npos) {
            out.emplace_back(number(item), 0.0);
        } else {
            out.emplace_back(number(item.substr(0, colon)), number(item.substr(colon + 1)));
        }
    }
    if (out.empty()) {
        throw Error(ErrorCode::ParseError, "no amplitudes in '" + text + "'");
    }
    return out;
}

std::vector<std::string> parse_family_list(const std::string &text) {
    if (text.empty() || text == "all") {
        return {};
    }
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto dots = item.find("..");
        if (dots == std::string::npos) {
            out.push_back(item);
            continue;
        }
        const std::string lo = item.substr(0, dots);
        const std::string hi = item.substr(dots + 2);
        auto split = [&](const std::string &s) {
            const auto digit = s.find_first_of("0123456789");
            if (digit == std::string::npos || digit == 0) {
                throw Error(ErrorCode::ParseError, "bad family range '" + item + "'");
            }
            return std::make_pair(s.substr(0, digit), std::stoi(s.substr(digit)));
        };
        const auto [p1, a] = split(lo);
        const auto [p2, b] = split(hi);
        if (p1 != p2 || a > b) {
            throw Error(ErrorCode::ParseError, "bad family range '" + item + "'");
        }
        for (int i = a; i <= b; ++i) {
            out.push_back(p1 + std::to_string(i));
        }
    }
    return out;
}

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Simulate and verify bidirectional quantum-walk teleportation", "walkport"};
    app.require_subcommand(1);
    Config c;

    CLI::App *run = app.add_subcommand("run", "Enumerate and verify every measurement branch");
    run->add_option("protocol,--protocol", c.protocol, "line1q, cycle1q, single2q or twostep2q");
    run->add_option("--bound", c.bound, "Lattice bound B");
    run->add_option("--table", c.table, "reference (default), printed, or a JSON file");
    run->add_option("--corrupt-table", c.corrupt, "Perturb every row of this position family");
    add_common(run, c);

    CLI::App *equiv = app.add_subcommand("equiv", "Check a cross-protocol equivalence");
    equiv->add_option("claim", c.claim, "two-qubit or cycle-line")->required();
    equiv->add_option("--corrupt-table", c.corrupt, "Perturb the two-step rows of this family");
    add_common(equiv, c);

    CLI::App *tables = app.add_subcommand("tables", "Compare printed and synthesized tables");
    tables->add_option("protocol,--protocol", c.protocol, "line1q, cycle1q, single2q or twostep2q");
    tables->add_option("--families", c.families, "e.g. P1..P15 or Q3,Q5");
    tables->add_option("--bound", c.bound, "Lattice bound B");
    add_common(tables, c);

    CLI::App *oracle = app.add_subcommand("oracle-check", "Compare against the dense oracle");
    oracle->add_option("protocol,--protocol", c.protocol, "A protocol or 'all' (default)");
    add_common(oracle, c);

    std::vector<std::string> argv_storage{"walkport"};
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<const char *> argv;
    for (const auto &a : argv_storage) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitConfigError;
    }

    try {
        if (run->parsed() || tables->parsed()) {
            if (c.protocol.empty()) {
                throw ConfigError("a protocol is required");
            }
        }
        if (c.tol && !(*c.tol > 0.0)) {
            throw ConfigError("--tol must be positive");
        }
        if (run->parsed()) {
            return cmd_run(c, out, err);
        }
        if (equiv->parsed()) {
            return cmd_equiv(c, out, err);
        }
        if (tables->parsed()) {
            return cmd_tables(c, out, err);
        }
        return cmd_oracle(c, out, err);
    } catch (const ConfigError &e) {
        err << "error: " << e.what() << "\n";
        return kExitConfigError;
    } catch (const Error &e) {
        err << "error: " << e.what() << "\n";
        switch (e.code()) {
            case ErrorCode::MissingCorrection:
            case ErrorCode::NoPauliCorrection:
            case ErrorCode::MappingIncomplete: return kExitVerificationFailed;
            default: return kExitConfigError;
        }
    }
}

}  // namespace walkport
