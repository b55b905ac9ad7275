// Copyright 2026 The quditsim Authors
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

#include "cli.hpp"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "quditsim/bell.hpp"
#include "quditsim/circuit.hpp"
#include "quditsim/discriminator.hpp"
#include "quditsim/netcost.hpp"
#include "quditsim/outsourcing.hpp"
#include "quditsim/state.hpp"
#include "quditsim/verify.hpp"

namespace quditsim::cli {
namespace {

using nlohmann::ordered_json;

enum class Format { Text, Json, Csv };

const std::map<std::string, Format>& format_names() {
    static const std::map<std::string, Format> names = {
        {"text", Format::Text}, {"json", Format::Json}, {"csv", Format::Csv}};
    return names;
}

void add_format_option(CLI::App* sub, Format* format) {
    sub->add_option("--format", *format, "Output format")
        ->transform(CLI::CheckedTransformer(format_names(), CLI::ignore_case))
        ->default_str("text");
}

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) {
        return field;
    }
    std::string quoted = "\"";
    for (char c : field) {
        quoted += c;
        if (c == '"') {
            quoted += '"';
        }
    }
    quoted += '"';
    return quoted;
}

std::string join_ints(const std::vector<int>& values, const std::string& sep) {
    std::string joined;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) {
            joined += sep;
        }
        joined += std::to_string(values[i]);
    }
    return joined;
}

std::string fixed6(double value) {
    std::ostringstream out;
    out << std::fixed << std::setprecision(6) << value;
    return out.str();
}

ParityPairSet parse_pairs(const std::string& text, int n) {
    if (text == "chain") {
        return ParityPairSet::consecutive(n);
    }
    if (text == "star") {
        return ParityPairSet::star(0, n);
    }
    ParityPairSet pairs;
    std::stringstream stream(text);
    std::string token;
    while (std::getline(stream, token, ',')) {
        std::size_t dash = token.find('-');
        if (dash == std::string::npos || dash == 0 || dash + 1 == token.size()) {
            throw std::invalid_argument("--pairs expects 'chain', 'star', or 'a-b,c-d,...'");
        }
        int a = std::stoi(token.substr(0, dash));
        int b = std::stoi(token.substr(dash + 1));
        pairs.pairs.emplace_back(a, b);
    }
    if (pairs.pairs.empty() && n > 1) {
        throw std::invalid_argument("--pairs expects 'chain', 'star', or 'a-b,c-d,...'");
    }
    return pairs;
}

int phase_exponent(Complex phase, int d) {
    for (int k = 0; k < d; ++k) {
        if (std::abs(phase - root_of_unity(d, k)) < 1e-6) {
            return k;
        }
    }
    return -1;
}

// ------------------------------------------------------------ discriminate --

struct DiscriminateArgs {
    int d = 2;
    int n = 2;
    int p = 0;
    std::vector<int> q;
    std::string pairs = "chain";
    bool swapped_convention = false;
    bool parity_first = false;
    bool emit_circuits = false;
    Format format = Format::Text;
};

int cmd_discriminate(const DiscriminateArgs& args, std::ostream& out) {
    std::vector<int> q = args.q;
    if (q.empty() && args.n > 1) {
        q.assign(static_cast<std::size_t>(args.n - 1), 0);
    }
    BellIndex label{args.d, args.n, args.p, q};
    validate_bell_index(label);
    ParityPairSet pairs = parse_pairs(args.pairs, args.n);
    PhaseConvention convention = args.swapped_convention
                                     ? PhaseConvention::PrepareHDagDecodeH
                                     : PhaseConvention::PrepareHDecodeHDag;

    Circuit phase = build_phase_circuit(args.d, args.n, convention);
    std::vector<Circuit> parity;
    int gate_count = phase.two_qudit_gate_count;
    for (const auto& pair : pairs.pairs) {
        parity.push_back(build_parity_circuit(args.d, args.n, pair));
        gate_count += parity.back().two_qudit_gate_count;
    }

    if (args.emit_circuits) {
        if (args.format == Format::Csv) {
            throw std::invalid_argument("--emit-circuits supports text or json output");
        }
        if (args.format == Format::Json) {
            ordered_json doc;
            doc["d"] = args.d;
            doc["n"] = args.n;
            doc["gate_count"] = gate_count;
            doc["circuits"] = ordered_json::array();
            doc["circuits"].push_back(circuit_to_text(phase));
            for (const Circuit& circuit : parity) {
                doc["circuits"].push_back(circuit_to_text(circuit));
            }
            out << doc.dump(2) << "\n";
        } else {
            out << circuit_to_text(phase);
            for (const Circuit& circuit : parity) {
                out << "\n" << circuit_to_text(circuit);
            }
        }
        return 0;
    }

    StateVector input = bell_qudit(label);
    DiscriminateOptions options;
    options.phase_convention = convention;
    options.parity_before_phase = args.parity_first;
    DiscriminationResult result = discriminate(input, pairs, options);
    double fidelity = std::abs(inner_product(input, result.post_state));

    switch (args.format) {
        case Format::Json: {
            ordered_json doc;
            doc["d"] = args.d;
            doc["n"] = args.n;
            doc["p"] = result.p;
            doc["q"] = result.q;
            doc["outcomes"] = result.ancilla_outcomes;
            doc["fidelity"] = fidelity;
            doc["gate_count"] = gate_count;
            doc["deterministic"] = result.deterministic;
            out << doc.dump(2) << "\n";
            break;
        }
        case Format::Csv: {
            out << "d,n,p,q,outcomes,fidelity,gate_count,deterministic\n";
            out << args.d << "," << args.n << "," << result.p << ","
                << join_ints(result.q, ";") << "," << join_ints(result.ancilla_outcomes, ";")
                << "," << fixed6(fidelity) << "," << gate_count << ","
                << (result.deterministic ? "true" : "false") << "\n";
            break;
        }
        case Format::Text: {
            out << "d " << args.d << "\n";
            out << "n " << args.n << "\n";
            out << "p " << result.p << "\n";
            out << "q (" << join_ints(result.q, ",") << ")\n";
            out << "outcomes (" << join_ints(result.ancilla_outcomes, ",") << ")\n";
            out << "fidelity " << fixed6(fidelity) << "\n";
            out << "gate_count " << gate_count << "\n";
            out << "deterministic " << (result.deterministic ? "yes" : "no") << "\n";
            break;
        }
    }
    return 0;
}

// ----------------------------------------------------------------- table1 --

struct Table1Row {
    std::string name;
    int p;
    int q;
    int phase_outcome;
    int parity_outcome;
    double fidelity;
};

std::vector<Table1Row> table1_rows() {
    const std::vector<std::pair<std::string, std::pair<int, int>>> inputs = {
        {"psi+", {0, 0}}, {"psi-", {1, 0}}, {"phi+", {0, 1}}, {"phi-", {1, 1}}};
    std::vector<Table1Row> rows;
    for (const auto& [name, pq] : inputs) {
        BellIndex label{2, 2, pq.first, {pq.second}};
        StateVector input = bell_qudit(label);
        DiscriminationResult result = discriminate(input);
        rows.push_back(Table1Row{name, result.p, result.q[0], result.ancilla_outcomes[0],
                                 result.ancilla_outcomes[1],
                                 std::abs(inner_product(input, result.post_state))});
    }
    return rows;
}

int cmd_table1(Format format, std::ostream& out) {
    std::vector<Table1Row> rows = table1_rows();
    switch (format) {
        case Format::Json: {
            ordered_json doc;
            doc["d"] = 2;
            doc["n"] = 2;
            doc["rows"] = ordered_json::array();
            for (const Table1Row& row : rows) {
                ordered_json entry;
                entry["state"] = row.name;
                entry["p"] = row.p;
                entry["q"] = row.q;
                entry["outcomes"] = std::vector<int>{row.phase_outcome, row.parity_outcome};
                entry["fidelity"] = row.fidelity;
                doc["rows"].push_back(entry);
            }
            out << doc.dump(2) << "\n";
            break;
        }
        case Format::Csv: {
            out << "state,p,q,phase,parity,fidelity\n";
            for (const Table1Row& row : rows) {
                out << row.name << "," << row.p << "," << row.q << "," << row.phase_outcome
                    << "," << row.parity_outcome << "," << fixed6(row.fidelity) << "\n";
            }
            break;
        }
        case Format::Text: {
            out << "state  p  q  phase  parity  fidelity\n";
            for (const Table1Row& row : rows) {
                out << std::left << std::setw(7) << row.name << std::setw(3) << row.p
                    << std::setw(3) << row.q << std::setw(7) << row.phase_outcome
                    << std::setw(8) << row.parity_outcome << fixed6(row.fidelity) << "\n";
            }
            break;
        }
    }
    return 0;
}

// ----------------------------------------------------------------- verify --

struct VerifyArgs {
    std::string suite = "all";
    std::uint64_t seed = 20260819;
    int workers = 0;
    Format format = Format::Text;
};

int cmd_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err) {
    VerifyOptions options;
    options.seed = args.seed;
    options.workers = args.workers;
    std::vector<CheckResult> results = run_verify(args.suite, options);
    int failures = 0;
    const CheckResult* first_failure = nullptr;
    for (const CheckResult& result : results) {
        if (!result.pass) {
            ++failures;
            if (first_failure == nullptr) {
                first_failure = &result;
            }
        }
    }
    switch (args.format) {
        case Format::Json: {
            ordered_json doc = ordered_json::array();
            for (const CheckResult& result : results) {
                ordered_json entry;
                entry["id"] = result.id;
                entry["pass"] = result.pass;
                entry["detail"] = result.detail;
                doc.push_back(entry);
            }
            out << doc.dump(2) << "\n";
            break;
        }
        case Format::Csv: {
            out << "id,pass,detail\n";
            for (const CheckResult& result : results) {
                out << csv_escape(result.id) << "," << (result.pass ? "true" : "false") << ","
                    << csv_escape(result.detail) << "\n";
            }
            break;
        }
        case Format::Text: {
            for (const CheckResult& result : results) {
                out << (result.pass ? "ok   " : "FAIL ") << std::left << std::setw(42)
                    << result.id << " " << result.detail << "\n";
            }
            out << results.size() << " checks, " << failures << " failures\n";
            break;
        }
    }
    if (first_failure != nullptr) {
        err << "first failure: " << first_failure->id << ": " << first_failure->detail << "\n";
        return 1;
    }
    return 0;
}

// ---------------------------------------------------------------- closure --

struct ClosureArgs {
    int d = 2;
    std::string variant = "h-hdag";
    Format format = Format::Text;
};

int cmd_closure(const ClosureArgs& args, std::ostream& out) {
    HadamardVariant variant = args.variant == "h-hdag" ? HadamardVariant::HTensorHDag
                                                       : HadamardVariant::HDagTensorH;
    std::vector<ClosureEntry> entries = closure_map(args.d, variant);
    switch (args.format) {
        case Format::Json: {
            ordered_json doc;
            doc["d"] = args.d;
            doc["variant"] = args.variant;
            doc["entries"] = ordered_json::array();
            for (const ClosureEntry& entry : entries) {
                ordered_json row;
                row["from_p"] = entry.from.p;
                row["from_q"] = entry.from.q[0];
                row["to_p"] = entry.to.p;
                row["to_q"] = entry.to.q[0];
                row["phase_exponent"] = phase_exponent(entry.phase, args.d);
                doc["entries"].push_back(row);
            }
            out << doc.dump(2) << "\n";
            break;
        }
        case Format::Csv: {
            out << "from_p,from_q,to_p,to_q,phase_exponent\n";
            for (const ClosureEntry& entry : entries) {
                out << entry.from.p << "," << entry.from.q[0] << "," << entry.to.p << ","
                    << entry.to.q[0] << "," << phase_exponent(entry.phase, args.d) << "\n";
            }
            break;
        }
        case Format::Text: {
            out << "closure d=" << args.d << " variant=" << args.variant << "\n";
            for (const ClosureEntry& entry : entries) {
                out << "(" << entry.from.p << "," << entry.from.q[0] << ") -> (" << entry.to.p
                    << "," << entry.to.q[0] << ")  phase w^"
                    << phase_exponent(entry.phase, args.d) << "\n";
            }
            break;
        }
    }
    return 0;
}

// ------------------------------------------------------------------- cost --

struct CostArgs {
    std::string topology = "linear";
    int n = 2;
    int alice = 1;
    Format format = Format::Text;
};

int cmd_cost(const CostArgs& args, std::ostream& out) {
    Topology topology{args.topology == "star" ? TopologyKind::Star : TopologyKind::Linear,
                      args.n, args.alice};
    CostReport protocol = protocol_cost(topology);
    CostReport baseline = baseline_cost(topology);
    auto name_of = [](ProtocolKind kind) {
        return kind == ProtocolKind::NonDestructive ? "nondestructive" : "baseline";
    };
    switch (args.format) {
        case Format::Json: {
            ordered_json doc = ordered_json::array();
            for (const CostReport& report : {protocol, baseline}) {
                ordered_json entry;
                entry["protocol"] = name_of(report.protocol);
                entry["topology"] = args.topology;
                entry["n"] = args.n;
                entry["alice"] = args.alice;
                entry["qudits_moved"] = report.qudits_moved;
                entry["gate_count"] = report.two_qudit_gates;
                entry["per_edge"] = report.per_edge_traversals;
                entry["per_player_gates"] = report.per_player_gate_counts;
                doc.push_back(entry);
            }
            out << doc.dump(2) << "\n";
            break;
        }
        case Format::Csv: {
            out << "protocol,topology,n,alice,qudits_moved,gate_count,per_edge,"
                   "per_player_gates\n";
            for (const CostReport& report : {protocol, baseline}) {
                out << name_of(report.protocol) << "," << args.topology << "," << args.n << ","
                    << args.alice << "," << report.qudits_moved << ","
                    << report.two_qudit_gates << "," << join_ints(report.per_edge_traversals, ";")
                    << "," << join_ints(report.per_player_gate_counts, ";") << "\n";
            }
            break;
        }
        case Format::Text: {
            out << "topology " << args.topology << "  n " << args.n << "  alice " << args.alice
                << "\n";
            for (const CostReport& report : {protocol, baseline}) {
                out << name_of(report.protocol) << ": qudits_moved " << report.qudits_moved
                    << ", gate_count " << report.two_qudit_gates << "\n";
                out << "  per_edge (" << join_ints(report.per_edge_traversals, ",") << ")\n";
                out << "  per_player_gates (" << join_ints(report.per_player_gate_counts, ",")
                    << ")\n";
            }
            break;
        }
    }
    return 0;
}

// ------------------------------------------------------------------ bench --

struct BenchArgs {
    int d = 2;
    int n = 10;
    int reps = 3;
    Format format = Format::Text;
};

int cmd_bench(const BenchArgs& args, std::ostream& out) {
    BellIndex label{args.d, args.n, args.d - 1,
                    std::vector<int>(static_cast<std::size_t>(args.n - 1), 1 % args.d)};
    validate_bell_index(label);
    StateVector input = bell_qudit(label);
    int gate_count = 3 * args.n - 2;
    std::vector<double> per_rep_ms;
    bool all_correct = true;
    for (int rep = 0; rep < args.reps; ++rep) {
        auto t0 = std::chrono::steady_clock::now();
        DiscriminationResult result = discriminate(input);
        auto t1 = std::chrono::steady_clock::now();
        per_rep_ms.push_back(std::chrono::duration<double, std::milli>(t1 - t0).count());
        all_correct = all_correct && result.p == label.p && result.q == label.q;
    }
    double total_ms = 0.0;
    for (double ms : per_rep_ms) {
        total_ms += ms;
    }
    switch (args.format) {
        case Format::Json: {
            ordered_json doc;
            doc["d"] = args.d;
            doc["n"] = args.n;
            doc["reps"] = args.reps;
            doc["gate_count"] = gate_count;
            doc["correct"] = all_correct;
            doc["elapsed_ms"] = total_ms;  // not reproducible across runs
            doc["per_rep_ms"] = per_rep_ms;  // not reproducible across runs
            out << doc.dump(2) << "\n";
            break;
        }
        case Format::Csv: {
            out << "d,n,reps,gate_count,correct,elapsed_ms\n";
            out << args.d << "," << args.n << "," << args.reps << "," << gate_count << ","
                << (all_correct ? "true" : "false") << "," << fixed6(total_ms) << "\n";
            break;
        }
        case Format::Text: {
            out << "d " << args.d << "  n " << args.n << "  reps " << args.reps
                << "  gate_count " << gate_count << "  correct "
                << (all_correct ? "yes" : "no") << "  elapsed_ms " << fixed6(total_ms) << "\n";
            break;
        }
    }
    return all_correct ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    if (const char* cap = std::getenv("QUDITSIM_MAX_AMPS")) {
        char* end = nullptr;
        unsigned long long value = std::strtoull(cap, &end, 10);
        if (cap[0] == '\0' || end == nullptr || *end != '\0' || value == 0) {
            err << "error: QUDITSIM_MAX_AMPS must be a positive integer\n";
            return 2;
        }
        set_max_amplitudes(static_cast<std::size_t>(value));
    }

    CLI::App app{"qudit statevector simulator with non-destructive Bell-state readout"};
    app.require_subcommand(1);

    DiscriminateArgs disc;
    CLI::App* disc_cmd =
        app.add_subcommand("discriminate", "Identify a generalized Bell state without destroying it");
    disc_cmd->add_option("-d,--dim", disc.d, "Qudit dimension")->check(CLI::Range(2, 64));
    disc_cmd->add_option("-n,--wires", disc.n, "Number of parties")->check(CLI::Range(2, 64));
    disc_cmd->add_option("-p,--phase", disc.p, "Phase label of the input state");
    disc_cmd->add_option("-q,--offsets", disc.q, "Offset labels q_1..q_{n-1} of the input state")
        ->delimiter(',');
    disc_cmd->add_option("--pairs", disc.pairs,
                         "Parity pairs: 'chain', 'star', or explicit 'a-b,c-d,...'");
    disc_cmd->add_flag("--swapped-convention", disc.swapped_convention,
                       "Prepare the phase ancilla with the inverse Fourier gate");
    disc_cmd->add_flag("--parity-first", disc.parity_first,
                       "Run the parity circuits before the phase circuit");
    disc_cmd->add_flag("--emit-circuits", disc.emit_circuits,
                       "Print the circuits in the text format instead of simulating");
    add_format_option(disc_cmd, &disc.format);

    Format table1_format = Format::Text;
    CLI::App* table1_cmd =
        app.add_subcommand("table1", "Readout table for the four two-qubit Bell states");
    add_format_option(table1_cmd, &table1_format);

    VerifyArgs verify;
    CLI::App* verify_cmd = app.add_subcommand("verify", "Run the self-check suites");
    std::vector<std::string> suite_choices = verify_suite_names();
    suite_choices.insert(suite_choices.begin(), "all");
    verify_cmd->add_option("suite", verify.suite, "Suite to run")
        ->check(CLI::IsMember(suite_choices));
    verify_cmd->add_option("--seed", verify.seed, "Base seed for randomized checks");
    verify_cmd->add_option("--workers", verify.workers,
                           "Worker threads (0 = hardware concurrency)");
    add_format_option(verify_cmd, &verify.format);

    ClosureArgs closure;
    CLI::App* closure_cmd = app.add_subcommand(
        "closure", "Bell-label permutation induced by a two-sided Fourier layer");
    closure_cmd->add_option("-d,--dim", closure.d, "Qudit dimension")->check(CLI::Range(2, 16));
    closure_cmd->add_option("--variant", closure.variant, "Which Fourier layer to apply")
        ->check(CLI::IsMember({"h-hdag", "hdag-h"}));
    add_format_option(closure_cmd, &closure.format);

    CostArgs cost;
    CLI::App* cost_cmd =
        app.add_subcommand("cost", "Communication cost of readout vs. the destructive baseline");
    cost_cmd->add_option("--topology", cost.topology, "Network layout")
        ->check(CLI::IsMember({"star", "linear"}));
    cost_cmd->add_option("-n,--players", cost.n, "Number of players")->check(CLI::Range(2, 100000));
    cost_cmd->add_option("--alice", cost.alice, "Alice's position (1-based)");
    add_format_option(cost_cmd, &cost.format);

    BenchArgs bench;
    CLI::App* bench_cmd = app.add_subcommand("bench", "Time a full discrimination pass");
    bench_cmd->add_option("-d,--dim", bench.d, "Qudit dimension")->check(CLI::Range(2, 64));
    bench_cmd->add_option("-n,--wires", bench.n, "Number of parties")->check(CLI::Range(2, 64));
    bench_cmd->add_option("--reps", bench.reps, "Repetitions")->check(CLI::Range(1, 1000));
    add_format_option(bench_cmd, &bench.format);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (disc_cmd->parsed()) {
            return cmd_discriminate(disc, out);
        }
        if (table1_cmd->parsed()) {
            return cmd_table1(table1_format, out);
        }
        if (verify_cmd->parsed()) {
            return cmd_verify(verify, out, err);
        }
        if (closure_cmd->parsed()) {
            return cmd_closure(closure, out);
        }
        if (cost_cmd->parsed()) {
            return cmd_cost(cost, out);
        }
        if (bench_cmd->parsed()) {
            return cmd_bench(bench, out);
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    err << "error: no subcommand selected\n";
    return 2;
}

}  // namespace quditsim::cli
