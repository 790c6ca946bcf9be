// Copyright 2026 The fermicomm Authors
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


#include "fermicomm/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "fermicomm/clifford.hpp"
#include "fermicomm/dimensions.hpp"
#include "fermicomm/gaussian_group.hpp"
#include "fermicomm/gt_basis.hpp"
#include "fermicomm/invariants.hpp"
#include "fermicomm/io.hpp"
#include "fermicomm/magic.hpp"
#include "fermicomm/multicopy.hpp"
#include "fermicomm/state_spec.hpp"
#include "json.hpp"

namespace fermicomm {

using nlohmann::json;

namespace {

constexpr int kDefaultOracleQubits = 6;
constexpr double kGtCountLimit = 1e7;

GroupKind parse_group(const std::string& text) {
    if (text == "pp") {
        return GroupKind::pp;
    }
    if (text == "gauss") {
        return GroupKind::gauss;
    }
    throw UsageError("--group must be pp or gauss, got '" + text + "'");
}

json rational_json(const ExactRational& q) {
    return {{"value", to_string(q)},
            {"num", to_string(ExactInteger(numerator(q)))},
            {"den", to_string(ExactInteger(denominator(q)))},
            {"float", to_double(q)}};
}

json config_echo(const RunConfig& c) {
    json echo{{"command", c.command}};
    auto add = [&](const char* key, auto value) { echo[key] = value; };
    if (!c.mode.empty()) {
        add("mode", c.mode);
    }
    add("group", c.group);
    add("n", c.n);
    add("t", c.t);
    if (c.n_max > 0) {
        add("n_max", c.n_max);
    }
    if (c.r >= 0) {
        add("r", c.r);
    }
    if (c.all_r) {
        add("all_r", true);
    }
    add("k", c.k);
    add("ensemble", c.ensemble);
    add("samples", c.samples);
    add("max_qubits", max_total_qubits());
    add("max_operator_dim", c.max_operator_dim);
    add("format", c.format);
    if (!c.state.empty()) {
        add("state", c.state);
    }
    add("quantity", c.quantity);
    add("tol", c.tol);
    add("with_basis", c.with_basis);
    add("oracle", c.oracle);
    return echo;
}

json provenance(const RunConfig& c) {
    json p{{"tool", "fermicomm"}, {"version", FERMICOMM_VERSION}, {"config", config_echo(c)}};
    p["seed"] = c.has_seed ? json(c.seed) : json(nullptr);
    if (c.timestamp) {
        std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
        std::tm utc{};
        gmtime_r(&now, &utc);
        std::ostringstream stamp;
        stamp << std::put_time(&utc, "%Y-%m-%dT%H:%M:%SZ");
        p["timestamp"] = stamp.str();
    }
    return p;
}

void emit(const RunConfig& c, const std::string& text, std::ostream& out) {
    if (c.output.empty()) {
        out << text;
    } else {
        write_file_atomic(c.output, text);
    }
}

void emit_json(const RunConfig& c, json doc, std::ostream& out) {
    json full{{"provenance", provenance(c)}};
    full.update(doc);
    emit(c, full.dump(2) + "\n", out);
}

void check_operator_space(const RunConfig& c, int qubits) {
    // Operator space on `qubits` qubits has dimension 4^qubits.
    if (qubits < 0 || 2 * qubits >= 64 || (std::uint64_t{1} << (2 * qubits)) > c.max_operator_dim) {
        throw ResourceError("operator space 4^" + std::to_string(qubits) + " exceeds --max-operator-dim " +
                            std::to_string(c.max_operator_dim));
    }
}

void require_seed(const RunConfig& c) {
    if (!c.has_seed) {
        throw UsageError("--seed is required for " + c.command + (c.mode.empty() ? "" : " " + c.mode));
    }
}

std::string dimension_formula(GroupKind group) {
    if (group == GroupKind::pp) {
        return "prod_{j=0}^{n-1} j!(j+2t)!/(j+t)!^2 = prod_{i,j=1}^{t} (n+i+j-1)/(i+j-1)";
    }
    return "2^{1-n} prod_{j=0}^{n-1} (2j)!(2t+2j)!/((t+j)!(t+n+j-1)!)";
}

ExactInteger closed_form(GroupKind group, int t, int n) {
    return group == GroupKind::pp ? dim_pp_commutant(t, n) : dim_gauss_commutant(t, n);
}

int run_dims(const RunConfig& c, std::ostream& out) {
    const GroupKind group = parse_group(c.group);
    const ExactInteger dim = closed_form(group, c.t, c.n);
    json doc{{"group", c.group}, {"t", c.t}, {"n", c.n}, {"dim", to_string(dim)}, {"formula", dimension_formula(group)}};
    if (to_double(dim) <= kGtCountLimit) {
        const ExactInteger count = gt_dimension_count(group, c.t, c.n);
        if (count != dim) {
            throw ConsistencyError("GT pattern count " + to_string(count) + " differs from the closed form " +
                                   to_string(dim));
        }
        doc["gt_count"] = to_string(count);
    }
    if (c.oracle) {
        const int cap = c.max_qubits > 0 ? c.max_qubits : kDefaultOracleQubits;
        const int brute = brute_force_commutant_dim(c.n, c.t, group, cap);
        if (ExactInteger(brute) != dim) {
            throw VerificationFailure("brute-force commutant dimension " + std::to_string(brute) +
                                      " differs from the closed form " + to_string(dim));
        }
        doc["oracle"] = {{"dim", std::to_string(brute)}, {"match", true}};
    }
    if (c.format == "csv") {
        std::ostringstream csv;
        csv << "# " << provenance(c).dump() << "\n";
        csv << "group,t,n,dim\n" << c.group << "," << c.t << "," << c.n << "," << to_string(dim) << "\n";
        emit(c, csv.str(), out);
        return 0;
    }
    emit_json(c, doc, out);
    return 0;
}

int run_oracle(const RunConfig& c, std::ostream& out) {
    const GroupKind group = parse_group(c.group);
    const int cap = c.max_qubits > 0 ? c.max_qubits : kDefaultOracleQubits;
    check_operator_space(c, c.n * c.t);
    const int brute = brute_force_commutant_dim(c.n, c.t, group, cap);
    const ExactInteger dim = closed_form(group, c.t, c.n);
    if (ExactInteger(brute) != dim) {
        throw VerificationFailure("brute-force commutant dimension " + std::to_string(brute) +
                                  " differs from the closed form " + to_string(dim));
    }
    emit_json(c,
              {{"group", c.group},
               {"t", c.t},
               {"n", c.n},
               {"oracle_dim", std::to_string(brute)},
               {"closed_form", to_string(dim)},
               {"match", true}},
              out);
    return 0;
}

int run_verify(const RunConfig& c, std::ostream& out) {
    const GroupKind group = parse_group(c.group);
    require_seed(c);
    if (c.samples < 1) {
        throw UsageError("verify needs --samples >= 1");
    }
    CopySpace cs(c.n, c.t);
    check_operator_space(c, cs.qubits());
    const auto generators = group == GroupKind::pp ? pp_generators(cs) : gauss_generators(cs);
    std::vector<ComplexSparseOperator> basis;
    if (c.with_basis) {
        for (auto& e : commutant_basis(group, c.t, c.n)) {
            basis.push_back(std::move(e.op));
        }
    }
    double worst_generator = 0.0;
    double worst_basis = 0.0;
    for (std::uint64_t i = 0; i < c.samples; i++) {
        const DenseMatrix r = group == GroupKind::pp ? sample_pp_gaussian_unitary(c.n, c.seed, i)
                                                     : sample_gaussian_unitary(c.n, c.seed, i);
        for (const auto& g : generators) {
            worst_generator = std::max(worst_generator, commutation_residual(g, r, c.t));
        }
        for (const auto& b : basis) {
            worst_basis = std::max(worst_basis, commutation_residual(b, r, c.t));
        }
    }
    const double closure = group == GroupKind::pp ? pp_lie_closure_residual(cs) : gauss_lie_closure_residual(cs);
    const std::string algebra = group == GroupKind::pp ? "u(t)" : "so(t)";
    if (worst_generator > c.tol) {
        throw VerificationFailure("generator commutation with R(U)^(x)t fails: residual " +
                                  std::to_string(worst_generator));
    }
    if (worst_basis > c.tol) {
        throw VerificationFailure("GT basis commutation with R(U)^(x)t fails: residual " + std::to_string(worst_basis));
    }
    if (closure > c.tol) {
        throw VerificationFailure(algebra + " bracket closure fails: residual " + std::to_string(closure));
    }
    json doc{{"group", c.group},
             {"t", c.t},
             {"n", c.n},
             {"samples", c.samples},
             {"generators", generators.size()},
             {"max_generator_residual", worst_generator},
             {"lie_closure_residual", closure},
             {"max_residual", std::max({worst_generator, worst_basis, closure})}};
    if (c.with_basis) {
        doc["basis"] = {{"elements", basis.size()}, {"max_residual", worst_basis}};
    }
    emit_json(c, doc, out);
    return 0;
}

json pattern_json(const GTPattern& p) {
    return p.rows;
}

int run_basis(const RunConfig& c, std::ostream& out) {
    const GroupKind group = parse_group(c.group);
    if (c.output.empty()) {
        throw UsageError("basis needs --output DIR for the operator files");
    }
    CopySpace cs(c.n, c.t);
    check_operator_space(c, cs.qubits());
    const auto basis = commutant_basis(group, c.t, c.n);
    namespace fs = std::filesystem;
    fs::create_directories(c.output);
    json elements = json::array();
    for (std::size_t i = 0; i < basis.size(); i++) {
        std::ostringstream name;
        name << "op_" << std::setw(5) << std::setfill('0') << i << ".json";
        write_file_atomic((fs::path(c.output) / name.str()).string(), operator_dump(basis[i].op) + "\n");
        elements.push_back({{"index", i},
                            {"lambda", basis[i].lambda},
                            {"row", pattern_json(basis[i].row)},
                            {"col", pattern_json(basis[i].col)},
                            {"parity", basis[i].parity == ParityFlag::plain ? "plain" : "gamma1"},
                            {"file", name.str()}});
    }
    const ExactInteger expected = closed_form(group, c.t, c.n);
    json doc{{"provenance", provenance(c)},
             {"group", c.group},
             {"t", c.t},
             {"n", c.n},
             {"dim", to_string(expected)},
             {"elements", std::move(elements)}};
    const std::string manifest = (fs::path(c.output) / "manifest.json").string();
    write_file_atomic(manifest, doc.dump(2) + "\n");
    json summary{{"provenance", provenance(c)},
                 {"manifest", manifest},
                 {"count", basis.size()},
                 {"dim", to_string(expected)}};
    out << summary.dump(2) << "\n";
    return 0;
}

json report_json(const InvariantReport& report) {
    json entries = json::array();
    for (const auto& e : report.entries) {
        json item;
        for (std::size_t i = 0; i < e.label.size(); i++) {
            item[report.label_names[i]] = e.label[i];
        }
        item["value"] = e.value + 0.0;
        entries.push_back(std::move(item));
    }
    return {{"quantity", report.quantity}, {"entries", std::move(entries)}, {"residuals", report.residuals}};
}

int run_invariants(const RunConfig& c, std::ostream& out) {
    if (c.state.empty()) {
        throw UsageError("invariants needs --state SPEC");
    }
    const StateVector psi = parse_state_spec(c.state, c.n);
    const std::string& q = c.quantity;
    const bool all = q == "all";
    static const std::vector<std::string> kQuantities = {"all", "p_ki", "p_j", "rdm", "plucker", "annihilation"};
    if (std::find(kQuantities.begin(), kQuantities.end(), q) == kQuantities.end()) {
        throw UsageError("--quantity must be one of all, p_ki, p_j, rdm, plucker, annihilation");
    }
    json doc{{"state", c.state}, {"n", c.n}};

    const double mean_n = psi.expectation(number_op(c.n)).real();
    const int r = static_cast<int>(std::lround(mean_n));
    const bool fixed = number_residual(psi, c.n, r) <= 1e-10;
    doc["particle_number"] = fixed ? json(r) : json(nullptr);

    if (all || q == "p_ki") {
        doc["p_ki"] = report_json(p_ki_spectrum(psi, c.n));
    }
    if ((all && fixed) || q == "p_j") {
        doc["p_j"] = report_json(spin_sector_probs(psi, c.n, r));
    }
    if ((all && fixed) || q == "plucker") {
        doc["plucker_rank"] = plucker_rank(psi, c.n);
    }
    if (all || q == "rdm") {
        const DenseMatrix rho = rdm(psi, c.n, c.k);
        json item{{"k", c.k},
                  {"matrix", json::parse(matrix_dump(rho))},
                  {"purity", (rho * rho).trace().real()}};
        if (fixed && c.k <= r) {
            item["quadratic_entropy"] = quadratic_entropy(psi, c.n, c.k);
        }
        doc["rdm"] = std::move(item);
    }
    if (all || q == "annihilation") {
        json item{{"t", c.t < 2 ? 2 : c.t}};
        for (GroupKind kind : {GroupKind::pp, GroupKind::gauss}) {
            auto rep = free_state_annihilation(psi, c.n, c.t < 2 ? 2 : c.t, kind);
            item[kind == GroupKind::pp ? "pp" : "gauss"] = {
                {"max_residual", rep.max_residual}, {"worst_i", rep.worst_i}, {"worst_j", rep.worst_j}};
        }
        doc["annihilation"] = std::move(item);
    }
    emit_json(c, doc, out);
    return 0;
}

struct MagicRow {
    int n;
    int r;  ///< -1 when the ensemble has no particle number
    ExactRational exact;
    bool has_mc = false;
    MCEstimate mc;
};

ExactRational exact_average(int n, const Ensemble& e) {
    switch (e.kind) {
        case Ensemble::Kind::gauss:
        case Ensemble::Kind::gauss_odd:
            return avg_gauss_s4_exact(n);
        case Ensemble::Kind::pp:
            return avg_pp_s4_exact(n, e.r);
        case Ensemble::Kind::haar:
            return baseline_s4(n, Baseline::haar);
        case Ensemble::Kind::product:
            return baseline_s4(n, Baseline::product);
    }
    throw DomainError("unknown ensemble");
}

json row_json(const MagicRow& row, const Ensemble& e) {
    json item{{"n", row.n}, {"ensemble", e.to_string()}, {"exact", rational_json(row.exact)}};
    if (row.r >= 0) {
        item["r"] = row.r;
    }
    if (row.has_mc) {
        item["mc"] = {{"mean", row.mc.mean},
                      {"stderr", row.mc.std_error},
                      {"samples", row.mc.samples},
                      {"seed", row.mc.seed}};
    }
    return item;
}

std::string plot_csv(const std::vector<MagicRow>& rows) {
    std::ostringstream csv;
    csv << std::setprecision(17);
    csv << "n,r,exact,mc_mean,mc_stderr,samples,seed\n";
    for (const auto& row : rows) {
        csv << row.n << "," << (row.r >= 0 ? std::to_string(row.r) : "") << "," << to_double(row.exact) << ",";
        if (row.has_mc) {
            csv << row.mc.mean << "," << row.mc.std_error << "," << row.mc.samples << "," << row.mc.seed;
        } else {
            csv << ",,,";
        }
        csv << "\n";
    }
    return csv.str();
}

int run_magic(const RunConfig& c, std::ostream& out) {
    if (c.mode != "exact" && c.mode != "mc") {
        throw UsageError("magic needs a mode: exact or mc");
    }
    Ensemble base = Ensemble::parse(c.ensemble == "pp" ? "pp:0" : c.ensemble);
    const bool pp = base.kind == Ensemble::Kind::pp;
    if (pp && c.ensemble == "pp" && c.r < 0 && !c.all_r) {
        throw UsageError("the pp ensemble needs --r R or --all-r");
    }
    if (!pp && (c.r >= 0 || c.all_r)) {
        throw UsageError("--r applies only to the pp ensemble");
    }
    if (c.mode == "mc") {
        require_seed(c);
    }
    const int n_last = c.n_max > 0 ? c.n_max : c.n;
    if (n_last < c.n) {
        throw UsageError("--n-max must be at least --n");
    }
    std::vector<MagicRow> rows;
    for (int n = c.n; n <= n_last; n++) {
        std::vector<int> rs;
        if (!pp) {
            rs.push_back(-1);
        } else if (c.all_r) {
            for (int r = 1; r <= std::min(n, 4); r++) {
                rs.push_back(r);
            }
        } else {
            rs.push_back(c.ensemble == "pp" ? c.r : base.r);
        }
        for (int r : rs) {
            Ensemble e = base;
            if (pp) {
                e.r = r;
            }
            MagicRow row{n, r, exact_average(n, e), false, MCEstimate{}};
            if (c.mode == "mc") {
                row.mc = mc_average_s4(n, e, c.samples, c.seed, c.threads);
                row.has_mc = true;
            }
            rows.push_back(std::move(row));
        }
    }
    if (!c.plot_data.empty()) {
        write_file_atomic(c.plot_data, plot_csv(rows));
    }
    if (c.format == "csv") {
        emit(c, "# " + provenance(c).dump() + "\n" + plot_csv(rows), out);
        return 0;
    }
    Ensemble label = base;
    json doc;
    if (rows.size() == 1) {
        if (pp) {
            label.r = rows[0].r;
        }
        doc = row_json(rows[0], label);
    } else {
        json list = json::array();
        for (const auto& row : rows) {
            if (pp) {
                label.r = row.r;
            }
            list.push_back(row_json(row, label));
        }
        doc["rows"] = std::move(list);
    }
    emit_json(c, doc, out);
    return 0;
}

}  // namespace

RunConfig parse_command_line(int argc, const char* const* argv, std::ostream& out) {
    RunConfig c;
    CLI::App app{"Commutants of free-fermion unitaries: dimensions, bases, invariants and magic."};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(FERMICOMM_VERSION));

    auto common = [&](CLI::App* sub) {
        sub->add_option("--n", c.n, "number of fermionic modes")->check(CLI::Range(1, 30));
        sub->add_option("--max-qubits", c.max_qubits, "cap on n*t (overrides FERMICOMM_MAX_QUBITS)")
            ->check(CLI::Range(1, 62));
        sub->add_option("--max-operator-dim", c.max_operator_dim, "cap on the operator-space dimension 4^(n t)");
        sub->add_option("--output,-o", c.output, "output path (stdout when omitted)");
        sub->add_flag("--timestamp", c.timestamp, "add a UTC timestamp to the provenance header");
    };
    auto group_t = [&](CLI::App* sub) {
        sub->add_option("--group", c.group, "pp or gauss")->check(CLI::IsMember({"pp", "gauss"}));
        sub->add_option("--t", c.t, "number of copies")->check(CLI::Range(1, 64));
    };
    auto seeded = [&](CLI::App* sub) {
        sub->add_option("--seed", c.seed, "RNG seed")->each([&](const std::string&) { c.has_seed = true; });
        sub->add_option("--samples", c.samples, "number of samples");
        sub->add_option("--threads", c.threads, "worker threads (0 = automatic)")->check(CLI::Range(0, 256));
    };

    auto* dims = app.add_subcommand("dims", "closed-form commutant dimension");
    common(dims);
    group_t(dims);
    dims->add_flag("--oracle", c.oracle, "also run the brute-force nullspace oracle");
    dims->add_option("--format", c.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

    auto* verify = app.add_subcommand("verify", "generator commutation and Lie closure sweeps");
    common(verify);
    group_t(verify);
    seeded(verify);
    verify->add_option("--tol", c.tol, "residual tolerance");
    verify->add_flag("--basis", c.with_basis, "also check the explicit GT basis elements");

    auto* basis = app.add_subcommand("basis", "write GT basis operators and a manifest");
    common(basis);
    group_t(basis);

    auto* inv = app.add_subcommand("invariants", "two-copy invariants of a state");
    common(inv);
    inv->add_option("--state", c.state, "state spec (vacuum, slater:1,2, fock:0110, gaussian:seed=S, ...)")
        ->required();
    inv->add_option("--quantity", c.quantity, "all, p_ki, p_j, rdm, plucker or annihilation");
    inv->add_option("--k", c.k, "RDM body order")->check(CLI::Range(0, 30));
    inv->add_option("--t", c.t, "copies for the annihilation check")->check(CLI::Range(1, 64));

    auto* magic = app.add_subcommand("magic", "stabilizer entropy averages");
    common(magic);
    seeded(magic);
    magic->add_option("mode", c.mode, "exact or mc")->required()->check(CLI::IsMember({"exact", "mc"}));
    magic->add_option("--ensemble", c.ensemble, "gauss, gauss-odd, pp, pp:R, haar or product");
    magic->add_option("--r", c.r, "particle number for the pp ensemble")->check(CLI::Range(0, 30));
    magic->add_flag("--all-r", c.all_r, "pp ensemble: r = 1..min(n, 4)");
    magic->add_option("--n-max", c.n_max, "sweep n up to this value")->check(CLI::Range(1, 30));
    magic->add_option("--emit-plot-data", c.plot_data, "write the n, r, exact, mc table as CSV");
    magic->add_option("--format", c.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

    auto* oracle = app.add_subcommand("oracle", "brute-force commutant dimension");
    common(oracle);
    group_t(oracle);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return RunConfig{};
    } catch (const CLI::CallForVersion&) {
        out << FERMICOMM_VERSION << "\n";
        return RunConfig{};
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }
    for (auto* sub : {dims, verify, basis, inv, magic, oracle}) {
        if (sub->parsed()) {
            c.command = sub->get_name();
        }
    }
    if ((c.command == "verify" || c.command == "magic") && c.mode == "mc" && c.samples == 0) {
        c.samples = 10000;
    }
    if (c.command == "verify" && c.samples == 0) {
        c.samples = 20;
    }
    return c;
}

int run(const RunConfig& c, std::ostream& out, std::ostream& err) {
    try {
        if (c.max_qubits > 0) {
            ::setenv("FERMICOMM_MAX_QUBITS", std::to_string(c.max_qubits).c_str(), 1);
        }
        if (c.command == "dims") {
            return run_dims(c, out);
        }
        if (c.command == "verify") {
            return run_verify(c, out);
        }
        if (c.command == "basis") {
            return run_basis(c, out);
        }
        if (c.command == "invariants") {
            return run_invariants(c, out);
        }
        if (c.command == "magic") {
            return run_magic(c, out);
        }
        if (c.command == "oracle") {
            return run_oracle(c, out);
        }
        throw UsageError("unknown command '" + c.command + "'");
    } catch (const ResourceError& e) {
        err << "resource error: " << e.what() << "\n";
        return 3;
    } catch (const DomainError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const VerificationFailure& e) {
        err << "verification failed: " << e.what() << "\n";
        return 1;
    } catch (const ConsistencyError& e) {
        err << "verification failed: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    RunConfig config;
    try {
        config = parse_command_line(argc, argv, out);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }
    if (config.command.empty()) {
        return 0;
    }
    return run(config, out, err);
}

}  // namespace fermicomm
