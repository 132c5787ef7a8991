// Copyright 2026 The cyclesep Authors
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

#include "cyclesep/cli.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "cyclesep/accept.h"
#include "cyclesep/circuits.h"
#include "cyclesep/errors.h"
#include "cyclesep/exact.h"
#include "cyclesep/resources.h"
#include "cyclesep/simulator.h"
#include "cyclesep/verify.h"

namespace cyclesep {

namespace {

constexpr double kRenormalizeWarning = 1e-9;

std::string trim(std::string_view text) {
    size_t a = text.find_first_not_of(" \t\r\n");
    if (a == std::string_view::npos) {
        return "";
    }
    size_t b = text.find_last_not_of(" \t\r\n");
    return std::string(text.substr(a, b - a + 1));
}

double parse_real(const std::string &text) {
    size_t used = 0;
    double value = 0;
    try {
        value = std::stod(text, &used);
    } catch (const std::exception &) {
        used = 0;
    }
    if (used == 0 || used != text.size()) {
        throw std::invalid_argument("not a number: \"" + text + "\"");
    }
    return value;
}

double parse_fraction(std::string_view token) {
    std::string t = trim(token);
    size_t slash = t.find('/');
    if (slash == std::string::npos) {
        return parse_real(t);
    }
    double den = parse_real(trim(std::string_view(t).substr(slash + 1)));
    if (den == 0) {
        throw std::invalid_argument("zero denominator in \"" + t + "\"");
    }
    return parse_real(trim(std::string_view(t).substr(0, slash))) / den;
}

size_t parse_count(const std::string &text) {
    if (text.empty() || !std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; })) {
        throw std::invalid_argument("not a nonnegative integer: \"" + text + "\"");
    }
    return std::stoul(text);
}

std::vector<std::string> split_list(std::string_view text) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in{std::string(text)};
    while (std::getline(in, item, ',')) {
        item = trim(item);
        if (!item.empty()) {
            out.push_back(item);
        }
    }
    return out;
}

nlohmann::json exact_integer(const Integer &value) {
    if (value <= std::numeric_limits<int64_t>::max() && value >= std::numeric_limits<int64_t>::min()) {
        return static_cast<int64_t>(value);
    }
    return value.str();
}

void write_json_value(const nlohmann::json &value, std::ostream &out, size_t indent) {
    std::string pad(indent, ' ');
    std::string inner(indent + 2, ' ');
    switch (value.type()) {
        case nlohmann::json::value_t::number_float: {
            double v = value.get<double>();
            out << (std::isfinite(v) ? format_real(v) : "null");
            return;
        }
        case nlohmann::json::value_t::object: {
            if (value.empty()) {
                out << "{}";
                return;
            }
            out << "{\n";
            size_t i = 0;
            for (const auto &[key, item] : value.items()) {
                out << inner << nlohmann::json(key).dump() << ": ";
                write_json_value(item, out, indent + 2);
                out << (++i < value.size() ? ",\n" : "\n");
            }
            out << pad << "}";
            return;
        }
        case nlohmann::json::value_t::array: {
            bool flat = std::all_of(value.begin(), value.end(), [](const auto &x) { return x.is_primitive(); });
            if (value.empty() || flat) {
                out << "[";
                for (size_t i = 0; i < value.size(); i++) {
                    out << (i ? ", " : "");
                    write_json_value(value[i], out, indent);
                }
                out << "]";
                return;
            }
            out << "[\n";
            for (size_t i = 0; i < value.size(); i++) {
                out << inner;
                write_json_value(value[i], out, indent + 2);
                out << (i + 1 < value.size() ? ",\n" : "\n");
            }
            out << pad << "]";
            return;
        }
        default:
            out << value.dump();
    }
}

// Parsed flags, shared by all subcommands.
struct Options {
    std::string group;
    std::string spectrum;
    std::string state;
    std::string k_range;
    std::string methods = "closed-form";
    std::string families = "S,C,D";
    std::string plan = "auto";
    std::string output;
    std::string format;
    size_t dim = 0;
    uint64_t seed = VerifyOptions{}.seed;
    size_t spectra = VerifyOptions{}.random_spectra;
    bool emit_plan = false;
};

class Command {
   public:
    Command(const Options &opt, std::ostream &out, std::ostream &err) : opt_(opt), out_(out), err_(err) {
    }

    Spectrum spectrum() const {
        bool inline_given = !opt_.spectrum.empty();
        bool file_given = !opt_.state.empty();
        if (inline_given == file_given) {
            throw std::invalid_argument("give exactly one of --spectrum and --state");
        }
        double shift = 0;
        Spectrum s = Spectrum::pure();
        if (inline_given) {
            s = parse_spectrum_list(opt_.spectrum, &shift);
        } else {
            std::ifstream in(opt_.state);
            if (!in) {
                throw std::invalid_argument("cannot open state file \"" + opt_.state + "\"");
            }
            nlohmann::json state;
            try {
                state = nlohmann::json::parse(in);
            } catch (const nlohmann::json::exception &e) {
                throw std::invalid_argument("state file \"" + opt_.state + "\": " + e.what());
            }
            s = spectrum_from_state_json(state, &shift);
        }
        if (shift > kRenormalizeWarning) {
            err_ << "warning: input renormalized (deviation from 1 was " << format_real(shift) << ")\n";
        }
        return s;
    }

    std::vector<GroupSpec> groups() const {
        if (opt_.group.empty()) {
            throw std::invalid_argument("--group is required");
        }
        if (opt_.k_range.empty()) {
            return {GroupSpec::parse(opt_.group)};
        }
        GroupFamily family = parse_family(trim(opt_.group));
        auto [lo, hi] = parse_k_range(opt_.k_range);
        std::vector<GroupSpec> out;
        for (size_t k = lo; k <= hi; k++) {
            out.push_back(GroupSpec::family_member(family, k));
        }
        return out;
    }

    std::string format(const std::string &fallback, std::initializer_list<std::string_view> allowed) const {
        std::string f = opt_.format.empty() ? fallback : opt_.format;
        if (std::find(allowed.begin(), allowed.end(), f) == allowed.end()) {
            throw std::invalid_argument("unsupported --format \"" + f + "\" for this command");
        }
        return f;
    }

    int cycle_index() {
        format("json", {"json"});
        nlohmann::json result = nlohmann::json::array();
        for (const auto &spec : groups()) {
            auto entry = polynomial_to_json(cycle_index_of(spec));
            entry["group"] = spec.str();
            entry["order"] = exact_integer(group_order(spec));
            result.push_back(entry);
        }
        emit_json(result.size() == 1 ? result[0] : result);
        return kExitOk;
    }

    int accept() {
        std::string f = format("json", {"json", "csv"});
        Spectrum s = spectrum();
        std::vector<AcceptMethod> methods;
        for (const auto &name : split_list(opt_.methods)) {
            methods.push_back(parse_method(name));
        }
        if (methods.empty()) {
            throw std::invalid_argument("--methods is empty");
        }
        nlohmann::json results = nlohmann::json::array();
        for (const auto &spec : groups()) {
            for (AcceptMethod method : methods) {
                AcceptanceReport report = evaluate_method(spec, s, method);
                results.push_back({{"group", spec.str()},
                                   {"k", report.k},
                                   {"method", method_name(report.method)},
                                   {"value", report.value}});
            }
        }
        if (f == "csv") {
            std::ostringstream csv;
            csv << "group,k,method,value\n";
            for (const auto &r : results) {
                csv << r["group"].get<std::string>() << ',' << r["k"].get<size_t>() << ','
                    << r["method"].get<std::string>() << ',' << format_real(r["value"].get<double>()) << '\n';
            }
            emit_text(csv.str());
        } else {
            emit_json({{"spectrum", spectrum_json(s)}, {"results", results}});
        }
        return kExitOk;
    }

    int simulate_cmd() {
        format("json", {"json"});
        Spectrum s = spectrum();
        if (opt_.plan != "auto" && opt_.plan != "qudit") {
            throw std::invalid_argument("--plan must be auto or qudit");
        }
        size_t d = opt_.dim ? opt_.dim : std::max<size_t>(2, s.rank());
        nlohmann::json results = nlohmann::json::array();
        for (const auto &spec : groups()) {
            CircuitPlan plan = opt_.plan == "qudit" ? build_qudit_exact(spec, d) : build_plan(spec, d);
            double formula = accept_group(spec, s).value;
            double simulated = simulate(plan, s);
            nlohmann::json entry = {{"group", spec.str()},
                                    {"k", plan.copies},
                                    {"d", d},
                                    {"control", control_kind_name(plan.kind)},
                                    {"cswaps", count_gates(plan)},
                                    {"formula", formula},
                                    {"simulation", simulated},
                                    {"difference", simulated - formula}};
            if (opt_.emit_plan) {
                entry["plan"] = plan_to_json(plan);
            }
            results.push_back(entry);
        }
        emit_json({{"spectrum", spectrum_json(s)}, {"results", results}});
        return kExitOk;
    }

    int resources() {
        std::string f = format("csv", {"csv", "json"});
        Spectrum s = spectrum();
        std::vector<GroupFamily> families;
        for (const auto &letter : split_list(opt_.families)) {
            families.push_back(parse_family(letter));
        }
        auto [lo, hi] = parse_k_range(opt_.k_range.empty() ? "2:10" : opt_.k_range);
        auto rows = sweep(families, s, lo, hi);
        if (f == "csv") {
            std::ostringstream csv;
            write_csv(rows, csv);
            emit_text(csv.str());
            return kExitOk;
        }
        nlohmann::json result = nlohmann::json::array();
        for (const auto &row : rows) {
            result.push_back({{"group", family_letter(row.group.family())},
                              {"k", row.k},
                              {"cswap_actual", row.cswap_count},
                              {"cswap_formula", row.cswap_closed_form},
                              {"depth", row.depth_estimate},
                              {"p_acc", row.p_acc},
                              {"ratio", row.ratio ? nlohmann::json(*row.ratio) : nlohmann::json("NA")}});
        }
        emit_json(result);
        return kExitOk;
    }

    int verify() {
        std::string f = format("text", {"text", "json"});
        VerifyOptions options;
        options.seed = opt_.seed;
        options.random_spectra = opt_.spectra;
        auto checks = run_identity_battery(options);
        if (f == "json") {
            nlohmann::json result = nlohmann::json::array();
            for (const auto &c : checks) {
                result.push_back({{"identity", c.name},
                                  {"passed", c.passed},
                                  {"max_error", c.max_error},
                                  {"tolerance", c.tolerance},
                                  {"cases", c.cases},
                                  {"first_failure", c.detail}});
            }
            emit_json(result);
        } else {
            std::ostringstream text;
            for (const auto &c : checks) {
                text << (c.passed ? "PASS " : "FAIL ") << c.name << "  max_error=" << format_real(c.max_error)
                     << " tol=" << format_real(c.tolerance) << " cases=" << c.cases;
                if (!c.passed) {
                    text << "  first failure: " << c.detail;
                }
                text << '\n';
            }
            emit_text(text.str());
        }
        return all_passed(checks) ? kExitOk : kExitVerificationFailed;
    }

   private:
    AcceptanceReport evaluate_method(const GroupSpec &spec, const Spectrum &s, AcceptMethod method) const {
        size_t k = spec.degree();
        if (method == AcceptMethod::ClosedForm) {
            return accept_group(spec, s);
        }
        if (method == AcceptMethod::Simulation) {
            CircuitPlan plan = build_qudit_exact(spec, std::max<size_t>(1, s.rank()));
            return {spec, k, simulate(plan, s), method};
        }
        if (spec.family() != GroupFamily::Symmetric) {
            throw std::invalid_argument("method " + method_name(method) + " applies only to symmetric groups");
        }
        auto t = power_traces(s, k);
        double value = 0;
        switch (method) {
            case AcceptMethod::PartitionSum:
                value = accept_symmetric_partition(t, k);
                break;
            case AcceptMethod::Recurrence:
                value = accept_symmetric_recurrence(t, k);
                break;
            case AcceptMethod::Bell:
                value = accept_symmetric_bell(t, k);
                break;
            case AcceptMethod::Determinant:
                value = accept_symmetric_determinant(t, k);
                break;
            case AcceptMethod::Permanent:
                value = accept_symmetric_permanent(t, k);
                break;
            default:
                break;
        }
        return {spec, k, value, method};
    }

    static nlohmann::json spectrum_json(const Spectrum &s) {
        return std::vector<double>(s.eigenvalues().begin(), s.eigenvalues().end());
    }

    void emit_json(const nlohmann::json &value) {
        std::ostringstream text;
        write_json(value, text);
        emit_text(text.str());
    }

    void emit_text(const std::string &text) {
        if (opt_.output.empty()) {
            out_ << text;
            return;
        }
        std::ofstream file(opt_.output);
        if (!file) {
            throw std::invalid_argument("cannot open output file \"" + opt_.output + "\"");
        }
        file << text;
    }

    const Options &opt_;
    std::ostream &out_;
    std::ostream &err_;
};

void add_state_flags(CLI::App *cmd, Options &opt) {
    cmd->add_option("--spectrum", opt.spectrum, "Comma-separated eigenvalues, fractions allowed");
    cmd->add_option("--state", opt.state, "JSON state file");
}

void add_group_flags(CLI::App *cmd, Options &opt) {
    cmd->add_option("--group", opt.group, "S:k, C:k, D:k, A:k, I:k, Q8, Zmk:m,k or gen:[...]; a bare letter with --k-range");
    cmd->add_option("--k-range", opt.k_range, "a:b, used with a bare family letter");
}

void add_output_flags(CLI::App *cmd, Options &opt) {
    cmd->add_option("--output", opt.output, "Write results to this file");
    cmd->add_option("--format", opt.format, "json or csv");
}

}  // namespace

Spectrum parse_spectrum_list(std::string_view text, double *shift) {
    std::vector<double> values;
    for (const auto &token : split_list(text)) {
        values.push_back(parse_fraction(token));
    }
    return Spectrum::normalized(std::move(values), shift);
}

Spectrum spectrum_from_state_json(const nlohmann::json &state, double *shift) {
    if (!state.is_object()) {
        throw std::invalid_argument("state JSON must be an object");
    }
    try {
        if (state.contains("spectrum")) {
            return Spectrum::normalized(state.at("spectrum").get<std::vector<double>>(), shift);
        }
        if (!state.contains("dims") || !state.contains("amplitudes")) {
            throw std::invalid_argument("state JSON needs \"spectrum\" or both \"dims\" and \"amplitudes\"");
        }
        auto dims = state.at("dims").get<std::vector<size_t>>();
        const auto &amps = state.at("amplitudes");
        if (dims.size() != 2 || dims[0] == 0 || dims[1] == 0) {
            throw std::invalid_argument("\"dims\" must hold two positive integers");
        }
        if (!amps.is_array() || amps.size() != dims[0] * dims[1]) {
            throw std::invalid_argument("\"amplitudes\" must hold dims[0] * dims[1] entries");
        }
        Eigen::MatrixXcd m(static_cast<Eigen::Index>(dims[0]), static_cast<Eigen::Index>(dims[1]));
        for (size_t i = 0; i < amps.size(); i++) {
            auto pair = amps[i].get<std::vector<double>>();
            if (pair.size() != 2) {
                throw std::invalid_argument("each amplitude must be [re, im]");
            }
            m(static_cast<Eigen::Index>(i / dims[1]), static_cast<Eigen::Index>(i % dims[1])) = {pair[0], pair[1]};
        }
        double norm = m.norm();
        if (norm == 0) {
            throw std::invalid_argument("state has zero norm");
        }
        if (shift) {
            *shift = std::abs(norm * norm - 1);
        }
        return reduced_spectrum(PureBipartiteState(m / norm));
    } catch (const nlohmann::json::exception &e) {
        throw std::invalid_argument(std::string("state JSON: ") + e.what());
    }
}

std::pair<size_t, size_t> parse_k_range(std::string_view text) {
    std::string t = trim(text);
    size_t colon = t.find(':');
    if (colon == std::string::npos) {
        throw std::invalid_argument("k range must look like a:b");
    }
    size_t lo = parse_count(trim(std::string_view(t).substr(0, colon)));
    size_t hi = parse_count(trim(std::string_view(t).substr(colon + 1)));
    if (lo < 1 || hi < lo) {
        throw std::invalid_argument("k range needs 1 <= a <= b");
    }
    return {lo, hi};
}

nlohmann::json polynomial_to_json(const CycleIndexPolynomial &z) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto &[type, coefficient] : z.sorted_terms()) {
        nlohmann::json powers = nlohmann::json::object();
        for (uint32_t j = 1; j <= type.max_length(); j++) {
            if (type.count(j)) {
                powers[std::to_string(j)] = type.count(j);
            }
        }
        terms.push_back({{"type", powers},
                         {"num", exact_integer(boost::multiprecision::numerator(coefficient))},
                         {"den", exact_integer(boost::multiprecision::denominator(coefficient))}});
    }
    return {{"degree", z.degree()}, {"terms", terms}};
}

void write_json(const nlohmann::json &value, std::ostream &out) {
    write_json_value(value, out, 0);
    out << '\n';
}

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    Options opt;
    CLI::App app{"Cycle-index acceptance probabilities of G-Bose symmetry tests"};
    app.require_subcommand(1);

    auto *ci = app.add_subcommand("cycle-index", "Print Z(G) with exact rational coefficients");
    add_group_flags(ci, opt);
    add_output_flags(ci, opt);

    auto *acc = app.add_subcommand("accept", "Acceptance probability p_G of a state");
    add_group_flags(acc, opt);
    add_state_flags(acc, opt);
    add_output_flags(acc, opt);
    acc->add_option("--methods", opt.methods,
                    "Comma list: partition, recurrence, bell, determinant, permanent, closed-form, simulation");

    auto *sim = app.add_subcommand("simulate", "Run the circuit and compare with the formula");
    add_group_flags(sim, opt);
    add_state_flags(sim, opt);
    add_output_flags(sim, opt);
    sim->add_option("--dim", opt.dim, "Local dimension d (default max(2, rank))");
    sim->add_option("--plan", opt.plan, "auto (qubit circuits for S, C, D) or qudit");
    sim->add_flag("--emit-plan", opt.emit_plan, "Include the gate list");

    auto *res = app.add_subcommand("resources", "Gate counts and resources-to-rejection ratios");
    add_state_flags(res, opt);
    add_output_flags(res, opt);
    res->add_option("--families", opt.families, "Comma list of S, C, D");
    res->add_option("--k-range", opt.k_range, "a:b (default 2:10)");

    auto *ver = app.add_subcommand("verify", "Run the cross-evaluator identity battery");
    add_output_flags(ver, opt);
    ver->add_option("--seed", opt.seed, "Random seed");
    ver->add_option("--spectra", opt.spectra, "Number of random spectra");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
    }

    Command command(opt, out, err);
    try {
        if (ci->parsed()) {
            return command.cycle_index();
        }
        if (acc->parsed()) {
            return command.accept();
        }
        if (sim->parsed()) {
            return command.simulate_cmd();
        }
        if (res->parsed()) {
            return command.resources();
        }
        return command.verify();
    } catch (const CapExceeded &e) {
        err << "error: cap exceeded: " << e.what() << '\n';
        return kExitCapExceeded;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

}  // namespace cyclesep
