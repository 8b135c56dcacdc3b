#include "commands.h"

#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "mbqc/error.h"
#include "mbqc/simulator.h"

namespace mbqc::cli {

namespace {

struct CommandError {
    ExitCode code;
    std::string message;
};

std::vector<std::string> split(const std::string &text, char sep) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, sep)) {
        out.push_back(item);
    }
    return out;
}

double parse_double(const std::string &text, const std::string &what) {
    try {
        size_t used = 0;
        double v = std::stod(text, &used);
        if (used == text.size()) {
            return v;
        }
    } catch (const std::exception &) {
    }
    throw CommandError{kUsage, what + ": '" + text + "' is not a number"};
}

bool is_qubit_key(const std::string &key) {
    return !key.empty() && key.size() <= 10 && key.find_first_not_of("0123456789") == std::string::npos;
}

std::string num(double v) {
    std::ostringstream ss;
    ss << std::setprecision(6) << v;
    return ss.str();
}

std::string join_qubits(const std::vector<QubitId> &qs) {
    std::string out;
    for (QubitId q : qs) {
        if (!out.empty()) {
            out += ' ';
        }
        out += std::to_string(q);
    }
    return out;
}

PatternDocument load_valid(const std::string &path) {
    PatternDocument doc;
    try {
        doc = load_document(path);
    } catch (const ParseError &e) {
        throw CommandError{kUsage, std::string("parse error: ") + e.what()};
    }
    auto violations = validate_structure(doc.pattern);
    if (!violations.empty()) {
        std::string msg = "validation error:";
        for (const auto &v : violations) {
            msg += "\n  " + v.rule + ": " + v.detail;
        }
        throw CommandError{kInvalid, msg};
    }
    return doc;
}

std::pair<FlowMap, SignalFlow> compile_document(const PatternDocument &doc) {
    const Pattern &p = doc.pattern;
    try {
        FlowMap flow = p.flow.has_value() ? FlowMap::from_successors(p, *p.flow) : find_flow(p);
        SignalFlow sf = eliminate(p, flow);
        return {std::move(flow), std::move(sf)};
    } catch (const NoFlowError &e) {
        throw CommandError{kNoFlow, std::string("no-flow error: ") + e.what()};
    } catch (const ValidationError &e) {
        throw CommandError{kInvalid, std::string("elimination error: ") + e.what()};
    } catch (const EliminationError &e) {
        throw CommandError{kInvalid, std::string("elimination error: ") + e.what()};
    }
}

std::string flow_line(const FlowMap &flow) {
    std::string out;
    for (const auto &[i, s] : flow.succ) {
        if (!out.empty()) {
            out += ' ';
        }
        out += std::to_string(i) + "->" + std::to_string(s);
    }
    return out;
}

std::string trace_line(const SignalFlow &sf) {
    std::string out;
    for (const auto &step : sf.trace) {
        if (!out.empty()) {
            out += ' ';
        }
        std::string factor = format_factor('K', step.stabilizer, step.exponent);
        out += factor.empty() ? "K" + std::to_string(step.stabilizer) + "^0" : factor;
    }
    return out;
}

std::string single_output_correction(QubitId q, const SignalFlow &sf) {
    PauliWord w(sf.residual.n_qubits());
    w.mul_x(q, sf.output_x.at(q));
    w.mul_z(q, sf.output_z.at(q));
    return w.str();
}

int cmd_flow(const std::string &path, const std::string &format, std::ostream &out) {
    PatternDocument doc = load_valid(path);
    auto [flow, sf] = compile_document(doc);
    out << (format == "json" ? format_flow_json(doc, flow, sf) : format_flow_text(doc, flow, sf));
    return kOk;
}

int cmd_stabilizers(const std::string &path, std::ostream &out) {
    PatternDocument doc = load_valid(path);
    for (QubitId q : doc.pattern.qubits()) {
        out << 'K' << q << ": " << format_stabilizer(doc.pattern, q) << '\n';
    }
    return kOk;
}

struct VerifyOptions {
    std::vector<std::string> angles;
    std::vector<std::string> inputs;
    std::size_t cap = kDefaultBranchCap;
};

AngleValues resolve_angles(const PatternDocument &doc, const std::vector<std::string> &specs) {
    std::map<std::string, double> symbols = doc.symbols;
    std::map<QubitId, double> by_qubit;
    for (const auto &spec : specs) {
        for (const auto &item : split(spec, ',')) {
            auto eq = item.find('=');
            if (eq == std::string::npos || eq == 0) {
                throw CommandError{kUsage, "--angles: expected key=value, got '" + item + "'"};
            }
            std::string key = item.substr(0, eq);
            double value = parse_double(item.substr(eq + 1), "--angles " + key);
            if (is_qubit_key(key)) {
                by_qubit[static_cast<QubitId>(std::stoul(key))] = value;
            } else {
                symbols[key] = value;
            }
        }
    }
    AngleValues angles;
    for (QubitId q : doc.pattern.measured) {
        if (auto it = by_qubit.find(q); it != by_qubit.end()) {
            angles[q] = it->second;
            continue;
        }
        Angle a = doc.pattern.angle(q);
        if (const auto *symbol = std::get_if<std::string>(&a)) {
            auto it = symbols.find(*symbol);
            if (it == symbols.end()) {
                throw CommandError{
                    kUsage, "qubit " + std::to_string(q) + " has symbolic angle '" + *symbol +
                                "'; give a numeric value with --angles " + *symbol + "=<radians>"};
            }
            angles[q] = it->second;
        } else {
            angles[q] = std::get<double>(a);
        }
    }
    return angles;
}

InputStates resolve_inputs(const PatternDocument &doc, const std::vector<std::string> &specs) {
    InputStates inputs = doc.input_states;
    for (const auto &spec : specs) {
        auto eq = spec.find('=');
        std::string key = eq == std::string::npos ? "" : spec.substr(0, eq);
        if (!is_qubit_key(key)) {
            throw CommandError{kUsage, "--input: expected q=a_re,a_im,b_re,b_im, got '" + spec + "'"};
        }
        auto parts = split(spec.substr(eq + 1), ',');
        if (parts.size() != 4) {
            throw CommandError{kUsage, "--input: expected four numbers for qubit " + key};
        }
        std::array<double, 4> v{};
        for (size_t k = 0; k < 4; k++) {
            v[k] = parse_double(parts[k], "--input " + key);
        }
        inputs[static_cast<QubitId>(std::stoul(key))] = QubitState{{v[0], v[1]}, {v[2], v[3]}};
    }
    return inputs;
}

int cmd_verify(const std::string &path, const VerifyOptions &options, std::ostream &out) {
    PatternDocument doc = load_valid(path);
    const Pattern &p = doc.pattern;
    auto [flow, sf] = compile_document(doc);
    AngleValues angles = resolve_angles(doc, options.angles);
    InputStates inputs = resolve_inputs(doc, options.inputs);

    VerificationReport report;
    try {
        report = verify_branches(p, sf, angles, inputs, options.cap);
    } catch (const CapExceededError &e) {
        throw CommandError{kUsage, std::string("cap exceeded: ") + e.what()};
    } catch (const NormalizationError &e) {
        throw CommandError{kUsage, std::string("input error: ") + e.what()};
    } catch (const InvalidQubitError &e) {
        throw CommandError{kUsage, std::string("input error: ") + e.what()};
    }

    out << "measurement order: " << join_qubits(p.measured) << '\n';
    out << "angles:";
    for (const auto &[q, a] : angles) {
        out << " q" << q << '=' << num(a);
    }
    out << '\n';
    for (size_t b = 0; b < report.branches.size(); b++) {
        std::string bits;
        for (QubitId q : p.measured) {
            bits += report.branches[b].outcomes.at(q) ? '1' : '0';
        }
        if (bits.empty()) {
            bits = "-";
        }
        out << "branch " << bits << " probability " << num(report.branches[b].probability) << " infidelity "
            << num(report.infidelity[b]) << '\n';
    }
    out << "branches: " << report.branches.size() << '\n';
    out << "probability sum: " << num(report.probability_sum) << '\n';
    out << "max pairwise infidelity: " << num(report.max_pairwise_infidelity) << '\n';
    out << "result: " << (report.passed ? "PASS" : "FAIL") << '\n';
    return report.passed ? kOk : kVerifyFailed;
}

}  // namespace

std::string format_flow_text(const PatternDocument &doc, const FlowMap &flow, const SignalFlow &sf) {
    const Pattern &p = doc.pattern;
    std::ostringstream out;
    out << "flow: " << flow_line(flow) << '\n';
    out << "measurement order: " << join_qubits(p.measured) << '\n';
    out << "angle signs:\n";
    for (QubitId q : p.measured) {
        out << "  q" << q << ": (-1)^(" << sf.angle_sign.at(q).str() << ") * " << angle_str(p.angle(q)) << '\n';
    }
    out << "output corrections:\n";
    std::vector<QubitId> outputs = p.outputs;
    std::sort(outputs.begin(), outputs.end(), std::greater<>());
    for (QubitId q : outputs) {
        out << "  q" << q << ": f=" << sf.output_x.at(q).str() << " g=" << sf.output_z.at(q).str() << "  "
            << single_output_correction(q, sf) << '\n';
    }
    out << "correction: " << sf.output_correction().str() << '\n';
    out << "residual: " << sf.residual.str() << '\n';
    out << "trace: " << trace_line(sf) << '\n';
    return out.str();
}

std::string format_flow_json(const PatternDocument &doc, const FlowMap &flow, const SignalFlow &sf) {
    using nlohmann::ordered_json;
    const Pattern &p = doc.pattern;
    ordered_json root = ordered_json::object();
    ordered_json succ = ordered_json::array();
    for (const auto &[i, s] : flow.succ) {
        succ.push_back({{"qubit", i}, {"successor", s}});
    }
    root["flow"] = succ;
    root["measurement_order"] = p.measured;
    ordered_json measured = ordered_json::array();
    for (QubitId q : p.measured) {
        ordered_json entry = ordered_json::object();
        entry["qubit"] = q;
        Angle a = p.angle(q);
        if (const auto *symbol = std::get_if<std::string>(&a)) {
            entry["angle"] = *symbol;
        } else {
            entry["angle"] = std::get<double>(a);
        }
        entry["sign"] = sf.angle_sign.at(q).str();
        measured.push_back(entry);
    }
    root["measured"] = measured;
    ordered_json outputs = ordered_json::array();
    std::vector<QubitId> sorted_outputs = p.outputs;
    std::sort(sorted_outputs.begin(), sorted_outputs.end());
    for (QubitId q : sorted_outputs) {
        outputs.push_back(
            {{"qubit", q},
             {"x", sf.output_x.at(q).str()},
             {"z", sf.output_z.at(q).str()},
             {"correction", single_output_correction(q, sf)}});
    }
    root["outputs"] = outputs;
    root["correction"] = sf.output_correction().str();
    root["residual"] = sf.residual.str();
    ordered_json trace = ordered_json::array();
    for (const auto &step : sf.trace) {
        trace.push_back({{"stabilizer", step.stabilizer}, {"exponent", step.exponent.str()}});
    }
    root["trace"] = trace;
    return root.dump(2) + "\n";
}

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Classical signal-flow compiler and verifier for measurement-based patterns", "mbqc"};
    app.require_subcommand(1);

    std::string path;
    std::string format = "text";
    auto *flow = app.add_subcommand("flow", "Compile a pattern and print its signal flow");
    flow->add_option("file", path, "Pattern file")->required();
    flow->add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "json"}));

    VerifyOptions verify_options;
    auto *verify = app.add_subcommand("verify", "Check determinism of every outcome branch by simulation");
    verify->add_option("file", path, "Pattern file")->required();
    verify->add_option("--angles", verify_options.angles, "Angle values: name=rad or qubit=rad, comma separated");
    verify->add_option("--input", verify_options.inputs, "Input state: q=a_re,a_im,b_re,b_im (repeatable)");
    verify->add_option("--cap", verify_options.cap, "Maximum number of measured qubits")->check(CLI::PositiveNumber);

    auto *stabilizers = app.add_subcommand("stabilizers", "List the stabilizer generators of the graph state");
    stabilizers->add_option("file", path, "Pattern file")->required();

    std::vector<std::string> argv_storage;
    argv_storage.reserve(args.size() + 1);
    argv_storage.emplace_back("mbqc");
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<const char *> argv;
    for (const auto &a : argv_storage) {
        argv.push_back(a.c_str());
    }

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError &e) {
        err << "usage error: " << e.what() << '\n';
        return kUsage;
    }

    try {
        if (flow->parsed()) {
            return cmd_flow(path, format, out);
        }
        if (verify->parsed()) {
            return cmd_verify(path, verify_options, out);
        }
        return cmd_stabilizers(path, out);
    } catch (const CommandError &e) {
        err << e.message << '\n';
        return e.code;
    } catch (const Error &e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
}

}  // namespace mbqc::cli
