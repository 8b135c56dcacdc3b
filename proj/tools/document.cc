#include "document.h"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "mbqc/error.h"

namespace mbqc {

namespace {

using nlohmann::json;

QubitId parse_qubit(const json &j, const std::string &where) {
    if (!j.is_number_integer() || j.get<long long>() < 0 || j.get<long long>() > 0xFFFFFFFFLL) {
        throw ParseError(where + ": expected a non-negative qubit id, got " + j.dump());
    }
    return static_cast<QubitId>(j.get<long long>());
}

QubitId parse_qubit_key(const std::string &key, const std::string &where) {
    if (key.empty() || key.find_first_not_of("0123456789") != std::string::npos || key.size() > 10) {
        throw ParseError(where + ": key '" + key + "' is not a qubit id");
    }
    unsigned long long v = std::stoull(key);
    if (v > 0xFFFFFFFFULL) {
        throw ParseError(where + ": key '" + key + "' is out of range");
    }
    return static_cast<QubitId>(v);
}

double parse_number(const json &j, const std::string &where) {
    if (!j.is_number()) {
        throw ParseError(where + ": expected a number, got " + j.dump());
    }
    return j.get<double>();
}

std::vector<QubitId> parse_qubit_list(const json &j, const std::string &where) {
    if (!j.is_array()) {
        throw ParseError(where + ": expected an array");
    }
    std::vector<QubitId> out;
    for (const auto &item : j) {
        out.push_back(parse_qubit(item, where));
    }
    return out;
}

const json &require_object(const json &j, const std::string &where) {
    if (!j.is_object()) {
        throw ParseError(where + ": expected an object");
    }
    return j;
}

}  // namespace

bool PatternDocument::operator==(const PatternDocument &other) const {
    if (!(pattern == other.pattern) || symbols != other.symbols || input_states.size() != other.input_states.size()) {
        return false;
    }
    for (const auto &[q, s] : input_states) {
        auto it = other.input_states.find(q);
        if (it == other.input_states.end() || it->second.a != s.a || it->second.b != s.b) {
            return false;
        }
    }
    return true;
}

PatternDocument parse_document(std::string_view text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error &e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    require_object(root, "document");

    static const std::set<std::string> known = {
        "n_qubits", "edges", "inputs", "outputs", "measured", "angles", "flow", "input_states", "symbols"};
    for (const auto &[key, value] : root.items()) {
        if (!known.contains(key)) {
            throw ParseError("unknown field '" + key + "'");
        }
    }
    for (const char *key : {"n_qubits", "edges", "inputs", "outputs", "measured"}) {
        if (!root.contains(key)) {
            throw ParseError(std::string("missing required field '") + key + "'");
        }
    }

    PatternDocument doc;
    Pattern &p = doc.pattern;
    const json &n = root["n_qubits"];
    if (!n.is_number_integer() || n.get<long long>() < 0) {
        throw ParseError("n_qubits: expected a non-negative integer");
    }
    p.n_qubits = n.get<std::size_t>();

    if (!root["edges"].is_array()) {
        throw ParseError("edges: expected an array");
    }
    for (const auto &edge : root["edges"]) {
        if (!edge.is_array() || edge.size() != 2) {
            throw ParseError("edges: each edge must be a pair, got " + edge.dump());
        }
        p.edges.emplace_back(parse_qubit(edge[0], "edges"), parse_qubit(edge[1], "edges"));
    }
    p.inputs = parse_qubit_list(root["inputs"], "inputs");
    p.outputs = parse_qubit_list(root["outputs"], "outputs");
    p.measured = parse_qubit_list(root["measured"], "measured");

    if (root.contains("angles")) {
        for (const auto &[key, value] : require_object(root["angles"], "angles").items()) {
            QubitId q = parse_qubit_key(key, "angles");
            if (value.is_string()) {
                if (value.get<std::string>().empty()) {
                    throw ParseError("angles: empty symbol name for qubit " + key);
                }
                p.angles[q] = value.get<std::string>();
            } else {
                p.angles[q] = parse_number(value, "angles");
            }
        }
    }
    if (root.contains("flow")) {
        std::map<QubitId, QubitId> succ;
        for (const auto &[key, value] : require_object(root["flow"], "flow").items()) {
            succ[parse_qubit_key(key, "flow")] = parse_qubit(value, "flow");
        }
        p.flow = std::move(succ);
    }
    if (root.contains("input_states")) {
        for (const auto &[key, value] : require_object(root["input_states"], "input_states").items()) {
            QubitId q = parse_qubit_key(key, "input_states");
            if (!value.is_array() || value.size() != 4) {
                throw ParseError("input_states: qubit " + key + " needs [a_re, a_im, b_re, b_im]");
            }
            doc.input_states[q] = QubitState{
                {parse_number(value[0], "input_states"), parse_number(value[1], "input_states")},
                {parse_number(value[2], "input_states"), parse_number(value[3], "input_states")}};
        }
    }
    if (root.contains("symbols")) {
        for (const auto &[key, value] : require_object(root["symbols"], "symbols").items()) {
            doc.symbols[key] = parse_number(value, "symbols");
        }
    }
    return doc;
}

PatternDocument load_document(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open '" + path + "'");
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_document(buffer.str());
}

std::string serialize_document(const PatternDocument &doc) {
    const Pattern &p = doc.pattern;
    json root = json::object();
    root["n_qubits"] = p.n_qubits;
    json edges = json::array();
    for (const auto &[a, b] : p.edges) {
        edges.push_back({a, b});
    }
    root["edges"] = edges;
    root["inputs"] = p.inputs;
    root["outputs"] = p.outputs;
    root["measured"] = p.measured;
    json angles = json::object();
    for (const auto &[q, angle] : p.angles) {
        if (const auto *symbol = std::get_if<std::string>(&angle)) {
            angles[std::to_string(q)] = *symbol;
        } else {
            angles[std::to_string(q)] = std::get<double>(angle);
        }
    }
    root["angles"] = angles;
    if (p.flow.has_value()) {
        json flow = json::object();
        for (const auto &[i, s] : *p.flow) {
            flow[std::to_string(i)] = s;
        }
        root["flow"] = flow;
    }
    if (!doc.input_states.empty()) {
        json states = json::object();
        for (const auto &[q, s] : doc.input_states) {
            states[std::to_string(q)] = {s.a.real(), s.a.imag(), s.b.real(), s.b.imag()};
        }
        root["input_states"] = states;
    }
    if (!doc.symbols.empty()) {
        root["symbols"] = doc.symbols;
    }
    return root.dump(2) + "\n";
}

}  // namespace mbqc
