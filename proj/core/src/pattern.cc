#include "mbqc/pattern.h"

#include <algorithm>
#include <set>
#include <sstream>

#include "mbqc/error.h"

namespace mbqc {

namespace {

bool contains(const std::vector<QubitId> &v, QubitId q) { return std::find(v.begin(), v.end(), q) != v.end(); }

std::string q_str(QubitId q) { return std::to_string(q); }

void report_duplicates(
    const std::vector<QubitId> &items, const std::string &rule, const std::string &what, std::vector<Violation> &out) {
    std::set<QubitId> seen;
    for (QubitId q : items) {
        if (!seen.insert(q).second) {
            out.push_back({rule, "qubit " + q_str(q) + " listed twice in " + what});
        }
    }
}

}  // namespace

std::string angle_str(const Angle &angle) {
    if (const auto *symbol = std::get_if<std::string>(&angle)) {
        return *symbol;
    }
    std::ostringstream ss;
    ss.precision(17);
    ss << std::get<double>(angle);
    return ss.str();
}

std::vector<QubitId> Pattern::qubits() const {
    std::set<QubitId> all(measured.begin(), measured.end());
    all.insert(outputs.begin(), outputs.end());
    return {all.begin(), all.end()};
}

bool Pattern::has_qubit(QubitId q) const { return is_measured(q) || is_output(q); }
bool Pattern::is_input(QubitId q) const { return contains(inputs, q); }
bool Pattern::is_output(QubitId q) const { return contains(outputs, q); }
bool Pattern::is_measured(QubitId q) const { return contains(measured, q); }

std::vector<QubitId> Pattern::neighbors(QubitId q) const {
    std::set<QubitId> out;
    for (const auto &[a, b] : edges) {
        if (a == q && b != q) {
            out.insert(b);
        } else if (b == q && a != q) {
            out.insert(a);
        }
    }
    return {out.begin(), out.end()};
}

bool Pattern::adjacent(QubitId a, QubitId b) const {
    return std::any_of(edges.begin(), edges.end(), [&](const Edge &e) {
        return (e.first == a && e.second == b) || (e.first == b && e.second == a);
    });
}

Angle Pattern::angle(QubitId q) const {
    auto it = angles.find(q);
    return it == angles.end() ? Angle{0.0} : it->second;
}

std::size_t Pattern::rank(QubitId q) const {
    auto it = std::find(measured.begin(), measured.end(), q);
    return static_cast<std::size_t>(it - measured.begin());
}

FlowMap FlowMap::from_successors(const Pattern &p, std::map<QubitId, QubitId> succ) {
    FlowMap flow{std::move(succ), {}};
    std::set<QubitId> nodes(p.measured.begin(), p.measured.end());
    std::map<QubitId, std::set<QubitId>> later;
    for (QubitId i : nodes) {
        later[i];
    }
    for (const auto &[i, s] : flow.succ) {
        if (!nodes.contains(i)) {
            continue;
        }
        if (nodes.contains(s) && s != i) {
            later[i].insert(s);
        }
        for (QubitId u : p.neighbors(s)) {
            if (u != i && nodes.contains(u)) {
                later[i].insert(u);
            }
        }
    }
    std::map<QubitId, std::size_t> indegree;
    for (QubitId i : nodes) {
        indegree[i];
    }
    for (const auto &[i, targets] : later) {
        for (QubitId t : targets) {
            indegree[t]++;
        }
    }
    std::set<QubitId> ready;
    for (const auto &[q, d] : indegree) {
        if (d == 0) {
            ready.insert(q);
        }
    }
    while (!ready.empty()) {
        QubitId q = *ready.begin();
        ready.erase(ready.begin());
        flow.order.push_back(q);
        for (QubitId t : later[q]) {
            if (--indegree[t] == 0) {
                ready.insert(t);
            }
        }
    }
    if (flow.order.size() != nodes.size()) {
        flow.order.clear();
    }
    return flow;
}

PauliWord stabilizer(const Pattern &p, QubitId i) {
    if (!p.has_qubit(i)) {
        throw InvalidQubitError("qubit " + q_str(i) + " is not part of the pattern");
    }
    PauliWord k(p.n_qubits);
    k.mul_x(i, Gf2Expr::one());
    for (QubitId j : p.neighbors(i)) {
        k.mul_z(j, Gf2Expr::one());
    }
    return k;
}

std::string format_stabilizer(const Pattern &p, QubitId i) {
    PauliWord k = stabilizer(p, i);
    std::string out = format_factor('X', i, k.x(i));
    for (const auto &[q, e] : k.z_exponents()) {
        out += ' ' + format_factor('Z', q, e);
    }
    return out;
}

std::vector<Violation> validate_structure(const Pattern &p) {
    std::vector<Violation> out;
    std::vector<QubitId> qubits = p.qubits();
    if (p.n_qubits == 0) {
        out.push_back({"empty-pattern", "a pattern needs at least one qubit"});
    }
    if (qubits.size() != p.n_qubits) {
        out.push_back(
            {"qubit-count",
             "n_qubits is " + std::to_string(p.n_qubits) + " but measured and outputs cover " +
                 std::to_string(qubits.size()) + " qubits"});
    }
    report_duplicates(p.measured, "duplicate-measurement", "measured", out);
    report_duplicates(p.outputs, "duplicate-output", "outputs", out);
    report_duplicates(p.inputs, "duplicate-input", "inputs", out);
    for (QubitId q : p.outputs) {
        if (p.is_measured(q)) {
            out.push_back({"role-conflict", "output qubit " + q_str(q) + " is also measured"});
        }
    }
    for (QubitId q : p.inputs) {
        if (!p.is_measured(q)) {
            out.push_back({"input-not-measured", "input qubit " + q_str(q) + " is not in the measurement order"});
        }
    }
    std::set<Edge> seen;
    for (const auto &[a, b] : p.edges) {
        std::string name = "edge " + q_str(a) + "-" + q_str(b);
        if (a == b) {
            out.push_back({"self-loop", name + " is a self-loop"});
            continue;
        }
        if (!p.has_qubit(a) || !p.has_qubit(b)) {
            out.push_back({"edge-invalid-qubit", name + " references an unknown qubit"});
        }
        if (!seen.insert(std::minmax(a, b)).second) {
            out.push_back({"duplicate-edge", name + " is listed twice"});
        }
    }
    for (const auto &[q, angle] : p.angles) {
        if (!p.is_measured(q)) {
            out.push_back({"angle-unknown-qubit", "angle given for qubit " + q_str(q) + " which is not measured"});
        }
    }
    return out;
}

std::vector<Violation> validate_flow(const Pattern &p, const FlowMap &flow) {
    std::vector<Violation> out;
    for (QubitId i : p.measured) {
        if (!flow.succ.contains(i)) {
            out.push_back({"flow-domain", "measured qubit " + q_str(i) + " has no successor"});
        }
    }
    std::map<QubitId, QubitId> preimage;
    for (const auto &[i, s] : flow.succ) {
        std::string name = "succ(" + q_str(i) + ")=" + q_str(s);
        if (!p.is_measured(i)) {
            out.push_back({"flow-domain", name + ": qubit " + q_str(i) + " is not measured"});
            continue;
        }
        if (!p.has_qubit(s)) {
            out.push_back({"flow-invalid-target", name + ": target is not part of the pattern"});
            continue;
        }
        if (s == i) {
            out.push_back({"flow-self", name + ": a qubit cannot be its own successor"});
            continue;
        }
        if (!p.adjacent(i, s)) {
            out.push_back({"flow-adjacency", name + ": successor is not a neighbour"});
        }
        if (p.is_input(s)) {
            out.push_back({"flow-input-target", name + ": successor is an input qubit"});
        }
        auto [it, inserted] = preimage.emplace(s, i);
        if (!inserted) {
            out.push_back(
                {"flow-injective", name + ": qubit " + q_str(s) + " is also the successor of " + q_str(it->second)});
        }
        if (p.rank(s) <= p.rank(i)) {
            out.push_back({"flow-order", name + ": successor is measured before " + q_str(i)});
        }
        for (QubitId u : p.neighbors(s)) {
            if (u != i && p.rank(u) < p.rank(i)) {
                out.push_back(
                    {"flow-condition",
                     name + ": neighbour " + q_str(u) + " of the successor is measured before " + q_str(i)});
            }
        }
    }
    std::set<QubitId> distinct(p.measured.begin(), p.measured.end());
    if (!distinct.empty() && flow.order.size() != distinct.size()) {
        out.push_back({"flow-cycle", "the order induced by the flow is cyclic"});
    }
    return out;
}

std::vector<Violation> validate(const Pattern &p) {
    std::vector<Violation> out = validate_structure(p);
    if (p.flow.has_value()) {
        auto flow = validate_flow(p, FlowMap::from_successors(p, *p.flow));
        out.insert(out.end(), flow.begin(), flow.end());
    }
    return out;
}

FlowMap find_flow(const Pattern &p) {
    std::vector<QubitId> all = p.qubits();
    std::set<QubitId> processed(p.outputs.begin(), p.outputs.end());
    std::set<QubitId> correctors;
    for (QubitId q : p.outputs) {
        if (!p.is_input(q)) {
            correctors.insert(q);
        }
    }
    std::map<QubitId, QubitId> succ;
    while (processed.size() < all.size()) {
        std::set<QubitId> layer;
        std::set<QubitId> used;
        for (QubitId v : correctors) {
            std::optional<QubitId> candidate;
            size_t open = 0;
            for (QubitId u : p.neighbors(v)) {
                if (!processed.contains(u)) {
                    open++;
                    candidate = u;
                }
            }
            if (open != 1 || layer.contains(*candidate)) {
                continue;
            }
            succ[*candidate] = v;
            layer.insert(*candidate);
            used.insert(v);
        }
        if (layer.empty()) {
            throw NoFlowError(
                "no causal flow: " + std::to_string(all.size() - processed.size()) +
                " measured qubit(s) cannot be assigned a successor");
        }
        processed.insert(layer.begin(), layer.end());
        for (QubitId v : used) {
            correctors.erase(v);
        }
        for (QubitId u : layer) {
            if (!p.is_input(u)) {
                correctors.insert(u);
            }
        }
    }
    return FlowMap::from_successors(p, std::move(succ));
}

}  // namespace mbqc
