#include "testing/mbqc_testing.h"

#include <algorithm>
#include <functional>
#include <map>
#include <numbers>
#include <numeric>

#include "mbqc/error.h"

namespace mbqc::fixtures {

Pattern chain5() {
    Pattern p;
    p.n_qubits = 5;
    p.edges = {{1, 2}, {2, 3}, {3, 4}, {4, 5}};
    p.inputs = {1};
    p.outputs = {5};
    p.measured = {1, 2, 3, 4};
    p.angles = {{1, 0.0}, {2, std::string("alpha")}, {3, std::string("beta")}, {4, std::string("gamma")}};
    return p;
}

Pattern hbranch() {
    Pattern p;
    p.n_qubits = 6;
    p.edges = {{1, 2}, {2, 3}, {4, 5}, {5, 6}, {2, 5}};
    p.inputs = {1, 4};
    p.outputs = {3, 6};
    p.measured = {1, 4, 2, 5};
    p.angles = {{1, 0.0}, {2, std::string("alpha")}, {4, 0.0}, {5, std::string("beta")}};
    return p;
}

Pattern chain(std::size_t length) {
    Pattern p;
    p.n_qubits = length;
    for (QubitId q = 1; q < length; q++) {
        p.edges.emplace_back(q, q + 1);
        p.measured.push_back(q);
    }
    if (length >= 2) {
        p.inputs = {1};
    }
    p.outputs = {static_cast<QubitId>(length)};
    return p;
}

Gf2Expr random_expr(Rng &rng, QubitId max_var, double density) {
    std::bernoulli_distribution coin(density);
    std::vector<QubitId> vars;
    for (QubitId q = 0; q <= max_var; q++) {
        if (coin(rng)) {
            vars.push_back(q);
        }
    }
    return Gf2Expr::from_terms(std::move(vars), std::bernoulli_distribution(0.3)(rng));
}

PauliWord random_word(Rng &rng, std::size_t n_qubits, QubitId max_var) {
    PauliWord w(n_qubits);
    std::bernoulli_distribution present(0.5);
    for (QubitId q = 0; q < n_qubits; q++) {
        if (present(rng)) {
            w.mul_x(q, random_expr(rng, max_var));
        }
        if (present(rng)) {
            w.mul_z(q, random_expr(rng, max_var));
        }
    }
    return w;
}

Assignment random_assignment(Rng &rng, QubitId max_var) {
    Assignment m;
    std::bernoulli_distribution coin(0.5);
    for (QubitId q = 0; q <= max_var; q++) {
        m[q] = coin(rng);
    }
    return m;
}

QubitState random_qubit_state(Rng &rng) {
    std::normal_distribution<double> g;
    Amplitude a{g(rng), g(rng)};
    Amplitude b{g(rng), g(rng)};
    double n = std::sqrt(std::norm(a) + std::norm(b));
    return {a / n, b / n};
}

StateVector random_state(Rng &rng, std::size_t n_qubits) {
    std::normal_distribution<double> g;
    std::vector<Amplitude> amps(std::size_t{1} << n_qubits);
    for (auto &a : amps) {
        a = {g(rng), g(rng)};
    }
    StateVector s = StateVector::from_amplitudes(std::move(amps));
    s.normalize();
    return s;
}

InputStates random_inputs(Rng &rng, const Pattern &p) {
    InputStates out;
    for (QubitId q : p.inputs) {
        out[q] = random_qubit_state(rng);
    }
    return out;
}

AngleValues random_angles(Rng &rng, const Pattern &p) {
    std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
    AngleValues out;
    for (QubitId q : p.measured) {
        out[q] = angle(rng);
    }
    return out;
}

Pattern random_connected_pattern(Rng &rng, std::size_t n) {
    Pattern p;
    p.n_qubits = n;
    std::set<Edge> edges;
    for (QubitId q = 1; q < n; q++) {
        QubitId parent = std::uniform_int_distribution<QubitId>(0, q - 1)(rng);
        edges.insert({parent, q});
    }
    std::bernoulli_distribution extra(0.25);
    for (QubitId a = 0; a < n; a++) {
        for (QubitId b = a + 1; b < n; b++) {
            if (extra(rng)) {
                edges.insert({a, b});
            }
        }
    }
    p.edges.assign(edges.begin(), edges.end());
    std::vector<QubitId> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    std::size_t n_out = n == 1 ? 1 : std::uniform_int_distribution<std::size_t>(1, std::max<std::size_t>(1, n / 2))(rng);
    p.outputs.assign(order.end() - static_cast<std::ptrdiff_t>(n_out), order.end());
    p.measured.assign(order.begin(), order.end() - static_cast<std::ptrdiff_t>(n_out));
    std::bernoulli_distribution is_input(0.4);
    for (QubitId q : p.measured) {
        if (is_input(rng)) {
            p.inputs.push_back(q);
        }
    }
    return p;
}

Pattern random_flow_pattern(Rng &rng, std::size_t max_n, bool store_flow) {
    while (true) {
        std::size_t wires = std::uniform_int_distribution<std::size_t>(1, std::min<std::size_t>(3, max_n / 2))(rng);
        std::size_t n = std::uniform_int_distribution<std::size_t>(2 * wires, max_n)(rng);
        std::vector<std::size_t> lengths(wires, 2);
        for (std::size_t extra = n - 2 * wires; extra > 0; extra--) {
            lengths[std::uniform_int_distribution<std::size_t>(0, wires - 1)(rng)]++;
        }

        std::vector<QubitId> labels(n);
        std::iota(labels.begin(), labels.end(), 0);
        std::shuffle(labels.begin(), labels.end(), rng);
        QubitId offset = std::uniform_int_distribution<QubitId>(0, 20)(rng);
        for (auto &l : labels) {
            l += offset;
        }

        Pattern p;
        p.n_qubits = n;
        std::set<Edge> edges;
        std::vector<std::size_t> wire_of(n);
        std::size_t next = 0;
        std::bernoulli_distribution keep_input(0.8);
        for (std::size_t w = 0; w < wires; w++) {
            for (std::size_t k = 0; k < lengths[w]; k++) {
                wire_of[next + k] = w;
                if (k > 0) {
                    edges.insert(std::minmax(labels[next + k - 1], labels[next + k]));
                }
            }
            if (keep_input(rng)) {
                p.inputs.push_back(labels[next]);
            }
            p.outputs.push_back(labels[next + lengths[w] - 1]);
            next += lengths[w];
        }
        std::bernoulli_distribution cross(0.2);
        for (std::size_t a = 0; a < n; a++) {
            for (std::size_t b = a + 1; b < n; b++) {
                if (wire_of[a] != wire_of[b] && cross(rng)) {
                    edges.insert(std::minmax(labels[a], labels[b]));
                }
            }
        }
        p.edges.assign(edges.begin(), edges.end());
        for (QubitId q : labels) {
            if (std::find(p.outputs.begin(), p.outputs.end(), q) == p.outputs.end()) {
                p.measured.push_back(q);
            }
        }

        FlowMap flow;
        try {
            flow = find_flow(p);
        } catch (const NoFlowError &) {
            continue;
        }
        p.measured = flow.order;
        p.angles.clear();
        std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
        for (QubitId q : p.measured) {
            p.angles[q] = angle(rng);
        }
        if (store_flow) {
            p.flow = flow.succ;
        }
        return p;
    }
}

bool brute_force_has_flow(const Pattern &p) {
    std::vector<QubitId> measured = p.measured;
    std::map<QubitId, std::vector<QubitId>> candidates;
    for (QubitId i : measured) {
        for (QubitId s : p.neighbors(i)) {
            if (!p.is_input(s)) {
                candidates[i].push_back(s);
            }
        }
    }
    std::map<QubitId, QubitId> succ;
    std::set<QubitId> used;

    auto acyclic = [&]() {
        // Induced relation i < succ(i), i < u for u in N(succ(i)) \ {i}; check by DFS colouring.
        std::map<QubitId, std::vector<QubitId>> later;
        for (const auto &[i, s] : succ) {
            later[i].push_back(s);
            for (QubitId u : p.neighbors(s)) {
                if (u != i) {
                    later[i].push_back(u);
                }
            }
        }
        std::map<QubitId, int> colour;
        std::function<bool(QubitId)> visit = [&](QubitId v) {
            colour[v] = 1;
            for (QubitId u : later[v]) {
                if (colour[u] == 1 || (colour[u] == 0 && !visit(u))) {
                    return false;
                }
            }
            colour[v] = 2;
            return true;
        };
        for (QubitId v : p.qubits()) {
            if (colour[v] == 0 && !visit(v)) {
                return false;
            }
        }
        return true;
    };

    std::function<bool(std::size_t)> search = [&](std::size_t k) {
        if (k == measured.size()) {
            return acyclic();
        }
        QubitId i = measured[k];
        for (QubitId s : candidates[i]) {
            if (used.contains(s)) {
                continue;
            }
            succ[i] = s;
            used.insert(s);
            if (search(k + 1)) {
                return true;
            }
            used.erase(s);
            succ.erase(i);
        }
        return false;
    };
    return search(0);
}

}  // namespace mbqc::fixtures
