#ifndef MBQC_PATTERN_H
#define MBQC_PATTERN_H

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "mbqc/gf2expr.h"
#include "mbqc/pauli.h"

namespace mbqc {

/// A base measurement angle: radians, or a named symbol resolved at run time.
using Angle = std::variant<double, std::string>;

std::string angle_str(const Angle &angle);

using Edge = std::pair<QubitId, QubitId>;

/// A measurement pattern on a graph state.
///
/// Qubit ids are arbitrary labels. The qubit set is `measured ∪ outputs` and
/// must have exactly `n_qubits` elements. Inputs are measured like any other
/// non-output qubit. `measured` is the measurement order.
struct Pattern {
    std::size_t n_qubits = 0;
    std::vector<Edge> edges;
    std::vector<QubitId> inputs;
    std::vector<QubitId> outputs;
    std::vector<QubitId> measured;
    std::map<QubitId, Angle> angles;
    std::optional<std::map<QubitId, QubitId>> flow;

    /// Sorted, de-duplicated union of measured and output qubits.
    std::vector<QubitId> qubits() const;
    bool has_qubit(QubitId q) const;
    bool is_input(QubitId q) const;
    bool is_output(QubitId q) const;
    bool is_measured(QubitId q) const;
    /// Sorted neighbours of `q`.
    std::vector<QubitId> neighbors(QubitId q) const;
    bool adjacent(QubitId a, QubitId b) const;
    /// Angle of a measured qubit; qubits without an entry measure at 0.
    Angle angle(QubitId q) const;
    /// Index of `q` in the measurement order; outputs come after every measured qubit.
    std::size_t rank(QubitId q) const;

    bool operator==(const Pattern &) const = default;
};

/// Successor map of a causal flow, plus a measurement-compatible topological
/// order of the measured qubits under the induced partial order.
struct FlowMap {
    std::map<QubitId, QubitId> succ;
    /// Empty when the induced relation has a cycle.
    std::vector<QubitId> order;

    /// Derives `order` by a lowest-id-first topological sort of the relation
    /// i < succ(i) and i < u for every other neighbour u of succ(i).
    static FlowMap from_successors(const Pattern &p, std::map<QubitId, QubitId> succ);

    bool operator==(const FlowMap &) const = default;
};

struct Violation {
    std::string rule;
    std::string detail;

    bool operator==(const Violation &) const = default;
};

/// K_i = X_i times Z on every neighbour of i, all exponents 1.
PauliWord stabilizer(const Pattern &p, QubitId i);

/// Renders K_i generator-first, e.g. "X2 Z1 Z3".
std::string format_stabilizer(const Pattern &p, QubitId i);

/// Structural rules (roles, edges, counts) plus the stored flow, if any.
std::vector<Violation> validate(const Pattern &p);
std::vector<Violation> validate_structure(const Pattern &p);
/// Flow rules against the pattern's graph, roles and measurement order.
std::vector<Violation> validate_flow(const Pattern &p, const FlowMap &flow);

/// Finds a causal flow by backward layering from the outputs.
/// Throws NoFlowError when none exists.
FlowMap find_flow(const Pattern &p);

}  // namespace mbqc

#endif
