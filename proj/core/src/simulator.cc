#include "mbqc/simulator.h"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "mbqc/error.h"

namespace mbqc {

namespace {

constexpr double kZeroProbability = 1e-20;

bool bit(std::size_t index, std::size_t pos) { return (index >> pos) & 1U; }

}  // namespace

QubitState QubitState::plus() { return {std::numbers::sqrt2 / 2, std::numbers::sqrt2 / 2}; }

StateVector::StateVector(std::size_t n_qubits) : n_qubits_(n_qubits), amps_(std::size_t{1} << n_qubits) {
    amps_[0] = 1.0;
}

StateVector StateVector::from_amplitudes(std::vector<Amplitude> amplitudes) {
    std::size_t n = 0;
    while ((std::size_t{1} << n) < amplitudes.size()) {
        n++;
    }
    if ((std::size_t{1} << n) != amplitudes.size()) {
        throw DimensionMismatchError("amplitude count " + std::to_string(amplitudes.size()) + " is not a power of two");
    }
    StateVector s(n);
    s.amps_ = std::move(amplitudes);
    return s;
}

StateVector StateVector::from_qubit(const QubitState &q) { return from_amplitudes({q.a, q.b}); }

double StateVector::norm() const {
    double sum = 0;
    for (const auto &a : amps_) {
        sum += std::norm(a);
    }
    return std::sqrt(sum);
}

void StateVector::normalize() {
    double n = norm();
    for (auto &a : amps_) {
        a /= n;
    }
}

void StateVector::apply_x(std::size_t pos) {
    std::size_t mask = std::size_t{1} << pos;
    for (std::size_t i = 0; i < amps_.size(); i++) {
        if (!(i & mask)) {
            std::swap(amps_[i], amps_[i | mask]);
        }
    }
}

void StateVector::apply_z(std::size_t pos) {
    for (std::size_t i = 0; i < amps_.size(); i++) {
        if (bit(i, pos)) {
            amps_[i] = -amps_[i];
        }
    }
}

void StateVector::apply_cz(std::size_t a, std::size_t b) {
    for (std::size_t i = 0; i < amps_.size(); i++) {
        if (bit(i, a) && bit(i, b)) {
            amps_[i] = -amps_[i];
        }
    }
}

void StateVector::apply(std::size_t pos, const Matrix2 &u) {
    std::size_t mask = std::size_t{1} << pos;
    for (std::size_t i = 0; i < amps_.size(); i++) {
        if (!(i & mask)) {
            Amplitude a0 = amps_[i];
            Amplitude a1 = amps_[i | mask];
            amps_[i] = u[0] * a0 + u[1] * a1;
            amps_[i | mask] = u[2] * a0 + u[3] * a1;
        }
    }
}

Amplitude inner(const StateVector &a, const StateVector &b) {
    if (a.size() != b.size()) {
        throw DimensionMismatchError("state vectors differ in size");
    }
    Amplitude sum = 0;
    for (std::size_t i = 0; i < a.size(); i++) {
        sum += std::conj(a[i]) * b[i];
    }
    return sum;
}

double fidelity(const StateVector &a, const StateVector &b) {
    double na = a.norm();
    double nb = b.norm();
    if (na == 0 || nb == 0) {
        return 0.0;
    }
    return std::norm(inner(a, b)) / (na * na * nb * nb);
}

double phase_aligned_deviation(const StateVector &a, const StateVector &b) {
    Amplitude overlap = inner(b, a);
    Amplitude phase = std::abs(overlap) > 0 ? overlap / std::abs(overlap) : Amplitude{1.0};
    double worst = 0;
    for (std::size_t i = 0; i < a.size(); i++) {
        worst = std::max(worst, std::abs(a[i] - phase * b[i]));
    }
    return worst;
}

double distance(const StateVector &a, const StateVector &b) {
    if (a.size() != b.size()) {
        throw DimensionMismatchError("state vectors differ in size");
    }
    double sum = 0;
    for (std::size_t i = 0; i < a.size(); i++) {
        sum += std::norm(a[i] - b[i]);
    }
    return std::sqrt(sum);
}

QubitLayout::QubitLayout(const Pattern &p) {
    for (QubitId q : p.qubits()) {
        positions_.emplace(q, positions_.size());
    }
}

std::size_t QubitLayout::position(QubitId q) const {
    auto it = positions_.find(q);
    if (it == positions_.end()) {
        throw InvalidQubitError("qubit " + std::to_string(q) + " is not part of the pattern");
    }
    return it->second;
}

StateVector prepare(const Pattern &p, const InputStates &inputs) {
    QubitLayout layout(p);
    std::vector<QubitState> local(layout.size(), QubitState::plus());
    for (const auto &[q, state] : inputs) {
        if (!p.is_input(q)) {
            throw InvalidQubitError("input state given for non-input qubit " + std::to_string(q));
        }
        double n = std::norm(state.a) + std::norm(state.b);
        if (std::abs(n - 1.0) > kStateTolerance) {
            throw NormalizationError(
                "input state of qubit " + std::to_string(q) + " has squared norm " + std::to_string(n));
        }
        local[layout.position(q)] = state;
    }
    std::vector<Amplitude> amps(std::size_t{1} << layout.size());
    for (std::size_t i = 0; i < amps.size(); i++) {
        Amplitude a = 1.0;
        for (std::size_t k = 0; k < local.size(); k++) {
            a *= bit(i, k) ? local[k].b : local[k].a;
        }
        amps[i] = a;
    }
    StateVector s = StateVector::from_amplitudes(std::move(amps));
    for (const auto &[a, b] : p.edges) {
        s.apply_cz(layout.position(a), layout.position(b));
    }
    return s;
}

void apply_pauli(StateVector &s, const ConcretePauli &pauli, const Pattern &p) {
    QubitLayout layout(p);
    for (const auto &[q, label] : pauli.ops) {
        std::size_t pos = layout.position(q);
        if (label == PauliLabel::Z || label == PauliLabel::XZ) {
            s.apply_z(pos);
        }
        if (label == PauliLabel::X || label == PauliLabel::XZ) {
            s.apply_x(pos);
        }
    }
}

StateVector project(const StateVector &s, std::size_t pos, double angle, bool outcome) {
    std::size_t mask = std::size_t{1} << pos;
    Amplitude coeff = std::polar(1.0, -angle) * (outcome ? -1.0 : 1.0);
    StateVector out = s;
    for (std::size_t i = 0; i < s.size(); i++) {
        if (!(i & mask)) {
            out[i] = (s[i] + coeff * s[i | mask]) * (std::numbers::sqrt2 / 2);
            out[i | mask] = 0.0;
        }
    }
    return out;
}

MeasureResult measure(const StateVector &s, std::size_t pos, double angle, bool outcome) {
    StateVector out = project(s, pos, angle, outcome);
    double n = out.norm();
    double probability = n * n;
    bool normalized = probability > kZeroProbability;
    if (normalized) {
        out.normalize();
    }
    return {std::move(out), probability, normalized};
}

StateVector extract_outputs(const StateVector &s, const Pattern &p) {
    QubitLayout layout(p);
    std::vector<QubitId> outputs = p.outputs;
    std::sort(outputs.begin(), outputs.end());
    std::vector<std::size_t> positions;
    for (QubitId q : outputs) {
        positions.push_back(layout.position(q));
    }
    std::vector<Amplitude> amps(std::size_t{1} << outputs.size());
    for (std::size_t j = 0; j < amps.size(); j++) {
        std::size_t index = 0;
        for (std::size_t k = 0; k < positions.size(); k++) {
            if (bit(j, k)) {
                index |= std::size_t{1} << positions[k];
            }
        }
        amps[j] = s[index];
    }
    return StateVector::from_amplitudes(std::move(amps));
}

AngleValues numeric_angles(const Pattern &p, const std::map<std::string, double> &symbols) {
    AngleValues out;
    for (QubitId q : p.measured) {
        Angle a = p.angle(q);
        if (const auto *symbol = std::get_if<std::string>(&a)) {
            auto it = symbols.find(*symbol);
            if (it == symbols.end()) {
                throw Error(
                    "angle of qubit " + std::to_string(q) + " is the symbol '" + *symbol + "' with no numeric value");
            }
            out[q] = it->second;
        } else {
            out[q] = std::get<double>(a);
        }
    }
    return out;
}

namespace {

/// Output state with the branch's corrections undone.
BranchResult finish_branch(
    const Pattern &p, const SignalFlow &sf, const StateVector &s, Assignment outcomes, double probability,
    bool normalized) {
    Pattern outputs_only;
    outputs_only.outputs = p.outputs;
    StateVector out = extract_outputs(s, p);
    ConcretePauli correction = instantiate(sf.output_correction(), outcomes);
    apply_pauli(out, correction, outputs_only);
    return {std::move(outcomes), probability, std::move(out), normalized};
}

struct BranchWalker {
    const Pattern &p;
    const SignalFlow &sf;
    const AngleValues &angles;
    QubitLayout layout;
    std::vector<BranchResult> results;

    void walk(std::size_t depth, const StateVector &s, Assignment &outcomes, double probability, bool normalized) {
        if (depth == p.measured.size()) {
            results.push_back(finish_branch(p, sf, s, outcomes, probability, normalized));
            return;
        }
        QubitId q = p.measured[depth];
        double theta = adapted_angle(angles.at(q), sf.angle_sign.at(q), outcomes);
        for (bool outcome : {false, true}) {
            MeasureResult m = measure(s, layout.position(q), theta, outcome);
            outcomes[q] = outcome;
            walk(depth + 1, m.state, outcomes, probability * m.probability, normalized && m.normalized);
            outcomes.erase(q);
        }
    }
};

}  // namespace

BranchResult run_branch(
    const Pattern &p, const SignalFlow &sf, const Assignment &outcomes, const AngleValues &angles,
    const InputStates &inputs) {
    QubitLayout layout(p);
    StateVector s = prepare(p, inputs);
    Assignment record;
    double probability = 1.0;
    bool normalized = true;
    for (QubitId q : p.measured) {
        auto it = outcomes.find(q);
        if (it == outcomes.end()) {
            throw MissingVariableError("no outcome given for measured qubit " + std::to_string(q));
        }
        double theta = adapted_angle(angles.at(q), sf.angle_sign.at(q), record);
        MeasureResult m = measure(s, layout.position(q), theta, it->second);
        s = std::move(m.state);
        probability *= m.probability;
        normalized = normalized && m.normalized;
        record[q] = it->second;
    }
    return finish_branch(p, sf, s, std::move(record), probability, normalized);
}

std::vector<BranchResult> enumerate_branches(
    const Pattern &p, const SignalFlow &sf, const AngleValues &angles, const InputStates &inputs, std::size_t cap) {
    if (p.measured.size() > cap) {
        throw CapExceededError(
            std::to_string(p.measured.size()) + " measured qubits exceed the branch cap of " + std::to_string(cap));
    }
    BranchWalker walker{p, sf, angles, QubitLayout(p), {}};
    walker.results.reserve(std::size_t{1} << p.measured.size());
    Assignment outcomes;
    walker.walk(0, prepare(p, inputs), outcomes, 1.0, true);
    return std::move(walker.results);
}

Matrix2 matmul(const Matrix2 &a, const Matrix2 &b) {
    return {
        a[0] * b[0] + a[1] * b[2],
        a[0] * b[1] + a[1] * b[3],
        a[2] * b[0] + a[3] * b[2],
        a[2] * b[1] + a[3] * b[3],
    };
}

Matrix2 hadamard() {
    double r = std::numbers::sqrt2 / 2;
    return {r, r, r, -r};
}

Matrix2 u_z(double theta) { return {1.0, 0.0, 0.0, std::polar(1.0, theta)}; }

Matrix2 u_x(double theta) { return matmul(hadamard(), matmul(u_z(theta), hadamard())); }

QubitState apply_unitary(const Matrix2 &u, const QubitState &q) { return {u[0] * q.a + u[1] * q.b, u[2] * q.a + u[3] * q.b}; }

Matrix2 reference_chain_unitary(double alpha, double beta, double gamma) {
    return matmul(u_z(gamma), matmul(u_x(beta), u_z(alpha)));
}

Matrix2 chain_zero_branch_unitary(double alpha, double beta, double gamma) {
    return matmul(hadamard(), matmul(reference_chain_unitary(-alpha, -beta, -gamma), hadamard()));
}

double check_z_substitution(const Pattern &p, QubitId qubit, const AngleValues &angles, const InputStates &inputs) {
    if (!p.is_measured(qubit)) {
        throw InvalidQubitError("qubit " + std::to_string(qubit) + " is not measured");
    }
    QubitLayout layout(p);
    std::size_t pos = layout.position(qubit);
    double theta = angles.at(qubit);
    StateVector prepared = prepare(p, inputs);
    StateVector one_branch = project(prepared, pos, theta, true);
    StateVector substituted = prepared;
    substituted.apply_z(pos);
    StateVector zero_branch = project(substituted, pos, theta, false);
    return phase_aligned_deviation(one_branch, zero_branch);
}

VerificationReport verify_branches(
    const Pattern &p, const SignalFlow &sf, const AngleValues &angles, const InputStates &inputs, std::size_t cap) {
    VerificationReport report;
    report.branches = enumerate_branches(p, sf, angles, inputs, cap);
    const auto &branches = report.branches;
    double expected = std::ldexp(1.0, -static_cast<int>(p.measured.size()));
    for (const auto &b : branches) {
        report.probability_sum += b.probability;
        report.max_probability_deviation = std::max(report.max_probability_deviation, std::abs(b.probability - expected));
        report.infidelity.push_back(
            b.normalized ? std::max(0.0, 1.0 - fidelity(branches.front().output_state, b.output_state)) : 1.0);
    }
    for (std::size_t i = 0; i < branches.size(); i++) {
        for (std::size_t j = i + 1; j < branches.size(); j++) {
            double inf = (branches[i].normalized && branches[j].normalized)
                             ? std::max(0.0, 1.0 - fidelity(branches[i].output_state, branches[j].output_state))
                             : 1.0;
            report.max_pairwise_infidelity = std::max(report.max_pairwise_infidelity, inf);
        }
    }
    if (!branches.front().normalized) {
        report.max_pairwise_infidelity = 1.0;
    }
    report.passed = report.max_pairwise_infidelity <= kStateTolerance &&
                    std::abs(report.probability_sum - 1.0) <= kProbabilityTolerance &&
                    report.max_probability_deviation <= kProbabilityTolerance;
    return report;
}

}  // namespace mbqc
