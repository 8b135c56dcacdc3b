#ifndef MBQC_SIGNAL_FLOW_H
#define MBQC_SIGNAL_FLOW_H

#include <map>
#include <vector>

#include "mbqc/gf2expr.h"
#include "mbqc/pattern.h"
#include "mbqc/pauli.h"

namespace mbqc {

/// One stabilizer application K_qubit^exponent made during elimination.
struct TraceStep {
    QubitId stabilizer;
    Gf2Expr exponent;

    bool operator==(const TraceStep &) const = default;
};

/// Classical feed-forward of a compiled pattern.
///
/// `angle_sign[k]` is h_k: qubit k is measured at (-1)^{h_k} times its base
/// angle. Output qubit j receives the correction X_j^{f_j} Z_j^{g_j} with
/// f = `output_x`, g = `output_z`; every output has an entry, possibly zero.
struct SignalFlow {
    std::map<QubitId, Gf2Expr> angle_sign;
    std::map<QubitId, Gf2Expr> output_x;
    std::map<QubitId, Gf2Expr> output_z;
    std::vector<TraceStep> trace;
    /// Word left after elimination: X^{h_k} on measured qubits, X^f Z^g on outputs.
    PauliWord residual{0};

    /// Output corrections alone, as a word over the pattern's qubits.
    PauliWord output_correction() const;

    bool operator==(const SignalFlow &) const = default;
};

/// Z_i^{s_i} on every measured qubit.
PauliWord initial_byproduct(const Pattern &p);

/// Pushes every Z byproduct off the measured qubits with stabilizer powers,
/// in one pass over the flow's topological order.
///
/// Throws ValidationError when the flow breaks a flow rule and
/// EliminationError if a measured qubit still carries a Z exponent.
SignalFlow eliminate(const Pattern &p, const FlowMap &flow);

/// Elimination with the pattern's stored flow, or a found one if absent.
SignalFlow compile(const Pattern &p);

/// Replays `sf.trace` against the initial byproduct.
PauliWord replay_trace(const Pattern &p, const SignalFlow &sf);

struct AdaptedAngle {
    Angle base;
    Gf2Expr sign;
};

std::map<QubitId, AdaptedAngle> adapt_angles(const Pattern &p, const SignalFlow &sf);

/// (-1)^{sign(outcomes)} * base.
double adapted_angle(double base, const Gf2Expr &sign, const Assignment &outcomes);

}  // namespace mbqc

#endif
