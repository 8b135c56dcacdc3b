#include "mbqc/signal_flow.h"

#include "mbqc/error.h"

namespace mbqc {

PauliWord SignalFlow::output_correction() const {
    PauliWord out(residual.n_qubits());
    for (const auto &[q, e] : output_x) {
        out.mul_x(q, e);
    }
    for (const auto &[q, e] : output_z) {
        out.mul_z(q, e);
    }
    return out;
}

PauliWord initial_byproduct(const Pattern &p) {
    PauliWord w(p.n_qubits);
    for (QubitId q : p.measured) {
        w.mul_z(q, Gf2Expr::var(q));
    }
    return w;
}

SignalFlow eliminate(const Pattern &p, const FlowMap &flow) {
    auto violations = validate_flow(p, flow);
    if (!violations.empty()) {
        std::string msg = "invalid flow:";
        for (const auto &v : violations) {
            msg += "\n  " + v.rule + ": " + v.detail;
        }
        throw ValidationError(msg);
    }

    SignalFlow sf;
    PauliWord work = initial_byproduct(p);
    for (QubitId i : flow.order) {
        Gf2Expr e = work.z(i);
        QubitId target = flow.succ.at(i);
        work = multiply(work, pow(stabilizer(p, target), e));
        sf.trace.push_back({target, std::move(e)});
    }

    for (QubitId q : p.measured) {
        if (!work.z(q).is_zero()) {
            throw EliminationError(
                "Z^(" + work.z(q).str() + ") remains on measured qubit " + std::to_string(q) + " after elimination");
        }
        sf.angle_sign[q] = work.x(q);
    }
    for (QubitId q : p.outputs) {
        sf.output_x[q] = work.x(q);
        sf.output_z[q] = work.z(q);
    }
    sf.residual = std::move(work);
    return sf;
}

SignalFlow compile(const Pattern &p) {
    if (p.flow.has_value()) {
        return eliminate(p, FlowMap::from_successors(p, *p.flow));
    }
    return eliminate(p, find_flow(p));
}

PauliWord replay_trace(const Pattern &p, const SignalFlow &sf) {
    PauliWord work = initial_byproduct(p);
    for (const auto &step : sf.trace) {
        work = multiply(work, pow(stabilizer(p, step.stabilizer), step.exponent));
    }
    return work;
}

std::map<QubitId, AdaptedAngle> adapt_angles(const Pattern &p, const SignalFlow &sf) {
    std::map<QubitId, AdaptedAngle> out;
    for (QubitId q : p.measured) {
        auto it = sf.angle_sign.find(q);
        out[q] = AdaptedAngle{p.angle(q), it == sf.angle_sign.end() ? Gf2Expr::zero() : it->second};
    }
    return out;
}

double adapted_angle(double base, const Gf2Expr &sign, const Assignment &outcomes) {
    return sign.evaluate(outcomes) ? -base : base;
}

}  // namespace mbqc
