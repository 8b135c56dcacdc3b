#include "mbqc/pauli.h"

#include <set>
#include <vector>

#include "mbqc/error.h"

namespace mbqc {

namespace {

void accumulate(std::map<QubitId, Gf2Expr> &exps, QubitId qubit, const Gf2Expr &e) {
    if (e.is_zero()) {
        return;
    }
    auto [it, inserted] = exps.try_emplace(qubit, e);
    if (!inserted) {
        it->second ^= e;
        if (it->second.is_zero()) {
            exps.erase(it);
        }
    }
}

Gf2Expr lookup(const std::map<QubitId, Gf2Expr> &exps, QubitId qubit) {
    auto it = exps.find(qubit);
    return it == exps.end() ? Gf2Expr::zero() : it->second;
}

}  // namespace

char const *label_name(PauliLabel label) {
    switch (label) {
        case PauliLabel::I:
            return "I";
        case PauliLabel::X:
            return "X";
        case PauliLabel::Z:
            return "Z";
        case PauliLabel::XZ:
            return "XZ";
    }
    return "?";
}

PauliLabel ConcretePauli::at(QubitId qubit) const {
    auto it = ops.find(qubit);
    return it == ops.end() ? PauliLabel::I : it->second;
}

Gf2Expr PauliWord::x(QubitId qubit) const { return lookup(x_, qubit); }
Gf2Expr PauliWord::z(QubitId qubit) const { return lookup(z_, qubit); }

PauliWord &PauliWord::mul_x(QubitId qubit, const Gf2Expr &e) {
    accumulate(x_, qubit, e);
    return *this;
}

PauliWord &PauliWord::mul_z(QubitId qubit, const Gf2Expr &e) {
    accumulate(z_, qubit, e);
    return *this;
}

bool PauliWord::is_concrete_generator() const {
    for (const auto *exps : {&x_, &z_}) {
        for (const auto &[q, e] : *exps) {
            if (!e.is_one()) {
                return false;
            }
        }
    }
    return true;
}

std::string format_factor(char op, QubitId qubit, const Gf2Expr &e) {
    if (e.is_zero()) {
        return {};
    }
    std::string out(1, op);
    out += std::to_string(qubit);
    if (e.is_one()) {
        return out;
    }
    out += '^';
    if (e.term_count() > 1) {
        out += '(' + e.str() + ')';
    } else {
        out += e.str();
    }
    return out;
}

std::string PauliWord::str() const {
    std::set<QubitId, std::greater<>> qubits;
    for (const auto &[q, e] : x_) {
        qubits.insert(q);
    }
    for (const auto &[q, e] : z_) {
        qubits.insert(q);
    }
    if (qubits.empty()) {
        return "I";
    }
    std::string out;
    auto append = [&](std::string term) {
        if (term.empty()) {
            return;
        }
        if (!out.empty()) {
            out += ' ';
        }
        out += term;
    };
    for (QubitId q : qubits) {
        append(format_factor('X', q, x(q)));
        append(format_factor('Z', q, z(q)));
    }
    return out;
}

PauliWord multiply(const PauliWord &a, const PauliWord &b) {
    if (a.n_qubits() != b.n_qubits()) {
        throw DimensionMismatchError(
            "cannot multiply Pauli words over " + std::to_string(a.n_qubits()) + " and " +
            std::to_string(b.n_qubits()) + " qubits");
    }
    PauliWord out = a;
    for (const auto &[q, e] : b.x_exponents()) {
        out.mul_x(q, e);
    }
    for (const auto &[q, e] : b.z_exponents()) {
        out.mul_z(q, e);
    }
    return out;
}

PauliWord pow(const PauliWord &a, const Gf2Expr &e) {
    if (!a.is_concrete_generator()) {
        throw NonConstantExponentError("pow requires a generator with constant exponents, got " + a.str());
    }
    PauliWord out(a.n_qubits());
    for (const auto &[q, unused] : a.x_exponents()) {
        out.mul_x(q, e);
    }
    for (const auto &[q, unused] : a.z_exponents()) {
        out.mul_z(q, e);
    }
    return out;
}

ConcretePauli instantiate(const PauliWord &a, const Assignment &assignment) {
    ConcretePauli out;
    for (const auto &[q, e] : a.x_exponents()) {
        if (e.evaluate(assignment)) {
            out.ops[q] = PauliLabel::X;
        }
    }
    for (const auto &[q, e] : a.z_exponents()) {
        if (e.evaluate(assignment)) {
            auto [it, inserted] = out.ops.try_emplace(q, PauliLabel::Z);
            if (!inserted) {
                it->second = PauliLabel::XZ;
            }
        }
    }
    return out;
}

}  // namespace mbqc
