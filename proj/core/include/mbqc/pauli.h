#ifndef MBQC_PAULI_H
#define MBQC_PAULI_H

#include <cstddef>
#include <map>
#include <string>

#include "mbqc/gf2expr.h"

namespace mbqc {

/// Concrete single-qubit Pauli, modulo global phase.
/// XZ means Z applied first, then X (equal to -iY up to phase).
enum class PauliLabel { I, X, Z, XZ };

char const *label_name(PauliLabel label);

/// A Pauli operator with every exponent fixed; identity entries are omitted.
struct ConcretePauli {
    std::map<QubitId, PauliLabel> ops;

    PauliLabel at(QubitId qubit) const;
    bool is_identity() const { return ops.empty(); }
    bool operator==(const ConcretePauli &) const = default;
};

/// Product over qubits of X_q^{x_q} Z_q^{z_q} with GF(2) exponents.
///
/// Per qubit the normal form writes X left of Z. Global phase is never
/// tracked, so multiplication is plain exponent addition. Zero exponents are
/// not stored.
class PauliWord {
   public:
    explicit PauliWord(std::size_t n_qubits) : n_qubits_(n_qubits) {}

    static PauliWord identity(std::size_t n_qubits) { return PauliWord(n_qubits); }

    std::size_t n_qubits() const { return n_qubits_; }
    const std::map<QubitId, Gf2Expr> &x_exponents() const { return x_; }
    const std::map<QubitId, Gf2Expr> &z_exponents() const { return z_; }

    Gf2Expr x(QubitId qubit) const;
    Gf2Expr z(QubitId qubit) const;

    /// Multiplies X_q^e (resp. Z_q^e) into the word.
    PauliWord &mul_x(QubitId qubit, const Gf2Expr &e);
    PauliWord &mul_z(QubitId qubit, const Gf2Expr &e);

    bool is_identity() const { return x_.empty() && z_.empty(); }
    /// True when every stored exponent is the constant 1.
    bool is_concrete_generator() const;

    /// Renders e.g. "X5^(s2^s4) Z5^(s1^s3) X3^s2"; qubits in descending order,
    /// X before Z, exponent omitted when it is 1. The identity renders as "I".
    std::string str() const;

    bool operator==(const PauliWord &) const = default;

   private:
    std::size_t n_qubits_;
    std::map<QubitId, Gf2Expr> x_;
    std::map<QubitId, Gf2Expr> z_;
};

PauliWord multiply(const PauliWord &a, const PauliWord &b);

/// Raises a concrete generator to a symbolic power. Throws
/// NonConstantExponentError when `a` already carries a symbolic exponent.
PauliWord pow(const PauliWord &a, const Gf2Expr &e);

ConcretePauli instantiate(const PauliWord &a, const Assignment &assignment);

/// Renders one factor such as "X5^(s2^s4)" or "Z3"; empty when e is zero.
std::string format_factor(char op, QubitId qubit, const Gf2Expr &e);

}  // namespace mbqc

#endif
