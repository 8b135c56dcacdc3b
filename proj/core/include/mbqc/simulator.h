#ifndef MBQC_SIMULATOR_H
#define MBQC_SIMULATOR_H

#include <array>
#include <complex>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "mbqc/gf2expr.h"
#include "mbqc/pattern.h"
#include "mbqc/pauli.h"
#include "mbqc/signal_flow.h"

namespace mbqc {

using Amplitude = std::complex<double>;

/// Row-major 2x2 complex matrix.
using Matrix2 = std::array<Amplitude, 4>;

inline constexpr double kStateTolerance = 1e-10;
inline constexpr double kProbabilityTolerance = 1e-9;
inline constexpr std::size_t kDefaultBranchCap = 16;

/// a|0> + b|1>.
struct QubitState {
    Amplitude a{1.0};
    Amplitude b{0.0};

    static QubitState plus();
};

using InputStates = std::map<QubitId, QubitState>;
using AngleValues = std::map<QubitId, double>;

/// Dense amplitudes over 2^n basis states. Bit k of a basis index is the
/// value of register position k.
class StateVector {
   public:
    /// |0...0>.
    explicit StateVector(std::size_t n_qubits);
    static StateVector from_amplitudes(std::vector<Amplitude> amplitudes);
    static StateVector from_qubit(const QubitState &q);

    std::size_t n_qubits() const { return n_qubits_; }
    std::size_t size() const { return amps_.size(); }
    std::span<const Amplitude> amplitudes() const { return amps_; }
    Amplitude operator[](std::size_t index) const { return amps_[index]; }
    Amplitude &operator[](std::size_t index) { return amps_[index]; }

    double norm() const;
    void normalize();

    void apply_x(std::size_t pos);
    void apply_z(std::size_t pos);
    void apply_cz(std::size_t a, std::size_t b);
    void apply(std::size_t pos, const Matrix2 &u);

   private:
    std::size_t n_qubits_;
    std::vector<Amplitude> amps_;
};

/// <a|b>.
Amplitude inner(const StateVector &a, const StateVector &b);
/// |<a|b>|^2 / (|a|^2 |b|^2); zero if either vector vanishes.
double fidelity(const StateVector &a, const StateVector &b);
/// max_k |a_k - e^{i phi} b_k| with phi chosen to align b onto a.
double phase_aligned_deviation(const StateVector &a, const StateVector &b);
/// Euclidean norm of a - b.
double distance(const StateVector &a, const StateVector &b);

/// Register position of every qubit label: labels in ascending order.
class QubitLayout {
   public:
    explicit QubitLayout(const Pattern &p);

    std::size_t position(QubitId q) const;
    std::size_t size() const { return positions_.size(); }

   private:
    std::map<QubitId, std::size_t> positions_;
};

/// Non-input qubits in |+>, inputs as given (default |+>), then CZ on every edge.
StateVector prepare(const Pattern &p, const InputStates &inputs = {});

/// Applies a concrete Pauli (Z before X on XZ qubits) to the pattern register.
void apply_pauli(StateVector &s, const ConcretePauli &pauli, const Pattern &p);

/// Unnormalized projection onto the outcome vector of the angle-theta basis
/// (|0> + (-1)^outcome e^{i theta}|1>)/sqrt2. The measured position is left
/// holding |0>.
StateVector project(const StateVector &s, std::size_t pos, double angle, bool outcome);

struct MeasureResult {
    StateVector state;
    double probability;
    /// False for a (numerically) zero-probability branch; `state` is then not normalized.
    bool normalized;
};

MeasureResult measure(const StateVector &s, std::size_t pos, double angle, bool outcome);

/// Amplitudes over the output qubits (ascending labels) given every measured
/// position holds |0>.
StateVector extract_outputs(const StateVector &s, const Pattern &p);

struct BranchResult {
    Assignment outcomes;
    double probability;
    StateVector output_state;
    bool normalized;
};

/// Resolves symbolic base angles through `symbols`; throws Error on a missing symbol.
AngleValues numeric_angles(const Pattern &p, const std::map<std::string, double> &symbols = {});

/// Measures in pattern order at adapted angles, then undoes the output corrections.
BranchResult run_branch(
    const Pattern &p,
    const SignalFlow &sf,
    const Assignment &outcomes,
    const AngleValues &angles,
    const InputStates &inputs = {});

/// All 2^m branches, first measured qubit as the most significant outcome bit.
/// Throws CapExceededError when m > cap.
std::vector<BranchResult> enumerate_branches(
    const Pattern &p,
    const SignalFlow &sf,
    const AngleValues &angles,
    const InputStates &inputs = {},
    std::size_t cap = kDefaultBranchCap);

Matrix2 matmul(const Matrix2 &a, const Matrix2 &b);
Matrix2 hadamard();
/// diag(1, e^{i theta}).
Matrix2 u_z(double theta);
/// H u_z(theta) H.
Matrix2 u_x(double theta);
QubitState apply_unitary(const Matrix2 &u, const QubitState &q);

/// U_z(gamma) U_x(beta) U_z(alpha).
Matrix2 reference_chain_unitary(double alpha, double beta, double gamma);

/// What the five-qubit chain measured at (0, alpha, beta, gamma) does in its
/// zero branch under this simulator's basis convention:
/// H reference_chain_unitary(-alpha, -beta, -gamma) H.
Matrix2 chain_zero_branch_unitary(double alpha, double beta, double gamma);

/// Compares the outcome-1 projection of `qubit` with the outcome-0 projection
/// after Z is applied to that qubit of the prepared state.
double check_z_substitution(
    const Pattern &p, QubitId qubit, const AngleValues &angles, const InputStates &inputs = {});

struct VerificationReport {
    std::vector<BranchResult> branches;
    /// 1 - fidelity of each branch against branch 0.
    std::vector<double> infidelity;
    double max_pairwise_infidelity = 0.0;
    double probability_sum = 0.0;
    /// Largest |p_b - 2^-m|.
    double max_probability_deviation = 0.0;
    bool passed = false;
};

VerificationReport verify_branches(
    const Pattern &p,
    const SignalFlow &sf,
    const AngleValues &angles,
    const InputStates &inputs = {},
    std::size_t cap = kDefaultBranchCap);

}  // namespace mbqc

#endif
