#ifndef MBQC_GF2EXPR_H
#define MBQC_GF2EXPR_H

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace mbqc {

using QubitId = std::uint32_t;

/// The outcome bit s_q of measuring qubit q.
struct OutcomeVar {
    QubitId qubit;

    auto operator<=>(const OutcomeVar &) const = default;
};

/// A (possibly partial) record of measurement outcomes, keyed by qubit.
using Assignment = std::map<QubitId, bool>;

/// Affine form over GF(2): s_a ^ s_b ^ ... ^ c.
///
/// Stored canonically as a strictly increasing list of qubit ids plus a
/// constant bit, so equality is structural and rendering is deterministic.
/// There is deliberately no product of two expressions; exponents are only
/// ever added or scaled by a constant bit.
class Gf2Expr {
   public:
    Gf2Expr() = default;

    static Gf2Expr zero() { return {}; }
    static Gf2Expr one() { return constant(true); }
    static Gf2Expr constant(bool bit);
    static Gf2Expr var(QubitId qubit);
    static Gf2Expr var(OutcomeVar v) { return var(v.qubit); }
    /// Builds from an arbitrary variable list; repeated ids cancel in pairs.
    static Gf2Expr from_terms(std::vector<QubitId> vars, bool constant = false);
    /// Parses the textual grammar produced by `str()`: "0", "1", "s3", "s1^s3^1".
    static Gf2Expr parse(std::string_view text);

    const std::vector<QubitId> &vars() const { return vars_; }
    bool constant_bit() const { return constant_; }

    bool is_zero() const { return vars_.empty() && !constant_; }
    bool is_one() const { return vars_.empty() && constant_; }
    bool is_constant() const { return vars_.empty(); }
    bool contains(QubitId qubit) const;
    /// Number of rendered terms (variables plus a set constant).
    std::size_t term_count() const { return vars_.size() + (constant_ ? 1 : 0); }

    Gf2Expr &operator^=(const Gf2Expr &other);
    friend Gf2Expr operator^(Gf2Expr a, const Gf2Expr &b) {
        a ^= b;
        return a;
    }

    /// Throws MissingVariableError when a variable is absent from `assignment`.
    bool evaluate(const Assignment &assignment) const;

    std::string str() const;

    bool operator==(const Gf2Expr &) const = default;

   private:
    std::vector<QubitId> vars_;
    bool constant_ = false;
};

inline Gf2Expr add(const Gf2Expr &a, const Gf2Expr &b) { return a ^ b; }
inline Gf2Expr scale(const Gf2Expr &a, bool bit) { return bit ? a : Gf2Expr::zero(); }
inline bool evaluate(const Gf2Expr &a, const Assignment &assignment) { return a.evaluate(assignment); }

}  // namespace mbqc

#endif
