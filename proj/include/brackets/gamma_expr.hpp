#pragma once

#include <set>
#include <string>
#include <vector>

#include "brackets/affine_form.hpp"

namespace brackets {

struct GammaFactor {
    AffineForm arg;
    int power;  // nonzero
    bool operator==(const GammaFactor&) const = default;
};

struct PowerFactor {
    BigInt base;          // prime >= 2 in canonical form
    AffineForm exponent;  // nonzero form, constant part in [0,1)
    bool operator==(const PowerFactor&) const = default;
};

struct LinearFactor {
    AffineForm form;  // non-constant, monic in its first symbol
    int power;        // nonzero
    bool operator==(const LinearFactor&) const = default;
};

/// Canonical product expression
///
///     sign * constant * prod Gamma(arg)^k * prod base^exponent * prod form^k
///
/// over affine arguments. This is the coefficient language of every bracket
/// series and the type of all closed forms.
///
/// Canonicalization maintained as a class invariant:
///  - gamma factors with identical arguments are merged (powers summed);
///  - gamma arguments are shifted by Gamma(x+1) = x*Gamma(x) until their
///    constant part lies in [0,1); constant positive-integer arguments fold
///    into factorials; constant nonpositive-integer arguments are kept as
///    pole markers (negative powers of a pole collapse the expression to 0);
///  - power-factor bases are split into prime powers, and integer parts of
///    the exponents fold into the rational constant (so 4^(x/2) and 2^x are
///    the same object);
///  - linear factors are made monic, constants folding into the prefactor;
///  - factors are sorted by a fixed total order.
///
/// Structural equality of canonical forms is the module's notion of symbolic
/// equality.
class GammaExpr {
public:
    /// The multiplicative unit.
    GammaExpr() : sign_(1), constant_(1) {}

    static GammaExpr zero();
    static GammaExpr constant(const Rational& c);
    static GammaExpr gamma(const AffineForm& arg, int power = 1);
    static GammaExpr power(const Rational& base, const AffineForm& exponent);
    static GammaExpr linear(const AffineForm& form, int power = 1);

    int sign() const { return sign_; }
    const Rational& magnitude() const { return constant_; }
    Rational signed_constant() const { return sign_ < 0 ? -constant_ : constant_; }
    const std::vector<GammaFactor>& gamma_factors() const { return gammas_; }
    const std::vector<PowerFactor>& power_factors() const { return powers_; }
    const std::vector<LinearFactor>& linear_factors() const { return linears_; }

    bool is_zero() const { return constant_.is_zero(); }
    bool is_rational() const { return gammas_.empty() && powers_.empty() && linears_.empty(); }

    GammaExpr operator*(const GammaExpr& o) const;
    GammaExpr& operator*=(const GammaExpr& o);
    GammaExpr operator*(const Rational& c) const { return *this * GammaExpr::constant(c); }
    GammaExpr operator-() const { return *this * Rational(-1); }

    /// Integer power; requires a nonzero expression when k < 0.
    GammaExpr pow(int k) const;
    GammaExpr inverse() const { return pow(-1); }

    /// Symbolic power with an affine exponent, used by Rule P2 to attach
    /// a_i^{n_i}. Only defined when the expression is a positive rational
    /// combined with power factors of constant exponent.
    GammaExpr pow_affine(const AffineForm& e) const;

    /// Applies an affine substitution to every argument and re-canonicalizes.
    GammaExpr substitute(const std::map<Symbol, AffineForm>& bindings) const;
    GammaExpr rename(const std::map<Symbol, Symbol>& names) const;

    /// True when a gamma factor of positive power sits at a pole for every
    /// parameter value (constant nonpositive-integer argument).
    bool has_constant_pole() const;

    std::set<Symbol> symbols() const;

    bool operator==(const GammaExpr& o) const = default;

    std::string to_string() const;

    friend GammaExpr gamma_simplify(const GammaExpr& e);

private:
    int sign_;
    Rational constant_;  // magnitude, >= 0
    std::vector<GammaFactor> gammas_;
    std::vector<PowerFactor> powers_;
    std::vector<LinearFactor> linears_;

    void canonicalize();
};

/// Re-runs canonicalization. Canonical form is maintained as a class
/// invariant, so this is idempotent; it exists as the module's explicit
/// simplification entry point.
GammaExpr gamma_simplify(const GammaExpr& e);

}  // namespace brackets
