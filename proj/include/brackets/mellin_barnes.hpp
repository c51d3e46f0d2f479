#pragma once

#include <utility>
#include <variant>
#include <vector>

#include "brackets/representations.hpp"
#include "brackets/series_eval.hpp"

namespace brackets {

/// Bracket integral over complex contours:
///
///   (1/2*pi*i)^N  sum_{residual indices} phi  *
///       int ... int integrand * prod v^{exponent_v} * prod <...> ds_1..ds_N
///
/// The (1/2*pi*i)^N normalization is carried by the type, so Rule E4's
/// 2*pi*i/|beta| is a clean 1/|beta| and Rule E5's value is
/// (1/|det A|) F(s*). Residual indices make mixed sum-integral objects
/// representable.
class BracketIntegral {
public:
    BracketIntegral(std::vector<Symbol> contour_vars, std::vector<Symbol> residual_indices,
                    GammaExpr integrand, std::map<VariableName, AffineForm> exponents,
                    std::vector<Bracket> brackets);

    const std::vector<Symbol>& contour_vars() const { return contour_vars_; }
    const std::vector<Symbol>& residual_indices() const { return residual_indices_; }
    const GammaExpr& integrand() const { return integrand_; }
    const std::map<VariableName, AffineForm>& exponents() const { return exponents_; }
    const std::vector<Bracket>& brackets() const { return brackets_; }

    BracketIntegral with_monomial(const VariableName& v, const AffineForm& extra) const;
    BracketIntegral times(const GammaExpr& factor) const;

    std::string to_string() const;

private:
    std::vector<Symbol> contour_vars_;
    std::vector<Symbol> residual_indices_;
    GammaExpr integrand_;
    std::map<VariableName, AffineForm> exponents_;
    std::vector<Bracket> brackets_;
};

/// Inverse-Mellin representation f(xi) = (1/2*pi*i) int xi^{-var} M(var) dvar
/// as a BracketIntegral with the argument hook carrying exponent -var.
BracketIntegral mb_from_mellin(const MellinEntry& entry, const Symbol& var);

/// Change of contour variable var = factor * fresh; the Jacobian |factor|
/// multiplies the integrand.
BracketIntegral contour_rescale(const BracketIntegral& bi, const Symbol& var,
                                const Rational& factor, const Symbol& fresh);

/// Rule P1 on a bracket integral: moves exponents[variable] into a bracket.
BracketIntegral integrate_variable(const BracketIntegral& bi, const VariableName& variable);

/// Product of a bracket integral with a bracket series (mixed objects as in
/// the divergent x Mellin-Barnes pipelines).
BracketIntegral integral_times_series(const BracketIntegral& bi, const BracketSeries& s);

/// Product of two bracket integrals over disjoint contour variables.
BracketIntegral integral_product(const BracketIntegral& a, const BracketIntegral& b);

/// Result of a contour elimination: still an integral, or a series once all
/// contours are gone, or a plain expression once nothing is left.
using MbValue = std::variant<BracketIntegral, BracketSeries, GammaExpr>;

/// Rule E4: int F(s) <alpha + beta s> ds = (2*pi*i/|beta|) F(-alpha/beta);
/// eliminates `var` using `using_bracket`.
MbValue rule_e4(const BracketIntegral& bi, const Symbol& var, const Bracket& using_bracket);

/// Rule E5: as many brackets as contour variables, no residual indices.
/// Exact solve; value (1/|det A|) F(s1*, ..., sN*).
GammaExpr rule_e5(const BracketIntegral& bi);

/// Rule E5 with the solved system exposed (for traces).
GammaExpr rule_e5_explain(const BracketIntegral& bi, LinearSystem& system_out,
                          IndexSolution& solution_out);

/// Replaces one positive power of Gamma(arg) by the bracket series of the
/// gamma function: Gamma(arg) = sum_fresh phi_fresh <arg + fresh>.
/// Returns the reduced expression and the new bracket.
std::pair<GammaExpr, Bracket> gamma_bracketize(const GammaExpr& e, const AffineForm& target_arg,
                                               const Symbol& fresh);

/// gamma_bracketize applied to the integrand of a bracket integral: the
/// fresh index joins the residual indices and the bracket joins the list.
BracketIntegral bracketize_in_integral(const BracketIntegral& bi, const AffineForm& target_arg,
                                       const Symbol& fresh);

/// Conversion once contour_vars is empty.
BracketSeries to_bracket_series(const BracketIntegral& bi);

}  // namespace brackets
