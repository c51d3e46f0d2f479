#pragma once

#include <map>
#include <string>
#include <vector>

#include "brackets/gamma_expr.hpp"

namespace brackets {

/// Name of a continuous variable (integration variable or the formal
/// function argument of a representation).
using VariableName = std::string;

/// The formal symbol <a> standing for the divergent integral of x^{a-1}
/// over the half line. The argument must involve at least one summation
/// index or contour variable; a bracket in parameters only denotes an
/// unsolvable divergent integral and is rejected.
struct Bracket {
    explicit Bracket(AffineForm a);
    AffineForm arg;

    bool operator==(const Bracket& o) const { return arg == o.arg; }
    bool operator<(const Bracket& o) const { return arg < o.arg; }
};

/// Multi-indexed formal sum
///
///   sum_{n1,...} phi_{n1,...} * coefficient(n) * prod_v v^{exponent_v(n)}
///                * prod <bracket arg>
///
/// The indicator phi_n = (-1)^n / n! is implicit for every listed index;
/// evaluation rules account for it via their Gamma(-n*) factors.
///
/// Exponent forms are kept in the bracket-argument convention: producing a
/// bracket from variable v is literally moving exponents[v] into the bracket
/// list, so the caller applies the x^{a-1} shift exactly once when the
/// integrand is assembled.
class BracketSeries {
public:
    BracketSeries(std::vector<Symbol> indices, GammaExpr coefficient,
                  std::map<VariableName, AffineForm> exponents, std::vector<Bracket> brackets);

    const std::vector<Symbol>& indices() const { return indices_; }
    const GammaExpr& coefficient() const { return coefficient_; }
    const std::map<VariableName, AffineForm>& exponents() const { return exponents_; }
    const std::vector<Bracket>& brackets() const { return brackets_; }

    bool has_variable(const VariableName& v) const { return exponents_.count(v) > 0; }

    /// Adds `extra` to the exponent of `v` (creating the slot if absent).
    BracketSeries with_monomial(const VariableName& v, const AffineForm& extra) const;
    /// Multiplies the coefficient.
    BracketSeries times(const GammaExpr& factor) const;
    /// Renames the variable slot `from` to `to`.
    BracketSeries with_variable_renamed(const VariableName& from, const VariableName& to) const;

    std::string to_string() const;

private:
    std::vector<Symbol> indices_;
    GammaExpr coefficient_;
    std::map<VariableName, AffineForm> exponents_;
    std::vector<Bracket> brackets_;

    void validate() const;
};

/// One term of a multinomial a_1 + ... + a_r: a positive coefficient
/// expression times a monomial in the named variables.
struct MultinomialTerm {
    GammaExpr coefficient;  // restricted to rational/power content (see pow_affine)
    std::map<VariableName, Rational> variable_powers;
};

/// Rule P1: turns the exponent slot of `variable` into a bracket.
/// The stored exponent is already the bracket argument.
BracketSeries rule_p1_integrate(const BracketSeries& s, const VariableName& variable);

/// Rule P2: assigns to (a_1 + ... + a_r)^power the r-dimensional bracket
/// series  sum phi_{n1..nr} a_1^{n1}...a_r^{nr} <n1+...+nr-power> / Gamma(-power).
/// `fresh` supplies the r new summation indices; `power` must not mention them.
BracketSeries rule_p2_multinomial(const std::vector<MultinomialTerm>& terms,
                                  const AffineForm& power, const std::vector<Symbol>& fresh);

/// Lemma "factoring a constant from a bracket":
/// <alpha*target + rest> = (1/|alpha|) <target + rest/alpha>.
/// Returns the rescaled bracket and the rational prefactor.
std::pair<Bracket, Rational> lemma_rescale(const Bracket& b, const Symbol& target);

/// Applies lemma_rescale to brackets()[position], folding the prefactor into
/// the coefficient.
BracketSeries lemma_rescale_series(const BracketSeries& s, std::size_t position,
                                   const Symbol& target);

/// Product of two series over disjoint index sets: indices concatenate,
/// coefficients multiply, exponents add, brackets concatenate.
BracketSeries series_product(const BracketSeries& a, const BracketSeries& b);

/// number of sums - number of brackets.
int complexity_index(const BracketSeries& s);

/// Equality after the deterministic index-relabeling pass (indices renamed
/// i0, i1, ... in declared order; brackets compared as multisets).
bool series_equivalent(const BracketSeries& a, const BracketSeries& b);

/// The relabeled copy used by series_equivalent.
BracketSeries canonical_relabel(const BracketSeries& s);

}  // namespace brackets
