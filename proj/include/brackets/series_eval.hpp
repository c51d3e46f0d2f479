#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "brackets/bracket_series.hpp"

namespace brackets {

/// Exact linear system: one row per bracket, one column per index (declared
/// order); the right-hand side keeps the parameter part of each bracket.
struct LinearSystem {
    std::vector<Symbol> columns;
    std::vector<std::vector<Rational>> matrix;
    std::vector<AffineForm> rhs;  // brackets vanish: matrix * n = rhs
};

/// Solution of a non-singular system: each index as an affine form in the
/// remaining symbols, plus the determinant of the coefficient matrix.
struct IndexSolution {
    std::map<Symbol, AffineForm> bindings;
    Rational determinant;
};

/// Fully evaluated expression over free parameters only. `divergent` is set
/// when a gamma factor of positive power sits at a pole for every parameter
/// value; such objects are legal mid-pipeline values, not errors.
struct ClosedForm {
    GammaExpr expr;
    bool divergent = false;

    bool operator==(const ClosedForm& o) const = default;
};

inline ClosedForm make_closed_form(GammaExpr e) {
    const bool div = e.has_constant_pole();
    return ClosedForm{std::move(e), div};
}

/// "There is no assignment if A is singular."
class NoAssignmentError : public std::runtime_error {
public:
    explicit NoAssignmentError(const std::string& what) : std::runtime_error(what) {}
};

LinearSystem build_linear_system(const BracketSeries& s);

/// Fraction-free (Bareiss) elimination. Returns nullopt when singular;
/// the determinant is exact either way it is produced.
std::optional<IndexSolution> solve_linear_system(const LinearSystem& sys);

/// Determinant only (same elimination).
Rational system_determinant(const LinearSystem& sys);

/// Rule E1: one index, one bracket, no surviving exponents.
/// Value (1/|alpha|) f(n*) Gamma(-n*) with alpha n* + beta = 0.
ClosedForm rule_e1(const BracketSeries& s);

/// Rule E2: as many brackets as indices, none surviving as exponents;
/// exact solve, value (1/|det A|) f(n*) prod Gamma(-n_i*).
/// Throws NoAssignmentError when the matrix is singular.
ClosedForm rule_e2(const BracketSeries& s);

/// Rule E2 with the solved system exposed (for traces).
ClosedForm rule_e2_explain(const BracketSeries& s, LinearSystem& system_out,
                           IndexSolution& solution_out);

/// One Rule E3 candidate: the series over the remaining free indices after
/// solving a maximal non-singular subset of indices against the brackets.
struct E3Candidate {
    std::vector<Symbol> solved_indices;
    std::vector<Symbol> free_indices;
    BracketSeries series;  // bracket-free
};

/// Rule E3: all contributions of maximal rank, in lexicographic order of the
/// solved index positions. Throws NoAssignmentError on negative complexity
/// index.
std::vector<E3Candidate> rule_e3_enumerate(const BracketSeries& s);

/// Eliminates one index by solving one bracket for it: substitutes the
/// solution everywhere, multiplies the coefficient by Gamma(-target*)/|coef|
/// and removes both the index and the bracket.
BracketSeries partial_eliminate(const BracketSeries& s, const Symbol& target,
                                const Bracket& using_bracket);

}  // namespace brackets
