#include "brackets/series_eval.hpp"

#include <algorithm>
#include <cassert>

namespace brackets {

namespace {

/// Bareiss fraction-free elimination on [A | rhs]. Returns the determinant
/// and, when non-singular, leaves the triangularized system for back
/// substitution.
struct Elimination {
    std::vector<std::vector<Rational>> m;
    std::vector<AffineForm> r;
    Rational det;
    bool singular = false;
};

Elimination bareiss(const LinearSystem& sys) {
    Elimination e{sys.matrix, sys.rhs, Rational(1)};
    const std::size_t n = e.m.size();
    int swap_sign = 1;
    Rational prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (e.m[k][k].is_zero()) {
            std::size_t pivot = k + 1;
            while (pivot < n && e.m[pivot][k].is_zero()) ++pivot;
            if (pivot == n) {
                e.singular = true;
                e.det = Rational(0);
                return e;
            }
            std::swap(e.m[k], e.m[pivot]);
            std::swap(e.r[k], e.r[pivot]);
            swap_sign = -swap_sign;
        }
        const Rational p = e.m[k][k];
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                e.m[i][j] = (e.m[i][j] * p - e.m[i][k] * e.m[k][j]) / prev;
            }
            e.r[i] = (e.r[i] * p - e.r[k] * e.m[i][k]) / prev;
            e.m[i][k] = Rational(0);
        }
        prev = p;
    }
    if (n == 0) {
        e.det = Rational(1);
        return e;
    }
    if (e.m[n - 1][n - 1].is_zero()) {
        e.singular = true;
        e.det = Rational(0);
        return e;
    }
    // With Bareiss, the last pivot is det(A) up to row swaps.
    e.det = e.m[n - 1][n - 1] * Rational(swap_sign);
    return e;
}

std::string system_to_string(const LinearSystem& sys) {
    std::string out = "columns:";
    for (const auto& c : sys.columns) out += " " + c.name;
    out += "; rows:";
    for (std::size_t i = 0; i < sys.matrix.size(); ++i) {
        out += " [";
        for (std::size_t j = 0; j < sys.matrix[i].size(); ++j) {
            if (j) out += ", ";
            out += sys.matrix[i][j].to_string();
        }
        out += " | " + sys.rhs[i].to_string() + "]";
    }
    return out;
}

}  // namespace

LinearSystem build_linear_system(const BracketSeries& s) {
    LinearSystem sys;
    sys.columns = s.indices();
    for (const auto& b : s.brackets()) {
        std::vector<Rational> row;
        AffineForm rest = b.arg;
        for (const auto& idx : sys.columns) {
            const Rational c = b.arg.coefficient(idx);
            row.push_back(c);
            if (!c.is_zero()) rest += AffineForm::var(idx, -c);
        }
        sys.matrix.push_back(std::move(row));
        sys.rhs.push_back(-rest);
    }
    return sys;
}

std::optional<IndexSolution> solve_linear_system(const LinearSystem& sys) {
    const std::size_t n = sys.columns.size();
    if (sys.matrix.size() != n) {
        throw std::invalid_argument("solve_linear_system: system must be square");
    }
    Elimination e = bareiss(sys);
    if (e.singular) return std::nullopt;

    IndexSolution sol;
    sol.determinant = e.det;
    std::vector<AffineForm> x(n);
    for (std::size_t ii = n; ii-- > 0;) {
        AffineForm acc = e.r[ii];
        for (std::size_t j = ii + 1; j < n; ++j) acc = acc - x[j] * e.m[ii][j];
        x[ii] = acc / e.m[ii][ii];
    }
    for (std::size_t i = 0; i < n; ++i) sol.bindings.emplace(sys.columns[i], x[i]);
    return sol;
}

Rational system_determinant(const LinearSystem& sys) {
    Elimination e = bareiss(sys);
    return e.det;
}

ClosedForm rule_e1(const BracketSeries& s) {
    if (s.indices().size() != 1 || s.brackets().size() != 1) {
        throw std::invalid_argument("rule_e1: needs exactly one index and one bracket");
    }
    if (!s.exponents().empty()) {
        throw std::invalid_argument("rule_e1: surviving exponents; integrate them first");
    }
    const Symbol& n = s.indices()[0];
    const Bracket& b = s.brackets()[0];
    const Rational alpha = b.arg.coefficient(n);
    if (alpha.is_zero()) {
        throw NoAssignmentError("rule_e1: index '" + n.name + "' absent from the bracket");
    }
    const AffineForm n_star = -(b.arg - AffineForm::var(n, alpha)) / alpha;
    GammaExpr value = s.coefficient().substitute({{n, n_star}});
    value *= GammaExpr::gamma(-n_star);
    value *= GammaExpr::constant(alpha.abs().inverse());
    return make_closed_form(std::move(value));
}

ClosedForm rule_e2_explain(const BracketSeries& s, LinearSystem& system_out,
                           IndexSolution& solution_out) {
    if (s.indices().empty() || s.indices().size() != s.brackets().size()) {
        throw std::invalid_argument("rule_e2: needs as many brackets as indices (>= 1)");
    }
    if (!s.exponents().empty()) {
        throw std::invalid_argument("rule_e2: surviving exponents; integrate them first");
    }
    LinearSystem sys = build_linear_system(s);
    auto sol = solve_linear_system(sys);
    if (!sol) {
        throw NoAssignmentError("rule_e2: singular system; " + system_to_string(sys));
    }
    // the bindings must annihilate every bracket argument
    for (const auto& b : s.brackets()) {
        assert(b.arg.substitute(sol->bindings).is_zero());
    }
    GammaExpr value = s.coefficient().substitute(sol->bindings);
    for (const auto& idx : s.indices()) {
        value *= GammaExpr::gamma(-sol->bindings.at(idx));
    }
    value *= GammaExpr::constant(sol->determinant.abs().inverse());
    system_out = std::move(sys);
    solution_out = *std::move(sol);
    return make_closed_form(std::move(value));
}

ClosedForm rule_e2(const BracketSeries& s) {
    LinearSystem sys;
    IndexSolution sol;
    return rule_e2_explain(s, sys, sol);
}

std::vector<E3Candidate> rule_e3_enumerate(const BracketSeries& s) {
    const int idx = complexity_index(s);
    if (idx < 0) {
        throw NoAssignmentError("rule_e3: no assignment to a bracket series of negative index");
    }
    const std::size_t k = s.indices().size();
    const std::size_t b = s.brackets().size();

    std::vector<E3Candidate> out;
    if (b == 0) {
        out.push_back({{}, s.indices(), s});
        return out;
    }

    // iterate over b-subsets of index positions in lexicographic order
    std::vector<std::size_t> pick(b);
    for (std::size_t i = 0; i < b; ++i) pick[i] = i;
    auto advance = [&]() -> bool {
        std::size_t i = b;
        while (i-- > 0) {
            if (pick[i] + (b - i) <= k - 1 + 0) {
                ++pick[i];
                for (std::size_t j = i + 1; j < b; ++j) pick[j] = pick[j - 1] + 1;
                return true;
            }
        }
        return false;
    };

    do {
        std::vector<Symbol> solved;
        std::vector<Symbol> free_indices;
        std::vector<bool> chosen(k, false);
        for (auto p : pick) chosen[p] = true;
        for (std::size_t i = 0; i < k; ++i) {
            (chosen[i] ? solved : free_indices).push_back(s.indices()[i]);
        }

        LinearSystem sys;
        sys.columns = solved;
        for (const auto& br : s.brackets()) {
            std::vector<Rational> row;
            AffineForm rest = br.arg;
            for (const auto& c : solved) {
                const Rational coef = br.arg.coefficient(c);
                row.push_back(coef);
                if (!coef.is_zero()) rest += AffineForm::var(c, -coef);
            }
            sys.matrix.push_back(std::move(row));
            sys.rhs.push_back(-rest);
        }
        auto sol = solve_linear_system(sys);
        if (!sol) continue;

        GammaExpr coeff = s.coefficient().substitute(sol->bindings);
        for (const auto& c : solved) coeff *= GammaExpr::gamma(-sol->bindings.at(c));
        coeff *= GammaExpr::constant(sol->determinant.abs().inverse());
        std::map<VariableName, AffineForm> exponents;
        for (const auto& [v, e] : s.exponents()) {
            exponents.emplace(v, e.substitute(sol->bindings));
        }
        out.push_back(
            {solved, free_indices, BracketSeries(free_indices, coeff, std::move(exponents), {})});
    } while (advance());

    return out;
}

BracketSeries partial_eliminate(const BracketSeries& s, const Symbol& target,
                                const Bracket& using_bracket) {
    auto pos = std::find(s.brackets().begin(), s.brackets().end(), using_bracket);
    if (pos == s.brackets().end()) {
        throw std::invalid_argument("partial_eliminate: bracket <" + using_bracket.arg.to_string() +
                                    "> not in series");
    }
    auto idx_pos = std::find(s.indices().begin(), s.indices().end(), target);
    if (idx_pos == s.indices().end()) {
        throw std::invalid_argument("partial_eliminate: '" + target.name + "' is not an index");
    }
    const Rational coef = using_bracket.arg.coefficient(target);
    if (coef.is_zero()) {
        throw std::invalid_argument("partial_eliminate: '" + target.name +
                                    "' absent from the bracket");
    }

    const AffineForm target_star =
        -(using_bracket.arg - AffineForm::var(target, coef)) / coef;
    const std::map<Symbol, AffineForm> bindings{{target, target_star}};

    GammaExpr coeff = s.coefficient().substitute(bindings);
    coeff *= GammaExpr::gamma(-target_star);
    coeff *= GammaExpr::constant(coef.abs().inverse());

    std::vector<Symbol> indices;
    for (const auto& idx : s.indices()) {
        if (idx != target) indices.push_back(idx);
    }
    std::map<VariableName, AffineForm> exponents;
    for (const auto& [v, e] : s.exponents()) exponents.emplace(v, e.substitute(bindings));
    std::vector<Bracket> brackets;
    for (auto it = s.brackets().begin(); it != s.brackets().end(); ++it) {
        if (it == pos) continue;
        brackets.emplace_back(it->arg.substitute(bindings));
    }
    return BracketSeries(std::move(indices), std::move(coeff), std::move(exponents),
                         std::move(brackets));
}

}  // namespace brackets
