#include "brackets/mellin_barnes.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace brackets {

BracketIntegral::BracketIntegral(std::vector<Symbol> contour_vars,
                                 std::vector<Symbol> residual_indices, GammaExpr integrand,
                                 std::map<VariableName, AffineForm> exponents,
                                 std::vector<Bracket> brackets)
    : contour_vars_(std::move(contour_vars)),
      residual_indices_(std::move(residual_indices)),
      integrand_(std::move(integrand)),
      exponents_(std::move(exponents)),
      brackets_(std::move(brackets)) {
    for (const auto& v : contour_vars_) {
        if (!v.is_contour_var()) {
            throw std::invalid_argument("BracketIntegral: '" + v.name +
                                        "' is not a contour variable");
        }
        bool used = integrand_.symbols().count(v) > 0;
        for (const auto& [name, e] : exponents_) used = used || e.depends_on(v);
        for (const auto& b : brackets_) used = used || b.arg.depends_on(v);
        if (!used) {
            throw std::invalid_argument("BracketIntegral: contour variable '" + v.name +
                                        "' appears nowhere");
        }
    }
    for (const auto& idx : residual_indices_) {
        if (!idx.is_index()) {
            throw std::invalid_argument("BracketIntegral: residual '" + idx.name +
                                        "' is not an index");
        }
    }
}

BracketIntegral BracketIntegral::with_monomial(const VariableName& v,
                                               const AffineForm& extra) const {
    BracketIntegral r = *this;
    auto it = r.exponents_.find(v);
    if (it == r.exponents_.end()) {
        r.exponents_.emplace(v, extra);
    } else {
        it->second += extra;
    }
    return r;
}

BracketIntegral BracketIntegral::times(const GammaExpr& factor) const {
    BracketIntegral r = *this;
    r.integrand_ = r.integrand_ * factor;
    return r;
}

std::string BracketIntegral::to_string() const {
    std::ostringstream os;
    os << "(1/2pii)^" << contour_vars_.size() << " ";
    if (!residual_indices_.empty()) {
        os << "sum_{";
        for (std::size_t i = 0; i < residual_indices_.size(); ++i) {
            if (i) os << ",";
            os << residual_indices_[i].name;
        }
        os << "} phi ";
    }
    os << "int_{";
    for (std::size_t i = 0; i < contour_vars_.size(); ++i) {
        if (i) os << ",";
        os << contour_vars_[i].name;
    }
    os << "} " << integrand_.to_string();
    for (const auto& [v, e] : exponents_) os << " * " << v << "^(" << e.to_string() << ")";
    for (const auto& b : brackets_) os << " * <" << b.arg.to_string() << ">";
    return os.str();
}

BracketIntegral mb_from_mellin(const MellinEntry& entry, const Symbol& var) {
    if (!var.is_contour_var()) {
        throw std::invalid_argument("mb_from_mellin: '" + var.name + "' must be a contour variable");
    }
    GammaExpr integrand = entry.transform.substitute({{entry.s, AffineForm::var(var)}});
    std::map<VariableName, AffineForm> exponents;
    exponents.emplace(kArgumentHook, AffineForm::var(var, Rational(-1)));
    return BracketIntegral({var}, {}, std::move(integrand), std::move(exponents), {});
}

BracketIntegral contour_rescale(const BracketIntegral& bi, const Symbol& var,
                                const Rational& factor, const Symbol& fresh) {
    if (factor.is_zero()) throw std::invalid_argument("contour_rescale: zero factor");
    auto pos = std::find(bi.contour_vars().begin(), bi.contour_vars().end(), var);
    if (pos == bi.contour_vars().end()) {
        throw std::invalid_argument("contour_rescale: unknown contour variable '" + var.name + "'");
    }
    const std::map<Symbol, AffineForm> bindings{{var, AffineForm::var(fresh, factor)}};
    std::vector<Symbol> cvars = bi.contour_vars();
    cvars[static_cast<std::size_t>(pos - bi.contour_vars().begin())] = fresh;
    std::map<VariableName, AffineForm> exponents;
    for (const auto& [v, e] : bi.exponents()) exponents.emplace(v, e.substitute(bindings));
    std::vector<Bracket> brs;
    for (const auto& b : bi.brackets()) brs.emplace_back(b.arg.substitute(bindings));
    GammaExpr integrand =
        bi.integrand().substitute(bindings) * GammaExpr::constant(factor.abs());
    return BracketIntegral(std::move(cvars), bi.residual_indices(), std::move(integrand),
                           std::move(exponents), std::move(brs));
}

BracketIntegral integrate_variable(const BracketIntegral& bi, const VariableName& variable) {
    auto it = bi.exponents().find(variable);
    if (it == bi.exponents().end()) {
        throw std::invalid_argument("integrate_variable: no variable '" + variable + "'");
    }
    auto exponents = bi.exponents();
    Bracket b(it->second);
    exponents.erase(variable);
    auto brs = bi.brackets();
    brs.push_back(std::move(b));
    return BracketIntegral(bi.contour_vars(), bi.residual_indices(), bi.integrand(),
                           std::move(exponents), std::move(brs));
}

BracketIntegral integral_times_series(const BracketIntegral& bi, const BracketSeries& s) {
    std::set<Symbol> names(bi.residual_indices().begin(), bi.residual_indices().end());
    for (const auto& idx : s.indices()) {
        if (names.count(idx)) {
            throw std::invalid_argument("integral_times_series: index '" + idx.name +
                                        "' appears in both factors");
        }
    }
    auto residual = bi.residual_indices();
    residual.insert(residual.end(), s.indices().begin(), s.indices().end());
    auto exponents = bi.exponents();
    for (const auto& [v, e] : s.exponents()) {
        auto it = exponents.find(v);
        if (it == exponents.end()) {
            exponents.emplace(v, e);
        } else {
            it->second += e;
        }
    }
    auto brs = bi.brackets();
    brs.insert(brs.end(), s.brackets().begin(), s.brackets().end());
    return BracketIntegral(bi.contour_vars(), std::move(residual),
                           bi.integrand() * s.coefficient(), std::move(exponents),
                           std::move(brs));
}

BracketIntegral integral_product(const BracketIntegral& a, const BracketIntegral& b) {
    std::set<Symbol> cvars(a.contour_vars().begin(), a.contour_vars().end());
    for (const auto& v : b.contour_vars()) {
        if (cvars.count(v)) {
            throw std::invalid_argument("integral_product: contour variable '" + v.name +
                                        "' appears in both factors");
        }
    }
    std::set<Symbol> idxs(a.residual_indices().begin(), a.residual_indices().end());
    for (const auto& v : b.residual_indices()) {
        if (idxs.count(v)) {
            throw std::invalid_argument("integral_product: index '" + v.name +
                                        "' appears in both factors");
        }
    }
    auto contour = a.contour_vars();
    contour.insert(contour.end(), b.contour_vars().begin(), b.contour_vars().end());
    auto residual = a.residual_indices();
    residual.insert(residual.end(), b.residual_indices().begin(), b.residual_indices().end());
    auto exponents = a.exponents();
    for (const auto& [v, e] : b.exponents()) {
        auto it = exponents.find(v);
        if (it == exponents.end()) {
            exponents.emplace(v, e);
        } else {
            it->second += e;
        }
    }
    auto brs = a.brackets();
    brs.insert(brs.end(), b.brackets().begin(), b.brackets().end());
    return BracketIntegral(std::move(contour), std::move(residual),
                           a.integrand() * b.integrand(), std::move(exponents), std::move(brs));
}

MbValue rule_e4(const BracketIntegral& bi, const Symbol& var, const Bracket& using_bracket) {
    auto bpos = std::find(bi.brackets().begin(), bi.brackets().end(), using_bracket);
    if (bpos == bi.brackets().end()) {
        throw std::invalid_argument("rule_e4: bracket <" + using_bracket.arg.to_string() +
                                    "> not in integral");
    }
    auto vpos = std::find(bi.contour_vars().begin(), bi.contour_vars().end(), var);
    if (vpos == bi.contour_vars().end()) {
        throw std::invalid_argument("rule_e4: '" + var.name + "' is not a contour variable here");
    }
    const Rational beta = using_bracket.arg.coefficient(var);
    if (beta.is_zero()) {
        throw std::invalid_argument("rule_e4: '" + var.name + "' absent from the bracket");
    }

    const AffineForm var_star = -(using_bracket.arg - AffineForm::var(var, beta)) / beta;
    const std::map<Symbol, AffineForm> bindings{{var, var_star}};

    GammaExpr integrand = bi.integrand().substitute(bindings);
    integrand *= GammaExpr::constant(beta.abs().inverse());

    std::vector<Symbol> cvars;
    for (const auto& v : bi.contour_vars()) {
        if (v != var) cvars.push_back(v);
    }
    std::map<VariableName, AffineForm> exponents;
    for (const auto& [v, e] : bi.exponents()) exponents.emplace(v, e.substitute(bindings));
    std::vector<Bracket> brs;
    for (auto it = bi.brackets().begin(); it != bi.brackets().end(); ++it) {
        if (it == bpos) continue;
        brs.emplace_back(it->arg.substitute(bindings));
    }

    if (!cvars.empty()) {
        return BracketIntegral(std::move(cvars), bi.residual_indices(), std::move(integrand),
                               std::move(exponents), std::move(brs));
    }
    if (bi.residual_indices().empty() && exponents.empty() && brs.empty()) {
        return integrand;
    }
    return BracketSeries(bi.residual_indices(), std::move(integrand), std::move(exponents),
                         std::move(brs));
}

GammaExpr rule_e5_explain(const BracketIntegral& bi, LinearSystem& system_out,
                          IndexSolution& solution_out) {
    if (!bi.residual_indices().empty()) {
        throw std::invalid_argument("rule_e5: residual summation indices remain");
    }
    if (!bi.exponents().empty()) {
        throw std::invalid_argument("rule_e5: surviving exponents; integrate them first");
    }
    if (bi.contour_vars().empty() || bi.contour_vars().size() != bi.brackets().size()) {
        throw std::invalid_argument("rule_e5: needs as many brackets as contour variables (>= 1)");
    }
    LinearSystem sys;
    sys.columns = bi.contour_vars();
    for (const auto& b : bi.brackets()) {
        std::vector<Rational> row;
        AffineForm rest = b.arg;
        for (const auto& v : sys.columns) {
            const Rational c = b.arg.coefficient(v);
            row.push_back(c);
            if (!c.is_zero()) rest += AffineForm::var(v, -c);
        }
        sys.matrix.push_back(std::move(row));
        sys.rhs.push_back(-rest);
    }
    auto sol = solve_linear_system(sys);
    if (!sol) {
        throw NoAssignmentError("rule_e5: singular contour system");
    }
    GammaExpr value = bi.integrand().substitute(sol->bindings);
    value *= GammaExpr::constant(sol->determinant.abs().inverse());
    system_out = std::move(sys);
    solution_out = *std::move(sol);
    return value;
}

GammaExpr rule_e5(const BracketIntegral& bi) {
    LinearSystem sys;
    IndexSolution sol;
    return rule_e5_explain(bi, sys, sol);
}

std::pair<GammaExpr, Bracket> gamma_bracketize(const GammaExpr& e, const AffineForm& target_arg,
                                               const Symbol& fresh) {
    const auto& factors = e.gamma_factors();
    auto it = std::find_if(factors.begin(), factors.end(),
                           [&](const GammaFactor& g) { return g.arg == target_arg; });
    if (it == factors.end()) {
        throw std::invalid_argument("gamma_bracketize: no gamma factor with argument '" +
                                    target_arg.to_string() + "'");
    }
    if (it->power < 0) {
        throw std::invalid_argument("gamma_bracketize: factor has negative power");
    }
    GammaExpr reduced = e * GammaExpr::gamma(target_arg, -1);
    return {std::move(reduced), Bracket(target_arg + AffineForm::var(fresh))};
}

BracketIntegral bracketize_in_integral(const BracketIntegral& bi, const AffineForm& target_arg,
                                       const Symbol& fresh) {
    auto [reduced, bracket] = gamma_bracketize(bi.integrand(), target_arg, fresh);
    auto residual = bi.residual_indices();
    residual.push_back(fresh);
    auto brs = bi.brackets();
    brs.push_back(std::move(bracket));
    return BracketIntegral(bi.contour_vars(), std::move(residual), std::move(reduced),
                           bi.exponents(), std::move(brs));
}

BracketSeries to_bracket_series(const BracketIntegral& bi) {
    if (!bi.contour_vars().empty()) {
        throw std::invalid_argument("to_bracket_series: contour variables remain");
    }
    return BracketSeries(bi.residual_indices(), bi.integrand(), bi.exponents(), bi.brackets());
}

}  // namespace brackets
