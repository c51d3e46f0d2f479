#include "brackets/bracket_series.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace brackets {

Bracket::Bracket(AffineForm a) : arg(std::move(a)) {
    if (!arg.depends_on_kind(SymbolKind::Index) && !arg.depends_on_kind(SymbolKind::ContourVar)) {
        throw std::invalid_argument("Bracket: argument '" + arg.to_string() +
                                    "' has no index or contour variable");
    }
}

BracketSeries::BracketSeries(std::vector<Symbol> indices, GammaExpr coefficient,
                             std::map<VariableName, AffineForm> exponents,
                             std::vector<Bracket> brackets)
    : indices_(std::move(indices)),
      coefficient_(std::move(coefficient)),
      exponents_(std::move(exponents)),
      brackets_(std::move(brackets)) {
    validate();
}

void BracketSeries::validate() const {
    std::set<Symbol> seen;
    for (const auto& idx : indices_) {
        if (!idx.is_index()) {
            throw std::invalid_argument("BracketSeries: '" + idx.name + "' is not an index");
        }
        if (!seen.insert(idx).second) {
            throw std::invalid_argument("BracketSeries: duplicate index '" + idx.name + "'");
        }
    }
    for (const auto& idx : indices_) {
        bool used = coefficient_.symbols().count(idx) > 0;
        for (const auto& [v, e] : exponents_) used = used || e.depends_on(idx);
        for (const auto& b : brackets_) used = used || b.arg.depends_on(idx);
        if (!used) {
            throw std::invalid_argument("BracketSeries: index '" + idx.name +
                                        "' appears in no coefficient, exponent or bracket");
        }
    }
}

BracketSeries BracketSeries::with_monomial(const VariableName& v, const AffineForm& extra) const {
    BracketSeries r = *this;
    auto it = r.exponents_.find(v);
    if (it == r.exponents_.end()) {
        r.exponents_.emplace(v, extra);
    } else {
        it->second += extra;
    }
    return r;
}

BracketSeries BracketSeries::times(const GammaExpr& factor) const {
    BracketSeries r = *this;
    r.coefficient_ = r.coefficient_ * factor;
    return r;
}

BracketSeries BracketSeries::with_variable_renamed(const VariableName& from,
                                                   const VariableName& to) const {
    auto it = exponents_.find(from);
    if (it == exponents_.end()) {
        throw std::invalid_argument("BracketSeries: no variable '" + from + "' to rename");
    }
    if (exponents_.count(to)) {
        throw std::invalid_argument("BracketSeries: variable '" + to + "' already present");
    }
    BracketSeries r = *this;
    AffineForm e = it->second;
    r.exponents_.erase(from);
    r.exponents_.emplace(to, std::move(e));
    return r;
}

std::string BracketSeries::to_string() const {
    std::ostringstream os;
    os << "sum_{";
    for (std::size_t i = 0; i < indices_.size(); ++i) {
        if (i) os << ",";
        os << indices_[i].name;
    }
    os << "} phi * " << coefficient_.to_string();
    for (const auto& [v, e] : exponents_) {
        os << " * " << v << "^(" << e.to_string() << ")";
    }
    for (const auto& b : brackets_) {
        os << " * <" << b.arg.to_string() << ">";
    }
    return os.str();
}

BracketSeries rule_p1_integrate(const BracketSeries& s, const VariableName& variable) {
    auto it = s.exponents().find(variable);
    if (it == s.exponents().end()) {
        throw std::invalid_argument("rule_p1_integrate: no variable '" + variable + "'");
    }
    auto exponents = s.exponents();
    Bracket b(it->second);
    exponents.erase(variable);
    auto brackets = s.brackets();
    brackets.push_back(std::move(b));
    return BracketSeries(s.indices(), s.coefficient(), std::move(exponents), std::move(brackets));
}

BracketSeries rule_p2_multinomial(const std::vector<MultinomialTerm>& terms,
                                  const AffineForm& power, const std::vector<Symbol>& fresh) {
    if (terms.empty()) throw std::invalid_argument("rule_p2_multinomial: no terms");
    if (terms.size() != fresh.size()) {
        throw std::invalid_argument("rule_p2_multinomial: need one fresh index per term");
    }
    for (const auto& idx : fresh) {
        if (power.depends_on(idx)) {
            throw std::invalid_argument("rule_p2_multinomial: power mentions fresh index '" +
                                        idx.name + "'");
        }
    }

    GammaExpr coefficient = GammaExpr::gamma(-power, -1);
    std::map<VariableName, AffineForm> exponents;
    AffineForm bracket_arg = -power;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        const AffineForm n = AffineForm::var(fresh[i]);
        bracket_arg += n;
        coefficient *= terms[i].coefficient.pow_affine(n);
        for (const auto& [v, p] : terms[i].variable_powers) {
            if (p.is_zero()) continue;
            auto it = exponents.find(v);
            if (it == exponents.end()) {
                exponents.emplace(v, n * p);
            } else {
                it->second += n * p;
            }
        }
    }
    return BracketSeries(fresh, std::move(coefficient), std::move(exponents),
                         {Bracket(bracket_arg)});
}

std::pair<Bracket, Rational> lemma_rescale(const Bracket& b, const Symbol& target) {
    const Rational alpha = b.arg.coefficient(target);
    if (alpha.is_zero()) {
        throw std::invalid_argument("lemma_rescale: '" + target.name +
                                    "' has zero coefficient in <" + b.arg.to_string() + ">");
    }
    return {Bracket(b.arg / alpha), alpha.abs().inverse()};
}

BracketSeries lemma_rescale_series(const BracketSeries& s, std::size_t position,
                                   const Symbol& target) {
    if (position >= s.brackets().size()) {
        throw std::out_of_range("lemma_rescale_series: bracket position out of range");
    }
    auto [rescaled, prefactor] = lemma_rescale(s.brackets()[position], target);
    auto brackets = s.brackets();
    brackets[position] = std::move(rescaled);
    return BracketSeries(s.indices(), s.coefficient() * GammaExpr::constant(prefactor),
                         s.exponents(), std::move(brackets));
}

BracketSeries series_product(const BracketSeries& a, const BracketSeries& b) {
    std::set<Symbol> names(a.indices().begin(), a.indices().end());
    for (const auto& idx : b.indices()) {
        if (names.count(idx)) {
            throw std::invalid_argument("series_product: index '" + idx.name +
                                        "' appears in both factors");
        }
    }
    auto indices = a.indices();
    indices.insert(indices.end(), b.indices().begin(), b.indices().end());
    auto exponents = a.exponents();
    for (const auto& [v, e] : b.exponents()) {
        auto it = exponents.find(v);
        if (it == exponents.end()) {
            exponents.emplace(v, e);
        } else {
            it->second += e;
        }
    }
    auto brackets = a.brackets();
    brackets.insert(brackets.end(), b.brackets().begin(), b.brackets().end());
    return BracketSeries(std::move(indices), a.coefficient() * b.coefficient(),
                         std::move(exponents), std::move(brackets));
}

int complexity_index(const BracketSeries& s) {
    return static_cast<int>(s.indices().size()) - static_cast<int>(s.brackets().size());
}

BracketSeries canonical_relabel(const BracketSeries& s) {
    std::map<Symbol, Symbol> names;
    std::vector<Symbol> indices;
    for (std::size_t i = 0; i < s.indices().size(); ++i) {
        Symbol fresh = make_index("i" + std::to_string(i));
        names.emplace(s.indices()[i], fresh);
        indices.push_back(std::move(fresh));
    }
    std::map<VariableName, AffineForm> exponents;
    for (const auto& [v, e] : s.exponents()) exponents.emplace(v, e.rename(names));
    std::vector<Bracket> brackets;
    for (const auto& b : s.brackets()) brackets.emplace_back(b.arg.rename(names));
    std::sort(brackets.begin(), brackets.end());
    return BracketSeries(std::move(indices), s.coefficient().rename(names), std::move(exponents),
                         std::move(brackets));
}

bool series_equivalent(const BracketSeries& a, const BracketSeries& b) {
    const BracketSeries ca = canonical_relabel(a);
    const BracketSeries cb = canonical_relabel(b);
    return ca.indices() == cb.indices() && ca.coefficient() == cb.coefficient() &&
           ca.exponents() == cb.exponents() && ca.brackets() == cb.brackets();
}

}  // namespace brackets
