#pragma once

#include <complex>
#include <map>
#include <set>
#include <string>

#include "brackets/rational.hpp"
#include "brackets/symbol.hpp"

namespace brackets {

/// Affine combination of symbols with rational coefficients plus a rational
/// constant. The argument type of every bracket, exponent and gamma factor.
///
/// Zero coefficients are never stored, so structural equality is semantic
/// equality.
class AffineForm {
public:
    AffineForm() = default;
    AffineForm(const Rational& constant) : constant_(constant) {}
    AffineForm(int constant) : constant_(Rational(constant)) {}

    static AffineForm var(const Symbol& s, const Rational& coeff = Rational(1));

    const std::map<Symbol, Rational>& terms() const { return terms_; }
    const Rational& constant() const { return constant_; }

    bool is_constant() const { return terms_.empty(); }
    bool is_zero() const { return terms_.empty() && constant_.is_zero(); }

    /// Coefficient of s (zero if absent).
    Rational coefficient(const Symbol& s) const;
    bool depends_on(const Symbol& s) const { return terms_.count(s) > 0; }
    bool depends_on_kind(SymbolKind k) const;
    std::set<Symbol> symbols() const;

    AffineForm operator-() const;
    AffineForm operator+(const AffineForm& o) const;
    AffineForm operator-(const AffineForm& o) const;
    AffineForm operator*(const Rational& c) const;
    AffineForm operator/(const Rational& c) const;
    AffineForm& operator+=(const AffineForm& o);

    bool operator==(const AffineForm& o) const {
        return constant_ == o.constant_ && terms_ == o.terms_;
    }
    bool operator!=(const AffineForm& o) const { return !(*this == o); }

    /// Fixed total order used to canonicalize factor lists.
    std::strong_ordering compare(const AffineForm& o) const;
    bool operator<(const AffineForm& o) const { return compare(o) == std::strong_ordering::less; }

    /// Replaces each bound symbol by its form and collects like terms.
    /// Rejects cyclic bindings (a replacement form mentioning a bound symbol).
    AffineForm substitute(const std::map<Symbol, AffineForm>& bindings) const;

    /// Renames symbols; unmentioned symbols are kept.
    AffineForm rename(const std::map<Symbol, Symbol>& names) const;

    std::complex<double> eval(const std::map<Symbol, std::complex<double>>& values) const;
    Rational eval_exact(const std::map<Symbol, Rational>& values) const;

    std::string to_string() const;

private:
    std::map<Symbol, Rational> terms_;
    Rational constant_;

    void set_coefficient(const Symbol& s, const Rational& c);
};

inline AffineForm operator*(const Rational& c, const AffineForm& f) { return f * c; }
inline AffineForm operator+(const Rational& c, const AffineForm& f) { return AffineForm(c) + f; }

}  // namespace brackets
