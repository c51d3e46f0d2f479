#include "brackets/affine_form.hpp"

#include <sstream>
#include <stdexcept>

namespace brackets {

AffineForm AffineForm::var(const Symbol& s, const Rational& coeff) {
    AffineForm f;
    f.set_coefficient(s, coeff);
    return f;
}

void AffineForm::set_coefficient(const Symbol& s, const Rational& c) {
    if (c.is_zero()) {
        terms_.erase(s);
    } else {
        terms_[s] = c;
    }
}

Rational AffineForm::coefficient(const Symbol& s) const {
    auto it = terms_.find(s);
    return it == terms_.end() ? Rational(0) : it->second;
}

bool AffineForm::depends_on_kind(SymbolKind k) const {
    for (const auto& [sym, c] : terms_) {
        if (sym.kind == k) return true;
    }
    return false;
}

std::set<Symbol> AffineForm::symbols() const {
    std::set<Symbol> out;
    for (const auto& [sym, c] : terms_) out.insert(sym);
    return out;
}

AffineForm AffineForm::operator-() const {
    AffineForm r;
    r.constant_ = -constant_;
    for (const auto& [sym, c] : terms_) r.terms_[sym] = -c;
    return r;
}

AffineForm AffineForm::operator+(const AffineForm& o) const {
    AffineForm r = *this;
    r += o;
    return r;
}

AffineForm& AffineForm::operator+=(const AffineForm& o) {
    constant_ += o.constant_;
    for (const auto& [sym, c] : o.terms_) set_coefficient(sym, coefficient(sym) + c);
    return *this;
}

AffineForm AffineForm::operator-(const AffineForm& o) const { return *this + (-o); }

AffineForm AffineForm::operator*(const Rational& c) const {
    AffineForm r;
    if (c.is_zero()) return r;
    r.constant_ = constant_ * c;
    for (const auto& [sym, k] : terms_) r.terms_[sym] = k * c;
    return r;
}

AffineForm AffineForm::operator/(const Rational& c) const { return *this * c.inverse(); }

std::strong_ordering AffineForm::compare(const AffineForm& o) const {
    auto it = terms_.begin();
    auto jt = o.terms_.begin();
    for (; it != terms_.end() && jt != o.terms_.end(); ++it, ++jt) {
        if (auto c = it->first <=> jt->first; c != 0) return c;
        if (it->second < jt->second) return std::strong_ordering::less;
        if (jt->second < it->second) return std::strong_ordering::greater;
    }
    if (it != terms_.end()) return std::strong_ordering::greater;
    if (jt != o.terms_.end()) return std::strong_ordering::less;
    if (constant_ < o.constant_) return std::strong_ordering::less;
    if (o.constant_ < constant_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

AffineForm AffineForm::substitute(const std::map<Symbol, AffineForm>& bindings) const {
    for (const auto& [bound, form] : bindings) {
        for (const auto& [other, replacement] : bindings) {
            if (replacement.depends_on(bound)) {
                throw std::invalid_argument("AffineForm::substitute: cyclic binding through '" +
                                            bound.name + "'");
            }
        }
    }
    AffineForm r(constant_);
    for (const auto& [sym, c] : terms_) {
        auto it = bindings.find(sym);
        if (it == bindings.end()) {
            r.set_coefficient(sym, r.coefficient(sym) + c);
        } else {
            r += it->second * c;
        }
    }
    return r;
}

AffineForm AffineForm::rename(const std::map<Symbol, Symbol>& names) const {
    AffineForm r(constant_);
    for (const auto& [sym, c] : terms_) {
        auto it = names.find(sym);
        const Symbol& target = it == names.end() ? sym : it->second;
        r.set_coefficient(target, r.coefficient(target) + c);
    }
    return r;
}

std::complex<double> AffineForm::eval(const std::map<Symbol, std::complex<double>>& values) const {
    std::complex<double> acc = constant_.to_double();
    for (const auto& [sym, c] : terms_) {
        auto it = values.find(sym);
        if (it == values.end()) {
            throw std::invalid_argument("AffineForm::eval: unbound symbol '" + sym.name + "'");
        }
        acc += c.to_double() * it->second;
    }
    return acc;
}

Rational AffineForm::eval_exact(const std::map<Symbol, Rational>& values) const {
    Rational acc = constant_;
    for (const auto& [sym, c] : terms_) {
        auto it = values.find(sym);
        if (it == values.end()) {
            throw std::invalid_argument("AffineForm::eval_exact: unbound symbol '" + sym.name + "'");
        }
        acc += c * it->second;
    }
    return acc;
}

std::string AffineForm::to_string() const {
    if (terms_.empty()) return constant_.to_string();
    std::ostringstream os;
    bool first = true;
    for (const auto& [sym, c] : terms_) {
        if (first) {
            if (c == Rational(1)) {
                os << sym.name;
            } else if (c == Rational(-1)) {
                os << "-" << sym.name;
            } else {
                os << c.to_string() << "*" << sym.name;
            }
            first = false;
            continue;
        }
        const Rational a = c.abs();
        os << (c.is_negative() ? " - " : " + ");
        if (a == Rational(1)) {
            os << sym.name;
        } else {
            os << a.to_string() << "*" << sym.name;
        }
    }
    if (!constant_.is_zero()) {
        os << (constant_.is_negative() ? " - " : " + ") << constant_.abs().to_string();
    }
    return os.str();
}

}  // namespace brackets
