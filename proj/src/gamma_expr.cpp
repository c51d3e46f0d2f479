#include "brackets/gamma_expr.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace brackets {

namespace {

long long to_small_int(const BigInt& n, const char* what) {
    if (n > 1000000 || n < -1000000) {
        throw std::domain_error(std::string("GammaExpr: ") + what + " out of supported range");
    }
    return n.convert_to<long long>();
}

/// Prime factorization by trial division; bases appearing in practice are
/// tiny (2, 3, 4, ...).
std::map<BigInt, long long> factor_integer(BigInt n) {
    if (n <= 0) throw std::domain_error("GammaExpr: power-factor base must be positive");
    std::map<BigInt, long long> out;
    for (BigInt p = 2; p * p <= n; p == 2 ? p = 3 : p += 2) {
        while (n % p == 0) {
            ++out[p];
            n /= p;
        }
    }
    if (n > 1) ++out[n];
    return out;
}

struct AffineLess {
    bool operator()(const AffineForm& a, const AffineForm& b) const {
        return a.compare(b) == std::strong_ordering::less;
    }
};

}  // namespace

GammaExpr GammaExpr::zero() {
    GammaExpr e;
    e.constant_ = Rational(0);
    return e;
}

GammaExpr GammaExpr::constant(const Rational& c) {
    GammaExpr e;
    e.sign_ = c.is_negative() ? -1 : 1;
    e.constant_ = c.abs();
    return e;
}

GammaExpr GammaExpr::gamma(const AffineForm& arg, int power) {
    GammaExpr e;
    if (power != 0) {
        e.gammas_.push_back({arg, power});
        e.canonicalize();
    }
    return e;
}

GammaExpr GammaExpr::power(const Rational& base, const AffineForm& exponent) {
    if (!base.is_positive()) throw std::domain_error("GammaExpr::power: base must be > 0");
    GammaExpr e;
    // split p/q into prime powers immediately
    for (const auto& [p, k] : factor_integer(base.num())) {
        e.powers_.push_back({p, exponent * Rational(k)});
    }
    for (const auto& [p, k] : factor_integer(base.den())) {
        e.powers_.push_back({p, exponent * Rational(-k)});
    }
    e.canonicalize();
    return e;
}

GammaExpr GammaExpr::linear(const AffineForm& form, int power) {
    GammaExpr e;
    if (power != 0) {
        e.linears_.push_back({form, power});
        e.canonicalize();
    }
    return e;
}

GammaExpr GammaExpr::operator*(const GammaExpr& o) const {
    GammaExpr r = *this;
    r *= o;
    return r;
}

GammaExpr& GammaExpr::operator*=(const GammaExpr& o) {
    sign_ *= o.sign_;
    constant_ *= o.constant_;
    gammas_.insert(gammas_.end(), o.gammas_.begin(), o.gammas_.end());
    powers_.insert(powers_.end(), o.powers_.begin(), o.powers_.end());
    linears_.insert(linears_.end(), o.linears_.begin(), o.linears_.end());
    canonicalize();
    return *this;
}

GammaExpr GammaExpr::pow(int k) const {
    if (k == 0) return GammaExpr();
    if (is_zero()) {
        if (k < 0) throw std::domain_error("GammaExpr::pow: negative power of zero");
        return zero();
    }
    GammaExpr r;
    r.sign_ = (k % 2 == 0) ? 1 : sign_;
    r.constant_ = brackets::pow(constant_, k);
    for (const auto& g : gammas_) r.gammas_.push_back({g.arg, g.power * k});
    for (const auto& p : powers_) r.powers_.push_back({p.base, p.exponent * Rational(k)});
    for (const auto& l : linears_) r.linears_.push_back({l.form, l.power * k});
    r.canonicalize();
    return r;
}

GammaExpr GammaExpr::pow_affine(const AffineForm& e) const {
    if (sign_ < 0 || is_zero()) {
        throw std::domain_error("GammaExpr::pow_affine: base must be a positive expression");
    }
    if (!gammas_.empty() || !linears_.empty()) {
        throw std::domain_error(
            "GammaExpr::pow_affine: gamma or linear factors cannot take symbolic powers");
    }
    GammaExpr r;
    if (!constant_.is_one()) r *= GammaExpr::power(constant_, e);
    for (const auto& p : powers_) {
        if (!p.exponent.is_constant()) {
            throw std::domain_error(
                "GammaExpr::pow_affine: nested symbolic exponents are not representable");
        }
        r *= GammaExpr::power(Rational(p.base), e * p.exponent.constant());
    }
    return r;
}

GammaExpr GammaExpr::substitute(const std::map<Symbol, AffineForm>& bindings) const {
    GammaExpr r = *this;
    for (auto& g : r.gammas_) g.arg = g.arg.substitute(bindings);
    for (auto& p : r.powers_) p.exponent = p.exponent.substitute(bindings);
    for (auto& l : r.linears_) l.form = l.form.substitute(bindings);
    r.canonicalize();
    return r;
}

GammaExpr GammaExpr::rename(const std::map<Symbol, Symbol>& names) const {
    GammaExpr r = *this;
    for (auto& g : r.gammas_) g.arg = g.arg.rename(names);
    for (auto& p : r.powers_) p.exponent = p.exponent.rename(names);
    for (auto& l : r.linears_) l.form = l.form.rename(names);
    r.canonicalize();
    return r;
}

bool GammaExpr::has_constant_pole() const {
    for (const auto& g : gammas_) {
        if (g.power > 0 && g.arg.is_constant() && g.arg.constant().is_nonpositive_integer()) {
            return true;
        }
    }
    return false;
}

std::set<Symbol> GammaExpr::symbols() const {
    std::set<Symbol> out;
    auto merge = [&out](const AffineForm& f) {
        for (const auto& s : f.symbols()) out.insert(s);
    };
    for (const auto& g : gammas_) merge(g.arg);
    for (const auto& p : powers_) merge(p.exponent);
    for (const auto& l : linears_) merge(l.form);
    return out;
}

void GammaExpr::canonicalize() {
    Rational c = sign_ < 0 ? -constant_ : constant_;

    // --- gamma factors: merge, then shift arguments by the recurrence ---
    std::map<AffineForm, int, AffineLess> gmap;
    for (const auto& g : gammas_) gmap[g.arg] += g.power;

    std::map<AffineForm, int, AffineLess> gnorm;
    std::vector<LinearFactor> lraw = linears_;
    bool positive_pole = false;
    bool negative_pole = false;

    for (const auto& [arg, power] : gmap) {
        if (power == 0) continue;
        if (arg.is_constant()) {
            const Rational cst = arg.constant();
            if (cst.is_integer()) {
                if (cst.is_positive()) {
                    c *= brackets::pow(factorial(to_small_int(cst.num(), "gamma argument") - 1),
                                       power);
                } else {
                    // pole marker; negative powers collapse to zero below
                    gnorm[arg] += power;
                    (power > 0 ? positive_pole : negative_pole) = true;
                }
            } else {
                const BigInt n = cst.floor();
                const Rational f = cst - Rational(n);
                Rational shift(1);
                const long long nn = to_small_int(n, "gamma shift");
                if (nn > 0) {
                    for (long long j = 0; j < nn; ++j) shift *= f + Rational(j);
                    c *= brackets::pow(shift, power);
                } else if (nn < 0) {
                    for (long long j = nn; j < 0; ++j) shift *= f + Rational(j);
                    c *= brackets::pow(shift, -power);
                }
                gnorm[AffineForm(f)] += power;
            }
        } else {
            const BigInt n = arg.constant().floor();
            const long long nn = to_small_int(n, "gamma shift");
            AffineForm base = arg - AffineForm(Rational(n));
            if (nn > 0) {
                for (long long j = 0; j < nn; ++j) {
                    lraw.push_back({base + AffineForm(Rational(j)), power});
                }
            } else if (nn < 0) {
                for (long long j = nn; j < 0; ++j) {
                    lraw.push_back({base + AffineForm(Rational(j)), -power});
                }
            }
            gnorm[base] += power;
        }
    }

    if (negative_pole && !positive_pole) {
        // 1 / Gamma(nonpositive integer) is exactly zero
        sign_ = 1;
        constant_ = Rational(0);
        gammas_.clear();
        powers_.clear();
        linears_.clear();
        return;
    }

    // --- linear factors: fold constants, make monic, merge ---
    std::map<AffineForm, int, AffineLess> lmap;
    bool zero_factor = false;
    for (const auto& l : lraw) {
        if (l.power == 0) continue;
        if (l.form.is_constant()) {
            const Rational v = l.form.constant();
            if (v.is_zero()) {
                if (l.power < 0) {
                    throw std::domain_error(
                        "GammaExpr: zero linear factor with negative power (pole)");
                }
                zero_factor = true;
                continue;
            }
            c *= brackets::pow(v, l.power);
        } else {
            const Rational lead = l.form.terms().begin()->second;
            lmap[l.form / lead] += l.power;
            c *= brackets::pow(lead, l.power);
        }
    }

    // --- power factors: per-prime exponents, integer parts into constant ---
    std::map<BigInt, AffineForm> pmap;
    for (const auto& p : powers_) {
        if (p.base == 1) continue;
        auto [it, inserted] = pmap.try_emplace(p.base, p.exponent);
        if (!inserted) it->second += p.exponent;
    }

    if (zero_factor) c = Rational(0);

    gammas_.clear();
    powers_.clear();
    linears_.clear();

    if (c.is_zero()) {
        sign_ = 1;
        constant_ = Rational(0);
        return;
    }

    for (const auto& [arg, power] : gnorm) {
        if (power != 0) gammas_.push_back({arg, power});
    }
    for (const auto& [base, exponent] : pmap) {
        if (exponent.is_zero()) continue;
        AffineForm e = exponent;
        const BigInt n = e.constant().floor();
        if (n != 0) {
            c *= brackets::pow(Rational(base), to_small_int(n, "power-factor exponent"));
            e = e - AffineForm(Rational(n));
        }
        if (!e.is_zero()) powers_.push_back({base, e});
    }
    for (const auto& [form, power] : lmap) {
        if (power != 0) linears_.push_back({form, power});
    }

    if (c.is_zero()) {
        // possible when a power-factor fold multiplied into zero; keep zero canonical
        sign_ = 1;
        constant_ = Rational(0);
        gammas_.clear();
        powers_.clear();
        linears_.clear();
        return;
    }
    sign_ = c.is_negative() ? -1 : 1;
    constant_ = c.abs();
}

std::string GammaExpr::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    if (sign_ < 0) os << "-";
    os << constant_.to_string();
    for (const auto& g : gammas_) {
        os << " * Gamma(" << g.arg.to_string() << ")";
        if (g.power != 1) os << "^" << g.power;
    }
    for (const auto& p : powers_) {
        os << " * " << p.base.str() << "^(" << p.exponent.to_string() << ")";
    }
    for (const auto& l : linears_) {
        os << " * (" << l.form.to_string() << ")";
        if (l.power != 1) os << "^" << l.power;
    }
    return os.str();
}

GammaExpr gamma_simplify(const GammaExpr& e) {
    GammaExpr r = e;
    r.canonicalize();
    return r;
}

}  // namespace brackets
