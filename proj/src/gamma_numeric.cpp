#include "brackets/gamma_numeric.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace brackets {

namespace {

// Lanczos g = 7, n = 9 (Godfrey's coefficients).
constexpr double kLanczosG = 7.0;
constexpr double kLanczos[9] = {
    0.99999999999980993,      676.5203681218851,     -1259.1392167224028,
    771.32342877765313,       -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,     9.9843695780195716e-6, 1.5056327351493116e-7,
};

std::complex<double> lanczos_gamma(std::complex<double> z) {
    if (z.real() < 0.5) {
        // reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z)
        const std::complex<double> pi(std::numbers::pi, 0.0);
        return pi / (std::sin(pi * z) * lanczos_gamma(1.0 - z));
    }
    z -= 1.0;
    std::complex<double> x = kLanczos[0];
    for (int i = 1; i < 9; ++i) x += kLanczos[i] / (z + static_cast<double>(i));
    const std::complex<double> t = z + kLanczosG + 0.5;
    return std::sqrt(2.0 * std::numbers::pi) * std::pow(t, z + 0.5) * std::exp(-t) * x;
}

bool near_nonpositive_integer(std::complex<double> z, double tol = 1e-9) {
    if (std::abs(z.imag()) > tol) return false;
    const double r = std::round(z.real());
    return r <= tol && std::abs(z.real() - r) <= tol;
}

std::complex<double> ipow(std::complex<double> base, int k) {
    std::complex<double> acc(1.0, 0.0);
    std::complex<double> b = k < 0 ? 1.0 / base : base;
    for (int e = std::abs(k); e > 0; e >>= 1) {
        if (e & 1) acc *= b;
        b *= b;
    }
    return acc;
}

double ipow_real(double base, int k) {
    double acc = 1.0;
    double b = k < 0 ? 1.0 / base : base;
    for (int e = std::abs(k); e > 0; e >>= 1) {
        if (e & 1) acc *= b;
        b *= b;
    }
    return acc;
}

}  // namespace

std::complex<double> complex_gamma(std::complex<double> z) {
    if (z.imag() == 0.0) return {real_gamma(z.real()), 0.0};
    return lanczos_gamma(z);
}

double real_gamma(double x) { return std::tgamma(x); }

EvalOutcome gamma_eval_numeric(const GammaExpr& e,
                               const std::map<Symbol, std::complex<double>>& values) {
    for (const auto& s : e.symbols()) {
        if (!values.count(s)) {
            throw std::invalid_argument("gamma_eval_numeric: unbound symbol '" + s.name + "'");
        }
    }
    if (e.is_zero()) return {{0.0, 0.0}, false};

    // positive-power poles dominate; negative-power poles force exact zero
    bool zero = false;
    for (const auto& g : e.gamma_factors()) {
        const auto arg = g.arg.eval(values);
        if (near_nonpositive_integer(arg)) {
            if (g.power > 0) return {{0.0, 0.0}, true};
            zero = true;
        }
    }
    if (zero) return {{0.0, 0.0}, false};

    std::complex<double> acc(e.sign() * e.magnitude().to_double(), 0.0);
    for (const auto& g : e.gamma_factors()) {
        acc *= ipow(complex_gamma(g.arg.eval(values)), g.power);
    }
    for (const auto& p : e.power_factors()) {
        const double base = p.base.convert_to<double>();
        acc *= std::exp(p.exponent.eval(values) * std::log(base));
    }
    for (const auto& l : e.linear_factors()) {
        const auto v = l.form.eval(values);
        if (v == std::complex<double>(0.0, 0.0)) {
            if (l.power < 0) return {{0.0, 0.0}, true};
            return {{0.0, 0.0}, false};
        }
        acc *= ipow(v, l.power);
    }
    return {acc, false};
}

RealEvalOutcome gamma_eval_exact(const GammaExpr& e, const std::map<Symbol, Rational>& values) {
    std::map<Symbol, AffineForm> bindings;
    for (const auto& [sym, v] : values) bindings.emplace(sym, AffineForm(v));

    GammaExpr sub;
    try {
        sub = e.substitute(bindings);
    } catch (const std::domain_error&) {
        // a linear factor hit zero with negative power: pole
        return {0.0, true};
    }
    if (!sub.symbols().empty()) {
        throw std::invalid_argument("gamma_eval_exact: not all symbols bound");
    }
    if (sub.has_constant_pole()) return {0.0, true};
    if (sub.is_zero()) return {0.0, false};

    double acc = sub.sign() * sub.magnitude().to_double();
    for (const auto& g : sub.gamma_factors()) {
        acc *= ipow_real(real_gamma(g.arg.constant().to_double()), g.power);
    }
    for (const auto& p : sub.power_factors()) {
        acc *= std::exp(p.exponent.constant().to_double() * std::log(p.base.convert_to<double>()));
    }
    // canonical symbol-free forms have no linear factors left
    return {acc, false};
}

}  // namespace brackets
