#pragma once

#include <complex>
#include <map>

#include "brackets/gamma_expr.hpp"

namespace brackets {

/// Gamma function on the complex plane (Lanczos approximation with the
/// reflection formula for Re z < 1/2). Relative error around 1e-13.
std::complex<double> complex_gamma(std::complex<double> z);

/// Gamma on the real line away from poles; uses std::tgamma.
double real_gamma(double x);

/// Result of a floating evaluation: either a finite value or the marker for
/// a gamma pole hit with positive power.
struct EvalOutcome {
    std::complex<double> value{0.0, 0.0};
    bool divergent = false;
};

/// Evaluates a GammaExpr with every symbol bound to a complex number.
/// A gamma argument at a nonpositive integer (within tolerance) makes the
/// result divergent when its power is positive and contributes exact zero
/// when negative. Throws on unbound symbols.
EvalOutcome gamma_eval_numeric(const GammaExpr& e,
                               const std::map<Symbol, std::complex<double>>& values);

/// Exact-substitution variant: symbols are bound to rationals, so pole
/// detection is exact; the value is then computed in double precision.
struct RealEvalOutcome {
    double value = 0.0;
    bool divergent = false;
};
RealEvalOutcome gamma_eval_exact(const GammaExpr& e, const std::map<Symbol, Rational>& values);

}  // namespace brackets
