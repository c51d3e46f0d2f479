#pragma once

#include <string>
#include <vector>

#include "brackets/bracket_series.hpp"
#include "brackets/series_eval.hpp"

namespace brackets {

/// Formal variable name used by every representation for the function
/// argument; instantiate() distributes its powers onto real variables.
inline const VariableName kArgumentHook = "xi";

/// A function with a known closed-form Mellin transform (a pure gamma
/// expression in the single symbol `s`).
struct MellinEntry {
    std::string function_name;
    Symbol s;
    GammaExpr transform;
};

/// The Mellin table: "Ei" -> -Gamma(s)/s, "K0" -> (2^s/4) Gamma(s/2)^2.
const MellinEntry& mellin_table(const std::string& function_name);
std::vector<std::string> mellin_table_names();

enum class RepKind {
    BracketSeries2Index,  // Ei via its integral representation
    BracketSeries3Index,  // K0 via its integral representation
    Divergent,
    Null,
    MellinParametric,
    MellinBarnes,  // lives in mellin_barnes; listed for the catalog
};

std::string rep_kind_to_string(RepKind k);

/// A series representation of a special function: a bracket series whose
/// exponent slot `kArgumentHook` carries the power of the function argument.
struct Representation {
    std::string function_name;
    RepKind kind;
    BracketSeries series;
    std::vector<Symbol> parameter_slots;
};

/// Catalog lookup; every call returns a deep instance over fresh indices.
/// Supported pairs: K0 x {BracketSeries3Index, Divergent, Null,
/// MellinParametric}, Ei x {BracketSeries2Index, Divergent, MellinParametric},
/// cos and exp as plain series builders.
Representation catalog_get(const std::string& name, RepKind kind, SymbolSupply& supply);

/// All (name, kind) pairs the catalog serves.
std::vector<std::pair<std::string, RepKind>> catalog_list();

/// Series builders used by the catalog and the pipelines.
Representation cos_series(SymbolSupply& supply);
Representation exp_neg_series(SymbolSupply& supply);

/// The Mellin-transform-to-series generator:
///   f(xi) = |a| sum_n phi_n M(-a n - b)/Gamma(-n) xi^{a n + b}.
/// Requires a != 0.
Representation mellin_to_series(const MellinEntry& entry, const Rational& a, const AffineForm& b,
                                const Symbol& index);

/// Distributes the argument powers onto integration variables: with
/// argument xi = scale * prod v^{e_v} every occurrence of the hook power P
/// becomes exponent e_v * P on variable v, and the coefficient gains
/// scale^P. Requires the representation to expose the hook slot.
BracketSeries instantiate(const Representation& rep,
                          const std::map<VariableName, Rational>& argument_exponents,
                          const Rational& scale = Rational(1));

}  // namespace brackets
