#pragma once

#include <compare>
#include <stdexcept>
#include <string>

namespace brackets {

/// Role of a symbol inside a series or integral. The kind is fixed at creation.
enum class SymbolKind { Index, Parameter, ContourVar };

struct Symbol {
    std::string name;
    SymbolKind kind;

    auto operator<=>(const Symbol&) const = default;

    bool is_index() const { return kind == SymbolKind::Index; }
    bool is_parameter() const { return kind == SymbolKind::Parameter; }
    bool is_contour_var() const { return kind == SymbolKind::ContourVar; }
};

inline Symbol make_index(std::string name) { return {std::move(name), SymbolKind::Index}; }
inline Symbol make_parameter(std::string name) { return {std::move(name), SymbolKind::Parameter}; }
inline Symbol make_contour_var(std::string name) { return {std::move(name), SymbolKind::ContourVar}; }

inline std::string kind_to_string(SymbolKind k) {
    switch (k) {
        case SymbolKind::Index: return "index";
        case SymbolKind::Parameter: return "parameter";
        case SymbolKind::ContourVar: return "contour";
    }
    throw std::logic_error("unknown SymbolKind");
}

inline SymbolKind kind_from_string(const std::string& s) {
    if (s == "index") return SymbolKind::Index;
    if (s == "parameter") return SymbolKind::Parameter;
    if (s == "contour") return SymbolKind::ContourVar;
    throw std::invalid_argument("unknown symbol kind '" + s + "'");
}

/// Deterministic source of fresh index / contour-variable names.
/// One supply is confined to a single pipeline execution, so reruns
/// produce identical symbol names.
class SymbolSupply {
public:
    Symbol fresh_index(const std::string& hint = "n") {
        return make_index(hint + std::to_string(counter_++));
    }
    Symbol fresh_contour_var(const std::string& hint = "s") {
        return make_contour_var(hint + std::to_string(counter_++));
    }
    void reset() { counter_ = 0; }

private:
    int counter_ = 0;
};

}  // namespace brackets
