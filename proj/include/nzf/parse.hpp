// ============================================================================
// nzf/parse.hpp — concrete syntax for models and formulas
// ============================================================================
//
// Model files:
//
//     clocks x, y;
//     mode idle  { inv true; }
//     mode busy  { inv x <= 5; }
//     init idle && x == 0 && y == 0;
//     trans idle -> busy { guard x >= 2; reset x; }
//
// Formulas: atoms are mode names, clock comparisons (x <= 3), true, false;
// connectives !, &&, ||, ->; modalities E [f U g], A [f U g], EF, AF, EG,
// AG, EGF, EFG, AGF, AFG; freeze quantification "x. f".  Universal forms,
// conjunction and implication are rewritten into the core existential
// fragment during parsing.
//
// ============================================================================

#ifndef NZF_PARSE_HPP
#define NZF_PARSE_HPP

#include <stdexcept>
#include <string>

#include "nzf/model.hpp"

namespace nzf {

struct ParseError : std::runtime_error {
    int line;
    int column;
    ParseError(int line, int column, const std::string& msg)
        : std::runtime_error("parse error at " + std::to_string(line) + ":" +
                             std::to_string(column) + ": " + msg),
          line(line),
          column(column) {}
};

/// Parse a model description.  Throws ParseError with position info.
TimedAutomaton parse_model(const std::string& text);

/// Parse a formula against a model (atoms are resolved to its modes and
/// clocks).  All derived forms are expanded; the result is in core form.
FormulaPtr parse_formula(const std::string& text, const TimedAutomaton& a);

}  // namespace nzf

#endif  // NZF_PARSE_HPP
