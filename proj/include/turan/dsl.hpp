#pragma once

#include <turan/formula.hpp>
#include <turan/theory.hpp>

#include <string>
#include <string_view>

namespace turan
{
    /// Parses one formula. `line` is used for error positions only.
    Formula parse_formula(std::string_view text, const Language & language, int line = 1);

    /// Line-oriented theory file: "language:", "builtin:", "axiom:",
    /// comments (#) and blank lines. Symbols may be used before they are
    /// declared; builtins combine by disjoint union.
    Theory parse_theory(std::string_view text);
    /// Prints a theory so that parse_theory gives it back.
    std::string print_theory(const Theory & t);

    /// "builtin:NAME" or a path to a theory file.
    Theory load_theory(const std::string & source);
    std::string read_file(const std::string & path);

    /// Lines "interpret P(x1,...,xk) := formula". Without `source`, the source
    /// language is read off the heads in order of appearance.
    Interpretation parse_interpretation(std::string_view text, LanguagePtr target, LanguagePtr source = nullptr);
    std::string print_interpretation(const Interpretation & interp);
}
