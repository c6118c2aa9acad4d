#include <turan/error.hpp>
#include <turan/language.hpp>

#include <algorithm>
#include <sstream>

namespace turan
{
    ParseError::ParseError(const std::string & message, int line, int column) :
        Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column)
    {
    }

    Language::Language(std::vector<PredicateSymbol> symbols)
    {
        for (auto & s : symbols)
            *this = with(std::move(s));
    }

    std::optional<int> Language::find(std::string_view name) const
    {
        for (std::size_t i = 0; i < symbols_.size(); ++i)
            if (symbols_[i].name == name)
                return static_cast<int>(i);
        return std::nullopt;
    }

    int Language::index_of(std::string_view name) const
    {
        if (auto i = find(name))
            return *i;
        throw LanguageMismatch("unknown predicate symbol '" + std::string(name) + "'");
    }

    int Language::max_arity() const
    {
        int result = 0;
        for (auto & s : symbols_)
            result = std::max(result, s.arity);
        return result;
    }

    Language Language::with(PredicateSymbol symbol) const
    {
        if (symbol.arity < 1)
            throw Error("predicate symbol '" + symbol.name + "' must have positive arity");
        if (find(symbol.name))
            throw Error("duplicate predicate symbol '" + symbol.name + "'");
        Language result = *this;
        result.symbols_.push_back(std::move(symbol));
        return result;
    }

    Language Language::disjoint_union(const Language & other) const
    {
        Language result = *this;
        for (auto & s : other.symbols_)
            result = result.with(s);
        return result;
    }

    std::string Language::fresh_name(std::string_view stem) const
    {
        std::string candidate(stem);
        for (int i = 1; find(candidate); ++i)
            candidate = std::string(stem) + std::to_string(i);
        return candidate;
    }

    std::string Language::to_string() const
    {
        std::ostringstream out;
        for (std::size_t i = 0; i < symbols_.size(); ++i)
            out << (i ? ", " : "") << symbols_[i].name << "/" << symbols_[i].arity;
        return out.str();
    }
}
