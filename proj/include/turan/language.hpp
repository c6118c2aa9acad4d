#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace turan
{
    struct PredicateSymbol
    {
        std::string name;
        int arity = 0;

        bool operator==(const PredicateSymbol &) const = default;
    };

    /// A finite relational language. Symbol order is significant: formulas,
    /// structures and patterns refer to symbols by index.
    class Language
    {
    public:
        Language() = default;
        explicit Language(std::vector<PredicateSymbol> symbols);

        std::size_t size() const noexcept { return symbols_.size(); }
        bool empty() const noexcept { return symbols_.empty(); }
        const PredicateSymbol & operator[](std::size_t i) const { return symbols_.at(i); }
        const std::vector<PredicateSymbol> & symbols() const noexcept { return symbols_; }

        std::optional<int> find(std::string_view name) const;
        /// Throws LanguageMismatch when absent.
        int index_of(std::string_view name) const;
        int arity(int symbol) const { return symbols_.at(static_cast<std::size_t>(symbol)).arity; }
        int max_arity() const;

        /// Returns a copy with `symbol` appended; rejects duplicates.
        Language with(PredicateSymbol symbol) const;
        /// Disjoint union; rejects name clashes.
        Language disjoint_union(const Language & other) const;
        /// Picks a name based on `stem` that is not yet used.
        std::string fresh_name(std::string_view stem) const;

        std::string to_string() const;

        bool operator==(const Language &) const = default;

    private:
        std::vector<PredicateSymbol> symbols_;
    };

    using LanguagePtr = std::shared_ptr<const Language>;

    inline LanguagePtr make_language(Language l) { return std::make_shared<const Language>(std::move(l)); }
}
