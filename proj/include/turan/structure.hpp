#pragma once

#include <turan/language.hpp>

#include <boost/dynamic_bitset.hpp>

#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace turan
{
    /// Calls `fn` on every injective tuple in ([n])_k, lexicographically.
    /// Vertices are 0-based.
    void for_each_injective_tuple(int n, int k, const std::function<void(std::span<const int>)> & fn);
    std::vector<std::vector<int>> injective_tuples(int n, int k);

    /// A finite canonical structure on universe {0, ..., n-1}: per predicate
    /// symbol, a set of injective tuples. Non-injective tuples can never be
    /// stored, so every Structure satisfies the canonicity axioms.
    class Structure
    {
    public:
        Structure();
        Structure(LanguagePtr language, int size);

        int size() const noexcept { return size_; }
        const Language & language() const noexcept { return *language_; }
        const LanguagePtr & language_ptr() const noexcept { return language_; }

        /// False for non-injective or out-of-range tuples.
        bool holds(int symbol, std::span<const int> tuple) const;
        /// Throws on non-injective or out-of-range tuples.
        void set(int symbol, std::span<const int> tuple, bool value = true);
        void set(int symbol, std::initializer_list<int> tuple, bool value = true)
        {
            set(symbol, std::span<const int>(tuple.begin(), tuple.size()), value);
        }

        std::vector<std::vector<int>> tuples(int symbol) const;
        std::size_t tuple_count(int symbol) const;

        /// Structure on [map.size()] where vertex i stands for map[i]; `map` must be injective.
        Structure pullback(std::span<const int> map) const;
        /// Substructure induced by `subset`, relabeled preserving relative order.
        Structure induced(std::vector<int> subset) const;
        /// Image under the bijection v -> perm[v].
        Structure relabeled(std::span<const int> perm) const;

        /// Copy over a different language with the same symbols (by position).
        Structure with_language(LanguagePtr language) const;

        const boost::dynamic_bitset<> & relation(int symbol) const { return relations_.at(static_cast<std::size_t>(symbol)); }
        std::size_t tuple_index(std::span<const int> tuple) const;

        /// Label-sensitive equality (same language, size and relations).
        bool operator==(const Structure & other) const;

    private:
        LanguagePtr language_;
        int size_ = 0;
        std::vector<boost::dynamic_bitset<>> relations_;

        void check_range(std::span<const int> tuple) const;
    };

    /// Number of injective tuples a labeled structure of size n can hold.
    std::size_t tuple_slots(const Language & language, int n);
    /// Calls `fn` on every labeled canonical structure of size n (2^tuple_slots of them).
    void for_each_labeled_structure(const LanguagePtr & language, int n, const std::function<void(const Structure &)> & fn);

    /// Text form: "n=<size>" followed by one "P: (t1,...,tk); (...)" line per
    /// symbol, 1-based vertices. Symbols with no tuples print as "P:".
    std::string to_text(const Structure & m);

    /// Parses the text form. An optional leading "language: P/k, ..." line
    /// overrides `language`; one of the two must be present.
    Structure parse_structure(std::string_view text, LanguagePtr language = nullptr);
}
