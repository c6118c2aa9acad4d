#include <turan/error.hpp>
#include <turan/structure.hpp>

#include <algorithm>
#include <numeric>
#include <sstream>

namespace turan
{
    namespace
    {
        void injective_rec(int n, int k, std::vector<int> & tuple, std::vector<char> & used,
            const std::function<void(std::span<const int>)> & fn)
        {
            if (static_cast<int>(tuple.size()) == k) {
                fn(tuple);
                return;
            }
            for (int v = 0; v < n; ++v) {
                if (used[static_cast<std::size_t>(v)])
                    continue;
                used[static_cast<std::size_t>(v)] = 1;
                tuple.push_back(v);
                injective_rec(n, k, tuple, used, fn);
                tuple.pop_back();
                used[static_cast<std::size_t>(v)] = 0;
            }
        }

        std::size_t power(int base, int exponent)
        {
            std::size_t r = 1;
            for (int i = 0; i < exponent; ++i)
                r *= static_cast<std::size_t>(base);
            return r;
        }

        bool injective(std::span<const int> tuple)
        {
            for (std::size_t i = 0; i < tuple.size(); ++i)
                for (std::size_t j = i + 1; j < tuple.size(); ++j)
                    if (tuple[i] == tuple[j])
                        return false;
            return true;
        }
    }

    void for_each_injective_tuple(int n, int k, const std::function<void(std::span<const int>)> & fn)
    {
        if (k > n)
            return;
        std::vector<int> tuple;
        std::vector<char> used(static_cast<std::size_t>(std::max(n, 0)), 0);
        injective_rec(n, k, tuple, used, fn);
    }

    std::vector<std::vector<int>> injective_tuples(int n, int k)
    {
        std::vector<std::vector<int>> result;
        for_each_injective_tuple(n, k, [&](std::span<const int> t) { result.emplace_back(t.begin(), t.end()); });
        return result;
    }

    Structure::Structure() :
        language_(make_language(Language{}))
    {
    }

    Structure::Structure(LanguagePtr language, int size) :
        language_(std::move(language)),
        size_(size)
    {
        if (! language_)
            throw Error("structure requires a language");
        if (size < 0)
            throw Error("structure size must be non-negative");
        for (auto & s : language_->symbols())
            relations_.emplace_back(power(size, s.arity));
    }

    std::size_t Structure::tuple_index(std::span<const int> tuple) const
    {
        std::size_t index = 0;
        for (std::size_t i = tuple.size(); i-- > 0;)
            index = index * static_cast<std::size_t>(size_) + static_cast<std::size_t>(tuple[i]);
        return index;
    }

    void Structure::check_range(std::span<const int> tuple) const
    {
        for (int v : tuple)
            if (v < 0 || v >= size_)
                throw Error("vertex " + std::to_string(v + 1) + " out of range for a structure of size " + std::to_string(size_));
    }

    bool Structure::holds(int symbol, std::span<const int> tuple) const
    {
        for (int v : tuple)
            if (v < 0 || v >= size_)
                return false;
        if (! injective(tuple))
            return false;
        return relations_[static_cast<std::size_t>(symbol)].test(tuple_index(tuple));
    }

    void Structure::set(int symbol, std::span<const int> tuple, bool value)
    {
        if (symbol < 0 || symbol >= static_cast<int>(relations_.size()))
            throw LanguageMismatch("symbol index out of range");
        if (static_cast<int>(tuple.size()) != language_->arity(symbol))
            throw LanguageMismatch("tuple length does not match the arity of '" + (*language_)[static_cast<std::size_t>(symbol)].name + "'");
        check_range(tuple);
        if (! injective(tuple))
            throw Error("canonical structures only contain injective tuples");
        relations_[static_cast<std::size_t>(symbol)].set(tuple_index(tuple), value);
    }

    std::vector<std::vector<int>> Structure::tuples(int symbol) const
    {
        std::vector<std::vector<int>> result;
        for_each_injective_tuple(size_, language_->arity(symbol), [&](std::span<const int> t) {
            if (relations_[static_cast<std::size_t>(symbol)].test(tuple_index(t)))
                result.emplace_back(t.begin(), t.end());
        });
        return result;
    }

    std::size_t Structure::tuple_count(int symbol) const
    {
        return relations_.at(static_cast<std::size_t>(symbol)).count();
    }

    Structure Structure::pullback(std::span<const int> map) const
    {
        check_range(map);
        if (! injective(map))
            throw Error("pullback map must be injective");
        Structure result(language_, static_cast<int>(map.size()));
        std::vector<int> image;
        for (std::size_t p = 0; p < relations_.size(); ++p) {
            int k = language_->arity(static_cast<int>(p));
            for_each_injective_tuple(result.size_, k, [&](std::span<const int> t) {
                image.assign(t.size(), 0);
                for (std::size_t i = 0; i < t.size(); ++i)
                    image[i] = map[static_cast<std::size_t>(t[i])];
                if (relations_[p].test(tuple_index(image)))
                    result.relations_[p].set(result.tuple_index(t));
            });
        }
        return result;
    }

    Structure Structure::induced(std::vector<int> subset) const
    {
        std::sort(subset.begin(), subset.end());
        return pullback(subset);
    }

    Structure Structure::relabeled(std::span<const int> perm) const
    {
        if (static_cast<int>(perm.size()) != size_)
            throw Error("relabeling must be a permutation of the universe");
        std::vector<int> inverse(perm.size(), -1);
        for (std::size_t v = 0; v < perm.size(); ++v) {
            if (perm[v] < 0 || perm[v] >= size_ || inverse[static_cast<std::size_t>(perm[v])] != -1)
                throw Error("relabeling must be a permutation of the universe");
            inverse[static_cast<std::size_t>(perm[v])] = static_cast<int>(v);
        }
        return pullback(inverse);
    }

    Structure Structure::with_language(LanguagePtr language) const
    {
        if (language->size() != language_->size())
            throw LanguageMismatch("languages differ in size");
        for (std::size_t i = 0; i < language->size(); ++i)
            if ((*language)[i].arity != (*language_)[i].arity)
                throw LanguageMismatch("languages differ in arity");
        Structure result = *this;
        result.language_ = std::move(language);
        return result;
    }

    bool Structure::operator==(const Structure & other) const
    {
        return size_ == other.size_ && *language_ == *other.language_ && relations_ == other.relations_;
    }

    std::size_t tuple_slots(const Language & language, int n)
    {
        std::size_t total = 0;
        for (auto & s : language.symbols()) {
            std::size_t count = s.arity <= n ? 1 : 0;
            for (int i = 0; i < s.arity && count; ++i)
                count *= static_cast<std::size_t>(n - i);
            total += count;
        }
        return total;
    }

    void for_each_labeled_structure(const LanguagePtr & language, int n, const std::function<void(const Structure &)> & fn)
    {
        std::vector<std::pair<int, std::vector<int>>> slots;
        for (std::size_t p = 0; p < language->size(); ++p)
            for (auto & t : injective_tuples(n, language->arity(static_cast<int>(p))))
                slots.emplace_back(static_cast<int>(p), t);
        if (slots.size() >= 63)
            throw Error("too many labeled structures to enumerate");
        Structure m(language, n);
        std::uint64_t total = std::uint64_t{1} << slots.size();
        for (std::uint64_t mask = 0; mask < total; ++mask) {
            for (std::size_t i = 0; i < slots.size(); ++i)
                m.set(slots[i].first, slots[i].second, (mask >> i) & 1U);
            fn(m);
        }
    }

    std::string to_text(const Structure & m)
    {
        std::ostringstream out;
        out << "n=" << m.size() << '\n';
        for (std::size_t p = 0; p < m.language().size(); ++p) {
            out << m.language()[p].name << ':';
            bool first = true;
            for (auto & t : m.tuples(static_cast<int>(p))) {
                out << (first ? " (" : "; (");
                for (std::size_t i = 0; i < t.size(); ++i)
                    out << (i ? "," : "") << t[i] + 1;
                out << ')';
                first = false;
            }
            out << '\n';
        }
        return out.str();
    }

    namespace
    {
        std::string trim(std::string_view s)
        {
            auto b = s.find_first_not_of(" \t\r");
            if (b == std::string_view::npos)
                return {};
            auto e = s.find_last_not_of(" \t\r");
            return std::string(s.substr(b, e - b + 1));
        }

        Language parse_language_line(const std::string & body, int line)
        {
            std::vector<PredicateSymbol> symbols;
            std::stringstream items(body);
            std::string item;
            while (std::getline(items, item, ',')) {
                item = trim(item);
                auto slash = item.find('/');
                if (slash == std::string::npos)
                    throw ParseError("expected NAME/ARITY", line, 1);
                try {
                    symbols.push_back({trim(item.substr(0, slash)), std::stoi(item.substr(slash + 1))});
                }
                catch (const std::logic_error &) {
                    throw ParseError("bad arity in '" + item + "'", line, 1);
                }
            }
            try {
                return Language(std::move(symbols));
            }
            catch (const Error & e) {
                throw ParseError(e.what(), line, 1);
            }
        }
    }

    Structure parse_structure(std::string_view text, LanguagePtr language)
    {
        std::istringstream in{std::string(text)};
        std::string raw;
        int line_no = 0;
        std::optional<Structure> result;
        while (std::getline(in, raw)) {
            ++line_no;
            std::string line = trim(raw);
            if (line.empty() || line[0] == '#')
                continue;
            if (line.rfind("language:", 0) == 0) {
                if (result)
                    throw ParseError("language must precede n=", line_no, 1);
                language = make_language(parse_language_line(line.substr(9), line_no));
                continue;
            }
            if (line.rfind("n=", 0) == 0 || line.rfind("n =", 0) == 0) {
                if (result)
                    throw ParseError("duplicate size line", line_no, 1);
                if (! language)
                    throw ParseError("structure without a language", line_no, 1);
                int n = 0;
                try {
                    n = std::stoi(line.substr(line.find('=') + 1));
                }
                catch (const std::logic_error &) {
                    throw ParseError("bad size", line_no, 1);
                }
                if (n < 0)
                    throw ParseError("negative size", line_no, 1);
                result.emplace(language, n);
                continue;
            }
            if (! result)
                throw ParseError("expected n=<size>", line_no, 1);
            auto colon = line.find(':');
            if (colon == std::string::npos)
                throw ParseError("expected 'P: (..); (..)'", line_no, 1);
            auto name = trim(line.substr(0, colon));
            auto symbol = language->find(name);
            if (! symbol)
                throw ParseError("unknown symbol '" + name + "'", line_no, 1);
            std::string rest = line.substr(colon + 1);
            std::size_t pos = 0;
            while ((pos = rest.find('(', pos)) != std::string::npos) {
                auto close = rest.find(')', pos);
                if (close == std::string::npos)
                    throw ParseError("unterminated tuple", line_no, static_cast<int>(colon + pos + 2));
                std::vector<int> tuple;
                std::stringstream items(rest.substr(pos + 1, close - pos - 1));
                std::string item;
                while (std::getline(items, item, ',')) {
                    try {
                        tuple.push_back(std::stoi(trim(item)) - 1);
                    }
                    catch (const std::logic_error &) {
                        throw ParseError("bad vertex '" + item + "'", line_no, static_cast<int>(colon + pos + 2));
                    }
                }
                try {
                    result->set(*symbol, tuple);
                }
                catch (const Error & e) {
                    throw ParseError(e.what(), line_no, static_cast<int>(colon + pos + 2));
                }
                pos = close + 1;
            }
        }
        if (! result)
            throw ParseError("missing n=<size>", line_no, 1);
        return *result;
    }
}
