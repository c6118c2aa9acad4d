#include <turan/enumerate.hpp>
#include <turan/error.hpp>
#include <turan/theory.hpp>

#include <algorithm>
#include <numeric>

namespace turan
{
    UniversalAxiom make_axiom(Formula matrix)
    {
        int n = matrix.max_variable();
        return UniversalAxiom{n, std::move(matrix)};
    }

    Theory::Theory() :
        language_(make_language(Language{}))
    {
    }

    Theory::Theory(Language language, std::vector<UniversalAxiom> axioms) :
        Theory(make_language(std::move(language)), std::move(axioms))
    {
    }

    Theory::Theory(LanguagePtr language, std::vector<UniversalAxiom> axioms) :
        language_(std::move(language)),
        axioms_(std::move(axioms))
    {
        for (auto & a : axioms_) {
            a.matrix.check_against(*language_);
            if (a.matrix.max_variable() > a.variable_count)
                throw Error("axiom uses a variable beyond its declared count");
        }
    }

    std::vector<UniversalAxiom> Theory::canonicity_axioms() const
    {
        std::vector<UniversalAxiom> result;
        for (std::size_t p = 0; p < language_->size(); ++p) {
            int k = language_->arity(static_cast<int>(p));
            std::vector<int> vars(static_cast<std::size_t>(k));
            std::iota(vars.begin(), vars.end(), 1);
            std::vector<Formula> equalities;
            for (int i = 1; i <= k; ++i)
                for (int j = i + 1; j <= k; ++j)
                    equalities.push_back(Formula::equal(i, j));
            auto matrix = Formula::implication(Formula::any_of(equalities), ! Formula::atom(static_cast<int>(p), vars));
            result.push_back({k, matrix});
        }
        return result;
    }

    std::vector<UniversalAxiom> Theory::all_axioms() const
    {
        auto result = axioms_;
        for (auto & a : canonicity_axioms())
            result.push_back(a);
        return result;
    }

    int Theory::max_variable_count() const
    {
        int k = language_->max_arity();
        for (auto & a : axioms_)
            k = std::max(k, a.variable_count);
        return k;
    }

    Theory Theory::with_axiom(UniversalAxiom axiom) const
    {
        auto axioms = axioms_;
        axioms.push_back(std::move(axiom));
        return Theory(language_, std::move(axioms));
    }

    Theory Theory::with_axioms(const std::vector<UniversalAxiom> & more) const
    {
        auto axioms = axioms_;
        axioms.insert(axioms.end(), more.begin(), more.end());
        return Theory(language_, std::move(axioms));
    }

    Theory Theory::disjoint_union(const Theory & other) const
    {
        auto language = make_language(language_->disjoint_union(other.language()));
        auto axioms = axioms_;
        std::vector<int> shift;
        for (std::size_t p = 0; p < other.language().size(); ++p)
            shift.push_back(static_cast<int>(language_->size() + p));
        for (auto & a : other.axioms())
            axioms.push_back({a.variable_count, remap_symbols(a.matrix, shift)});
        return Theory(language, std::move(axioms));
    }

    Theory Theory::extended_to(LanguagePtr language) const
    {
        if (language->size() < language_->size())
            throw LanguageMismatch("extension must contain the original language");
        for (std::size_t p = 0; p < language_->size(); ++p)
            if ((*language)[p] != (*language_)[p])
                throw LanguageMismatch("extension must start with the original language");
        return Theory(std::move(language), axioms_);
    }

    bool satisfies(const Structure & m, const UniversalAxiom & axiom)
    {
        int k = axiom.variable_count;
        int n = m.size();
        if (k == 0)
            return eval(axiom.matrix, m, {});
        if (n == 0)
            return true;
        std::vector<int> assignment(static_cast<std::size_t>(k), 0);
        while (true) {
            if (! eval(axiom.matrix, m, assignment))
                return false;
            int i = 0;
            while (i < k && ++assignment[static_cast<std::size_t>(i)] == n)
                assignment[static_cast<std::size_t>(i++)] = 0;
            if (i == k)
                return true;
        }
    }

    bool is_model(const Structure & m, const Theory & t)
    {
        if (m.language() != t.language())
            throw LanguageMismatch("structure over " + m.language().to_string() + " checked against a theory over " + t.language().to_string());
        for (auto & a : t.all_axioms())
            if (! satisfies(m, a))
                return false;
        return true;
    }

    namespace
    {
        Formula E(int a, int b) { return Formula::atom(0, {a, b}); }
    }

    Theory graph_theory() { return hypergraph_theory(2); }

    Theory tournament_theory()
    {
        Language l({{"E", 2}});
        return Theory(l, {make_axiom(! E(1, 1)),
                             make_axiom(Formula::implication(! Formula::equal(1, 2), Formula::biconditional(E(1, 2), ! E(2, 1))))});
    }

    Theory linorder_theory()
    {
        Language l({{"L", 2}});
        return Theory(l, {make_axiom(! E(1, 1)),
                             make_axiom(Formula::implication(! Formula::equal(1, 2), Formula::biconditional(E(1, 2), ! E(2, 1)))),
                             make_axiom(Formula::implication(E(1, 2) && E(2, 3), E(1, 3)))});
    }

    Theory hypergraph_theory(int k)
    {
        if (k < 1)
            throw Error("hypergraph arity must be positive");
        Language l({{"E", k}});
        std::vector<int> identity(static_cast<std::size_t>(k));
        std::iota(identity.begin(), identity.end(), 1);
        std::vector<UniversalAxiom> axioms;
        auto sigma = identity;
        do {
            if (sigma == identity)
                continue;
            axioms.push_back({k, Formula::implication(Formula::atom(0, identity), Formula::atom(0, sigma))});
        } while (std::next_permutation(sigma.begin(), sigma.end()));
        return Theory(l, std::move(axioms));
    }

    Theory builtin_theory(std::string_view name)
    {
        if (name == "graph")
            return graph_theory();
        if (name == "tournament")
            return tournament_theory();
        if (name == "linorder")
            return linorder_theory();
        if (name.starts_with("hypergraph")) {
            auto rest = std::string(name.substr(10));
            if (rest.size() >= 2 && rest.front() == '<' && rest.back() == '>')
                rest = rest.substr(1, rest.size() - 2);
            if (! rest.empty() && std::all_of(rest.begin(), rest.end(), [](char c) { return c >= '0' && c <= '9'; }))
                return hypergraph_theory(std::stoi(rest));
        }
        throw Error("unknown builtin theory '" + std::string(name) + "'");
    }

    bool may_hold_on_repeats(const Formula & f, int k, const Language & language)
    {
        if (k < 2)
            return false;
        auto lang = make_language(language);
        // restricted growth strings with fewer than k blocks
        std::vector<int> rgs(static_cast<std::size_t>(k), 0);
        bool found = false;
        std::function<void(int, int)> rec = [&](int i, int blocks) {
            if (found)
                return;
            if (i == k) {
                if (blocks == k)
                    return;
                if (tuple_slots(*lang, blocks) > 20) {
                    found = true;
                    return;
                }
                for_each_labeled_structure(lang, blocks, [&](const Structure & m) {
                    if (! found && eval(f, m, rgs))
                        found = true;
                });
                return;
            }
            for (int b = 0; b <= blocks && b < k; ++b) {
                rgs[static_cast<std::size_t>(i)] = b;
                rec(i + 1, std::max(blocks, b + 1));
            }
        };
        rec(0, 0);
        return found;
    }

    Interpretation::Interpretation(LanguagePtr source, LanguagePtr target, std::vector<Formula> map) :
        source_(std::move(source)),
        target_(std::move(target)),
        written_(std::move(map))
    {
        if (written_.size() != source_->size())
            throw LanguageMismatch("interpretation must map every source symbol");
        for (std::size_t p = 0; p < written_.size(); ++p) {
            int k = source_->arity(static_cast<int>(p));
            written_[p].check_against(*target_);
            if (written_[p].max_variable() > k)
                throw Error("interpretation of '" + (*source_)[p].name + "' uses a variable beyond x" + std::to_string(k));
            std::vector<int> vars(static_cast<std::size_t>(k));
            std::iota(vars.begin(), vars.end(), 1);
            if (may_hold_on_repeats(written_[p], k, *target_))
                map_.push_back(Formula::pairwise_distinct(vars) && written_[p]);
            else
                map_.push_back(written_[p]);
        }
    }

    Interpretation Interpretation::identity(LanguagePtr source, LanguagePtr target)
    {
        std::vector<Formula> map;
        for (auto & s : source->symbols()) {
            int q = target->index_of(s.name);
            if (target->arity(q) != s.arity)
                throw LanguageMismatch("arity of '" + s.name + "' differs between languages");
            std::vector<int> vars(static_cast<std::size_t>(s.arity));
            std::iota(vars.begin(), vars.end(), 1);
            map.push_back(Formula::atom(q, vars));
        }
        return Interpretation(std::move(source), std::move(target), std::move(map));
    }

    Formula translate(const Interpretation & interp, const Formula & f)
    {
        switch (f.connective()) {
        case Connective::True:
        case Connective::False:
        case Connective::Equal:
            return f;
        case Connective::Atom: {
            if (f.symbol() < 0 || f.symbol() >= static_cast<int>(interp.source().size()))
                throw LanguageMismatch("symbol outside the source language");
            if (static_cast<int>(f.variables().size()) != interp.source().arity(f.symbol()))
                throw LanguageMismatch("arity mismatch in translated atom");
            return interp[f.symbol()].rename(f.variables());
        }
        case Connective::Not:
            return Formula::negation(translate(interp, f.operand()));
        case Connective::And:
            return Formula::conjunction(translate(interp, f.lhs()), translate(interp, f.rhs()));
        case Connective::Or:
            return Formula::disjunction(translate(interp, f.lhs()), translate(interp, f.rhs()));
        case Connective::Implies:
            return Formula::implication(translate(interp, f.lhs()), translate(interp, f.rhs()));
        case Connective::Iff:
            return Formula::biconditional(translate(interp, f.lhs()), translate(interp, f.rhs()));
        }
        throw Error("unreachable connective");
    }

    InterpretationReport validate_interpretation(const Interpretation & interp, const Theory & source, const Theory & target,
        int size_bound)
    {
        if (source.language() != interp.source() || target.language() != interp.target())
            throw LanguageMismatch("interpretation does not match the theories");
        InterpretationReport report;
        report.size_bound = size_bound;
        auto axioms = source.all_axioms();
        std::vector<UniversalAxiom> translated;
        for (auto & a : axioms)
            translated.push_back({a.variable_count, translate(interp, a.matrix)});
        for (int n = 0; n <= size_bound; ++n) {
            for (auto & m : enumerate_models(target, n)) {
                for (std::size_t i = 0; i < translated.size(); ++i) {
                    if (! satisfies(m, translated[i])) {
                        report.validated = false;
                        report.counterexample = m;
                        report.failing_axiom = static_cast<int>(i);
                        report.message = "counterexample of size " + std::to_string(n) + " violates translated axiom " +
                            to_string(axioms[i].matrix, source.language());
                        return report;
                    }
                }
            }
        }
        report.message = "validated up to " + std::to_string(size_bound);
        return report;
    }
}
