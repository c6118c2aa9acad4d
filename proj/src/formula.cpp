#include <turan/error.hpp>
#include <turan/formula.hpp>
#include <turan/structure.hpp>

#include <algorithm>
#include <array>
#include <sstream>

namespace turan
{
    struct Formula::Node
    {
        Connective connective = Connective::True;
        int symbol = -1;
        std::vector<int> variables;
        Formula lhs, rhs;
    };

    namespace
    {
        const std::vector<int> no_variables;
    }

    Formula::Formula() :
        node_(nullptr)
    {
    }

    Formula::Formula(std::shared_ptr<const Node> node) :
        node_(std::move(node))
    {
    }

    Formula Formula::truth(bool value)
    {
        auto n = std::make_shared<Node>();
        n->connective = value ? Connective::True : Connective::False;
        return Formula(n);
    }

    Formula Formula::atom(int symbol, std::vector<int> variables)
    {
        for (int v : variables)
            if (v < 1)
                throw Error("variable indices are 1-based");
        auto n = std::make_shared<Node>();
        n->connective = Connective::Atom;
        n->symbol = symbol;
        n->variables = std::move(variables);
        return Formula(n);
    }

    Formula Formula::equal(int lhs, int rhs)
    {
        if (lhs < 1 || rhs < 1)
            throw Error("variable indices are 1-based");
        auto n = std::make_shared<Node>();
        n->connective = Connective::Equal;
        n->variables = {lhs, rhs};
        return Formula(n);
    }

    Formula Formula::negation(Formula f)
    {
        auto n = std::make_shared<Node>();
        n->connective = Connective::Not;
        n->lhs = std::move(f);
        return Formula(n);
    }

    Formula Formula::conjunction(Formula lhs, Formula rhs)
    {
        auto n = std::make_shared<Node>();
        n->connective = Connective::And;
        n->lhs = std::move(lhs);
        n->rhs = std::move(rhs);
        return Formula(n);
    }

    Formula Formula::disjunction(Formula lhs, Formula rhs)
    {
        auto n = std::make_shared<Node>();
        n->connective = Connective::Or;
        n->lhs = std::move(lhs);
        n->rhs = std::move(rhs);
        return Formula(n);
    }

    Formula Formula::implication(Formula lhs, Formula rhs)
    {
        auto n = std::make_shared<Node>();
        n->connective = Connective::Implies;
        n->lhs = std::move(lhs);
        n->rhs = std::move(rhs);
        return Formula(n);
    }

    Formula Formula::biconditional(Formula lhs, Formula rhs)
    {
        auto n = std::make_shared<Node>();
        n->connective = Connective::Iff;
        n->lhs = std::move(lhs);
        n->rhs = std::move(rhs);
        return Formula(n);
    }

    Formula Formula::all_of(const std::vector<Formula> & fs)
    {
        if (fs.empty())
            return truth(true);
        Formula result = fs.front();
        for (std::size_t i = 1; i < fs.size(); ++i)
            result = conjunction(result, fs[i]);
        return result;
    }

    Formula Formula::any_of(const std::vector<Formula> & fs)
    {
        if (fs.empty())
            return truth(false);
        Formula result = fs.front();
        for (std::size_t i = 1; i < fs.size(); ++i)
            result = disjunction(result, fs[i]);
        return result;
    }

    Formula Formula::pairwise_distinct(const std::vector<int> & variables)
    {
        std::vector<Formula> parts;
        for (std::size_t i = 0; i < variables.size(); ++i)
            for (std::size_t j = i + 1; j < variables.size(); ++j)
                parts.push_back(negation(equal(variables[i], variables[j])));
        return all_of(parts);
    }

    Connective Formula::connective() const noexcept
    {
        return node_ ? node_->connective : Connective::True;
    }

    int Formula::symbol() const noexcept
    {
        return node_ ? node_->symbol : -1;
    }

    const std::vector<int> & Formula::variables() const noexcept
    {
        return node_ ? node_->variables : no_variables;
    }

    const Formula & Formula::lhs() const
    {
        if (! node_)
            throw Error("formula has no operands");
        return node_->lhs;
    }

    const Formula & Formula::rhs() const
    {
        if (! node_)
            throw Error("formula has no operands");
        return node_->rhs;
    }

    bool Formula::is_binary() const noexcept
    {
        switch (connective()) {
            case Connective::And:
            case Connective::Or:
            case Connective::Implies:
            case Connective::Iff: return true;
            default: return false;
        }
    }

    int Formula::max_variable() const
    {
        switch (connective()) {
            case Connective::True:
            case Connective::False: return 0;
            case Connective::Atom:
            case Connective::Equal: {
                auto & vs = variables();
                return vs.empty() ? 0 : *std::max_element(vs.begin(), vs.end());
            }
            case Connective::Not: return operand().max_variable();
            default: return std::max(lhs().max_variable(), rhs().max_variable());
        }
    }

    void Formula::check_against(const Language & language) const
    {
        switch (connective()) {
            case Connective::Atom: {
                int s = symbol();
                if (s < 0 || s >= static_cast<int>(language.size()))
                    throw LanguageMismatch("atom refers to a symbol outside the language");
                if (language.arity(s) != static_cast<int>(variables().size()))
                    throw LanguageMismatch("arity mismatch for '" + language[static_cast<std::size_t>(s)].name + "'");
                return;
            }
            case Connective::Not: operand().check_against(language); return;
            default:
                if (is_binary()) {
                    lhs().check_against(language);
                    rhs().check_against(language);
                }
                return;
        }
    }

    bool Formula::operator==(const Formula & other) const
    {
        if (node_ == other.node_)
            return true;
        if (connective() != other.connective())
            return false;
        switch (connective()) {
            case Connective::True:
            case Connective::False: return true;
            case Connective::Atom: return symbol() == other.symbol() && variables() == other.variables();
            case Connective::Equal: return variables() == other.variables();
            case Connective::Not: return operand() == other.operand();
            default: return lhs() == other.lhs() && rhs() == other.rhs();
        }
    }

    Formula Formula::rename(std::span<const int> map) const
    {
        auto sub = [&](int v) {
            if (v < 1 || v > static_cast<int>(map.size()))
                throw Error("rename map does not cover x" + std::to_string(v));
            return map[static_cast<std::size_t>(v - 1)];
        };
        switch (connective()) {
            case Connective::True:
            case Connective::False: return *this;
            case Connective::Atom: {
                std::vector<int> vs;
                for (int v : variables())
                    vs.push_back(sub(v));
                return atom(symbol(), std::move(vs));
            }
            case Connective::Equal: return equal(sub(variables()[0]), sub(variables()[1]));
            case Connective::Not: return negation(operand().rename(map));
            case Connective::And: return conjunction(lhs().rename(map), rhs().rename(map));
            case Connective::Or: return disjunction(lhs().rename(map), rhs().rename(map));
            case Connective::Implies: return implication(lhs().rename(map), rhs().rename(map));
            case Connective::Iff: return biconditional(lhs().rename(map), rhs().rename(map));
        }
        return *this;
    }

    Formula remap_symbols(const Formula & f, std::span<const int> map)
    {
        switch (f.connective()) {
            case Connective::True:
            case Connective::False:
            case Connective::Equal: return f;
            case Connective::Atom:
                if (f.symbol() < 0 || f.symbol() >= static_cast<int>(map.size()))
                    throw LanguageMismatch("symbol index outside the remap table");
                return Formula::atom(map[static_cast<std::size_t>(f.symbol())], f.variables());
            case Connective::Not: return Formula::negation(remap_symbols(f.operand(), map));
            case Connective::And: return Formula::conjunction(remap_symbols(f.lhs(), map), remap_symbols(f.rhs(), map));
            case Connective::Or: return Formula::disjunction(remap_symbols(f.lhs(), map), remap_symbols(f.rhs(), map));
            case Connective::Implies: return Formula::implication(remap_symbols(f.lhs(), map), remap_symbols(f.rhs(), map));
            case Connective::Iff: return Formula::biconditional(remap_symbols(f.lhs(), map), remap_symbols(f.rhs(), map));
        }
        return f;
    }

    Formula operator!(Formula f) { return Formula::negation(std::move(f)); }
    Formula operator&&(Formula a, Formula b) { return Formula::conjunction(std::move(a), std::move(b)); }
    Formula operator||(Formula a, Formula b) { return Formula::disjunction(std::move(a), std::move(b)); }

    namespace
    {
        int bound(std::span<const int> assignment, int v)
        {
            if (v < 1 || v > static_cast<int>(assignment.size()))
                throw Error("unbound variable x" + std::to_string(v));
            return assignment[static_cast<std::size_t>(v - 1)];
        }
    }

    bool eval(const Formula & f, const Structure & m, std::span<const int> assignment)
    {
        switch (f.connective()) {
            case Connective::True: return true;
            case Connective::False: return false;
            case Connective::Atom: {
                auto & vs = f.variables();
                std::array<int, 16> small{};
                std::vector<int> large;
                std::span<int> tuple;
                if (vs.size() <= small.size())
                    tuple = std::span<int>(small.data(), vs.size());
                else {
                    large.resize(vs.size());
                    tuple = large;
                }
                for (std::size_t i = 0; i < vs.size(); ++i)
                    tuple[i] = bound(assignment, vs[i]);
                return m.holds(f.symbol(), tuple);
            }
            case Connective::Equal:
                return bound(assignment, f.variables()[0]) == bound(assignment, f.variables()[1]);
            case Connective::Not: return ! eval(f.operand(), m, assignment);
            case Connective::And: return eval(f.lhs(), m, assignment) && eval(f.rhs(), m, assignment);
            case Connective::Or: return eval(f.lhs(), m, assignment) || eval(f.rhs(), m, assignment);
            case Connective::Implies: return ! eval(f.lhs(), m, assignment) || eval(f.rhs(), m, assignment);
            case Connective::Iff: return eval(f.lhs(), m, assignment) == eval(f.rhs(), m, assignment);
        }
        return false;
    }

    namespace
    {
        int precedence(Connective c)
        {
            switch (c) {
                case Connective::Iff: return 1;
                case Connective::Implies: return 2;
                case Connective::Or: return 3;
                case Connective::And: return 4;
                case Connective::Not: return 5;
                default: return 6;
            }
        }

        void print(std::ostream & out, const Formula & f, const Language & language);

        void print_child(std::ostream & out, const Formula & child, bool parens, const Language & language)
        {
            if (parens)
                out << '(';
            print(out, child, language);
            if (parens)
                out << ')';
        }

        void print(std::ostream & out, const Formula & f, const Language & language)
        {
            switch (f.connective()) {
                case Connective::True: out << "true"; return;
                case Connective::False: out << "false"; return;
                case Connective::Atom: {
                    auto s = static_cast<std::size_t>(f.symbol());
                    out << (s < language.size() ? language[s].name : "?" + std::to_string(s)) << '(';
                    for (std::size_t i = 0; i < f.variables().size(); ++i)
                        out << (i ? "," : "") << 'x' << f.variables()[i];
                    out << ')';
                    return;
                }
                case Connective::Equal: out << 'x' << f.variables()[0] << " = x" << f.variables()[1]; return;
                case Connective::Not:
                    if (f.operand().connective() == Connective::Equal) {
                        auto & vs = f.operand().variables();
                        out << 'x' << vs[0] << " != x" << vs[1];
                        return;
                    }
                    out << '!';
                    print_child(out, f.operand(), precedence(f.operand().connective()) < precedence(Connective::Not), language);
                    return;
                default: break;
            }

            const int p = precedence(f.connective());
            const bool right_assoc = f.connective() == Connective::Implies;
            const char * op = f.connective() == Connective::And ? " & "
                : f.connective() == Connective::Or              ? " | "
                : f.connective() == Connective::Implies         ? " -> "
                                                                : " <-> ";
            int pl = precedence(f.lhs().connective()), pr = precedence(f.rhs().connective());
            print_child(out, f.lhs(), pl < p || (pl == p && right_assoc), language);
            out << op;
            print_child(out, f.rhs(), pr < p || (pr == p && ! right_assoc), language);
        }
    }

    std::string to_string(const Formula & f, const Language & language)
    {
        std::ostringstream out;
        print(out, f, language);
        return out.str();
    }
}
