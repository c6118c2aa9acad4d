#include <turan/dsl.hpp>
#include <turan/error.hpp>

#include <cctype>
#include <fstream>
#include <numeric>
#include <sstream>

namespace turan
{
    namespace
    {
        enum class Tok
        {
            Ident,
            Int,
            LParen,
            RParen,
            Comma,
            Not,
            And,
            Or,
            Implies,
            Iff,
            Eq,
            Neq,
            Slash,
            Assign,
            End
        };

        struct Token
        {
            Tok kind;
            std::string text;
            int column;
        };

        class Lexer
        {
        public:
            Lexer(std::string_view text, int line, int column_offset) :
                text_(text),
                line_(line),
                offset_(column_offset)
            {
            }

            std::vector<Token> run()
            {
                std::vector<Token> out;
                std::size_t i = 0;
                while (i < text_.size()) {
                    char c = text_[i];
                    int col = static_cast<int>(i) + 1 + offset_;
                    if (std::isspace(static_cast<unsigned char>(c))) {
                        ++i;
                        continue;
                    }
                    if (c == '#')
                        break;
                    if (static_cast<unsigned char>(c) == 0xE2 && i + 2 < text_.size() && static_cast<unsigned char>(text_[i + 1]) == 0x88 &&
                        (static_cast<unsigned char>(text_[i + 2]) == 0x80 || static_cast<unsigned char>(text_[i + 2]) == 0x83))
                        throw ParseError("quantifier encountered; axioms are implicitly universal", line_, col);
                    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                        std::size_t j = i;
                        while (j < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[j])) || text_[j] == '_'))
                            ++j;
                        std::string word(text_.substr(i, j - i));
                        if (word == "forall" || word == "exists")
                            throw ParseError("quantifier encountered; axioms are implicitly universal", line_, col);
                        out.push_back({Tok::Ident, word, col});
                        i = j;
                        continue;
                    }
                    if (std::isdigit(static_cast<unsigned char>(c))) {
                        std::size_t j = i;
                        while (j < text_.size() && std::isdigit(static_cast<unsigned char>(text_[j])))
                            ++j;
                        out.push_back({Tok::Int, std::string(text_.substr(i, j - i)), col});
                        i = j;
                        continue;
                    }
                    auto rest = text_.substr(i);
                    auto take = [&](Tok kind, std::size_t len) {
                        out.push_back({kind, std::string(rest.substr(0, len)), col});
                        i += len;
                    };
                    if (rest.starts_with("<->"))
                        take(Tok::Iff, 3);
                    else if (rest.starts_with("->"))
                        take(Tok::Implies, 2);
                    else if (rest.starts_with("!="))
                        take(Tok::Neq, 2);
                    else if (rest.starts_with(":="))
                        take(Tok::Assign, 2);
                    else if (c == '!')
                        take(Tok::Not, 1);
                    else if (c == '&')
                        take(Tok::And, 1);
                    else if (c == '|')
                        take(Tok::Or, 1);
                    else if (c == '=')
                        take(Tok::Eq, 1);
                    else if (c == '(')
                        take(Tok::LParen, 1);
                    else if (c == ')')
                        take(Tok::RParen, 1);
                    else if (c == ',')
                        take(Tok::Comma, 1);
                    else if (c == '/')
                        take(Tok::Slash, 1);
                    else
                        throw ParseError(std::string("unexpected character '") + c + "'", line_, col);
                }
                out.push_back({Tok::End, "", static_cast<int>(text_.size()) + 1 + offset_});
                return out;
            }

        private:
            std::string_view text_;
            int line_;
            int offset_;
        };

        bool is_variable(const std::string & word)
        {
            return word.size() >= 2 && word[0] == 'x' && std::all_of(word.begin() + 1, word.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }) &&
                word[1] != '0';
        }

        class Parser
        {
        public:
            Parser(std::vector<Token> tokens, const Language & language, int line) :
                tokens_(std::move(tokens)),
                language_(language),
                line_(line)
            {
            }

            Formula formula() { return bicond(); }

            void expect_end()
            {
                if (peek().kind != Tok::End)
                    fail("unexpected '" + peek().text + "'");
            }

            const Token & peek() const { return tokens_[pos_]; }
            Token next() { return tokens_[pos_++]; }
            [[noreturn]] void fail(const std::string & message) const { throw ParseError(message, line_, peek().column); }

            Token expect(Tok kind, const char * what)
            {
                if (peek().kind != kind)
                    fail(std::string("expected ") + what);
                return next();
            }

            int variable()
            {
                if (peek().kind != Tok::Ident || ! is_variable(peek().text))
                    fail("expected a variable x<n>");
                return std::stoi(next().text.substr(1));
            }

        private:
            std::vector<Token> tokens_;
            const Language & language_;
            int line_;
            std::size_t pos_ = 0;

            Formula bicond()
            {
                Formula f = impl();
                while (peek().kind == Tok::Iff) {
                    next();
                    f = Formula::biconditional(f, impl());
                }
                return f;
            }

            Formula impl()
            {
                Formula f = disj();
                if (peek().kind == Tok::Implies) {
                    next();
                    return Formula::implication(f, impl());
                }
                return f;
            }

            Formula disj()
            {
                Formula f = conj();
                while (peek().kind == Tok::Or) {
                    next();
                    f = Formula::disjunction(f, conj());
                }
                return f;
            }

            Formula conj()
            {
                Formula f = unary();
                while (peek().kind == Tok::And) {
                    next();
                    f = Formula::conjunction(f, unary());
                }
                return f;
            }

            Formula unary()
            {
                if (peek().kind == Tok::Not) {
                    next();
                    return Formula::negation(unary());
                }
                if (peek().kind == Tok::LParen) {
                    next();
                    Formula f = formula();
                    expect(Tok::RParen, "')'");
                    return f;
                }
                return atom();
            }

            Formula atom()
            {
                if (peek().kind != Tok::Ident)
                    fail(peek().kind == Tok::End ? "unexpected end of formula" : "unexpected '" + peek().text + "'");
                const Token & t = peek();
                if (t.text == "true" || t.text == "false") {
                    next();
                    return Formula::truth(t.text == "true");
                }
                if (tokens_[pos_ + 1].kind == Tok::LParen) {
                    Token name = next();
                    auto symbol = language_.find(name.text);
                    if (! symbol)
                        throw ParseError("unknown symbol '" + name.text + "'", line_, name.column);
                    next();
                    std::vector<int> vars{variable()};
                    while (peek().kind == Tok::Comma) {
                        next();
                        vars.push_back(variable());
                    }
                    expect(Tok::RParen, "')'");
                    if (static_cast<int>(vars.size()) != language_.arity(*symbol))
                        throw ParseError("arity mismatch: '" + name.text + "' takes " + std::to_string(language_.arity(*symbol)) + " arguments, got " +
                                std::to_string(vars.size()),
                            line_, name.column);
                    return Formula::atom(*symbol, std::move(vars));
                }
                if (is_variable(t.text)) {
                    int a = variable();
                    if (peek().kind == Tok::Eq) {
                        next();
                        return Formula::equal(a, variable());
                    }
                    if (peek().kind == Tok::Neq) {
                        next();
                        return Formula::negation(Formula::equal(a, variable()));
                    }
                    fail("expected '=' or '!=' after a variable");
                }
                throw ParseError("unknown symbol '" + t.text + "'", line_, t.column);
            }
        };

        std::string trim(std::string_view s)
        {
            auto b = s.find_first_not_of(" \t\r");
            if (b == std::string_view::npos)
                return {};
            auto e = s.find_last_not_of(" \t\r");
            return std::string(s.substr(b, e - b + 1));
        }

        struct Line
        {
            int number;
            std::string keyword;
            std::string body;
            int body_column;
        };

        std::vector<Line> split_lines(std::string_view text)
        {
            std::vector<Line> lines;
            std::istringstream in{std::string(text)};
            std::string raw;
            int number = 0;
            while (std::getline(in, raw)) {
                ++number;
                auto first = raw.find_first_not_of(" \t\r");
                if (first == std::string::npos || raw[first] == '#')
                    continue;
                auto colon = raw.find(':', first);
                auto word_end = raw.find_first_of(" \t:(", first);
                std::string head = raw.substr(first, (word_end == std::string::npos ? raw.size() : word_end) - first);
                if (head == "interpret") {
                    lines.push_back({number, head, raw.substr(word_end), static_cast<int>(word_end) + 1});
                    continue;
                }
                if (colon == std::string::npos)
                    throw ParseError("expected 'language:', 'builtin:' or 'axiom:'", number, static_cast<int>(first) + 1);
                lines.push_back({number, trim(raw.substr(first, colon - first)), raw.substr(colon + 1), static_cast<int>(colon) + 2});
            }
            return lines;
        }

        std::vector<PredicateSymbol> parse_symbols(const Line & line)
        {
            auto tokens = Lexer(line.body, line.number, line.body_column - 1).run();
            std::vector<PredicateSymbol> symbols;
            std::size_t i = 0;
            while (true) {
                if (tokens[i].kind != Tok::Ident)
                    throw ParseError("expected a symbol name", line.number, tokens[i].column);
                std::string name = tokens[i++].text;
                if (is_variable(name) || name == "true" || name == "false")
                    throw ParseError("reserved word used as a symbol name", line.number, tokens[i - 1].column);
                if (tokens[i].kind != Tok::Slash)
                    throw ParseError("expected '/'", line.number, tokens[i].column);
                ++i;
                if (tokens[i].kind != Tok::Int || tokens[i].text == "0" || tokens[i].text.size() > 3)
                    throw ParseError("expected a positive arity", line.number, tokens[i].column);
                symbols.push_back({name, std::stoi(tokens[i++].text)});
                if (tokens[i].kind == Tok::End)
                    return symbols;
                if (tokens[i].kind != Tok::Comma)
                    throw ParseError("expected ',' between symbols", line.number, tokens[i].column);
                ++i;
            }
        }
    }

    Formula parse_formula(std::string_view text, const Language & language, int line)
    {
        Parser parser(Lexer(text, line, 0).run(), language, line);
        Formula f = parser.formula();
        parser.expect_end();
        return f;
    }

    Theory parse_theory(std::string_view text)
    {
        auto lines = split_lines(text);
        Theory theory;
        std::vector<PredicateSymbol> declared;
        for (auto & line : lines) {
            if (line.keyword == "builtin") {
                try {
                    theory = theory.disjoint_union(builtin_theory(trim(line.body)));
                }
                catch (const ParseError &) {
                    throw;
                }
                catch (const Error & e) {
                    throw ParseError(e.what(), line.number, line.body_column);
                }
            }
            else if (line.keyword == "language") {
                for (auto & s : parse_symbols(line))
                    declared.push_back(s);
            }
            else if (line.keyword != "axiom") {
                throw ParseError("unknown directive '" + line.keyword + "'", line.number, 1);
            }
        }
        if (! declared.empty()) {
            try {
                theory = theory.disjoint_union(Theory(Language(declared)));
            }
            catch (const ParseError &) {
                throw;
            }
            catch (const Error & e) {
                throw ParseError(std::string("duplicate or invalid symbol: ") + e.what(), lines.front().number, 1);
            }
        }
        std::vector<UniversalAxiom> axioms;
        for (auto & line : lines) {
            if (line.keyword != "axiom")
                continue;
            Parser parser(Lexer(line.body, line.number, line.body_column - 1).run(), theory.language(), line.number);
            Formula f = parser.formula();
            parser.expect_end();
            axioms.push_back(make_axiom(f));
        }
        return theory.with_axioms(axioms);
    }

    std::string print_theory(const Theory & t)
    {
        std::string out;
        if (! t.language().empty())
            out += "language: " + t.language().to_string() + "\n";
        for (auto & a : t.axioms())
            out += "axiom: " + to_string(a.matrix, t.language()) + "\n";
        return out;
    }

    std::string read_file(const std::string & path)
    {
        std::ifstream in(path, std::ios::binary);
        if (! in)
            throw InputError("cannot read '" + path + "'");
        std::ostringstream buffer;
        buffer << in.rdbuf();
        return buffer.str();
    }

    Theory load_theory(const std::string & source)
    {
        if (source.starts_with("builtin:"))
            return builtin_theory(trim(source.substr(8)));
        return parse_theory(read_file(source));
    }

    Interpretation parse_interpretation(std::string_view text, LanguagePtr target, LanguagePtr source)
    {
        struct Head
        {
            std::string name;
            int arity;
            int line;
            std::string body;
            int column;
        };
        std::vector<Head> heads;
        for (auto & line : split_lines(text)) {
            if (line.keyword != "interpret")
                throw ParseError("expected 'interpret P(x1,...,xk) := formula'", line.number, 1);
            auto tokens = Lexer(line.body, line.number, line.body_column - 1).run();
            std::size_t i = 0;
            if (tokens[i].kind != Tok::Ident)
                throw ParseError("expected a symbol name", line.number, tokens[i].column);
            Head h{tokens[i++].text, 0, line.number, {}, 0};
            if (tokens[i++].kind != Tok::LParen)
                throw ParseError("expected '('", line.number, tokens[i - 1].column);
            while (true) {
                if (tokens[i].kind != Tok::Ident || tokens[i].text != "x" + std::to_string(h.arity + 1))
                    throw ParseError("head variables must be x1, x2, ... in order", line.number, tokens[i].column);
                ++h.arity;
                ++i;
                if (tokens[i].kind == Tok::RParen)
                    break;
                if (tokens[i].kind != Tok::Comma)
                    throw ParseError("expected ',' or ')'", line.number, tokens[i].column);
                ++i;
            }
            ++i;
            if (tokens[i].kind != Tok::Assign)
                throw ParseError("expected ':='", line.number, tokens[i].column);
            auto assign_at = line.body.find(":=");
            h.body = line.body.substr(assign_at + 2);
            h.column = line.body_column + static_cast<int>(assign_at) + 2;
            heads.push_back(std::move(h));
        }
        if (! source) {
            std::vector<PredicateSymbol> symbols;
            for (auto & h : heads)
                symbols.push_back({h.name, h.arity});
            try {
                source = make_language(Language(symbols));
            }
            catch (const Error & e) {
                throw ParseError(e.what(), heads.empty() ? 1 : heads.front().line, 1);
            }
        }
        std::vector<std::optional<Formula>> map(source->size());
        for (auto & h : heads) {
            auto symbol = source->find(h.name);
            if (! symbol)
                throw ParseError("'" + h.name + "' is not a source symbol", h.line, 1);
            if (source->arity(*symbol) != h.arity)
                throw ParseError("arity mismatch for '" + h.name + "'", h.line, 1);
            if (map[static_cast<std::size_t>(*symbol)])
                throw ParseError("'" + h.name + "' interpreted twice", h.line, 1);
            Parser parser(Lexer(h.body, h.line, h.column - 1).run(), *target, h.line);
            Formula f = parser.formula();
            parser.expect_end();
            if (f.max_variable() > h.arity)
                throw ParseError("formula uses a variable beyond x" + std::to_string(h.arity), h.line, h.column);
            map[static_cast<std::size_t>(*symbol)] = f;
        }
        std::vector<Formula> formulas;
        for (std::size_t p = 0; p < map.size(); ++p) {
            if (! map[p])
                throw ParseError("no interpretation given for '" + (*source)[p].name + "'", 1, 1);
            formulas.push_back(*map[p]);
        }
        return Interpretation(std::move(source), std::move(target), std::move(formulas));
    }

    std::string print_interpretation(const Interpretation & interp)
    {
        std::string out;
        for (std::size_t p = 0; p < interp.source().size(); ++p) {
            out += "interpret " + interp.source()[p].name + "(";
            for (int i = 1; i <= interp.source().arity(static_cast<int>(p)); ++i)
                out += (i > 1 ? "," : "") + std::string("x") + std::to_string(i);
            out += ") := " + to_string(interp.written(static_cast<int>(p)), interp.target()) + "\n";
        }
        return out;
    }
}
