#include "qrc/parser.hpp"

#include <cctype>
#include <vector>

#include "qrc/errors.hpp"

namespace qrc {
namespace {

enum class Tk {
    Int, Ident, LParen, RParen, Dot, Amp, Bar, Bang, Arrow, IffTok,
    Plus, Minus, Star, Caret,
    RelEq, RelNeq, RelLe, RelLt, RelSim, RelLeV, RelLtV, RelSimV,
    End,
};

struct Token {
    Tk kind;
    std::string text;
    Integer ival;
    int line, col;
};

// Fixed tokens, longest first so `<->`/`<=v` win over their prefixes.
struct OpEntry { const char* s; Tk k; };
constexpr OpEntry kOps[] = {
    {"<->", Tk::IffTok}, {"<=v", Tk::RelLeV},
    {"->", Tk::Arrow},   {"<=", Tk::RelLe}, {"<v", Tk::RelLtV}, {"!=", Tk::RelNeq},
    {"~v", Tk::RelSimV},
    {"<", Tk::RelLt},    {"~", Tk::RelSim}, {"=", Tk::RelEq},
    {"&", Tk::Amp},      {"|", Tk::Bar},    {"!", Tk::Bang},
    {"(", Tk::LParen},   {")", Tk::RParen}, {".", Tk::Dot},
    {"+", Tk::Plus},     {"-", Tk::Minus},  {"*", Tk::Star}, {"^", Tk::Caret},
};

std::vector<Token> lex(const std::string& in) {
    std::vector<Token> out;
    int line = 1, col = 1;
    std::size_t i = 0;
    auto advance = [&](std::size_t n) {
        for (std::size_t k = 0; k < n; ++k) {
            if (in[i + k] == '\n') { ++line; col = 1; }
            else ++col;
        }
        i += n;
    };
    while (i < in.size()) {
        char c = in[i];
        if (c == ' ' || c == '\t' || c == '\r' || c == '\n') { advance(1); continue; }
        int tl = line, tc = col;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < in.size() && std::isdigit(static_cast<unsigned char>(in[j]))) ++j;
            Token t{Tk::Int, in.substr(i, j - i), Integer(in.substr(i, j - i)), tl, tc};
            out.push_back(std::move(t));
            advance(j - i);
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            auto ident_char = [&](char ch) {
                return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_' || ch == '$';
            };
            while (j < in.size() && ident_char(in[j])) ++j;
            out.push_back({Tk::Ident, in.substr(i, j - i), Integer(0), tl, tc});
            advance(j - i);
            continue;
        }
        bool matched = false;
        for (const auto& op : kOps) {
            std::size_t n = std::char_traits<char>::length(op.s);
            if (in.compare(i, n, op.s) == 0) {
                out.push_back({op.k, op.s, Integer(0), tl, tc});
                advance(n);
                matched = true;
                break;
            }
        }
        if (!matched)
            throw SyntaxError(tl, tc, "a token", "'" + std::string(1, c) + "'");
    }
    out.push_back({Tk::End, "", Integer(0), line, col});
    return out;
}

class Parser {
public:
    explicit Parser(const std::string& in) : toks_(lex(in)) {}

    FormulaPtr formula_all() {
        FormulaPtr f = formula();
        expect(Tk::End, "end of input");
        return f;
    }
    TermPtr term_all() {
        TermPtr t = term();
        expect(Tk::End, "end of input");
        return t;
    }

private:
    std::vector<Token> toks_;
    std::size_t pos_ = 0;

    const Token& peek() const { return toks_[pos_]; }
    const Token& next() { return toks_[pos_++]; }
    bool at(Tk k) const { return peek().kind == k; }
    bool eat(Tk k) {
        if (!at(k)) return false;
        ++pos_;
        return true;
    }
    [[noreturn]] void fail(const std::string& expected) const {
        const Token& t = peek();
        std::string got = t.kind == Tk::End ? "end of input" : "'" + t.text + "'";
        throw SyntaxError(t.line, t.col, expected, got);
    }
    void expect(Tk k, const std::string& what) {
        if (!eat(k)) fail(what);
    }
    bool at_quant() const {
        return at(Tk::Ident) && (peek().text == "E" || peek().text == "A");
    }

    FormulaPtr formula() { return at_quant() ? quantified() : implication(); }

    FormulaPtr quantified() {
        bool ex = next().text == "E";
        if (!at(Tk::Ident)) fail("a variable name");
        if (peek().text == "E" || peek().text == "A") fail("a variable name (E and A are reserved)");
        std::string var = next().text;
        expect(Tk::Dot, "'.'");
        FormulaPtr body = formula();
        return ex ? f_exists(var, body) : f_forall(var, body);
    }

    FormulaPtr implication() {
        FormulaPtr lhs = disjunction();
        if (eat(Tk::Arrow)) return f_implies(lhs, at_quant() ? quantified() : implication());
        if (eat(Tk::IffTok)) return f_iff(lhs, at_quant() ? quantified() : implication());
        return lhs;
    }

    FormulaPtr disjunction() {
        FormulaPtr f = conjunction();
        while (eat(Tk::Bar)) f = f_or(f, conjunction());
        return f;
    }

    FormulaPtr conjunction() {
        FormulaPtr f = negation();
        while (eat(Tk::Amp)) f = f_and(f, negation());
        return f;
    }

    // On '(' this may be a parenthesized formula or a parenthesized term
    // opening an atom; try the formula reading, backtrack if the suffix shows
    // it was a term.
    FormulaPtr negation() {
        if (eat(Tk::Bang)) return f_not(negation());
        if (at(Tk::LParen)) {
            std::size_t save = pos_;
            ++pos_;
            try {
                FormulaPtr inner = formula();
                expect(Tk::RParen, "')'");
                if (!at_term_continuation()) return inner;
            } catch (const SyntaxError&) {
            }
            pos_ = save;
        }
        return atom();
    }

    bool at_term_continuation() const {
        switch (peek().kind) {
            case Tk::Plus: case Tk::Minus: case Tk::Star: case Tk::Caret:
            case Tk::RelEq: case Tk::RelNeq: case Tk::RelLe: case Tk::RelLt:
            case Tk::RelSim: case Tk::RelLeV: case Tk::RelLtV: case Tk::RelSimV:
                return true;
            default:
                return false;
        }
    }

    FormulaPtr atom() {
        TermPtr lhs = term();
        Rel r;
        switch (peek().kind) {
            case Tk::RelEq: r = Rel::Eq; break;
            case Tk::RelNeq: r = Rel::Neq; break;
            case Tk::RelLe: r = Rel::Le; break;
            case Tk::RelLt: r = Rel::Lt; break;
            case Tk::RelSim: r = Rel::Sim; break;
            case Tk::RelLeV: r = Rel::LeV; break;
            case Tk::RelLtV: r = Rel::LtV; break;
            case Tk::RelSimV: r = Rel::SimV; break;
            default: fail("a relation");
        }
        ++pos_;
        return f_atom(r, lhs, term());
    }

    TermPtr term() {
        TermPtr t;
        if (eat(Tk::Minus)) t = Term::neg(product());
        else t = product();
        for (;;) {
            if (eat(Tk::Plus)) t = Term::add(t, product());
            else if (eat(Tk::Minus)) t = Term::add(t, Term::neg(product()));
            else return t;
        }
    }

    TermPtr product() {
        TermPtr t = factor();
        while (eat(Tk::Star)) t = Term::mul(t, factor());
        return t;
    }

    TermPtr factor() {
        TermPtr t = primary();
        while (eat(Tk::Caret)) {
            if (!at(Tk::Int)) fail("a natural-number exponent");
            Integer e = next().ival;
            if (!e.fits_ulong_p()) fail("a smaller exponent");
            t = Term::pow(t, e.get_ui());
        }
        return t;
    }

    TermPtr primary() {
        if (at(Tk::Int)) return Term::constant(next().ival);
        if (at(Tk::Ident)) {
            if (peek().text == "E" || peek().text == "A")
                fail("a variable name (E and A are reserved)");
            return Term::variable(next().text);
        }
        if (eat(Tk::LParen)) {
            TermPtr t = term();
            expect(Tk::RParen, "')'");
            return t;
        }
        fail("a term");
    }
};

}  // namespace

FormulaPtr parse_formula(const std::string& input) { return Parser(input).formula_all(); }
TermPtr parse_term_string(const std::string& input) { return Parser(input).term_all(); }

}  // namespace qrc
