#include "nclogic/parser.hpp"

#include <cctype>

#include "nclogic/error.hpp"

namespace nclogic {

namespace {

enum class Tok {
    Ident, KwForall, KwExists, KwIn, KwBot, KwNot, KwCirc,
    LParen, RParen, Comma, Dot, EqSign,
    Tilde, Bang, Quest, Amp, Pipe,
    Arrow, DArrow, SArrow, SDArrow,  // ->  <->  =>  <=>
    End,
};

struct Token {
    Tok type;
    std::string text;
    size_t offset;
};

std::vector<Token> tokenize(const std::string& s) {
    std::vector<Token> out;
    size_t i = 0;
    auto push = [&](Tok t, size_t off, size_t len) {
        out.push_back({t, s.substr(off, len), off});
    };
    while (i < s.size()) {
        char c = s[i];
        if (isspace((unsigned char)c)) { i++; continue; }
        if (s.compare(i, 3, "<=>") == 0) { push(Tok::SDArrow, i, 3); i += 3; continue; }
        if (s.compare(i, 3, "<->") == 0) { push(Tok::DArrow, i, 3); i += 3; continue; }
        if (s.compare(i, 2, "=>") == 0) { push(Tok::SArrow, i, 2); i += 2; continue; }
        if (s.compare(i, 2, "->") == 0) { push(Tok::Arrow, i, 2); i += 2; continue; }
        switch (c) {
        case '(': push(Tok::LParen, i, 1); i++; continue;
        case ')': push(Tok::RParen, i, 1); i++; continue;
        case ',': push(Tok::Comma, i, 1); i++; continue;
        case '.': push(Tok::Dot, i, 1); i++; continue;
        case '=': push(Tok::EqSign, i, 1); i++; continue;
        case '~': push(Tok::Tilde, i, 1); i++; continue;
        case '!': push(Tok::Bang, i, 1); i++; continue;
        case '?': push(Tok::Quest, i, 1); i++; continue;
        case '&': push(Tok::Amp, i, 1); i++; continue;
        case '|': push(Tok::Pipe, i, 1); i++; continue;
        }
        if (isalpha((unsigned char)c) || c == '_') {
            size_t j = i;
            while (j < s.size() &&
                   (isalnum((unsigned char)s[j]) || s[j] == '_' || s[j] == '\''))
                j++;
            std::string w = s.substr(i, j - i);
            Tok t = Tok::Ident;
            if (w == "forall") t = Tok::KwForall;
            else if (w == "exists") t = Tok::KwExists;
            else if (w == "in") t = Tok::KwIn;
            else if (w == "bot") t = Tok::KwBot;
            else if (w == "not") t = Tok::KwNot;
            else if (w == "o") t = Tok::KwCirc;
            out.push_back({t, std::move(w), i});
            i = j;
            continue;
        }
        throw ParseError(std::string("unexpected character '") + c + "'", i);
    }
    out.push_back({Tok::End, "", s.size()});
    return out;
}

class Parser {
public:
    Parser(const std::string& text, Signature& sig, bool infer)
        : toks_(tokenize(text)), sig_(sig), infer_(infer) {}

    FormulaPtr run() {
        auto f = formula();
        if (peek().type != Tok::End)
            fail("unexpected trailing input");
        return f;
    }

    Term term_only() {
        Term t = term();
        if (peek().type != Tok::End)
            fail("unexpected trailing input");
        return t;
    }

private:
    std::vector<Token> toks_;
    size_t pos_ = 0;
    Signature& sig_;
    bool infer_;

    const Token& peek() const { return toks_[pos_]; }
    Token take() { return toks_[pos_++]; }
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg, peek().offset);
    }

    bool eat(Tok t) {
        if (peek().type != t) return false;
        pos_++;
        return true;
    }

    FormulaPtr formula() { return siff(); }

    FormulaPtr siff() {
        auto a = simp();
        if (eat(Tok::SDArrow)) return Formula::strong_iff(a, siff());
        return a;
    }
    FormulaPtr simp() {
        auto a = iff();
        if (eat(Tok::SArrow)) return Formula::strong_imp(a, simp());
        return a;
    }
    FormulaPtr iff() {
        auto a = imp();
        if (eat(Tok::DArrow)) return Formula::iff(a, iff());
        return a;
    }
    FormulaPtr imp() {
        auto a = disj();
        if (eat(Tok::Arrow)) return Formula::imp(a, imp());
        return a;
    }
    FormulaPtr disj() {
        auto a = conj();
        while (eat(Tok::Pipe)) a = Formula::disj(a, conj());
        return a;
    }
    FormulaPtr conj() {
        auto a = unary();
        while (eat(Tok::Amp)) a = Formula::conj(a, unary());
        return a;
    }

    FormulaPtr unary() {
        switch (peek().type) {
        case Tok::Tilde: take(); return Formula::neg(unary());
        case Tok::KwNot: take(); return Formula::class_neg(unary());
        case Tok::Bang: take(); return Formula::bang(unary());
        case Tok::Quest: take(); return Formula::quest(unary());
        case Tok::KwCirc: take(); return Formula::circ(unary());
        case Tok::KwForall:
        case Tok::KwExists: {
            bool uni = take().type == Tok::KwForall;
            if (peek().type != Tok::Ident) fail("expected a variable after quantifier");
            Token v = take();
            if (sig_.relations.count(v.text))
                throw ParseError("relation name \"" + v.text + "\" cannot be bound", v.offset);
            if (sig_.constants.count(v.text))
                throw ParseError("constant \"" + v.text + "\" cannot be bound", v.offset);
            if (!eat(Tok::Dot)) fail("expected '.' after quantified variable");
            auto body = formula();  // maximal scope
            return uni ? Formula::forall(v.text, body) : Formula::exists(v.text, body);
        }
        default:
            return atom();
        }
    }

    FormulaPtr atom() {
        if (eat(Tok::LParen)) {
            auto f = formula();
            if (!eat(Tok::RParen)) fail("expected ')'");
            return f;
        }
        if (peek().type == Tok::KwBot) { take(); return Formula::bot(); }
        if (peek().type != Tok::Ident) fail("expected a formula");
        Token id = take();
        if (peek().type == Tok::LParen) {
            take();
            std::vector<Term> args;
            if (peek().type != Tok::RParen) {
                args.push_back(term());
                while (eat(Tok::Comma)) args.push_back(term());
            }
            if (!eat(Tok::RParen)) fail("expected ')' after atom arguments");
            check_relation(id, (int)args.size());
            return Formula::atom(id.text, std::move(args));
        }
        // a term-leading atom: t = s or t in s
        Term lhs = make_term(id);
        if (eat(Tok::EqSign)) {
            Term rhs = term();
            return Formula::eq(lhs, rhs);
        }
        if (eat(Tok::KwIn)) {
            Term rhs = term();
            Token fake{Tok::Ident, "in", id.offset};
            check_relation(fake, 2);
            return Formula::atom("in", {lhs, rhs});
        }
        fail("expected '=' or 'in' after term");
    }

    void check_relation(const Token& id, int arity) {
        auto it = sig_.relations.find(id.text);
        if (it == sig_.relations.end()) {
            if (sig_.constants.count(id.text))
                throw ParseError("constant \"" + id.text + "\" used as a relation", id.offset);
            if (!infer_)
                throw ParseError("unknown relation \"" + id.text + "\"", id.offset);
            sig_.relations[id.text] = arity;
            return;
        }
        if (it->second != arity)
            throw ParseError("relation \"" + id.text + "\" expects " +
                                 std::to_string(it->second) + " argument(s), got " +
                                 std::to_string(arity),
                             id.offset);
    }

    Term make_term(const Token& id) {
        if (sig_.relations.count(id.text))
            throw ParseError("relation name \"" + id.text + "\" used as a term", id.offset);
        if (sig_.constants.count(id.text)) return cons(id.text);
        return var(id.text);
    }

    Term term() {
        if (peek().type != Tok::Ident) fail("expected a term");
        return make_term(take());
    }
};

}  // namespace

FormulaPtr parse_formula(const std::string& text, const Signature& sig) {
    Signature copy = sig;  // strict mode never mutates
    return Parser(text, copy, false).run();
}

FormulaPtr parse_formula_infer(const std::string& text, Signature& sig) {
    return Parser(text, sig, true).run();
}

Term parse_term_text(const std::string& text, const Signature& sig) {
    Signature copy = sig;
    return Parser(text, copy, false).term_only();
}

}  // namespace nclogic
