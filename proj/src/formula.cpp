// SPDX-License-Identifier: Apache-2.0
#include "ctxlogic/formula.hpp"

#include <cctype>

namespace ctxlogic {

FormulaPtr Formula::atom(std::string name) {
    auto f = std::make_shared<Formula>();
    f->kind = Kind::Atom;
    f->name = std::move(name);
    return f;
}

FormulaPtr Formula::make(Kind k, FormulaPtr l, FormulaPtr r) {
    auto f = std::make_shared<Formula>();
    f->kind = k;
    f->lhs = std::move(l);
    f->rhs = std::move(r);
    return f;
}

namespace {

enum class Tok { Ident, LParen, RParen, Not, And, Or, Arrow, End };

struct Token {
    Tok kind;
    std::string text;
    std::size_t offset;
};

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) { advance(); }

    const Token& current() const { return tok_; }

    void advance() {
        while (pos_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
        std::size_t at = pos_;
        if (pos_ >= text_.size()) {
            tok_ = {Tok::End, "", at};
            return;
        }
        char c = text_[pos_];
        if (c == '(') { tok_ = {Tok::LParen, "(", at}; ++pos_; return; }
        if (c == ')') { tok_ = {Tok::RParen, ")", at}; ++pos_; return; }
        if (c == '~') { tok_ = {Tok::Not, "~", at}; ++pos_; return; }
        if (c == '&') { tok_ = {Tok::And, "&", at}; ++pos_; return; }
        if (c == '|') { tok_ = {Tok::Or, "|", at}; ++pos_; return; }
        if (c == '-') {
            if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') {
                tok_ = {Tok::Arrow, "->", at};
                pos_ += 2;
                return;
            }
            throw ParseError("expected '>' after '-'", pos_ + 1);
        }
        if (match_utf8("¬")) { tok_ = {Tok::Not, "~", at}; return; }      // ¬
        if (match_utf8("∧")) { tok_ = {Tok::And, "&", at}; return; }      // ∧
        if (match_utf8("∨")) { tok_ = {Tok::Or, "|", at}; return; }       // ∨
        if (match_utf8("→")) { tok_ = {Tok::Arrow, "->", at}; return; }   // →
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                    text_[pos_] == '_')) {
                ++pos_;
            }
            tok_ = {Tok::Ident, std::string(text_.substr(start, pos_ - start)), at};
            return;
        }
        throw ParseError("unexpected character '" + std::string(1, c) + "'", pos_);
    }

private:
    bool match_utf8(std::string_view seq) {
        if (text_.substr(pos_, seq.size()) == seq) {
            pos_ += seq.size();
            return true;
        }
        return false;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    Token tok_;
};

class Parser {
public:
    explicit Parser(std::string_view text) : lex_(text) {}

    FormulaPtr parse() {
        FormulaPtr f = implication();
        if (lex_.current().kind != Tok::End) {
            throw ParseError("unexpected '" + lex_.current().text + "'",
                             lex_.current().offset);
        }
        return f;
    }

private:
    FormulaPtr implication() {
        FormulaPtr l = disjunction();
        if (lex_.current().kind == Tok::Arrow) {
            lex_.advance();
            return Formula::make(Formula::Kind::Implies, std::move(l), implication());
        }
        return l;
    }

    FormulaPtr disjunction() {
        FormulaPtr l = conjunction();
        while (lex_.current().kind == Tok::Or) {
            lex_.advance();
            l = Formula::make(Formula::Kind::Or, std::move(l), conjunction());
        }
        return l;
    }

    FormulaPtr conjunction() {
        FormulaPtr l = negation();
        while (lex_.current().kind == Tok::And) {
            lex_.advance();
            l = Formula::make(Formula::Kind::And, std::move(l), negation());
        }
        return l;
    }

    FormulaPtr negation() {
        const Token& t = lex_.current();
        switch (t.kind) {
        case Tok::Not:
            lex_.advance();
            return Formula::make(Formula::Kind::Not, negation());
        case Tok::LParen: {
            lex_.advance();
            FormulaPtr f = implication();
            if (lex_.current().kind != Tok::RParen) {
                throw ParseError("expected ')'", lex_.current().offset);
            }
            lex_.advance();
            return f;
        }
        case Tok::Ident: {
            FormulaPtr f = Formula::atom(t.text);
            lex_.advance();
            return f;
        }
        default:
            throw ParseError("expected a formula", t.offset);
        }
    }

    Lexer lex_;
};

int precedence(Formula::Kind k) {
    switch (k) {
    case Formula::Kind::Atom: return 4;
    case Formula::Kind::Not: return 3;
    case Formula::Kind::And: return 2;
    case Formula::Kind::Or: return 1;
    case Formula::Kind::Implies: return 0;
    }
    return 0;
}

void render(const Formula& f, int parent_prec, std::string& out) {
    int prec = precedence(f.kind);
    bool parens = prec < parent_prec;
    if (parens) out += '(';
    switch (f.kind) {
    case Formula::Kind::Atom:
        out += f.name;
        break;
    case Formula::Kind::Not:
        out += '~';
        render(*f.lhs, precedence(Formula::Kind::Not), out);
        break;
    case Formula::Kind::And:
        render(*f.lhs, prec, out);
        out += " & ";
        render(*f.rhs, prec + 1, out);
        break;
    case Formula::Kind::Or:
        render(*f.lhs, prec, out);
        out += " | ";
        render(*f.rhs, prec + 1, out);
        break;
    case Formula::Kind::Implies:
        render(*f.lhs, prec + 1, out); // right-associative
        out += " -> ";
        render(*f.rhs, prec, out);
        break;
    }
    if (parens) out += ')';
}

} // namespace

FormulaPtr parse_formula(std::string_view text) {
    return Parser(text).parse();
}

std::string to_string(const Formula& f) {
    std::string out;
    render(f, 0, out);
    return out;
}

static void collect_atoms(const Formula& f, std::set<std::string>& out) {
    if (f.kind == Formula::Kind::Atom) {
        out.insert(f.name);
        return;
    }
    if (f.lhs) collect_atoms(*f.lhs, out);
    if (f.rhs) collect_atoms(*f.rhs, out);
}

std::set<std::string> atom_names(const Formula& f) {
    std::set<std::string> out;
    collect_atoms(f, out);
    return out;
}

bool equal(const Formula& a, const Formula& b) {
    if (a.kind != b.kind) return false;
    if (a.kind == Formula::Kind::Atom) return a.name == b.name;
    if (a.kind == Formula::Kind::Not) return equal(*a.lhs, *b.lhs);
    return equal(*a.lhs, *b.lhs) && equal(*a.rhs, *b.rhs);
}

} // namespace ctxlogic
