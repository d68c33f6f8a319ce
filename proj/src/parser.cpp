#include "relmod/parser.hpp"

#include <cctype>
#include <set>

namespace relmod {

namespace {

enum class Tok { ident, lparen, rparen, comma, eq, tilde, amp, pipe, arrow, iff, end };

struct Token {
    Tok kind;
    std::string text;
    std::size_t pos;
};

class Lexer {
public:
    explicit Lexer(const std::string& text) : text_(text) { advance(); }

    const Token& peek() const { return tok_; }

    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

private:
    const std::string& text_;
    std::size_t i_ = 0;
    Token tok_{Tok::end, "", 0};

    void advance() {
        while (i_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[i_]))) ++i_;
        const std::size_t start = i_;
        if (i_ >= text_.size()) {
            tok_ = {Tok::end, "", start};
            return;
        }
        const char c = text_[i_];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i_;
            while (j < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[j])) || text_[j] == '_'))
                ++j;
            tok_ = {Tok::ident, text_.substr(i_, j - i_), start};
            i_ = j;
            return;
        }
        switch (c) {
            case '(': tok_ = {Tok::lparen, "(", start}; ++i_; return;
            case ')': tok_ = {Tok::rparen, ")", start}; ++i_; return;
            case ',': tok_ = {Tok::comma, ",", start}; ++i_; return;
            case '=': tok_ = {Tok::eq, "=", start}; ++i_; return;
            case '~': tok_ = {Tok::tilde, "~", start}; ++i_; return;
            case '&': tok_ = {Tok::amp, "&", start}; ++i_; return;
            case '|': tok_ = {Tok::pipe, "|", start}; ++i_; return;
            case '-':
                if (i_ + 1 < text_.size() && text_[i_ + 1] == '>') {
                    tok_ = {Tok::arrow, "->", start};
                    i_ += 2;
                    return;
                }
                throw ParseError("expected '->'", start);
            case '<':
                if (text_.compare(i_, 3, "<->") == 0) {
                    tok_ = {Tok::iff, "<->", start};
                    i_ += 3;
                    return;
                }
                throw ParseError("expected '<->'", start);
            default:
                throw ParseError(std::string("unexpected character '") + c + "'", start);
        }
    }
};

bool is_quantifier_word(const std::string& w) { return w == "forall" || w == "exists"; }

class Parser {
public:
    explicit Parser(const std::string& text) : lex_(text) {}

    Formula parse() {
        Formula f;
        std::set<std::string> bound;
        while (lex_.peek().kind == Tok::ident && is_quantifier_word(lex_.peek().text)) {
            Token q = lex_.take();
            Token v = expect(Tok::ident, "variable name");
            if (is_quantifier_word(v.text))
                throw ParseError("'" + v.text + "' cannot be a variable name", v.pos);
            if (!bound.insert(v.text).second)
                throw ParseError("variable " + v.text + " is quantified twice", v.pos);
            f.prefix.push_back({q.text == "forall", v.text});
        }
        f.matrix = parse_iff();
        Token end = lex_.take();
        if (end.kind != Tok::end) throw ParseError("trailing input after formula", end.pos);
        for (const std::string& v : matrix_variables(f.matrix))
            if (!bound.count(v))
                throw ParseError("unbound variable " + v, 0);
        vocabulary_of(f);  // consistent arities
        return f;
    }

private:
    Lexer lex_;

    Token expect(Tok kind, const std::string& what) {
        Token t = lex_.take();
        if (t.kind != kind) throw ParseError("expected " + what, t.pos);
        return t;
    }

    MatrixPtr parse_iff() {
        MatrixPtr lhs = parse_imp();
        while (lex_.peek().kind == Tok::iff) {
            lex_.take();
            MatrixPtr rhs = parse_imp();
            lhs = MatrixNode::conj(MatrixNode::disj(MatrixNode::neg(lhs), rhs),
                                   MatrixNode::disj(MatrixNode::neg(rhs), lhs));
        }
        return lhs;
    }

    MatrixPtr parse_imp() {
        MatrixPtr lhs = parse_or();
        if (lex_.peek().kind == Tok::arrow) {
            lex_.take();
            MatrixPtr rhs = parse_imp();  // right associative
            return MatrixNode::disj(MatrixNode::neg(lhs), rhs);
        }
        return lhs;
    }

    MatrixPtr parse_or() {
        MatrixPtr lhs = parse_and();
        while (lex_.peek().kind == Tok::pipe) {
            lex_.take();
            lhs = MatrixNode::disj(lhs, parse_and());
        }
        return lhs;
    }

    MatrixPtr parse_and() {
        MatrixPtr lhs = parse_unary();
        while (lex_.peek().kind == Tok::amp) {
            lex_.take();
            lhs = MatrixNode::conj(lhs, parse_unary());
        }
        return lhs;
    }

    MatrixPtr parse_unary() {
        if (lex_.peek().kind == Tok::tilde) {
            lex_.take();
            return MatrixNode::neg(parse_unary());
        }
        return parse_primary();
    }

    MatrixPtr parse_primary() {
        Token t = lex_.take();
        if (t.kind == Tok::lparen) {
            MatrixPtr inner = parse_iff();
            expect(Tok::rparen, "')'");
            return inner;
        }
        if (t.kind != Tok::ident)
            throw ParseError("expected an atom or '('", t.pos);
        if (is_quantifier_word(t.text))
            throw ParseError("quantifier inside the matrix; the formula must be prenex", t.pos);
        // t is either a relation symbol or the left side of '=' / '~'.
        switch (lex_.peek().kind) {
            case Tok::lparen: {
                lex_.take();
                std::vector<std::string> args;
                args.push_back(expect_var());
                while (lex_.peek().kind == Tok::comma) {
                    lex_.take();
                    args.push_back(expect_var());
                }
                expect(Tok::rparen, "')'");
                return MatrixNode::atom(t.text, std::move(args));
            }
            case Tok::eq: {
                lex_.take();
                return MatrixNode::eq(t.text, expect_var());
            }
            case Tok::tilde: {
                lex_.take();
                return MatrixNode::atom("E", {t.text, expect_var()});
            }
            default:
                throw ParseError("expected '(', '=' or '~' after " + t.text, lex_.peek().pos);
        }
    }

    std::string expect_var() {
        Token v = expect(Tok::ident, "a variable name");
        if (is_quantifier_word(v.text))
            throw ParseError("'" + v.text + "' cannot be a variable name", v.pos);
        return v.text;
    }
};

}  // namespace

Formula parse_formula(const std::string& text) { return Parser(text).parse(); }

}  // namespace relmod
