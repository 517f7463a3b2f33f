/* Recursive-descent parser for the manifold expression DSL. */

#include "immcalc/expr.hpp"

#include <cctype>
#include <charconv>

namespace immcalc {

namespace {

struct Token {
    enum class Kind { Star, Hash, LParen, RParen, Atom, End };
    Kind kind = Kind::End;
    SourceSpan span;
    Family family = Family::S;
    int n = 0;
};

class Lexer {
public:
    explicit Lexer(const std::string& src) : src_(src) { advance(); }

    const Token& peek() const { return tok_; }

    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

private:
    void advance() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_])))
            ++pos_;
        tok_ = Token{};
        tok_.span = {pos_, pos_};
        if (pos_ >= src_.size()) {
            tok_.kind = Token::Kind::End;
            return;
        }
        char c = src_[pos_];
        switch (c) {
            case '*': tok_.kind = Token::Kind::Star; tok_.span.end = ++pos_; return;
            case '#': tok_.kind = Token::Kind::Hash; tok_.span.end = ++pos_; return;
            case '(': tok_.kind = Token::Kind::LParen; tok_.span.end = ++pos_; return;
            case ')': tok_.kind = Token::Kind::RParen; tok_.span.end = ++pos_; return;
            default: break;
        }
        if (!std::isalpha(static_cast<unsigned char>(c)))
            throw parse_error(std::string("unexpected character '") + c + "'", pos_);
        std::size_t start = pos_;
        while (pos_ < src_.size() && std::isalpha(static_cast<unsigned char>(src_[pos_])))
            ++pos_;
        std::string_view letters(src_.data() + start, pos_ - start);
        auto family = family_from_string(letters);
        if (!family)
            throw parse_error("unknown manifold family '" + std::string(letters) + "'", start);
        if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_])))
            throw parse_error("expected integer", pos_);
        std::size_t dstart = pos_;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
            ++pos_;
        int n = 0;
        auto [ptr, ec] = std::from_chars(src_.data() + dstart, src_.data() + pos_, n);
        if (ec != std::errc())
            throw parse_error("integer too large", dstart);
        tok_.kind = Token::Kind::Atom;
        tok_.family = *family;
        tok_.n = n;
        tok_.span = {start, pos_};
    }

    const std::string& src_;
    std::size_t pos_ = 0;
    Token tok_;
};

class Parser {
public:
    explicit Parser(const std::string& src) : lex(src) {}

    ExprPtr parse() {
        ExprPtr e = expr();
        if (lex.peek().kind != Token::Kind::End)
            throw parse_error("unexpected token", lex.peek().span.begin);
        return e;
    }

private:
    ExprPtr expr() {
        ExprPtr left = term();
        while (lex.peek().kind == Token::Kind::Hash) {
            lex.take();
            ExprPtr right = term();
            left = combine(ManifoldExpr::Node::CSum, left, right);
        }
        return left;
    }

    ExprPtr term() {
        ExprPtr left = factor();
        while (lex.peek().kind == Token::Kind::Star) {
            lex.take();
            ExprPtr right = factor();
            left = combine(ManifoldExpr::Node::Product, left, right);
        }
        return left;
    }

    ExprPtr factor() {
        const Token& t = lex.peek();
        if (t.kind == Token::Kind::Atom) {
            Token a = lex.take();
            auto node = std::make_shared<ManifoldExpr>();
            node->node = ManifoldExpr::Node::Atom;
            node->span = a.span;
            node->family = a.family;
            node->n = a.n;
            return node;
        }
        if (t.kind == Token::Kind::LParen) {
            Token open = lex.take();
            ExprPtr inner = expr();
            if (lex.peek().kind != Token::Kind::RParen)
                throw parse_error("expected ')'", lex.peek().span.begin);
            Token close = lex.take();
            auto node = std::make_shared<ManifoldExpr>(*inner);
            node->span = {open.span.begin, close.span.end};
            return node;
        }
        throw parse_error("expected a manifold expression", t.span.begin);
    }

    Lexer lex;

    static ExprPtr combine(ManifoldExpr::Node kind, ExprPtr left, ExprPtr right) {
        auto node = std::make_shared<ManifoldExpr>();
        node->node = kind;
        node->span = {left->span.begin, right->span.end};
        node->left = std::move(left);
        node->right = std::move(right);
        return node;
    }
};

// Parenthesize a child only when required to reproduce the same tree.
std::string render_child(const ManifoldExpr& child, ManifoldExpr::Node parent, bool right_side) {
    bool parens = false;
    if (child.node == ManifoldExpr::Node::CSum)
        parens = parent == ManifoldExpr::Node::Product ||
                 (parent == ManifoldExpr::Node::CSum && right_side);
    else if (child.node == ManifoldExpr::Node::Product)
        parens = parent == ManifoldExpr::Node::Product && right_side;
    std::string s = render(child);
    return parens ? "(" + s + ")" : s;
}

}  // namespace

ExprPtr parse_manifold_expr(const std::string& input) { return Parser(input).parse(); }

std::string render(const ManifoldExpr& e) {
    switch (e.node) {
        case ManifoldExpr::Node::Atom:
            return family_name(e.family) + std::to_string(e.n);
        case ManifoldExpr::Node::Product:
            return render_child(*e.left, e.node, false) + "*" +
                   render_child(*e.right, e.node, true);
        case ManifoldExpr::Node::CSum:
            return render_child(*e.left, e.node, false) + " # " +
                   render_child(*e.right, e.node, true);
    }
    return "";
}

bool same_expr(const ManifoldExpr& a, const ManifoldExpr& b) {
    if (a.node != b.node)
        return false;
    if (a.node == ManifoldExpr::Node::Atom)
        return a.family == b.family && a.n == b.n;
    return same_expr(*a.left, *b.left) && same_expr(*a.right, *b.right);
}

ManifoldDescriptor elaborate(const ManifoldExpr& e) {
    switch (e.node) {
        case ManifoldExpr::Node::Atom:
            return primitive(e.family, e.n);
        case ManifoldExpr::Node::Product:
            return product(elaborate(*e.left), elaborate(*e.right));
        case ManifoldExpr::Node::CSum:
            return connected_sum(elaborate(*e.left), elaborate(*e.right));
    }
    throw std::logic_error("internal: unhandled expression node");
}

}  // namespace immcalc
