#pragma once

#include <memory>
#include <string>

#include "immcalc/catalog.hpp"

namespace immcalc {

struct SourceSpan {
    std::size_t begin = 0;
    std::size_t end = 0;
};

// Manifold expression AST.  Grammar:
//   expr   := term ("#" term)*
//   term   := factor ("*" factor)*
//   factor := atom | "(" expr ")"
//   atom   := ("CP"|"RP"|"S"|"T"|"R") INT
// '*' binds tighter than '#'; both are left-associative; whitespace is free.
struct ManifoldExpr {
    enum class Node { Atom, Product, CSum };

    Node node = Node::Atom;
    SourceSpan span;
    Family family = Family::S;  // Atom
    int n = 0;                  // Atom
    std::shared_ptr<const ManifoldExpr> left, right;
};

using ExprPtr = std::shared_ptr<const ManifoldExpr>;

ExprPtr parse_manifold_expr(const std::string& input);

// Minimal-parenthesis rendering; reparsing the result gives an identical AST.
std::string render(const ManifoldExpr& e);

// Structural equality, ignoring source spans.
bool same_expr(const ManifoldExpr& a, const ManifoldExpr& b);

// Build the manifold a parsed expression denotes; construction rules
// (closedness, equal dimensions, no products over sums) are checked here.
ManifoldDescriptor elaborate(const ManifoldExpr& e);

}  // namespace immcalc
