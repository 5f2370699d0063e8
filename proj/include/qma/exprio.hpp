#pragma once

#include <cctype>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qma/element.hpp"
#include "qma/poisson.hpp"
#include "qma/rational.hpp"
#include "qma/rewrite.hpp"

namespace qma {

enum class ExprMode { quantum, classical };

struct ParseError : std::runtime_error {
    ParseError(const std::string& message, std::size_t position)
        : std::runtime_error(message + " (at position " + std::to_string(position) + ")"), pos(position) {}
    std::size_t pos;
};

/// Expression AST for the element grammar:
///   expr   := term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := ['-'] atom ('^' int)?
///   atom   := rational | 'q' | gen | '(' expr ')'
///   gen    := ('x'|'y') '[' uint ',' uint ']'
/// Whitespace insensitive. Negative powers are only meaningful on q, which
/// keeps canonical LaurentPoly output reparsable; generator powers must be
/// nonnegative.
struct ExprNode {
    enum class Kind { rational, symbol_q, generator, add, sub, mul, pow, neg };

    Kind kind;
    Rational value;           // rational
    int row = 0, col = 0;     // generator
    long exponent = 0;        // pow
    std::unique_ptr<ExprNode> lhs, rhs;

    explicit ExprNode(Kind k) : kind(k) {}
};

using ExprPtr = std::unique_ptr<ExprNode>;

namespace detail {

class Parser {
   public:
    Parser(std::string_view text, int n, ExprMode mode) : text_(text), n_(n), mode_(mode) {}

    ExprPtr run() {
        ExprPtr e = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return e;
    }

   private:
    ExprPtr expr() {
        ExprPtr lhs = term();
        while (true) {
            skip_ws();
            if (peek() == '+' || peek() == '-') {
                char op = take();
                auto node = std::make_unique<ExprNode>(op == '+' ? ExprNode::Kind::add : ExprNode::Kind::sub);
                node->lhs = std::move(lhs);
                node->rhs = term();
                lhs = std::move(node);
            } else {
                return lhs;
            }
        }
    }

    ExprPtr term() {
        ExprPtr lhs = factor();
        while (true) {
            skip_ws();
            if (peek() == '*') {
                take();
                auto node = std::make_unique<ExprNode>(ExprNode::Kind::mul);
                node->lhs = std::move(lhs);
                node->rhs = factor();
                lhs = std::move(node);
            } else {
                return lhs;
            }
        }
    }

    ExprPtr factor() {
        skip_ws();
        bool negated = false;
        if (peek() == '-') {
            take();
            negated = true;
        }
        ExprPtr base = atom();
        skip_ws();
        if (peek() == '^') {
            take();
            std::size_t at = pos_;
            long e = integer();
            if (e < 0 && base->kind != ExprNode::Kind::symbol_q)
                fail("negative exponent is only allowed on q", at);
            auto node = std::make_unique<ExprNode>(ExprNode::Kind::pow);
            node->lhs = std::move(base);
            node->exponent = e;
            base = std::move(node);
        }
        if (negated) {
            auto node = std::make_unique<ExprNode>(ExprNode::Kind::neg);
            node->lhs = std::move(base);
            base = std::move(node);
        }
        return base;
    }

    ExprPtr atom() {
        skip_ws();
        char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) return rational();
        if (c == 'q') {
            if (mode_ == ExprMode::classical) fail("symbol q is not available in classical mode");
            take();
            return std::make_unique<ExprNode>(ExprNode::Kind::symbol_q);
        }
        if (c == 'x' || c == 'y') return generator();
        if (c == '(') {
            take();
            ExprPtr inner = expr();
            skip_ws();
            if (peek() != ')') fail("expected ')'");
            take();
            return inner;
        }
        fail("expected a rational, q, a generator, or '('");
        return nullptr;  // unreachable
    }

    ExprPtr rational() {
        std::size_t start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) take();
        std::string digits(text_.substr(start, pos_ - start));
        skip_ws();
        if (peek() == '/') {
            take();
            skip_ws();
            std::size_t dstart = pos_;
            while (std::isdigit(static_cast<unsigned char>(peek()))) take();
            if (pos_ == dstart) fail("expected a denominator");
            std::string den(text_.substr(dstart, pos_ - dstart));
            if (den.find_first_not_of('0') == std::string::npos) fail("zero denominator", dstart);
            digits += "/" + den;
        }
        auto node = std::make_unique<ExprNode>(ExprNode::Kind::rational);
        node->value = parse_rational(digits);
        return node;
    }

    ExprPtr generator() {
        std::size_t at = pos_;
        char family = take();
        const char expected = (mode_ == ExprMode::quantum) ? 'x' : 'y';
        if (family != expected) fail(std::string("generator family '") + family + "' does not match the mode", at);
        skip_ws();
        if (peek() != '[') fail("expected '['");
        take();
        long i = unsigned_integer();
        skip_ws();
        if (peek() != ',') fail("expected ','");
        take();
        long j = unsigned_integer();
        skip_ws();
        if (peek() != ']') fail("expected ']'");
        take();
        if (i < 1 || i > n_ || j < 1 || j > n_) fail("generator index out of range for n=" + std::to_string(n_), at);
        auto node = std::make_unique<ExprNode>(ExprNode::Kind::generator);
        node->row = static_cast<int>(i);
        node->col = static_cast<int>(j);
        return node;
    }

    long integer() {
        skip_ws();
        bool neg = false;
        if (peek() == '-') {
            take();
            neg = true;
        }
        long v = unsigned_integer();
        return neg ? -v : v;
    }

    long unsigned_integer() {
        skip_ws();
        std::size_t start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) take();
        if (pos_ == start) fail("expected an integer");
        long v = 0;
        for (std::size_t i = start; i < pos_; ++i) {
            v = v * 10 + (text_[i] - '0');
            if (v > 1000000) fail("integer too large", start);
        }
        return v;
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    char take() { return text_[pos_++]; }
    [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos_); }
    [[noreturn]] void fail(const std::string& message, std::size_t at) const { throw ParseError(message, at); }

    std::string_view text_;
    std::size_t pos_ = 0;
    int n_;
    ExprMode mode_;
};

}  // namespace detail

inline ExprPtr parse(std::string_view text, int n, ExprMode mode) {
    return detail::Parser(text, n, mode).run();
}

/// Evaluates a quantum-mode AST to a PBW-reduced element. Products are
/// left-associative and preserve factor order.
inline AlgebraElement eval_quantum(const ExprNode& node, int n) {
    switch (node.kind) {
        case ExprNode::Kind::rational:
            return AlgebraElement::constant(n, LaurentPoly(node.value));
        case ExprNode::Kind::symbol_q:
            return AlgebraElement::constant(n, LaurentPoly::q_power(1));
        case ExprNode::Kind::generator:
            return AlgebraElement::generator(n, node.row, node.col);
        case ExprNode::Kind::add:
            return eval_quantum(*node.lhs, n) + eval_quantum(*node.rhs, n);
        case ExprNode::Kind::sub:
            return eval_quantum(*node.lhs, n) - eval_quantum(*node.rhs, n);
        case ExprNode::Kind::mul:
            return eval_quantum(*node.lhs, n) * eval_quantum(*node.rhs, n);
        case ExprNode::Kind::neg:
            return -eval_quantum(*node.lhs, n);
        case ExprNode::Kind::pow: {
            if (node.lhs->kind == ExprNode::Kind::symbol_q)
                return AlgebraElement::constant(n, LaurentPoly::q_power(node.exponent));
            AlgebraElement base = eval_quantum(*node.lhs, n);
            AlgebraElement acc = AlgebraElement::one(n);
            for (long i = 0; i < node.exponent; ++i) acc = acc * base;
            return acc;
        }
    }
    throw std::logic_error("eval_quantum: bad node");
}

inline CPoly eval_classical(const ExprNode& node, int n) {
    switch (node.kind) {
        case ExprNode::Kind::rational:
            return CPoly::constant(n, node.value);
        case ExprNode::Kind::symbol_q:
            throw std::invalid_argument("eval_classical: q has no classical meaning");
        case ExprNode::Kind::generator:
            return CPoly::generator(n, node.row, node.col);
        case ExprNode::Kind::add:
            return eval_classical(*node.lhs, n) + eval_classical(*node.rhs, n);
        case ExprNode::Kind::sub:
            return eval_classical(*node.lhs, n) - eval_classical(*node.rhs, n);
        case ExprNode::Kind::mul:
            return eval_classical(*node.lhs, n) * eval_classical(*node.rhs, n);
        case ExprNode::Kind::neg:
            return -eval_classical(*node.lhs, n);
        case ExprNode::Kind::pow: {
            CPoly base = eval_classical(*node.lhs, n);
            CPoly acc = CPoly::one(n);
            for (long i = 0; i < node.exponent; ++i) acc = acc * base;
            return acc;
        }
    }
    throw std::logic_error("eval_classical: bad node");
}

inline AlgebraElement eval_quantum_expr(std::string_view text, int n) {
    return eval_quantum(*parse(text, n, ExprMode::quantum), n);
}

inline CPoly eval_classical_expr(std::string_view text, int n) {
    return eval_classical(*parse(text, n, ExprMode::classical), n);
}

}  // namespace qma
