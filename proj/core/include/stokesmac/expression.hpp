/// Minimal arithmetic expressions for user-supplied problems: variables x
/// and y, the side variable through pw(), operators + - * / ^, functions
/// sin, cos, exp, sqrt, and the constant pi. pw(a, b) evaluates a on the
/// plus side and b on the minus side.

#pragma once

#include <string>
#include <vector>

namespace stokesmac {

class Expression {
public:
    static Expression parse(const std::string& text);  // throws on syntax errors

    double eval(double x, double y, double side = 1.0) const;
    const std::string& text() const { return text_; }

private:
    enum class Op { Num, VarX, VarY, Add, Sub, Mul, Div, Pow, Neg, Sin, Cos, Exp, Sqrt, Pw };
    struct Node {
        Op op;
        double value = 0.0;
        int a = -1, b = -1;
    };

    double eval_node(int idx, double x, double y, double side) const;

    std::string text_;
    std::vector<Node> nodes_;
    int root_ = -1;

    friend class ExpressionParser;
};

}  // namespace stokesmac
