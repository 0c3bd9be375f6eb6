#include "holab/scalar_function.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <limits>

namespace holab {

namespace {

enum class Op : std::uint8_t {
    PushConst,
    PushVar,
    Add,
    Sub,
    Mul,
    Div,
    Neg,
    PowConst, // operand: the exponent
    Exp,
    Log,
    Sinh,
    Cosh,
    Tanh,
    Sin,
    Cos,
    Table, // operand index: which spline
};

struct Instr {
    Op op;
    double operand = 0.0;
    std::uint32_t index = 0;
};

[[noreturn]] void domain_fail(const char* what, double x) {
    char buf[128];
    std::snprintf(buf, sizeof(buf), "%s (at argument %.17g)", what, x);
    throw DomainError(buf);
}

bool is_integer(double c) {
    return std::abs(c - std::round(c)) < 1e-12 && std::abs(c) < 1e15;
}

// f^c for constant c with chain rule. Handles f <= 0 for integer c.
Jet2 pow_const(const Jet2& f, double c) {
    if (c == 0.0) return {1.0, 0.0, 0.0};
    if (c == 1.0) return f;
    if (is_integer(c)) {
        double k = std::round(c);
        if (f.v == 0.0 && k < 0.0) domain_fail("zero raised to negative power", f.v);
        double vk = std::pow(f.v, k);
        double vk1 = (f.v == 0.0) ? (k == 1.0 ? 1.0 : 0.0) : std::pow(f.v, k - 1.0);
        double vk2 = (f.v == 0.0) ? (k == 2.0 ? 1.0 : 0.0) : std::pow(f.v, k - 2.0);
        double d1 = k * vk1 * f.d1;
        double d2 = k * (k - 1.0) * vk2 * f.d1 * f.d1 + k * vk1 * f.d2;
        return {vk, d1, d2};
    }
    if (f.v < 0.0) domain_fail("negative base with non-integer exponent", f.v);
    double vk = std::pow(f.v, c);
    double vk1 = std::pow(f.v, c - 1.0);
    double vk2 = std::pow(f.v, c - 2.0);
    return {vk, c * vk1 * f.d1,
            c * (c - 1.0) * vk2 * f.d1 * f.d1 + c * vk1 * f.d2};
}

} // namespace

// ---------------------------------------------------------------------------
// CubicSpline

CubicSpline::CubicSpline(std::vector<std::pair<double, double>> points) {
    if (points.size() < 2) throw ConstructionError("cubic table needs at least 2 points");
    std::sort(points.begin(), points.end());
    const std::size_t n = points.size();
    x_.resize(n);
    y_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        x_[i] = points[i].first;
        y_[i] = points[i].second;
        if (i > 0 && !(x_[i] > x_[i - 1]))
            throw ConstructionError("cubic table knots must be strictly increasing");
    }
    // Natural spline: solve tridiagonal system for interior second derivatives.
    m_.assign(n, 0.0);
    if (n > 2) {
        std::vector<double> diag(n, 0.0), rhs(n, 0.0), upper(n, 0.0);
        for (std::size_t i = 1; i + 1 < n; ++i) {
            double h0 = x_[i] - x_[i - 1];
            double h1 = x_[i + 1] - x_[i];
            diag[i] = 2.0 * (h0 + h1);
            upper[i] = h1;
            rhs[i] = 6.0 * ((y_[i + 1] - y_[i]) / h1 - (y_[i] - y_[i - 1]) / h0);
        }
        // Thomas algorithm on indices 1..n-2 (lower diagonal equals previous h).
        for (std::size_t i = 2; i + 1 < n; ++i) {
            double h0 = x_[i] - x_[i - 1];
            double w = h0 / diag[i - 1];
            diag[i] -= w * upper[i - 1];
            rhs[i] -= w * rhs[i - 1];
        }
        for (std::size_t i = n - 2; i >= 1; --i) {
            m_[i] = (rhs[i] - upper[i] * m_[i + 1]) / diag[i];
            if (i == 1) break;
        }
    }
}

std::size_t CubicSpline::locate(double x) const {
    auto it = std::upper_bound(x_.begin(), x_.end(), x);
    std::size_t i = static_cast<std::size_t>(it - x_.begin());
    if (i == 0) return 0;
    if (i >= x_.size()) return x_.size() - 2;
    return i - 1;
}

Jet2 CubicSpline::eval_on_segment(std::size_t seg, double x) const {
    double h = x_[seg + 1] - x_[seg];
    double a = (x_[seg + 1] - x) / h;
    double b = (x - x_[seg]) / h;
    double v = a * y_[seg] + b * y_[seg + 1] +
               ((a * a * a - a) * m_[seg] + (b * b * b - b) * m_[seg + 1]) * h * h / 6.0;
    double d1 = (y_[seg + 1] - y_[seg]) / h -
                (3.0 * a * a - 1.0) / 6.0 * h * m_[seg] +
                (3.0 * b * b - 1.0) / 6.0 * h * m_[seg + 1];
    double d2 = a * m_[seg] + b * m_[seg + 1];
    return {v, d1, d2};
}

Jet2 CubicSpline::eval(double x) const {
    if (x < x_.front() || x > x_.back())
        domain_fail("argument outside table range", x);
    return eval_on_segment(locate(x), x);
}

// ---------------------------------------------------------------------------
// ScalarFunction impl + tape evaluation

struct ScalarFunction::Impl {
    std::vector<Instr> tape;
    std::vector<CubicSpline> tables;
    Interval domain;
    std::string source;
    std::string var = "x";
    bool interpolated = false;
    std::size_t stack_need = 0;
};

namespace {
constexpr std::size_t kMaxStack = 64;
} // namespace

double ScalarFunction::value(double x) const {
    const Impl& im = *impl_;
    if (!im.domain.contains(x)) domain_fail("argument outside declared domain", x);
    double stack[kMaxStack];
    std::size_t top = 0;
    for (const Instr& in : im.tape) {
        switch (in.op) {
            case Op::PushConst: stack[top++] = in.operand; break;
            case Op::PushVar: stack[top++] = x; break;
            case Op::Add: --top; stack[top - 1] += stack[top]; break;
            case Op::Sub: --top; stack[top - 1] -= stack[top]; break;
            case Op::Mul: --top; stack[top - 1] *= stack[top]; break;
            case Op::Div:
                --top;
                if (stack[top] == 0.0) domain_fail("division by zero", x);
                stack[top - 1] /= stack[top];
                break;
            case Op::Neg: stack[top - 1] = -stack[top - 1]; break;
            case Op::PowConst: {
                double& b = stack[top - 1];
                double c = in.operand;
                if (!is_integer(c) && b < 0.0)
                    domain_fail("negative base with non-integer exponent", x);
                if (b == 0.0 && c < 0.0) domain_fail("zero raised to negative power", x);
                b = std::pow(b, c);
                break;
            }
            case Op::Exp: stack[top - 1] = std::exp(stack[top - 1]); break;
            case Op::Log:
                if (stack[top - 1] <= 0.0) domain_fail("log of non-positive value", x);
                stack[top - 1] = std::log(stack[top - 1]);
                break;
            case Op::Sinh: stack[top - 1] = std::sinh(stack[top - 1]); break;
            case Op::Cosh: stack[top - 1] = std::cosh(stack[top - 1]); break;
            case Op::Tanh: stack[top - 1] = std::tanh(stack[top - 1]); break;
            case Op::Sin: stack[top - 1] = std::sin(stack[top - 1]); break;
            case Op::Cos: stack[top - 1] = std::cos(stack[top - 1]); break;
            case Op::Table: {
                const CubicSpline& t = im.tables[in.index];
                double u = stack[top - 1];
                if (u < t.x_min() || u > t.x_max())
                    domain_fail("argument outside table range", x);
                stack[top - 1] = t.eval(u).v;
                break;
            }
        }
    }
    double v = stack[0];
    if (std::isnan(v)) throw NonFiniteError("evaluation produced NaN");
    return v;
}

std::pair<double, double> ScalarFunction::value_d1(double x) const {
    const Impl& im = *impl_;
    if (!im.domain.contains(x)) domain_fail("argument outside declared domain", x);
    double sv[kMaxStack], sd[kMaxStack];
    std::size_t top = 0;
    for (const Instr& in : im.tape) {
        switch (in.op) {
            case Op::PushConst: sv[top] = in.operand; sd[top] = 0.0; ++top; break;
            case Op::PushVar: sv[top] = x; sd[top] = 1.0; ++top; break;
            case Op::Add: --top; sv[top - 1] += sv[top]; sd[top - 1] += sd[top]; break;
            case Op::Sub: --top; sv[top - 1] -= sv[top]; sd[top - 1] -= sd[top]; break;
            case Op::Mul: {
                --top;
                double av = sv[top - 1], ad = sd[top - 1];
                sv[top - 1] = av * sv[top];
                sd[top - 1] = ad * sv[top] + av * sd[top];
                break;
            }
            case Op::Div: {
                --top;
                if (sv[top] == 0.0) domain_fail("division by zero", x);
                double q = sv[top - 1] / sv[top];
                sd[top - 1] = (sd[top - 1] - q * sd[top]) / sv[top];
                sv[top - 1] = q;
                break;
            }
            case Op::Neg: sv[top - 1] = -sv[top - 1]; sd[top - 1] = -sd[top - 1]; break;
            case Op::PowConst: {
                Jet2 r = pow_const({sv[top - 1], sd[top - 1], 0.0}, in.operand);
                sv[top - 1] = r.v;
                sd[top - 1] = r.d1;
                break;
            }
            case Op::Exp: {
                double e = std::exp(sv[top - 1]);
                sv[top - 1] = e;
                sd[top - 1] *= e;
                break;
            }
            case Op::Log:
                if (sv[top - 1] <= 0.0) domain_fail("log of non-positive value", x);
                sd[top - 1] /= sv[top - 1];
                sv[top - 1] = std::log(sv[top - 1]);
                break;
            case Op::Sinh: {
                double s = std::sinh(sv[top - 1]);
                sd[top - 1] *= std::cosh(sv[top - 1]);
                sv[top - 1] = s;
                break;
            }
            case Op::Cosh: {
                double c = std::cosh(sv[top - 1]);
                sd[top - 1] *= std::sinh(sv[top - 1]);
                sv[top - 1] = c;
                break;
            }
            case Op::Tanh: {
                double t = std::tanh(sv[top - 1]);
                sd[top - 1] *= 1.0 - t * t;
                sv[top - 1] = t;
                break;
            }
            case Op::Sin: {
                double s = std::sin(sv[top - 1]);
                sd[top - 1] *= std::cos(sv[top - 1]);
                sv[top - 1] = s;
                break;
            }
            case Op::Cos: {
                double c = std::cos(sv[top - 1]);
                sd[top - 1] *= -std::sin(sv[top - 1]);
                sv[top - 1] = c;
                break;
            }
            case Op::Table: {
                const CubicSpline& t = im.tables[in.index];
                double u = sv[top - 1];
                if (u < t.x_min() || u > t.x_max())
                    domain_fail("argument outside table range", x);
                Jet2 r = t.eval(u);
                sv[top - 1] = r.v;
                sd[top - 1] *= r.d1;
                break;
            }
        }
    }
    if (std::isnan(sv[0]) || std::isnan(sd[0]))
        throw NonFiniteError("evaluation produced NaN");
    return {sv[0], sd[0]};
}

Jet2 ScalarFunction::jet(double x) const {
    const Impl& im = *impl_;
    if (!im.domain.contains(x)) domain_fail("argument outside declared domain", x);
    Jet2 stack[kMaxStack];
    std::size_t top = 0;
    for (const Instr& in : im.tape) {
        switch (in.op) {
            case Op::PushConst: stack[top++] = {in.operand, 0.0, 0.0}; break;
            case Op::PushVar: stack[top++] = {x, 1.0, 0.0}; break;
            case Op::Add: {
                --top;
                Jet2& a = stack[top - 1];
                a.v += stack[top].v; a.d1 += stack[top].d1; a.d2 += stack[top].d2;
                break;
            }
            case Op::Sub: {
                --top;
                Jet2& a = stack[top - 1];
                a.v -= stack[top].v; a.d1 -= stack[top].d1; a.d2 -= stack[top].d2;
                break;
            }
            case Op::Mul: {
                --top;
                Jet2 a = stack[top - 1], b = stack[top];
                stack[top - 1] = {a.v * b.v, a.d1 * b.v + a.v * b.d1,
                                  a.d2 * b.v + 2.0 * a.d1 * b.d1 + a.v * b.d2};
                break;
            }
            case Op::Div: {
                --top;
                Jet2 a = stack[top - 1], b = stack[top];
                if (b.v == 0.0) domain_fail("division by zero", x);
                double q = a.v / b.v;
                double q1 = (a.d1 - q * b.d1) / b.v;
                double q2 = (a.d2 - 2.0 * q1 * b.d1 - q * b.d2) / b.v;
                stack[top - 1] = {q, q1, q2};
                break;
            }
            case Op::Neg: {
                Jet2& a = stack[top - 1];
                a.v = -a.v; a.d1 = -a.d1; a.d2 = -a.d2;
                break;
            }
            case Op::PowConst: stack[top - 1] = pow_const(stack[top - 1], in.operand); break;
            case Op::Exp: {
                Jet2 a = stack[top - 1];
                double e = std::exp(a.v);
                stack[top - 1] = {e, e * a.d1, e * (a.d2 + a.d1 * a.d1)};
                break;
            }
            case Op::Log: {
                Jet2 a = stack[top - 1];
                if (a.v <= 0.0) domain_fail("log of non-positive value", x);
                double r = a.d1 / a.v;
                stack[top - 1] = {std::log(a.v), r, a.d2 / a.v - r * r};
                break;
            }
            case Op::Sinh: {
                Jet2 a = stack[top - 1];
                double s = std::sinh(a.v), c = std::cosh(a.v);
                stack[top - 1] = {s, c * a.d1, s * a.d1 * a.d1 + c * a.d2};
                break;
            }
            case Op::Cosh: {
                Jet2 a = stack[top - 1];
                double s = std::sinh(a.v), c = std::cosh(a.v);
                stack[top - 1] = {c, s * a.d1, c * a.d1 * a.d1 + s * a.d2};
                break;
            }
            case Op::Tanh: {
                Jet2 a = stack[top - 1];
                double t = std::tanh(a.v);
                double sech2 = 1.0 - t * t;
                stack[top - 1] = {t, sech2 * a.d1,
                                  sech2 * a.d2 - 2.0 * t * sech2 * a.d1 * a.d1};
                break;
            }
            case Op::Sin: {
                Jet2 a = stack[top - 1];
                double s = std::sin(a.v), c = std::cos(a.v);
                stack[top - 1] = {s, c * a.d1, -s * a.d1 * a.d1 + c * a.d2};
                break;
            }
            case Op::Cos: {
                Jet2 a = stack[top - 1];
                double s = std::sin(a.v), c = std::cos(a.v);
                stack[top - 1] = {c, -s * a.d1, -c * a.d1 * a.d1 - s * a.d2};
                break;
            }
            case Op::Table: {
                const CubicSpline& t = im.tables[in.index];
                Jet2 a = stack[top - 1];
                if (a.v < t.x_min() || a.v > t.x_max())
                    domain_fail("argument outside table range", x);
                Jet2 r = t.eval(a.v);
                stack[top - 1] = {r.v, r.d1 * a.d1,
                                  r.d2 * a.d1 * a.d1 + r.d1 * a.d2};
                break;
            }
        }
    }
    Jet2 out = stack[0];
    if (!std::isfinite(out.v) || !std::isfinite(out.d1) || !std::isfinite(out.d2))
        throw NonFiniteError("jet evaluation produced a non-finite entry");
    return out;
}

// ---------------------------------------------------------------------------
// Parser: conventional infix grammar over one free variable.
//
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := ('-'|'+') factor | power
//   power  := atom ('^' factor)?          (right associative)
//   atom   := number | 'pi' | 'e' | func '(' expr ')' | ident | '(' expr ')'
//
// A constant exponent becomes a PowConst instruction; a variable exponent
// b^e is lowered to exp(e*log(b)).

namespace {

struct Parser {
    const std::string& s;
    std::size_t pos = 0;
    std::vector<Instr> tape;
    std::string var; // fixed by first non-reserved identifier

    explicit Parser(const std::string& text) : s(text) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& msg) {
        throw ParseError("parse error at position " + std::to_string(pos) + ": " + msg +
                         " in \"" + s + "\"");
    }

    void emit(Op op, double operand = 0.0) { tape.push_back({op, operand, 0}); }

    // True when the instructions [from, end) contain no PushVar, i.e. the
    // subexpression is a constant; if so fold it to its value.
    bool try_fold_const(std::size_t from, double& out) {
        for (std::size_t i = from; i < tape.size(); ++i)
            if (tape[i].op == Op::PushVar || tape[i].op == Op::Table) return false;
        std::vector<Instr> sub(tape.begin() + static_cast<std::ptrdiff_t>(from), tape.end());
        // Evaluate the constant subprogram with a scratch interpreter.
        double stack[kMaxStack];
        std::size_t top = 0;
        for (const Instr& in : sub) {
            switch (in.op) {
                case Op::PushConst: stack[top++] = in.operand; break;
                case Op::Add: --top; stack[top - 1] += stack[top]; break;
                case Op::Sub: --top; stack[top - 1] -= stack[top]; break;
                case Op::Mul: --top; stack[top - 1] *= stack[top]; break;
                case Op::Div:
                    --top;
                    if (stack[top] == 0.0) fail("division by zero in constant expression");
                    stack[top - 1] /= stack[top];
                    break;
                case Op::Neg: stack[top - 1] = -stack[top - 1]; break;
                case Op::PowConst: stack[top - 1] = std::pow(stack[top - 1], in.operand); break;
                case Op::Exp: stack[top - 1] = std::exp(stack[top - 1]); break;
                case Op::Log: stack[top - 1] = std::log(stack[top - 1]); break;
                case Op::Sinh: stack[top - 1] = std::sinh(stack[top - 1]); break;
                case Op::Cosh: stack[top - 1] = std::cosh(stack[top - 1]); break;
                case Op::Tanh: stack[top - 1] = std::tanh(stack[top - 1]); break;
                case Op::Sin: stack[top - 1] = std::sin(stack[top - 1]); break;
                case Op::Cos: stack[top - 1] = std::cos(stack[top - 1]); break;
                default: return false;
            }
        }
        out = stack[0];
        tape.resize(from);
        return true;
    }

    void parse_expr() {
        parse_term();
        for (;;) {
            skip_ws();
            if (eat('+')) {
                parse_term();
                emit(Op::Add);
            } else if (eat('-')) {
                parse_term();
                emit(Op::Sub);
            } else {
                return;
            }
        }
    }

    void parse_term() {
        parse_factor();
        for (;;) {
            skip_ws();
            if (eat('*')) {
                parse_factor();
                emit(Op::Mul);
            } else if (eat('/')) {
                parse_factor();
                emit(Op::Div);
            } else {
                return;
            }
        }
    }

    void parse_factor() {
        skip_ws();
        if (eat('-')) {
            parse_factor();
            emit(Op::Neg);
            return;
        }
        if (eat('+')) {
            parse_factor();
            return;
        }
        parse_power();
    }

    void parse_power() {
        parse_atom();
        skip_ws();
        if (pos < s.size() && s[pos] == '^') {
            ++pos;
            std::size_t mark = tape.size();
            parse_factor(); // right associative, allows -  in exponent
            double c;
            if (try_fold_const(mark, c)) {
                emit(Op::PowConst, c);
            } else {
                // b^e with variable exponent: rewrite as exp(e*log(b)).
                // Tape currently holds [... b-code ... e-code]; appending
                // Log would apply to e, so rebuild: b-code Log e-code Mul Exp.
                std::size_t b_end = mark;
                std::vector<Instr> e_code(tape.begin() + static_cast<std::ptrdiff_t>(b_end),
                                          tape.end());
                tape.resize(b_end);
                emit(Op::Log);
                tape.insert(tape.end(), e_code.begin(), e_code.end());
                emit(Op::Mul);
                emit(Op::Exp);
            }
        }
    }

    void parse_atom() {
        skip_ws();
        if (pos >= s.size()) fail("unexpected end of expression");
        char c = s[pos];
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            const char* begin = s.c_str() + pos;
            char* end = nullptr;
            double v = std::strtod(begin, &end);
            if (end == begin) fail("bad number");
            pos += static_cast<std::size_t>(end - begin);
            emit(Op::PushConst, v);
            return;
        }
        if (c == '(') {
            ++pos;
            parse_expr();
            if (!eat(')')) fail("missing ')'");
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos;
            while (pos < s.size() &&
                   (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
                ++pos;
            std::string name = s.substr(start, pos - start);
            skip_ws();
            bool call = pos < s.size() && s[pos] == '(';
            if (call) {
                Op op;
                bool is_sqrt = false;
                if (name == "exp") op = Op::Exp;
                else if (name == "log" || name == "ln") op = Op::Log;
                else if (name == "sinh") op = Op::Sinh;
                else if (name == "cosh") op = Op::Cosh;
                else if (name == "tanh") op = Op::Tanh;
                else if (name == "sin") op = Op::Sin;
                else if (name == "cos") op = Op::Cos;
                else if (name == "sqrt") { op = Op::PowConst; is_sqrt = true; }
                else fail("unknown function '" + name + "'");
                ++pos; // '('
                parse_expr();
                if (!eat(')')) fail("missing ')' after argument of " + name);
                if (is_sqrt) emit(Op::PowConst, 0.5);
                else emit(op);
                return;
            }
            if (name == "pi") {
                emit(Op::PushConst, 3.14159265358979323846);
                return;
            }
            if (name == "e") {
                emit(Op::PushConst, 2.71828182845904523536);
                return;
            }
            if (var.empty()) var = name;
            else if (name != var)
                fail("expression uses more than one variable ('" + var + "' and '" + name + "')");
            emit(Op::PushVar);
            return;
        }
        fail(std::string("unexpected character '") + c + "'");
    }
};

std::size_t stack_need(const std::vector<Instr>& tape) {
    std::size_t top = 0, peak = 0;
    for (const Instr& in : tape) {
        switch (in.op) {
            case Op::PushConst:
            case Op::PushVar: ++top; break;
            case Op::Add:
            case Op::Sub:
            case Op::Mul:
            case Op::Div: --top; break;
            default: break; // unary
        }
        peak = std::max(peak, top);
    }
    return peak;
}

} // namespace

ScalarFunction ScalarFunction::parse(const std::string& expr, Interval domain) {
    Parser p(expr);
    p.parse_expr();
    p.skip_ws();
    if (p.pos != expr.size()) p.fail("trailing input");
    auto impl = std::make_shared<Impl>();
    impl->tape = std::move(p.tape);
    impl->domain = domain;
    impl->source = expr;
    impl->var = p.var.empty() ? "x" : p.var;
    impl->stack_need = stack_need(impl->tape);
    if (impl->stack_need > kMaxStack)
        throw ParseError("expression too deeply nested");
    ScalarFunction f;
    f.impl_ = std::move(impl);
    return f;
}

ScalarFunction ScalarFunction::cubic_table(std::vector<std::pair<double, double>> points) {
    auto impl = std::make_shared<Impl>();
    impl->tables.emplace_back(std::move(points));
    const CubicSpline& t = impl->tables.front();
    impl->tape = {{Op::PushVar, 0.0, 0}, {Op::Table, 0.0, 0}};
    impl->domain = Interval::closed(t.x_min(), t.x_max());
    impl->source = "table[" + std::to_string(t.segments() + 1) + " points]";
    impl->var = "x";
    impl->interpolated = true;
    impl->stack_need = 1;
    ScalarFunction f;
    f.impl_ = std::move(impl);
    return f;
}

ScalarFunction ScalarFunction::constant(double c) {
    auto impl = std::make_shared<Impl>();
    impl->tape = {{Op::PushConst, c, 0}};
    impl->domain = Interval::all();
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", c);
    impl->source = buf;
    impl->stack_need = 1;
    ScalarFunction f;
    f.impl_ = std::move(impl);
    return f;
}

const Interval& ScalarFunction::domain() const { return impl_->domain; }
const std::string& ScalarFunction::source() const { return impl_->source; }
const std::string& ScalarFunction::variable() const { return impl_->var; }
bool ScalarFunction::interpolated() const { return impl_->interpolated; }

// ---------------------------------------------------------------------------

Jet2 eval_jet2(const ScalarFunction& fn, double x) { return fn.jet(x); }

double log_second_derivative(const ScalarFunction& fn, double x) {
    Jet2 j = fn.jet(x);
    if (j.v <= 0.0) throw DomainError("(log f)'' requires f(x) > 0");
    double r = j.d1 / j.v;
    return j.d2 / j.v - r * r;
}

double hubble(const ScalarFunction& fn, double x) {
    auto [v, d1] = fn.value_d1(x);
    if (v <= 0.0) throw DomainError("f'/f requires f(x) > 0");
    return d1 / v;
}

} // namespace holab
