#pragma once

// A small expression language for operator identities.
//
//   expr   := term (('+' | '-') term)*
//   term   := unary (('*' | '/') unary)*
//   unary  := '-' unary | primary
//   primary:= number | '(' expr ')' | '[' expr ',' expr ']' | name | name '(' args ')'
//
// Builtins: i, sqrt(q), w8(e) = e^{i pi e/4}, d(a,b) (Kronecker delta),
// nn(a) = [a >= 0], sum(j, lo, hi, expr). Any catalog name is a generator;
// integer arguments are integer expressions, IB takes two field scalars.
// A scalar used where an operator is needed means scalar times I.

#include "chk/catalog.hpp"

#include <cctype>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace chk::dsl {

class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

enum class Kind { Num, Imag, Var, Add, Sub, Mul, Div, Neg, Bracket, Sqrt, W8, Delta, NonNeg, Sum, Gen, Unit };

struct Node {
    Kind kind = Kind::Num;
    Rational num;
    int slot = -1;  // Var, Sum
    const CatalogEntry* entry = nullptr;
    std::vector<std::unique_ptr<Node>> kids;
};
using NodePtr = std::unique_ptr<Node>;

/// Symbol table shared between the parameters of a relation and sum variables.
struct Symbols {
    std::vector<std::string> names;
    std::size_t n_params = 0;  // leading names that are relation parameters

    int find(std::string_view n) const {
        for (std::size_t i = 0; i < names.size(); ++i) {
            if (names[i] == n) return static_cast<int>(i);
        }
        return -1;
    }
    int add(std::string n) {
        names.push_back(std::move(n));
        return static_cast<int>(names.size()) - 1;
    }
};

enum class CmpOp { Eq, Ne, Lt, Le, Gt, Ge };

struct Comparison {
    NodePtr a, b;
    CmpOp op = CmpOp::Eq;
};

class Parser {
public:
    Parser(std::string_view text, Symbols& syms) : s_(text), syms_(syms) {}

    NodePtr parse_expression() {
        NodePtr e = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected trailing input");
        return e;
    }

    /// cond := cmp ('&&' cmp)*   (empty text means no condition)
    std::vector<Comparison> parse_condition() {
        std::vector<Comparison> out;
        skip_ws();
        if (pos_ == s_.size()) return out;
        for (;;) {
            Comparison c;
            c.a = expr();
            skip_ws();
            static constexpr std::pair<std::string_view, CmpOp> ops[] = {{"==", CmpOp::Eq}, {"!=", CmpOp::Ne},
                                                                          {"<=", CmpOp::Le}, {">=", CmpOp::Ge},
                                                                          {"<", CmpOp::Lt},  {">", CmpOp::Gt}};
            bool found = false;
            for (const auto& [tok, op] : ops) {
                if (s_.substr(pos_, tok.size()) == tok) {
                    pos_ += tok.size();
                    c.op = op;
                    found = true;
                    break;
                }
            }
            if (!found) fail("expected comparison operator");
            c.b = expr();
            out.push_back(std::move(c));
            skip_ws();
            if (pos_ == s_.size()) break;
            if (s_.substr(pos_, 2) != "&&") fail("expected &&");
            pos_ += 2;
        }
        return out;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError(what + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!eat(c)) fail(std::string("expected '") + c + "'");
    }

    static NodePtr make(Kind k, NodePtr a = nullptr, NodePtr b = nullptr) {
        auto n = std::make_unique<Node>();
        n->kind = k;
        if (a) n->kids.push_back(std::move(a));
        if (b) n->kids.push_back(std::move(b));
        return n;
    }

    NodePtr expr() {
        NodePtr l = term();
        for (;;) {
            if (eat('+')) {
                l = make(Kind::Add, std::move(l), term());
            } else if (peek_minus()) {
                ++pos_;
                l = make(Kind::Sub, std::move(l), term());
            } else {
                return l;
            }
        }
    }

    bool peek_minus() {
        skip_ws();
        return pos_ < s_.size() && s_[pos_] == '-';
    }

    NodePtr term() {
        NodePtr l = unary();
        for (;;) {
            if (eat('*')) {
                l = make(Kind::Mul, std::move(l), unary());
            } else if (eat('/')) {
                l = make(Kind::Div, std::move(l), unary());
            } else {
                return l;
            }
        }
    }

    NodePtr unary() {
        if (eat('-')) return make(Kind::Neg, unary());
        return primary();
    }

    std::string ident() {
        skip_ws();
        std::size_t b = pos_;
        while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
        return std::string(s_.substr(b, pos_ - b));
    }

    std::vector<NodePtr> args() {
        std::vector<NodePtr> a;
        expect('(');
        if (eat(')')) return a;
        do {
            a.push_back(expr());
        } while (eat(','));
        expect(')');
        return a;
    }

    NodePtr primary() {
        skip_ws();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::int64_t v = 0;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                v = v * 10 + (s_[pos_] - '0');
                ++pos_;
            }
            auto n = make(Kind::Num);
            n->num = Rational(v);
            return n;
        }
        if (eat('(')) {
            NodePtr e = expr();
            expect(')');
            return e;
        }
        if (eat('[')) {
            NodePtr a = expr();
            expect(',');
            NodePtr b = expr();
            expect(']');
            return make(Kind::Bracket, std::move(a), std::move(b));
        }
        std::string name = ident();
        if (name.empty()) fail("expected a term");
        if (name == "sum") return sum();
        skip_ws();
        bool call = pos_ < s_.size() && s_[pos_] == '(';
        if (name == "i" && !call) return make(Kind::Imag);
        int slot = syms_.find(name);
        if (slot >= 0 && !call) {
            auto n = make(Kind::Var);
            n->slot = slot;
            return n;
        }
        auto builtin = [&](Kind k, std::size_t arity) {
            auto n = make(k);
            n->kids = args();
            if (n->kids.size() != arity) fail(name + " expects " + std::to_string(arity) + " arguments");
            return n;
        };
        if (name == "sqrt") return builtin(Kind::Sqrt, 1);
        if (name == "w8") return builtin(Kind::W8, 1);
        if (name == "d") return builtin(Kind::Delta, 2);
        if (name == "nn") return builtin(Kind::NonNeg, 1);
        const CatalogEntry* e = find_entry(name);
        if (!e) fail("unknown name '" + name + "'");
        auto n = make(name == "P" ? Kind::Unit : Kind::Gen);
        n->entry = e;
        if (call) n->kids = args();
        if (static_cast<int>(n->kids.size()) != e->n_ints + e->n_scalars) fail("wrong argument count for " + name);
        return n;
    }

    NodePtr sum() {
        expect('(');
        std::string var = ident();
        int slot = syms_.find(var);
        if (var.empty() || (slot >= 0 && static_cast<std::size_t>(slot) < syms_.n_params)) {
            fail("sum variable must not shadow a parameter");
        }
        expect(',');
        NodePtr lo = expr();
        expect(',');
        NodePtr hi = expr();
        expect(',');
        if (slot < 0) slot = syms_.add(var);
        NodePtr body = expr();
        expect(')');
        auto n = make(Kind::Sum, std::move(lo), std::move(hi));
        n->kids.push_back(std::move(body));
        n->slot = slot;
        return n;
    }

    std::string_view s_;
    std::size_t pos_ = 0;
    Symbols& syms_;
};

/// A scalar or an operator.
struct Value {
    bool is_op = false;
    FieldElem s;
    SparseOp op;
};

class EvalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class Evaluator {
public:
    Evaluator(Catalog& cat, std::vector<int>& env) : cat_(cat), env_(env) {}

    Value eval(const Node& n) {
        switch (n.kind) {
            case Kind::Num: return scalar(FieldElem(n.num));
            case Kind::Imag: return scalar(FieldElem::i());
            case Kind::Var: return scalar(FieldElem(env_[static_cast<std::size_t>(n.slot)]));
            case Kind::Neg: {
                Value v = eval(*n.kids[0]);
                if (v.is_op) return op(-v.op);
                return scalar(-v.s);
            }
            case Kind::Add:
            case Kind::Sub: return add(eval(*n.kids[0]), eval(*n.kids[1]), n.kind == Kind::Sub);
            case Kind::Mul: {
                Value a = eval(*n.kids[0]);
                if (!a.is_op && a.s.is_zero()) return a;
                Value b = eval(*n.kids[1]);
                if (!a.is_op && !b.is_op) return scalar(a.s * b.s);
                if (!a.is_op) return op(b.op.scaled(a.s));
                if (!b.is_op) return op(a.op.scaled(b.s));
                return op(a.op * b.op);
            }
            case Kind::Div: {
                Value a = eval(*n.kids[0]);
                Value b = eval(*n.kids[1]);
                if (b.is_op) throw EvalError("division by an operator");
                if (b.s.is_zero()) throw EvalError("division by zero");
                FieldElem inv = b.s.inverse();
                if (a.is_op) return op(a.op.scaled(inv));
                return scalar(a.s * inv);
            }
            case Kind::Bracket: {
                Value a = eval(*n.kids[0]);
                Value b = eval(*n.kids[1]);
                if (!a.is_op || !b.is_op) return scalar(FieldElem(0));
                return op(commutator(a.op, b.op));
            }
            case Kind::Sqrt: {
                Value a = eval(*n.kids[0]);
                if (a.is_op || !a.s.is_rational()) throw EvalError("sqrt needs a rational argument");
                return scalar(FieldElem::sqrt_of(a.s[0]));
            }
            case Kind::W8: return scalar(FieldElem::eighth_root(integer(*n.kids[0])));
            case Kind::Delta: return scalar(FieldElem(integer(*n.kids[0]) == integer(*n.kids[1]) ? 1 : 0));
            case Kind::NonNeg: return scalar(FieldElem(integer(*n.kids[0]) >= 0 ? 1 : 0));
            case Kind::Sum: {
                std::int64_t lo = integer(*n.kids[0]);
                std::int64_t hi = integer(*n.kids[1]);
                Value acc = scalar(FieldElem(0));
                auto& slot = env_.at(static_cast<std::size_t>(n.slot));
                for (std::int64_t j = lo; j <= hi; ++j) {
                    slot = static_cast<int>(j);
                    acc = add(std::move(acc), eval(*n.kids[2]), false);
                }
                return acc;
            }
            case Kind::Unit: {
                std::array<int, 4> a{};
                for (std::size_t k = 0; k < 4; ++k) a[k] = static_cast<int>(integer(*n.kids[k]));
                return op(SparseOp::matrix_unit(cat_.cutoff(), a[0], a[1], a[2], a[3]));
            }
            case Kind::Gen: {
                GeneratorId id{n.entry->name, {}, {}};
                std::size_t k = 0;
                for (; k < static_cast<std::size_t>(n.entry->n_ints); ++k) {
                    id.ints.push_back(static_cast<int>(integer(*n.kids[k])));
                }
                for (; k < n.kids.size(); ++k) {
                    Value v = eval(*n.kids[k]);
                    if (v.is_op) throw EvalError("scalar argument expected");
                    id.scalars.push_back(v.s);
                }
                return op(cat_.build(id));
            }
        }
        throw EvalError("bad node");
    }

    std::int64_t integer(const Node& n) {
        switch (n.kind) {
            case Kind::Num: return n.num.to_int64();
            case Kind::Var: return env_[static_cast<std::size_t>(n.slot)];
            case Kind::Add: return integer(*n.kids[0]) + integer(*n.kids[1]);
            case Kind::Sub: return integer(*n.kids[0]) - integer(*n.kids[1]);
            case Kind::Mul: return integer(*n.kids[0]) * integer(*n.kids[1]);
            case Kind::Neg: return -integer(*n.kids[0]);
            default: break;
        }
        Value v = eval(n);
        if (v.is_op || !v.s.is_rational() || !v.s[0].is_integer()) throw EvalError("integer expected");
        return v.s[0].to_int64();
    }

    bool holds(const std::vector<Comparison>& cond) {
        for (const auto& c : cond) {
            std::int64_t a = integer(*c.a);
            std::int64_t b = integer(*c.b);
            bool ok = false;
            switch (c.op) {
                case CmpOp::Eq: ok = a == b; break;
                case CmpOp::Ne: ok = a != b; break;
                case CmpOp::Lt: ok = a < b; break;
                case CmpOp::Le: ok = a <= b; break;
                case CmpOp::Gt: ok = a > b; break;
                case CmpOp::Ge: ok = a >= b; break;
            }
            if (!ok) return false;
        }
        return true;
    }

    /// Operator value of an expression (scalars become multiples of I).
    SparseOp as_operator(const Node& n) { return to_op(eval(n)); }

    SparseOp to_op(const Value& v) {
        if (v.is_op) return v.op;
        if (v.s.is_zero()) return SparseOp(cat_.cutoff());
        return cat_.build("I").scaled(v.s);
    }

private:
    static Value scalar(FieldElem f) {
        Value v;
        v.s = std::move(f);
        return v;
    }
    static Value op(SparseOp o) {
        Value v;
        v.is_op = true;
        v.op = std::move(o);
        return v;
    }

    Value add(Value a, Value b, bool subtract) {
        if (!a.is_op && !b.is_op) return scalar(subtract ? a.s - b.s : a.s + b.s);
        if (!a.is_op && a.s.is_zero()) return subtract ? op(-b.op) : b;
        if (!b.is_op && b.s.is_zero()) return a;
        SparseOp x = to_op(a);
        SparseOp y = to_op(b);
        return op(subtract ? x - y : x + y);
    }

    Catalog& cat_;
    std::vector<int>& env_;
};

}  // namespace chk::dsl
