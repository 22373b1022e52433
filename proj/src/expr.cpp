#include "gcdc/expr.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <functional>
#include <unordered_map>
#include <unordered_set>

namespace gcdc {

namespace {

std::size_t mix(std::size_t h, std::size_t v) {
    return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

std::size_t node_hash(const Expr::Node& n) {
    std::size_t h = static_cast<std::size_t>(n.op) * 0x100000001b3ULL;
    h = mix(h, n.index);
    if (n.op == Op::constant) {
        h = mix(h, std::bit_cast<std::uint64_t>(n.value.value));
    }
    if (n.lhs.valid()) {
        h = mix(h, n.lhs.hash());
    }
    if (n.rhs.valid()) {
        h = mix(h, n.rhs.hash());
    }
    return h;
}

bool is_binary(Op op) {
    return op == Op::add || op == Op::sub || op == Op::mul || op == Op::div;
}

bool is_unary(Op op) {
    return op == Op::neg || op == Op::sin || op == Op::cos || op == Op::exp || op == Op::log ||
           op == Op::sqrt || op == Op::pow;
}

double ipow(double base, unsigned n) {
    double result = 1.0;
    for (unsigned i = 0; i < n; ++i) {
        result *= base;
    }
    return result;
}

std::optional<Constant> fold_binary(Op op, const Constant& a, const Constant& b) {
    Constant c;
    switch (op) {
        case Op::add: c.value = a.value + b.value; break;
        case Op::sub: c.value = a.value - b.value; break;
        case Op::mul: c.value = a.value * b.value; break;
        case Op::div:
            if (b.value == 0.0) {
                return std::nullopt;
            }
            c.value = a.value / b.value;
            break;
        default: return std::nullopt;
    }
    if (!std::isfinite(c.value)) {
        return std::nullopt;
    }
    if (a.exact && b.exact) {
        std::optional<Rational> r;
        switch (op) {
            case Op::add: r = add(*a.exact, *b.exact); break;
            case Op::sub: r = sub(*a.exact, *b.exact); break;
            case Op::mul: r = mul(*a.exact, *b.exact); break;
            case Op::div: r = div(*a.exact, *b.exact); break;
            default: break;
        }
        if (r) {
            c.value = r->to_double();
            c.exact = r;
        }
    }
    return c;
}

}  // namespace

namespace {

template <class F>
void visit_dag(const Expr& e, F&& f) {
    std::unordered_set<const Expr::Node*> seen;
    std::vector<Expr> stack{e};
    while (!stack.empty()) {
        Expr x = stack.back();
        stack.pop_back();
        if (!seen.insert(x.id()).second) {
            continue;
        }
        f(x);
        if (x.arity() >= 1) stack.push_back(x.lhs());
        if (x.arity() == 2) stack.push_back(x.rhs());
    }
}

}  // namespace

Expr Expr::var(std::size_t index) {
    Node n;
    n.op = Op::var;
    n.index = static_cast<std::uint32_t>(index);
    n.hash = node_hash(n);
    return Expr(std::make_shared<const Node>(std::move(n)));
}

Expr Expr::constant(double value) {
    if (value == 0.0) {
        return constant(Rational(0));
    }
    Node n;
    n.op = Op::constant;
    n.value.value = value;
    if (value == std::trunc(value) && std::fabs(value) < 9.0e15) {
        n.value.exact = Rational(static_cast<std::int64_t>(value));
    }
    n.hash = node_hash(n);
    return Expr(std::make_shared<const Node>(std::move(n)));
}

Expr Expr::constant(Rational value) {
    Node n;
    n.op = Op::constant;
    n.value.value = value.to_double();
    if (n.value.value == 0.0) {
        n.value.value = 0.0;  // no negative zero
    }
    n.value.exact = value;
    n.hash = node_hash(n);
    return Expr(std::make_shared<const Node>(std::move(n)));
}

Expr Expr::raw(Op op, Expr lhs, Expr rhs) {
    Node n;
    n.op = op;
    n.lhs = std::move(lhs);
    n.rhs = std::move(rhs);
    n.hash = node_hash(n);
    return Expr(std::make_shared<const Node>(std::move(n)));
}

Expr Expr::raw_pow(Expr base, unsigned exponent) {
    Node n;
    n.op = Op::pow;
    n.index = exponent;
    n.lhs = std::move(base);
    n.hash = node_hash(n);
    return Expr(std::make_shared<const Node>(std::move(n)));
}

Op Expr::op() const { return node_->op; }

std::size_t Expr::var_index() const { return node_->index; }

unsigned Expr::exponent() const { return node_->index; }

const Constant& Expr::value() const { return node_->value; }

const Expr& Expr::lhs() const { return node_->lhs; }

const Expr& Expr::rhs() const { return node_->rhs; }

std::size_t Expr::arity() const {
    if (is_binary(op())) {
        return 2;
    }
    return is_unary(op()) ? 1 : 0;
}

std::size_t Expr::hash() const { return node_ ? node_->hash : 0; }

namespace {

Expr negative_constant_abs(const Expr& e) {
    // e is a negative constant; returns |e|.
    if (e.value().exact) {
        return Expr::constant(e.value().exact->negated());
    }
    return Expr::constant(-e.value().value);
}

bool is_negative_constant(const Expr& e) { return e.is_constant() && e.value().value < 0.0; }

}  // namespace

Expr operator+(const Expr& a, const Expr& b) {
    if (a.is_constant() && b.is_constant()) {
        if (auto c = fold_binary(Op::add, a.value(), b.value())) {
            return c->exact ? Expr::constant(*c->exact) : Expr::constant(c->value);
        }
    }
    if (a.is_zero()) {
        return b;
    }
    if (b.is_zero()) {
        return a;
    }
    if (b.op() == Op::neg) {
        return a - b.lhs();
    }
    if (is_negative_constant(b)) {
        return a - negative_constant_abs(b);
    }
    if (a.op() == Op::neg) {
        return b - a.lhs();
    }
    return Expr::raw(Op::add, a, b);
}

Expr operator-(const Expr& a, const Expr& b) {
    if (a.is_constant() && b.is_constant()) {
        if (auto c = fold_binary(Op::sub, a.value(), b.value())) {
            return c->exact ? Expr::constant(*c->exact) : Expr::constant(c->value);
        }
    }
    if (b.is_zero()) {
        return a;
    }
    if (a.is_zero()) {
        return -b;
    }
    if (b.op() == Op::neg) {
        return a + b.lhs();
    }
    if (is_negative_constant(b)) {
        return a + negative_constant_abs(b);
    }
    if (structurally_equal(a, b)) {
        return Expr::constant(Rational(0));
    }
    return Expr::raw(Op::sub, a, b);
}

Expr operator*(const Expr& a, const Expr& b) {
    if (a.is_constant() && b.is_constant()) {
        if (auto c = fold_binary(Op::mul, a.value(), b.value())) {
            return c->exact ? Expr::constant(*c->exact) : Expr::constant(c->value);
        }
    }
    if (a.is_zero() || b.is_zero()) {
        return Expr::constant(Rational(0));
    }
    if (a.is_one()) {
        return b;
    }
    if (b.is_one()) {
        return a;
    }
    if (a.is_constant(-1.0)) {
        return -b;
    }
    if (b.is_constant(-1.0)) {
        return -a;
    }
    if (a.op() == Op::neg && b.op() == Op::neg) {
        return a.lhs() * b.lhs();
    }
    if (a.op() == Op::neg) {
        return -(a.lhs() * b);
    }
    if (b.op() == Op::neg) {
        return -(a * b.lhs());
    }
    if (b.is_constant() && !a.is_constant()) {
        return Expr::raw(Op::mul, b, a);
    }
    return Expr::raw(Op::mul, a, b);
}

Expr operator/(const Expr& a, const Expr& b) {
    if (a.is_constant() && b.is_constant()) {
        if (auto c = fold_binary(Op::div, a.value(), b.value())) {
            return c->exact ? Expr::constant(*c->exact) : Expr::constant(c->value);
        }
    }
    if (a.is_zero()) {
        return a;
    }
    if (b.is_one()) {
        return a;
    }
    if (b.is_constant(-1.0)) {
        return -a;
    }
    if (a.op() == Op::neg) {
        return -(a.lhs() / b);
    }
    if (b.op() == Op::neg) {
        return -(a / b.lhs());
    }
    return Expr::raw(Op::div, a, b);
}

Expr operator-(const Expr& a) {
    if (a.is_constant()) {
        if (a.value().exact) {
            return Expr::constant(a.value().exact->negated());
        }
        return Expr::constant(-a.value().value);
    }
    if (a.op() == Op::neg) {
        return a.lhs();
    }
    if (a.op() == Op::sub) {
        return Expr::raw(Op::sub, a.rhs(), a.lhs());
    }
    return Expr::raw(Op::neg, a);
}

Expr pow(const Expr& base, unsigned exponent) {
    if (exponent == 0) {
        return Expr::constant(Rational(1));
    }
    if (exponent == 1) {
        return base;
    }
    if (base.is_constant()) {
        if (base.value().exact) {
            if (auto r = pow(*base.value().exact, exponent)) {
                return Expr::constant(*r);
            }
        }
        double v = ipow(base.value().value, exponent);
        if (std::isfinite(v)) {
            return Expr::constant(v);
        }
    }
    if (base.op() == Op::neg) {
        Expr inner = pow(base.lhs(), exponent);
        return exponent % 2 == 0 ? inner : -inner;
    }
    return Expr::raw_pow(base, exponent);
}

namespace {

Expr fold_unary(Op op, const Expr& a) {
    double x = a.value().value;
    bool zero_exact = a.value().exact && a.value().exact->num() == 0;
    bool one_exact = a.value().exact && *a.value().exact == Rational(1);
    switch (op) {
        case Op::sin:
            if (zero_exact) return Expr::constant(Rational(0));
            return Expr::constant(std::sin(x));
        case Op::cos:
            if (zero_exact) return Expr::constant(Rational(1));
            return Expr::constant(std::cos(x));
        case Op::exp:
            if (zero_exact) return Expr::constant(Rational(1));
            if (std::isfinite(std::exp(x))) return Expr::constant(std::exp(x));
            break;
        case Op::log:
            if (one_exact) return Expr::constant(Rational(0));
            if (x > 0.0) return Expr::constant(std::log(x));
            break;
        case Op::sqrt:
            if (x > 0.0) return Expr::constant(std::sqrt(x));
            break;
        default: break;
    }
    return Expr::raw(op, a);
}

}  // namespace

Expr sin(const Expr& a) { return a.is_constant() ? fold_unary(Op::sin, a) : Expr::raw(Op::sin, a); }
Expr cos(const Expr& a) { return a.is_constant() ? fold_unary(Op::cos, a) : Expr::raw(Op::cos, a); }
Expr exp(const Expr& a) { return a.is_constant() ? fold_unary(Op::exp, a) : Expr::raw(Op::exp, a); }
Expr log(const Expr& a) { return a.is_constant() ? fold_unary(Op::log, a) : Expr::raw(Op::log, a); }
Expr sqrt(const Expr& a) { return a.is_constant() ? fold_unary(Op::sqrt, a) : Expr::raw(Op::sqrt, a); }

Expr sum(std::span<const Expr> terms) {
    Expr acc = Expr::constant(Rational(0));
    for (const Expr& t : terms) {
        acc = acc + t;
    }
    return acc;
}

bool structurally_equal(const Expr& a, const Expr& b) {
    if (a.id() == b.id()) {
        return true;
    }
    if (!a.valid() || !b.valid() || a.hash() != b.hash() || a.op() != b.op()) {
        return false;
    }
    switch (a.op()) {
        case Op::var: return a.var_index() == b.var_index();
        case Op::constant: return a.value().value == b.value().value;
        case Op::pow: return a.exponent() == b.exponent() && structurally_equal(a.lhs(), b.lhs());
        default: break;
    }
    if (a.arity() == 2) {
        return structurally_equal(a.lhs(), b.lhs()) && structurally_equal(a.rhs(), b.rhs());
    }
    return structurally_equal(a.lhs(), b.lhs());
}

namespace {

// NaN marks a domain fault; it propagates through every primitive.
double eval_nan(const Expr& e, std::span<const double> env,
                std::unordered_map<const Expr::Node*, double>& memo) {
    if (auto it = memo.find(e.id()); it != memo.end()) {
        return it->second;
    }
    constexpr double fault = std::numeric_limits<double>::quiet_NaN();
    double r = 0.0;
    switch (e.op()) {
        case Op::var:
            if (e.var_index() >= env.size()) {
                throw UnboundVariable("unbound variable x" + std::to_string(e.var_index()));
            }
            r = env[e.var_index()];
            break;
        case Op::constant: r = e.value().value; break;
        case Op::add: r = eval_nan(e.lhs(), env, memo) + eval_nan(e.rhs(), env, memo); break;
        case Op::sub: r = eval_nan(e.lhs(), env, memo) - eval_nan(e.rhs(), env, memo); break;
        case Op::mul: r = eval_nan(e.lhs(), env, memo) * eval_nan(e.rhs(), env, memo); break;
        case Op::div: {
            double a = eval_nan(e.lhs(), env, memo);
            double b = eval_nan(e.rhs(), env, memo);
            r = b == 0.0 ? fault : a / b;
            break;
        }
        case Op::pow: {
            double a = eval_nan(e.lhs(), env, memo);
            r = std::isnan(a) ? fault : ipow(a, e.exponent());
            break;
        }
        case Op::neg: r = -eval_nan(e.lhs(), env, memo); break;
        case Op::sin: r = std::sin(eval_nan(e.lhs(), env, memo)); break;
        case Op::cos: r = std::cos(eval_nan(e.lhs(), env, memo)); break;
        case Op::exp: r = std::exp(eval_nan(e.lhs(), env, memo)); break;
        case Op::log: {
            double a = eval_nan(e.lhs(), env, memo);
            r = a > 0.0 ? std::log(a) : fault;
            break;
        }
        case Op::sqrt: {
            double a = eval_nan(e.lhs(), env, memo);
            r = a > 0.0 ? std::sqrt(a) : fault;
            break;
        }
    }
    memo.emplace(e.id(), r);
    return r;
}

}  // namespace

std::optional<double> eval(const Expr& e, std::span<const double> env) {
    std::unordered_map<const Expr::Node*, double> memo;
    double v = eval_nan(e, env, memo);
    if (std::isnan(v)) {
        return std::nullopt;
    }
    return v;
}

std::optional<double> eval(const Expr& e, const std::vector<std::string>& params, const Env& env) {
    std::vector<double> values(params.size(), 0.0);
    for (std::size_t i = 0; i < params.size(); ++i) {
        if (auto it = env.find(params[i]); it != env.end()) {
            values[i] = it->second;
        }
    }
    visit_dag(e, [&](const Expr& x) {
        if (x.op() != Op::var) {
            return;
        }
        std::size_t i = x.var_index();
        if (i >= params.size() || env.find(params[i]) == env.end()) {
            throw UnboundVariable("unbound variable " +
                                  (i < params.size() ? params[i] : "x" + std::to_string(i + 1)));
        }
    });
    return eval(e, values);
}

namespace {

class Rebuilder {
public:
    explicit Rebuilder(std::function<std::optional<Expr>(const Expr&)> leaf) : leaf_(std::move(leaf)) {}

    Expr operator()(const Expr& e) {
        if (auto it = memo_.find(e.id()); it != memo_.end()) {
            return it->second;
        }
        Expr r;
        if (auto l = leaf_(e)) {
            r = *l;
        } else {
            r = rebuild(e);
        }
        memo_.emplace(e.id(), r);
        return r;
    }

private:
    Expr rebuild(const Expr& e) {
        switch (e.op()) {
            case Op::var:
            case Op::constant: return e;
            case Op::add: return (*this)(e.lhs()) + (*this)(e.rhs());
            case Op::sub: return (*this)(e.lhs()) - (*this)(e.rhs());
            case Op::mul: return (*this)(e.lhs()) * (*this)(e.rhs());
            case Op::div: return (*this)(e.lhs()) / (*this)(e.rhs());
            case Op::pow: return pow((*this)(e.lhs()), e.exponent());
            case Op::neg: return -(*this)(e.lhs());
            case Op::sin: return sin((*this)(e.lhs()));
            case Op::cos: return cos((*this)(e.lhs()));
            case Op::exp: return exp((*this)(e.lhs()));
            case Op::log: return log((*this)(e.lhs()));
            case Op::sqrt: return sqrt((*this)(e.lhs()));
        }
        return e;
    }

    std::function<std::optional<Expr>(const Expr&)> leaf_;
    std::unordered_map<const Expr::Node*, Expr> memo_;
};

class Differentiator {
public:
    explicit Differentiator(std::size_t index) : index_(index) {}

    Expr operator()(const Expr& e) {
        if (auto it = memo_.find(e.id()); it != memo_.end()) {
            return it->second;
        }
        Expr r = derive(e);
        memo_.emplace(e.id(), r);
        return r;
    }

private:
    Expr derive(const Expr& e) {
        const Expr zero = Expr::constant(Rational(0));
        switch (e.op()) {
            case Op::var: return Expr::constant(Rational(e.var_index() == index_ ? 1 : 0));
            case Op::constant: return zero;
            case Op::add: return (*this)(e.lhs()) + (*this)(e.rhs());
            case Op::sub: return (*this)(e.lhs()) - (*this)(e.rhs());
            case Op::mul: {
                Expr da = (*this)(e.lhs());
                Expr db = (*this)(e.rhs());
                return da * e.rhs() + e.lhs() * db;
            }
            case Op::div: {
                Expr da = (*this)(e.lhs());
                Expr db = (*this)(e.rhs());
                if (db.is_zero()) {
                    return da / e.rhs();
                }
                return (da * e.rhs() - e.lhs() * db) / pow(e.rhs(), 2);
            }
            case Op::pow: {
                unsigned n = e.exponent();
                if (n == 0) {
                    return zero;
                }
                Expr da = (*this)(e.lhs());
                return Expr::constant(Rational(n)) * pow(e.lhs(), n - 1) * da;
            }
            case Op::neg: return -(*this)(e.lhs());
            case Op::sin: return cos(e.lhs()) * (*this)(e.lhs());
            case Op::cos: return -(sin(e.lhs()) * (*this)(e.lhs()));
            case Op::exp: return e * (*this)(e.lhs());
            case Op::log: return (*this)(e.lhs()) / e.lhs();
            case Op::sqrt: return (*this)(e.lhs()) / (Expr::constant(Rational(2)) * e);
        }
        return zero;
    }

    std::size_t index_;
    std::unordered_map<const Expr::Node*, Expr> memo_;
};

}  // namespace

Expr diff(const Expr& e, std::size_t index) {
    Differentiator d(index);
    return d(simplify(e));
}

Expr simplify(const Expr& e) {
    Rebuilder r([](const Expr&) { return std::optional<Expr>{}; });
    return r(e);
}

Expr substitute(const Expr& e, std::span<const Expr> replacement) {
    Rebuilder r([&](const Expr& x) -> std::optional<Expr> {
        if (x.op() != Op::var) {
            return std::nullopt;
        }
        if (x.var_index() >= replacement.size()) {
            throw UnboundVariable("substitution does not cover x" + std::to_string(x.var_index()));
        }
        return replacement[x.var_index()];
    });
    return r(e);
}


std::size_t variable_bound(const Expr& e) {
    std::size_t bound = 0;
    visit_dag(e, [&](const Expr& x) {
        if (x.op() == Op::var) {
            bound = std::max(bound, x.var_index() + 1);
        }
    });
    return bound;
}

bool variables_within(const Expr& e, std::size_t lo, std::size_t hi) {
    bool ok = true;
    visit_dag(e, [&](const Expr& x) {
        if (x.op() == Op::var && (x.var_index() < lo || x.var_index() >= hi)) {
            ok = false;
        }
    });
    return ok;
}

std::size_t dag_size(const Expr& e) {
    std::size_t n = 0;
    visit_dag(e, [&](const Expr&) { ++n; });
    return n;
}

std::vector<DomainCondition> domain_conditions(const Expr& e) {
    std::vector<DomainCondition> out;
    std::unordered_set<const Expr::Node*> seen;
    std::function<void(const Expr&)> walk = [&](const Expr& x) {
        if (!seen.insert(x.id()).second) {
            return;
        }
        if (x.arity() >= 1) walk(x.lhs());
        if (x.arity() == 2) walk(x.rhs());
        if (x.op() == Op::div) {
            out.push_back({x.rhs(), false});
        } else if (x.op() == Op::log || x.op() == Op::sqrt) {
            out.push_back({x.lhs(), true});
        }
    };
    walk(e);
    return out;
}

std::vector<std::string> default_names(std::size_t n, const std::string& stem) {
    std::vector<std::string> names;
    names.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        names.push_back(stem + std::to_string(i + 1));
    }
    return names;
}

namespace {

// Printing levels: 1 sum, 2 product, 3 prefix minus, 4 power, 5 atom.
std::string constant_text(const Constant& c) {
    double v = std::fabs(c.value);
    if (c.exact) {
        Rational r = c.exact->num() < 0 ? c.exact->negated() : *c.exact;
        if (r.is_integer()) {
            return std::to_string(r.num());
        }
        std::int64_t d = r.den();
        while (d % 2 == 0) d /= 2;
        while (d % 5 == 0) d /= 5;
        if (d != 1) {
            return "(" + r.to_string() + ")";
        }
    }
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

int level(const Expr& e) {
    switch (e.op()) {
        case Op::add:
        case Op::sub: return 1;
        case Op::mul:
        case Op::div: return 2;
        case Op::neg: return 3;
        case Op::pow: return 4;
        case Op::constant: return e.value().value < 0.0 ? 3 : 5;
        default: return 5;
    }
}

std::string print(const Expr& e, const std::vector<std::string>& names);

std::string print_operand(const Expr& e, const std::vector<std::string>& names, int min_level, bool allow_prefix) {
    int l = level(e);
    if (l < min_level || (l == 3 && !allow_prefix)) {
        return "(" + print(e, names) + ")";
    }
    return print(e, names);
}

std::string print(const Expr& e, const std::vector<std::string>& names) {
    switch (e.op()) {
        case Op::var:
            if (e.var_index() < names.size()) {
                return names[e.var_index()];
            }
            return "x" + std::to_string(e.var_index() + 1);
        case Op::constant:
            return (e.value().value < 0.0 ? "-" : "") + constant_text(e.value());
        case Op::add:
            return print_operand(e.lhs(), names, 1, true) + " + " + print_operand(e.rhs(), names, 2, false);
        case Op::sub:
            return print_operand(e.lhs(), names, 1, true) + " - " + print_operand(e.rhs(), names, 2, false);
        case Op::mul:
            return print_operand(e.lhs(), names, 2, true) + "*" + print_operand(e.rhs(), names, 4, false);
        case Op::div:
            return print_operand(e.lhs(), names, 2, true) + "/" + print_operand(e.rhs(), names, 4, false);
        case Op::pow:
            return print_operand(e.lhs(), names, 5, false) + "^" + std::to_string(e.exponent());
        case Op::neg:
            return "-" + print_operand(e.lhs(), names, 4, false);
        case Op::sin: return "sin(" + print(e.lhs(), names) + ")";
        case Op::cos: return "cos(" + print(e.lhs(), names) + ")";
        case Op::exp: return "exp(" + print(e.lhs(), names) + ")";
        case Op::log: return "log(" + print(e.lhs(), names) + ")";
        case Op::sqrt: return "sqrt(" + print(e.lhs(), names) + ")";
    }
    return "?";
}

}  // namespace

std::string to_string(const Expr& e, const std::vector<std::string>& names) { return print(e, names); }

}  // namespace gcdc
