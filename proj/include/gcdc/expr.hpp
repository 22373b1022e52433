#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "gcdc/rational.hpp"

namespace gcdc {

enum class Op : std::uint8_t {
    var,
    constant,
    add,
    sub,
    mul,
    div,
    pow,
    neg,
    sin,
    cos,
    exp,
    log,
    sqrt,
};

/// A literal: its IEEE value, plus the exact rational when the literal has one.
struct Constant {
    double value = 0.0;
    std::optional<Rational> exact;
};

class UnboundVariable : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// Immutable expression handle over positional variables x_0, x_1, ...
///
/// Nodes are shared, so an Expr is a DAG once substitution has reused
/// subterms. Operations that walk an Expr memoize on node identity.
class Expr {
public:
    struct Node;

    Expr() = default;

    static Expr var(std::size_t index);
    static Expr constant(double value);
    static Expr constant(Rational value);

    /// Builds a node without any rewriting. Used by the parser so that a
    /// parsed tree mirrors its text.
    static Expr raw(Op op, Expr lhs, Expr rhs = {});
    static Expr raw_pow(Expr base, unsigned exponent);

    bool valid() const { return node_ != nullptr; }
    Op op() const;
    std::size_t var_index() const;
    unsigned exponent() const;
    const Constant& value() const;
    const Expr& lhs() const;
    const Expr& rhs() const;
    std::size_t arity() const;
    std::size_t hash() const;
    const Node* id() const { return node_.get(); }

    bool is_constant() const { return valid() && op() == Op::constant; }
    bool is_constant(double v) const { return is_constant() && value().value == v; }
    bool is_zero() const { return is_constant(0.0); }
    bool is_one() const { return is_constant(1.0); }

private:
    explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

struct Expr::Node {
    Op op = Op::constant;
    std::uint32_t index = 0;  // variable index or integer exponent
    Constant value;
    Expr lhs;
    Expr rhs;
    std::size_t hash = 0;
};

// Smart constructors. These apply the local rewrite set (constant folding,
// units and zeros, double negation), so every derived expression stays small.
Expr operator+(const Expr& a, const Expr& b);
Expr operator-(const Expr& a, const Expr& b);
Expr operator*(const Expr& a, const Expr& b);
Expr operator/(const Expr& a, const Expr& b);
Expr operator-(const Expr& a);
Expr pow(const Expr& base, unsigned exponent);
Expr sin(const Expr& a);
Expr cos(const Expr& a);
Expr exp(const Expr& a);
Expr log(const Expr& a);
Expr sqrt(const Expr& a);

/// Sum of a list of expressions; zero for the empty list.
Expr sum(std::span<const Expr> terms);

bool structurally_equal(const Expr& a, const Expr& b);

/// Value at a point; nullopt when the point leaves the domain of a primitive
/// (division by zero, log or sqrt of a non-positive number).
std::optional<double> eval(const Expr& e, std::span<const double> env);

/// Named environment. `params` gives the name of each positional variable.
using Env = std::map<std::string, double>;
std::optional<double> eval(const Expr& e, const std::vector<std::string>& params, const Env& env);

/// Exact partial derivative with respect to variable `index`, simplified.
Expr diff(const Expr& e, std::size_t index);

Expr simplify(const Expr& e);

/// Replaces x_i by replacement[i] everywhere. Every free variable must be covered.
Expr substitute(const Expr& e, std::span<const Expr> replacement);

/// Largest variable index + 1 (0 for closed expressions).
std::size_t variable_bound(const Expr& e);

/// True when every variable index of `e` lies in [lo, hi).
bool variables_within(const Expr& e, std::size_t lo, std::size_t hi);

/// Domain conditions implied by the primitives of `e`: denominators must be
/// nonzero, log and sqrt arguments positive. Post-order, so inner atoms come first.
struct DomainCondition {
    Expr expr;
    bool strictly_positive;  // false means "nonzero"
};
std::vector<DomainCondition> domain_conditions(const Expr& e);

/// Infix text in the map grammar, using `names` for variables.
std::string to_string(const Expr& e, const std::vector<std::string>& names);

/// Default parameter names x1..xn.
std::vector<std::string> default_names(std::size_t n, const std::string& stem = "x");

/// Node count of the DAG (shared nodes counted once).
std::size_t dag_size(const Expr& e);

}  // namespace gcdc
