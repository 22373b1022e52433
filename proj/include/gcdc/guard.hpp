#pragma once

#include <span>
#include <string>
#include <vector>

#include "gcdc/expr.hpp"

namespace gcdc {

/// One strict condition: `expr > 0` when positive, otherwise `expr != 0`.
/// An atom whose expression faults at a point is false there.
struct GuardAtom {
    Expr expr;
    bool positive = false;
};

/// Conjunction of atoms with set semantics: duplicates collapse and atoms
/// that are constant-true disappear. The empty conjunction is `true`.
class Guard {
public:
    Guard() = default;

    static Guard atom(const Expr& e, bool positive);
    static Guard from_domain_of(std::span<const Expr> exprs);

    const std::vector<GuardAtom>& atoms() const { return atoms_; }
    bool is_true() const { return atoms_.empty(); }

    /// Appends an atom unless it is constant-true or already present.
    void add(const GuardAtom& a);

    bool eval(std::span<const double> point) const;
    bool eval(const std::vector<std::string>& params, const Env& env) const;

    /// True when every atom mentions only variables in [lo, hi).
    bool variables_within(std::size_t lo, std::size_t hi) const;

    std::string to_string(const std::vector<std::string>& names) const;

private:
    std::vector<GuardAtom> atoms_;
};

Guard guard_and(const Guard& a, const Guard& b);
Guard guard_subst(const Guard& g, std::span<const Expr> replacement);

/// Renames x_i to x_{i+offset}.
Guard guard_shift(const Guard& g, std::size_t offset);
Expr shift(const Expr& e, std::size_t offset);

bool atom_holds(double value, bool positive);

bool structurally_equal(const Guard& a, const Guard& b);

}  // namespace gcdc
