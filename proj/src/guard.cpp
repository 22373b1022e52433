#include "gcdc/guard.hpp"

#include <algorithm>
#include <cmath>

namespace gcdc {

bool atom_holds(double value, bool positive) {
    if (std::isnan(value)) {
        return false;
    }
    return positive ? value > 0.0 : value != 0.0;
}

Guard Guard::atom(const Expr& e, bool positive) {
    Guard g;
    g.add({e, positive});
    return g;
}

Guard Guard::from_domain_of(std::span<const Expr> exprs) {
    Guard g;
    for (const Expr& e : exprs) {
        for (const DomainCondition& c : domain_conditions(e)) {
            g.add({c.expr, c.strictly_positive});
        }
    }
    return g;
}

void Guard::add(const GuardAtom& a) {
    if (a.expr.is_constant() && atom_holds(a.expr.value().value, a.positive)) {
        return;
    }
    for (const GuardAtom& b : atoms_) {
        if (b.positive == a.positive && structurally_equal(a.expr, b.expr)) {
            return;
        }
    }
    atoms_.push_back(a);
}

bool Guard::eval(std::span<const double> point) const {
    return std::all_of(atoms_.begin(), atoms_.end(), [&](const GuardAtom& a) {
        auto v = gcdc::eval(a.expr, point);
        return v && atom_holds(*v, a.positive);
    });
}

bool Guard::eval(const std::vector<std::string>& params, const Env& env) const {
    return std::all_of(atoms_.begin(), atoms_.end(), [&](const GuardAtom& a) {
        auto v = gcdc::eval(a.expr, params, env);
        return v && atom_holds(*v, a.positive);
    });
}

bool Guard::variables_within(std::size_t lo, std::size_t hi) const {
    return std::all_of(atoms_.begin(), atoms_.end(),
                       [&](const GuardAtom& a) { return gcdc::variables_within(a.expr, lo, hi); });
}

std::string Guard::to_string(const std::vector<std::string>& names) const {
    if (atoms_.empty()) {
        return "true";
    }
    std::string out;
    for (const GuardAtom& a : atoms_) {
        if (!out.empty()) {
            out += " && ";
        }
        out += gcdc::to_string(a.expr, names) + (a.positive ? " > 0" : " != 0");
    }
    return out;
}

Guard guard_and(const Guard& a, const Guard& b) {
    Guard g = a;
    for (const GuardAtom& atom : b.atoms()) {
        g.add(atom);
    }
    return g;
}

Guard guard_subst(const Guard& g, std::span<const Expr> replacement) {
    Guard out;
    for (const GuardAtom& a : g.atoms()) {
        out.add({substitute(a.expr, replacement), a.positive});
    }
    return out;
}

Expr shift(const Expr& e, std::size_t offset) {
    if (offset == 0) {
        return e;
    }
    std::vector<Expr> vars;
    std::size_t bound = variable_bound(e);
    vars.reserve(bound);
    for (std::size_t i = 0; i < bound; ++i) {
        vars.push_back(Expr::var(i + offset));
    }
    return substitute(e, vars);
}

Guard guard_shift(const Guard& g, std::size_t offset) {
    Guard out;
    for (const GuardAtom& a : g.atoms()) {
        out.add({shift(a.expr, offset), a.positive});
    }
    return out;
}

bool structurally_equal(const Guard& a, const Guard& b) {
    auto covered = [](const Guard& x, const Guard& y) {
        return std::all_of(x.atoms().begin(), x.atoms().end(), [&](const GuardAtom& p) {
            return std::any_of(y.atoms().begin(), y.atoms().end(), [&](const GuardAtom& q) {
                return p.positive == q.positive && structurally_equal(p.expr, q.expr);
            });
        });
    };
    return covered(a, b) && covered(b, a);
}

}  // namespace gcdc
