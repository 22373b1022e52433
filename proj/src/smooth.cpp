#include "gcdc/smooth.hpp"

#include <stdexcept>

#include "gcdc/mutation.hpp"
#include "gcdc/sampling.hpp"

namespace gcdc {

namespace {

std::vector<Expr> variables(std::size_t offset, std::size_t count) {
    std::vector<Expr> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        out.push_back(Expr::var(offset + i));
    }
    return out;
}

}  // namespace

SpaceObject Smooth::product(std::span<const Object> factors) {
    std::size_t dim = 0;
    for (const Object& o : factors) {
        dim += o.dim;
    }
    return {dim};
}

SmoothMap Smooth::identity(const Object& x) { return SmoothMap(x.dim, variables(0, x.dim)); }

SmoothMap Smooth::projection(std::span<const Object> factors, std::size_t i) {
    if (i >= factors.size()) {
        throw std::invalid_argument("projection index out of range");
    }
    std::size_t offset = 0;
    for (std::size_t k = 0; k < i; ++k) {
        offset += factors[k].dim;
    }
    return SmoothMap(product(factors).dim, variables(offset, factors[i].dim));
}

SmoothMap Smooth::tuple(const Object& dom, std::span<const Map> maps) {
    std::vector<Expr> coords;
    Guard g;
    for (const SmoothMap& m : maps) {
        if (m.dom() != dom) {
            throw std::invalid_argument("dimension mismatch: tuple components need a common domain");
        }
        coords.insert(coords.end(), m.coords().begin(), m.coords().end());
        g = guard_and(g, m.guard());
    }
    return SmoothMap(dom.dim, std::move(coords), std::move(g));
}

SmoothMap Smooth::then(const Map& f, const Map& g) {
    if (f.cod() != g.dom()) {
        throw std::invalid_argument("dimension mismatch: cannot compose " + std::to_string(f.dom().dim) + "->" +
                                    std::to_string(f.cod().dim) + " with " + std::to_string(g.dom().dim) + "->" +
                                    std::to_string(g.cod().dim));
    }
    std::vector<Expr> coords;
    coords.reserve(g.coords().size());
    for (const Expr& e : g.coords()) {
        coords.push_back(substitute(e, f.coords()));
    }
    Guard guard = f.guard();
    if (active_mutation() != Mutation::drop_guard_conjunct) {
        guard = guard_and(guard, guard_subst(g.guard(), f.coords()));
    }
    return SmoothMap(f.dom().dim, std::move(coords), std::move(guard));
}

SmoothMap Smooth::restriction(const Map& f) { return SmoothMap(f.dom().dim, variables(0, f.dom().dim), f.guard()); }

SmoothMap Smooth::bang(const Object& x) { return SmoothMap(x.dim, {}); }

Verdict Smooth::compare(const Map& a, const Map& b, const Config& cfg, const std::string& label) {
    return compare_maps(a, b, cfg, label);
}

bool Smooth::structurally_equal(const Map& a, const Map& b) { return gcdc::structurally_equal(a, b); }

Monoid<Smooth> componentwise_monoid(const SpaceObject& carrier) {
    std::size_t n = carrier.dim;
    std::vector<Expr> sum;
    for (std::size_t i = 0; i < n; ++i) {
        sum.push_back(Expr::var(i) + Expr::var(n + i));
    }
    std::vector<Expr> zeros(n, Expr::constant(Rational(0)));
    return {carrier, SmoothMap(2 * n, std::move(sum)), SmoothMap(0, std::move(zeros))};
}

SmoothMap pointwise_sum(const SmoothMap& a, const SmoothMap& b) {
    if (a.dom() != b.dom() || a.cod() != b.cod()) {
        throw std::invalid_argument("dimension mismatch: pointwise sum of non-parallel maps");
    }
    std::vector<Expr> coords;
    for (std::size_t i = 0; i < a.coords().size(); ++i) {
        coords.push_back(a.coords()[i] + b.coords()[i]);
    }
    return SmoothMap(a.dom().dim, std::move(coords), guard_and(a.guard(), b.guard()));
}

SmoothMap restricted_zero(const SmoothMap& guarded, std::size_t cod) {
    return SmoothMap(guarded.dom().dim, std::vector<Expr>(cod, Expr::constant(Rational(0))), guarded.guard());
}

SmoothMap D(const SmoothMap& f, const LAssignment& L) {
    std::size_t n = f.dom().dim;
    std::size_t a = L.L0(f.dom()).dim;
    Guard guard = guard_shift(f.guard(), a);
    if (L.variant() == LAssignment::Variant::trivial) {
        return SmoothMap(a + n, {}, std::move(guard));
    }
    std::vector<Expr> coords;
    for (const Expr& e : f.coords()) {
        std::vector<Expr> terms;
        for (std::size_t j = 0; j < n; ++j) {
            terms.push_back(Expr::var(j) * shift(diff(e, j), a));
        }
        coords.push_back(sum(terms));
    }
    return SmoothMap(a + n, std::move(coords), std::move(guard));
}

SmoothMap iterate_D(const SmoothMap& f, std::size_t n, const LAssignment& L) {
    SmoothMap g = f;
    for (std::size_t k = 0; k < n; ++k) {
        g = D(g, L);
    }
    return g;
}

SmoothMap nested_Dn(const SmoothMap& f, std::size_t n, const LAssignment& L) {
    std::size_t d = f.dom().dim;
    std::size_t a = L.L0(f.dom()).dim;
    std::size_t x0 = n * a;
    Guard guard = guard_shift(f.guard(), x0);
    if (n == 0) {
        return f;
    }
    if (L.variant() == LAssignment::Variant::trivial) {
        return SmoothMap(x0 + d, {}, std::move(guard));
    }
    std::vector<Expr> coords;
    for (const Expr& e : f.coords()) {
        Expr g = shift(e, x0);
        for (std::size_t k = 0; k < n; ++k) {
            std::vector<Expr> terms;
            for (std::size_t j = 0; j < d; ++j) {
                terms.push_back(Expr::var(k * a + j) * diff(g, x0 + j));
            }
            g = sum(terms);
        }
        coords.push_back(g);
    }
    return SmoothMap(x0 + d, std::move(coords), std::move(guard));
}

std::vector<std::size_t> literal_slots(std::size_t n) {
    std::size_t all = (std::size_t{1} << n) - 1;
    std::vector<std::size_t> slots;
    for (std::size_t idx = 0; idx <= all; ++idx) {
        std::size_t zeros = n - static_cast<std::size_t>(__builtin_popcountll(idx));
        if (zeros == 1) {
            slots.push_back(idx);
        }
    }
    slots.push_back(all);
    return slots;
}

SmoothMap literal_Dn(const SmoothMap& f, std::size_t n, const LAssignment& L) {
    if (n == 0) {
        return f;
    }
    std::size_t d = f.dom().dim;
    std::size_t a = L.L0(f.dom()).dim;
    SmoothMap top = iterate_D(f, n, L);
    std::size_t blocks = std::size_t{1} << n;
    std::vector<std::size_t> slots = literal_slots(n);

    // Argument for each of the 2^n blocks: zero, a direction v_i, or the point.
    std::vector<Expr> args;
    std::size_t x0 = n * a;
    for (std::size_t idx = 0; idx < blocks; ++idx) {
        std::size_t width = idx == blocks - 1 ? d : a;
        std::size_t source = blocks;  // none
        for (std::size_t i = 0; i <= n; ++i) {
            if (slots[i] == idx) {
                source = i;
            }
        }
        for (std::size_t j = 0; j < width; ++j) {
            if (source == blocks) {
                args.push_back(Expr::constant(Rational(0)));
            } else if (source == n) {
                args.push_back(Expr::var(x0 + j));
            } else {
                args.push_back(Expr::var(source * a + j));
            }
        }
    }
    SmoothMap feed(x0 + d, std::move(args));
    return Smooth::then(feed, top);
}

}  // namespace gcdc
