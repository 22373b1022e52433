#pragma once

#include <functional>
#include <optional>

#include "gcdc/faa/jet.hpp"
#include "gcdc/smooth.hpp"

namespace gcdc {

/// delta on objects: (M, X) |-> ((lambda M, (M, A)), (M, X)).
template <class C>
FaaObject<Faa<C>> delta_object(const FaaObject<C>& o) {
    return FaaObject<Faa<C>>{lambda_monoid<C>(o.monoid), o};
}

/// The jet-of-jets delta(f) in Faa(Faa(C)), up to `outer` components
/// (default: as many as f supports).
///
/// delta(f)_* = f and delta(f)_n is the n-th derivative tower of f: a jet
/// (M_A^{n+1}, A^n x X) -> (M_B, B) with star f_n(v; x). Its k-th component at
/// directions (a^j_1..a^j_n, b^j), j = 1..k, is the sum over subsets S of the
/// directions and injections s: S -> {1..n} of
///     f_{n+k-|S|}(w_1..w_n, b^j for j not in S; x),
/// where w_i = a^j_i when s(j) = i and w_i = v_i otherwise.
template <class C>
Jet<Faa<C>> delta(const Jet<C>& f, std::optional<std::size_t> outer = std::nullopt) {
    using F = Faa<C>;
    using BO = typename C::Object;
    using BM = typename C::Map;

    Jet<F> out{delta_object(f.src), delta_object(f.dst), f, {}, f.zero_tail};
    std::size_t p = f.explicit_order();
    std::size_t count = outer ? std::min(*outer, p) : p;
    if (outer && *outer < p) {
        out.zero_tail = false;
    }
    FaaObject<C> la = F::linear_object(f.src);
    FaaObject<C> lb = F::linear_object(f.dst);
    const BO a = f.src.monoid.carrier;

    for (std::size_t n = 1; n <= count; ++n) {
        std::vector<FaaObject<C>> parts(n, la);
        parts.push_back(f.src);
        FaaObject<C> src = F::product(parts);
        Jet<C> tower{src, lb, F::component(f, n), {}, f.zero_tail};
        std::size_t inner = f.zero_tail ? p : p - n;

        std::vector<BO> cfs(n + 1, a);  // carrier factors: A^n x A
        std::vector<BO> pfs(n, a);      // point factors: A^n x X
        pfs.push_back(f.src.point);
        BO carrier = C::product(cfs);
        BO point = C::product(pfs);

        for (std::size_t k = 1; k <= inner; ++k) {
            std::vector<BO> fs(k, carrier);
            fs.push_back(point);
            BO dom = C::product(fs);
            auto dir_a = [&](std::size_t j, std::size_t i) {
                return C::then(C::projection(fs, j), C::projection(cfs, i));
            };
            auto dir_b = [&](std::size_t j) { return C::then(C::projection(fs, j), C::projection(cfs, n)); };
            auto at_point = [&](std::size_t i) { return C::then(C::projection(fs, k), C::projection(pfs, i)); };

            std::optional<BM> total;
            // assignment[j] = slot i that direction j fills, or n when j is not in S.
            std::vector<std::size_t> assignment(k, n);
            std::function<void(std::size_t, std::vector<bool>&)> visit = [&](std::size_t j, std::vector<bool>& used) {
                if (j == k) {
                    std::size_t hit = 0;
                    for (std::size_t s : assignment) {
                        hit += s < n ? 1 : 0;
                    }
                    std::size_t index = n + k - hit;
                    if (f.zero_tail && index > p) {
                        return;
                    }
                    std::vector<BM> args;
                    for (std::size_t i = 0; i < n; ++i) {
                        std::optional<BM> w;
                        for (std::size_t jj = 0; jj < k; ++jj) {
                            if (assignment[jj] == i) {
                                w = dir_a(jj, i);
                            }
                        }
                        args.push_back(w ? *w : at_point(i));
                    }
                    for (std::size_t jj = 0; jj < k; ++jj) {
                        if (assignment[jj] == n) {
                            args.push_back(dir_b(jj));
                        }
                    }
                    args.push_back(at_point(n));
                    BM term = C::then(C::tuple(dom, args), F::component(f, index));
                    total = total ? F::base_sum(f.dst.monoid, *total, term) : term;
                    return;
                }
                assignment[j] = n;
                visit(j + 1, used);
                for (std::size_t i = 0; i < n; ++i) {
                    if (!used[i]) {
                        used[i] = true;
                        assignment[j] = i;
                        visit(j + 1, used);
                        used[i] = false;
                    }
                }
                assignment[j] = n;
            };
            std::vector<bool> used(n, false);
            visit(0, used);
            tower.derivs.push_back(total ? *total : F::guarded_zero(tower, k));
        }
        out.derivs.push_back(std::move(tower));
    }
    return out;
}

/// The n-th derivative tower read literally off D^n(f) in Faa(C): feed
/// zeros into every block of the 2^n-block source of D^n except the point
/// block and the n blocks one doubling away from it.
template <class C>
Jet<C> literal_delta_component(const Jet<C>& f, std::size_t n) {
    using F = Faa<C>;
    if (n == 0) {
        return f;
    }
    Jet<C> top = f;
    for (std::size_t k = 0; k < n; ++k) {
        top = derivative_jet(top);
    }
    FaaObject<C> la = F::linear_object(f.src);
    std::vector<FaaObject<C>> parts(n, la);
    parts.push_back(f.src);
    FaaObject<C> dom = F::product(parts);

    Monoid<F> lm = lambda_monoid<C>(f.src.monoid);
    Jet<C> zero = F::then(F::bang(dom), lm.zero);
    std::vector<std::size_t> slots = literal_slots(n);
    std::size_t blocks = std::size_t{1} << n;
    std::vector<Jet<C>> leaves;
    for (std::size_t idx = 0; idx < blocks; ++idx) {
        std::optional<Jet<C>> leaf;
        for (std::size_t i = 0; i <= n; ++i) {
            if (slots[i] == idx) {
                leaf = F::projection(parts, i);
            }
        }
        leaves.push_back(leaf ? *leaf : zero);
    }
    Jet<C> feed = F::tuple(dom, leaves);
    return F::then(feed, top);
}

/// Faa(epsilon) applied to a jet of jets: keeps the star of every component.
template <class C>
Jet<C> faa_epsilon(const Jet<Faa<C>>& f) {
    Jet<C> out{f.src.point, f.dst.point, f.star.star, {}, f.zero_tail};
    for (const auto& c : f.derivs) {
        out.derivs.push_back(c.star);
    }
    return out;
}

/// delta applied to a monoid of Faa(C), as needed for the object part of Faa(delta).
template <class C>
Monoid<Faa<Faa<C>>> delta_monoid(const Monoid<Faa<C>>& m) {
    return Monoid<Faa<Faa<C>>>{delta_object(m.carrier), delta(m.add), delta(m.zero)};
}

/// Faa(delta) applied to a jet of jets.
template <class C>
Jet<Faa<Faa<C>>> faa_delta(const Jet<Faa<C>>& f, std::optional<std::size_t> outer = std::nullopt) {
    auto object = [](const FaaObject<Faa<C>>& o) {
        return FaaObject<Faa<Faa<C>>>{delta_monoid<C>(o.monoid), delta_object(o.point)};
    };
    Jet<Faa<Faa<C>>> out{object(f.src), object(f.dst), delta(f.star), {}, f.zero_tail};
    std::size_t count = outer ? std::min(*outer, f.explicit_order()) : f.explicit_order();
    if (outer && *outer < f.explicit_order()) {
        out.zero_tail = false;
    }
    for (std::size_t n = 0; n < count; ++n) {
        out.derivs.push_back(delta(f.derivs[n]));
    }
    return out;
}

/// The cofree coalgebra map 𝒟(f) = (f, D f, D_2 f, ..., D_N f) over the
/// smooth model.
Jet<Smooth> cofree(const SmoothMap& f, const LAssignment& L, std::size_t order);

/// As cofree, with D_n read literally off D^n (n <= 3 is practical).
Jet<Smooth> cofree_literal(const SmoothMap& f, const LAssignment& L, std::size_t order);

/// Faa object (L(X), X) of the smooth model.
FaaObject<Smooth> smooth_faa_object(const SpaceObject& x, const LAssignment& L);

}  // namespace gcdc
