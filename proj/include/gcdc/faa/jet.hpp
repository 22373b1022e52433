#pragma once

#include <algorithm>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

#include "gcdc/category.hpp"
#include "gcdc/faa/partition.hpp"
#include "gcdc/mutation.hpp"
#include "gcdc/smooth.hpp"
#include "gcdc/verdict.hpp"

namespace gcdc {

/// Object of Faa(C): a commutative monoid (A, +, 0) paired with a point object X.
template <class C>
struct FaaObject {
    Monoid<C> monoid;
    typename C::Object point;
};

/// Morphism of Faa(C) truncated at some order: f_* : X -> Y and
/// f_n : A^n x X -> B for n = 1..derivs.size(), f_n additive and symmetric
/// in its first n arguments.
///
/// With zero_tail set the sequence continues forever with the restricted
/// zeros rs(pi_n f_*) 0, so the jet has unbounded order. Identities,
/// projections, restrictions and lambda-images are of this kind.
template <class C>
struct Jet {
    FaaObject<C> src;
    FaaObject<C> dst;
    typename C::Map star;
    std::vector<typename C::Map> derivs;
    bool zero_tail = false;

    std::size_t explicit_order() const { return derivs.size(); }
    std::size_t order() const { return zero_tail ? unbounded_order : derivs.size(); }
};

class OrderExhausted : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// Faa(C) as a category in the same shape as C, so it can be iterated.
template <class C>
struct Faa {
    using Base = C;
    using Object = FaaObject<C>;
    using Map = Jet<C>;
    using BaseObject = typename C::Object;
    using BaseMap = typename C::Map;

    static Object dom(const Map& f) { return f.src; }
    static Object cod(const Map& f) { return f.dst; }

    static bool same(const Object& a, const Object& b) {
        return C::same(a.monoid.carrier, b.monoid.carrier) && C::same(a.point, b.point);
    }

    // ---- base-category plumbing -------------------------------------------

    /// [A, ..., A, X] with n copies of A: the factors of the domain of f_n.
    static std::vector<BaseObject> factors(const Object& o, std::size_t n) {
        std::vector<BaseObject> fs(n, o.monoid.carrier);
        fs.push_back(o.point);
        return fs;
    }

    static BaseObject component_domain(const Object& o, std::size_t n) {
        auto fs = factors(o, n);
        return C::product(fs);
    }

    static BaseMap base_sum(const Monoid<C>& m, const BaseMap& a, const BaseMap& b) {
        std::vector<BaseMap> pair{a, b};
        return C::then(C::tuple(C::dom(a), pair), m.add);
    }

    /// The restricted zero rs(pi_n f_*) 0 : A^n x X -> B.
    static BaseMap guarded_zero(const Map& f, std::size_t n) {
        auto fs = factors(f.src, n);
        BaseMap guard = C::restriction(C::then(C::projection(fs, n), f.star));
        return C::then(guard, C::then(C::bang(C::product(fs)), f.dst.monoid.zero));
    }

    static BaseMap component(const Map& f, std::size_t n) {
        if (n == 0) {
            return f.star;
        }
        if (n <= f.derivs.size()) {
            return f.derivs[n - 1];
        }
        if (f.zero_tail) {
            return guarded_zero(f, n);
        }
        throw OrderExhausted("jet component " + std::to_string(n) + " requested from a jet of order " +
                             std::to_string(f.derivs.size()));
    }

    // ---- objects ------------------------------------------------------------

    static Object terminal() {
        BaseObject t = C::terminal();
        std::vector<BaseObject> tt{t, t};
        return Object{Monoid<C>{t, C::bang(C::product(tt)), C::identity(t)}, t};
    }

    /// Product with the interchanged addition ex(+_A x +_B).
    static Object product(std::span<const Object> parts) {
        if (parts.size() == 1) {
            return parts[0];
        }
        std::vector<BaseObject> carriers;
        std::vector<BaseObject> points;
        for (const Object& p : parts) {
            carriers.push_back(p.monoid.carrier);
            points.push_back(p.point);
        }
        BaseObject carrier = C::product(carriers);
        std::vector<BaseObject> two{carrier, carrier};
        BaseObject sq = C::product(two);
        BaseMap left = C::projection(two, 0);
        BaseMap right = C::projection(two, 1);
        std::vector<BaseMap> sums;
        std::vector<BaseMap> zeros;
        for (std::size_t i = 0; i < parts.size(); ++i) {
            BaseMap pi = C::projection(carriers, i);
            std::vector<BaseMap> pair{C::then(left, pi), C::then(right, pi)};
            sums.push_back(C::then(C::tuple(sq, pair), parts[i].monoid.add));
            zeros.push_back(parts[i].monoid.zero);
        }
        Monoid<C> m{carrier, C::tuple(sq, sums), C::tuple(C::terminal(), zeros)};
        return Object{m, C::product(points)};
    }

    /// The linear object (M, A) of an object (M, X).
    static Object linear_object(const Object& o) { return Object{o.monoid, o.monoid.carrier}; }

    // ---- maps ---------------------------------------------------------------

    static Map identity(const Object& o) {
        Map j{o, o, C::identity(o.point), {}, true};
        std::vector<BaseObject> ax{o.monoid.carrier, o.point};
        j.derivs.push_back(C::projection(ax, 0));
        return j;
    }

    static Map projection(std::span<const Object> parts, std::size_t i) {
        Object src = product(parts);
        std::vector<BaseObject> carriers;
        std::vector<BaseObject> points;
        for (const Object& p : parts) {
            carriers.push_back(p.monoid.carrier);
            points.push_back(p.point);
        }
        if (parts.size() == 1) {
            return identity(src);
        }
        Map j{src, parts[i], C::projection(points, i), {}, true};
        std::vector<BaseObject> ax{src.monoid.carrier, src.point};
        j.derivs.push_back(C::then(C::projection(ax, 0), C::projection(carriers, i)));
        return j;
    }

    static Map bang(const Object& o) {
        Map j{o, terminal(), C::bang(o.point), {}, true};
        j.derivs.push_back(C::bang(component_domain(o, 1)));
        return j;
    }

    /// rs(f) = (rs f_*, rs(pi_1 f_*) pi_0, rs(pi_2 f_*) 0, ...).
    static Map restriction(const Map& f) {
        Map j{f.src, f.src, C::restriction(f.star), {}, true};
        auto ax = factors(f.src, 1);
        BaseMap guard = C::restriction(C::then(C::projection(ax, 1), f.star));
        j.derivs.push_back(C::then(guard, C::projection(ax, 0)));
        return j;
    }

    static Map tuple(const Object& dom, std::span<const Map> maps) {
        std::vector<Object> dsts;
        std::vector<BaseMap> stars;
        bool all_tail = true;
        std::size_t finite = unbounded_order;
        std::size_t longest = 0;
        for (const Map& m : maps) {
            if (!same(m.src, dom)) {
                throw std::invalid_argument("object mismatch: tuple components need a common source");
            }
            dsts.push_back(m.dst);
            stars.push_back(m.star);
            all_tail = all_tail && m.zero_tail;
            finite = std::min(finite, m.order());
            longest = std::max(longest, m.explicit_order());
        }
        Object dst = maps.empty() ? terminal() : product(dsts);
        if (maps.size() == 1) {
            Map j = maps[0];
            j.src = dom;
            return j;
        }
        Map j{dom, dst, C::tuple(dom.point, stars), {}, all_tail};
        std::size_t m = all_tail ? longest : finite;
        if (maps.empty()) {
            j.derivs.push_back(C::bang(component_domain(dom, 1)));
            j.zero_tail = true;
            return j;
        }
        for (std::size_t n = 1; n <= m; ++n) {
            std::vector<BaseMap> parts;
            for (const Map& f : maps) {
                parts.push_back(component(f, n));
            }
            j.derivs.push_back(C::tuple(component_domain(dom, n), parts));
        }
        return j;
    }

    /// Faa di Bruno composite "f, then g", truncated to the smaller order.
    static Map then(const Map& f, const Map& g) {
        if (!same(f.dst, g.src)) {
            throw std::invalid_argument("object mismatch: cannot compose jets");
        }
        Map out{f.src, g.dst, C::then(f.star, g.star), {}, f.zero_tail && g.zero_tail};
        std::size_t m = out.zero_tail ? f.explicit_order() * g.explicit_order() : std::min(f.order(), g.order());
        for (std::size_t n = 1; n <= m; ++n) {
            out.derivs.push_back(composite_component(f, g, n));
        }
        return out;
    }

    static BaseMap composite_component(const Map& f, const Map& g, std::size_t n) {
        auto fs = factors(f.src, n);
        BaseObject dom = C::product(fs);
        BaseMap x = C::projection(fs, n);
        BaseMap fx = C::then(x, f.star);
        std::optional<BaseMap> total;
        bool drop_single = active_mutation() == Mutation::drop_partition_term && n >= 2;
        for (const Partition& p : enumerate_partitions(n)) {
            std::size_t k = p.blocks.size();
            if (g.zero_tail && k > g.explicit_order()) {
                continue;
            }
            if (drop_single && k == 1) {
                continue;
            }
            bool vanishes = false;
            std::vector<BaseMap> args;
            for (const auto& block : p.blocks) {
                if (f.zero_tail && block.size() > f.explicit_order()) {
                    vanishes = true;
                    break;
                }
                std::vector<BaseMap> slots;
                for (std::size_t b : block) {
                    slots.push_back(C::projection(fs, b));
                }
                slots.push_back(x);
                args.push_back(C::then(C::tuple(dom, slots), component(f, block.size())));
            }
            if (vanishes) {
                continue;
            }
            args.push_back(fx);
            BaseMap term = C::then(C::tuple(dom, args), component(g, k));
            total = total ? base_sum(g.dst.monoid, *total, term) : term;
        }
        if (!total) {
            Map fg{f.src, g.dst, C::then(f.star, g.star), {}, true};
            return guarded_zero(fg, n);
        }
        return *total;
    }

    static std::size_t order(const Map& f) { return f.order(); }

    static Verdict compare(const Map& a, const Map& b, const Config& cfg, const std::string& label) {
        if (!same(a.src, b.src) || !same(a.dst, b.dst)) {
            return Verdict::failure("object mismatch");
        }
        Verdict v = C::compare(a.star, b.star, cfg, label + "/*");
        if (v.status == Status::fail) {
            v.component = 0;
        }
        std::size_t m = (a.zero_tail && b.zero_tail) ? std::max(a.explicit_order(), b.explicit_order())
                                                    : std::min(a.order(), b.order());
        for (std::size_t n = 1; n <= m; ++n) {
            v = combine_component(v, C::compare(component(a, n), component(b, n), cfg, label + "/" + std::to_string(n)),
                                  n);
        }
        return v;
    }

    static bool structurally_equal(const Map& a, const Map& b) {
        if (!same(a.src, b.src) || !same(a.dst, b.dst) || !C::structurally_equal(a.star, b.star)) {
            return false;
        }
        std::size_t m = (a.zero_tail && b.zero_tail) ? std::max(a.explicit_order(), b.explicit_order())
                                                    : std::min(a.order(), b.order());
        for (std::size_t n = 1; n <= m; ++n) {
            if (!C::structurally_equal(component(a, n), component(b, n))) {
                return false;
            }
        }
        return true;
    }
};

// ---- free functions over Faa(C) ---------------------------------------------

/// Composite with the orders of both jets required to agree (an unbounded jet
/// agrees with any order).
template <class C>
Jet<C> compose_jets(const Jet<C>& f, const Jet<C>& g) {
    if (!f.zero_tail && !g.zero_tail && f.order() != g.order()) {
        throw std::invalid_argument("order mismatch: " + std::to_string(f.order()) + " vs " +
                                    std::to_string(g.order()));
    }
    return Faa<C>::then(f, g);
}

template <class C>
Jet<C> identity_jet(const FaaObject<C>& o) {
    return Faa<C>::identity(o);
}

template <class C>
Jet<C> restriction_jet(const Jet<C>& f) {
    return Faa<C>::restriction(f);
}

template <class C>
typename C::Map epsilon(const Jet<C>& f) {
    return f.star;
}

/// Materializes components up to order n and drops the zero tail.
template <class C>
Jet<C> truncate(const Jet<C>& f, std::size_t n) {
    Jet<C> out{f.src, f.dst, f.star, {}, false};
    for (std::size_t k = 1; k <= n; ++k) {
        out.derivs.push_back(Faa<C>::component(f, k));
    }
    return out;
}

/// lambda(h) = (h, pi_0 h, 0, 0, ...) for a monoid map h: A -> B.
template <class C>
Jet<C> lambda_embed(const typename C::Map& h, const Monoid<C>& m1, const Monoid<C>& m2) {
    FaaObject<C> src{m1, m1.carrier};
    FaaObject<C> dst{m2, m2.carrier};
    Jet<C> j{src, dst, h, {}, true};
    std::vector<typename C::Object> aa{m1.carrier, m1.carrier};
    j.derivs.push_back(C::then(C::projection(aa, 0), h));
    return j;
}

/// Checks that h preserves addition and zero.
template <class C>
Verdict check_additive(const typename C::Map& h, const Monoid<C>& m1, const Monoid<C>& m2, const Config& cfg,
                       const std::string& label) {
    std::vector<typename C::Object> aa{m1.carrier, m1.carrier};
    auto sq = C::product(aa);
    std::vector<typename C::Map> images{C::then(C::projection(aa, 0), h), C::then(C::projection(aa, 1), h)};
    Verdict v = C::compare(C::then(m1.add, h), C::then(C::tuple(sq, images), m2.add), cfg, label + "/add");
    return combine(v, C::compare(C::then(m1.zero, h), m2.zero, cfg, label + "/zero"));
}

class NotAdditive : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

template <class C>
Jet<C> lambda_embed_checked(const typename C::Map& h, const Monoid<C>& m1, const Monoid<C>& m2,
                            const Config& cfg) {
    Verdict v = check_additive<C>(h, m1, m2, cfg, "lambda");
    if (!v.ok()) {
        throw NotAdditive("map is not a monoid morphism: " + v.detail);
    }
    return lambda_embed<C>(h, m1, m2);
}

/// The monoid (M, A) in Faa(C) with addition lambda(+) and zero lambda(0).
template <class C>
Monoid<Faa<C>> lambda_monoid(const Monoid<C>& m) {
    using F = Faa<C>;
    FaaObject<C> carrier = F::linear_object(FaaObject<C>{m, m.carrier});
    std::vector<FaaObject<C>> two{carrier, carrier};
    FaaObject<C> sq = F::product(two);
    Jet<C> add = lambda_embed<C>(m.add, sq.monoid, m);
    Jet<C> zero = lambda_embed<C>(m.zero, F::terminal().monoid, m);
    return Monoid<F>{carrier, add, zero};
}

/// D on Faa(C): the jet L(src) x src -> L(dst) with
///   star(c, x) = f_1(c; x) and, at directions (a_i, b_i) and point (c, x),
///   n-th component = sum_i f_n(a_i, b_1..^b_i..b_n; x) + f_{n+1}(c, b_1..b_n; x).
template <class C>
Jet<C> derivative_jet(const Jet<C>& f) {
    using F = Faa<C>;
    using BO = typename C::Object;
    using BM = typename C::Map;
    if (!f.zero_tail && f.explicit_order() < 1) {
        throw OrderExhausted("derivative of a jet of order 0");
    }
    std::vector<FaaObject<C>> parts{F::linear_object(f.src), f.src};
    FaaObject<C> src = F::product(parts);
    FaaObject<C> dst = F::linear_object(f.dst);
    Jet<C> out{src, dst, F::component(f, 1), {}, f.zero_tail};
    std::size_t m = f.zero_tail ? f.explicit_order() : f.explicit_order() - 1;

    const BO a = f.src.monoid.carrier;
    std::vector<BO> aa{a, a};
    std::vector<BO> ax{a, f.src.point};
    BO AA = C::product(aa);
    BO AX = C::product(ax);
    for (std::size_t n = 1; n <= m; ++n) {
        std::vector<BO> fs(n, AA);
        fs.push_back(AX);
        BO dom = C::product(fs);
        auto dir = [&](std::size_t i, std::size_t side) { return C::then(C::projection(fs, i), C::projection(aa, side)); };
        BM c = C::then(C::projection(fs, n), C::projection(ax, 0));
        BM x = C::then(C::projection(fs, n), C::projection(ax, 1));
        std::optional<BM> total;
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<BM> args{dir(i, 0)};
            for (std::size_t j = 0; j < n; ++j) {
                if (j != i) {
                    args.push_back(dir(j, 1));
                }
            }
            args.push_back(x);
            BM term = C::then(C::tuple(dom, args), F::component(f, n));
            total = total ? F::base_sum(f.dst.monoid, *total, term) : term;
        }
        std::vector<BM> args{c};
        for (std::size_t j = 0; j < n; ++j) {
            args.push_back(dir(j, 1));
        }
        args.push_back(x);
        BM top = C::then(C::tuple(dom, args), F::component(f, n + 1));
        if constexpr (std::is_same_v<C, Smooth>) {
            if (active_mutation() == Mutation::derivative_sign) {
                std::vector<Expr> negated;
                for (const Expr& e : top.coords()) {
                    negated.push_back(-e);
                }
                top = SmoothMap(top.dom().dim, negated, top.guard());
            }
        }
        out.derivs.push_back(F::base_sum(f.dst.monoid, *total, top));
    }
    return out;
}

}  // namespace gcdc
