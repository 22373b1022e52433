#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "gcdc/verdict.hpp"

namespace gcdc {

/// One law instance checked on one corpus entry.
struct Check {
    std::string suite;
    std::size_t map_index = 0;
    std::string axiom;
    Verdict verdict;
};

/// Appends checks of the generalized Cartesian differential axioms for a map
/// f: X -> Y and a second map g: Y -> Z.
///
/// The model supplies the category (dom, cod, product, projection, tuple,
/// then, identity, restriction, bang, terminal), the monoids (L0, add, zero),
/// the operator D, and semantic comparison.
template <class M>
class AxiomChecker {
public:
    using Object = typename M::Object;
    using Map = typename M::Map;

    AxiomChecker(const M& model, const Config& cfg, std::string suite, std::size_t index, std::vector<Check>& out)
        : m_(model), cfg_(cfg), suite_(std::move(suite)), index_(index), out_(out) {}

    void cd(const Map& f, const Map& g) {
        const std::string p = "CD.";
        linearity_of_monoid(p + "1", f);
        additivity(p + "2", f, true);
        projections(p + "3", f);
        pairing(p + "4", f, g);
        chain_rule(p + "5", f, g);
        second_derivative(p + "6", p + "7", f, false);
        lemma(f);
        l_structure(f);
    }

    void dr(const Map& f, const Map& g) {
        const std::string p = "DR.";
        linearity_of_monoid(p + "1", f);
        additivity(p + "2", f, false);
        projections(p + "3", f);
        pairing(p + "4", f, g);
        chain_rule(p + "5", f, g);
        second_derivative(p + "6", p + "7", f, true);
        restriction_of_derivative(f);
        restriction_axioms(f, g);
    }

    /// Records an already computed verdict.
    void record(const std::string& axiom, const Verdict& v) { out_.push_back({suite_, index_, axiom, v}); }

    void expect_equal(const std::string& axiom, const Map& a, const Map& b) {
        record(axiom, m_.compare(a, b, cfg_, label(axiom)));
    }

    std::string label(const std::string& axiom) const {
        return suite_ + "/" + std::to_string(index_) + "/" + axiom;
    }

private:
    std::vector<Object> objs(std::initializer_list<Object> l) const { return std::vector<Object>(l); }
    std::vector<Map> maps(std::initializer_list<Map> l) const { return std::vector<Map>(l); }

    Map proj(const std::vector<Object>& fs, std::size_t i) const { return m_.projection(fs, i); }
    Map pair(const Object& dom, const Map& a, const Map& b) const { return m_.tuple(dom, maps({a, b})); }

    /// a + b for maps into L0(x).
    Map sum(const Object& x, const Map& a, const Map& b) const {
        return m_.then(pair(m_.dom(a), a, b), m_.add(x));
    }
    /// The zero map dom -> L0(x).
    Map zero(const Object& dom, const Object& x) const { return m_.then(m_.bang(dom), m_.zero(x)); }

    void linearity_of_monoid(const std::string& id, const Map& f) {
        Object x = m_.dom(f);
        Object a = m_.L0(x);
        Map add = m_.add(x);
        auto aa = objs({a, a});
        Object sq = m_.product(aa);
        auto lsq = objs({m_.L0(sq), sq});
        expect_equal(id + ".add", m_.D(add), m_.then(proj(lsq, 0), add));
        Map z = m_.zero(x);
        Object t = m_.terminal();
        auto lt = objs({m_.L0(t), t});
        expect_equal(id + ".zero", m_.D(z), m_.then(proj(lt, 0), z));
    }

    void additivity(const std::string& id, const Map& f, bool printed_form) {
        Object x = m_.dom(f);
        Object y = m_.cod(f);
        Object a = m_.L0(x);
        Map df = m_.D(f);
        auto fs = objs({a, a, x});
        Object dom = m_.product(fs);
        Map pa = proj(fs, 0), pb = proj(fs, 1), pc = proj(fs, 2);
        Map lhs = m_.then(pair(dom, sum(x, pa, pb), pc), df);
        Map rhs = sum(y, m_.then(pair(dom, pa, pc), df), m_.then(pair(dom, pb, pc), df));
        expect_equal(id + ".additive", lhs, rhs);

        // <0, a> D f = rs(a f) 0, with a the point.
        Map at_zero = m_.then(pair(x, zero(x, x), m_.identity(x)), df);
        expect_equal(id + ".zero", at_zero, m_.then(m_.restriction(f), zero(x, y)));

        if (!printed_form) {
            return;
        }
        Verdict info;
        info.status = Status::info;
        if (!m_.same_object(a, x)) {
            info.detail = "not applicable: the vector space of the domain differs from the domain";
        } else {
            Map printed = sum(y, m_.then(pair(dom, pa, pb), df), m_.then(pair(dom, pb, pc), df));
            Verdict v = m_.compare(lhs, printed, cfg_, label(id + ".printed"));
            info.worst_residual = v.worst_residual;
            info.witness = v.witness;
            info.detail = v.status == Status::pass ? "printed form holds"
                                                   : "printed form does not hold (" + v.detail + ")";
        }
        record(id + ".printed", info);
    }

    void projections(const std::string& id, const Map& f) {
        auto xy = objs({m_.dom(f), m_.cod(f)});
        Object prod = m_.product(xy);
        auto lxy = objs({m_.L0(prod), prod});
        auto lfs = objs({m_.L0(xy[0]), m_.L0(xy[1])});
        for (std::size_t i = 0; i < 2; ++i) {
            expect_equal(id + ".pi" + std::to_string(i), m_.D(proj(xy, i)),
                         m_.then(proj(lxy, 0), proj(lfs, i)));
        }
    }

    void pairing(const std::string& id, const Map& f, const Map& g) {
        Object x = m_.dom(f);
        Map h = m_.then(f, g);
        auto ax = objs({m_.L0(x), x});
        expect_equal(id, m_.D(pair(x, f, h)), pair(m_.product(ax), m_.D(f), m_.D(h)));
    }

    void chain_rule(const std::string& id, const Map& f, const Map& g) {
        Object x = m_.dom(f);
        auto ax = objs({m_.L0(x), x});
        Object dom = m_.product(ax);
        Map rhs = m_.then(pair(dom, m_.D(f), m_.then(proj(ax, 1), f)), m_.D(g));
        expect_equal(id, m_.D(m_.then(f, g)), rhs);
    }

    void second_derivative(const std::string& id6, const std::string& id7, const Map& f, bool restricted) {
        Object x = m_.dom(f);
        Object a = m_.L0(x);
        Map df = m_.D(f);
        Map ddf = m_.D(df);
        auto fs = objs({a, a, a, x});  // a, b, c, d
        Object dom = m_.product(fs);
        Map pa = proj(fs, 0), pb = proj(fs, 1), pc = proj(fs, 2), pd = proj(fs, 3);
        Map z = zero(dom, x);

        // <<a, 0>, <c, d>> D D f = (rs c) <a, d> D f
        Map lhs6 = m_.then(pair(dom, pair(dom, pa, z), pair(dom, pc, pd)), ddf);
        Map rhs6 = m_.then(pair(dom, pa, pd), df);
        if (restricted) {
            rhs6 = m_.then(m_.restriction(pc), rhs6);
        }
        expect_equal(id6, lhs6, rhs6);

        // <<0, b>, <c, d>> D D f = <<0, c>, <b, d>> D D f
        Map lhs7 = m_.then(pair(dom, pair(dom, z, pb), pair(dom, pc, pd)), ddf);
        Map rhs7 = m_.then(pair(dom, pair(dom, z, pc), pair(dom, pb, pd)), ddf);
        expect_equal(id7, lhs7, rhs7);
    }

    void lemma(const Map& f) {
        auto [h1, h2] = m_.lemma_maps(f);
        Object x = m_.dom(f);
        Object y = m_.cod(f);
        Object l0y = m_.cod(h1);
        auto ax = objs({m_.L0(x), x});
        Object dom = m_.product(ax);
        expect_equal("Lemma.sum", m_.D(sum(l0y, h1, h2)), sum(l0y, m_.D(h1), m_.D(h2)));
        expect_equal("Lemma.zero", m_.D(zero(x, y)), zero(dom, y));
    }

    void l_structure(const Map& f) {
        Object x = m_.dom(f);
        Verdict v;
        Object a = m_.L0(x);
        if (!m_.same_object(m_.L0(a), a) || !m_.same_map(m_.add(a), m_.add(x)) || !m_.same_map(m_.zero(a), m_.zero(x))) {
            v = Verdict::failure("L(L0(X)) differs from L(X)");
        }
        record("L.idempotent", v);
        Verdict p;
        for (const auto& [u, w] : m_.small_object_pairs()) {
            auto uw = objs({u, w});
            auto lu_lw = objs({m_.L0(u), m_.L0(w)});
            if (!m_.same_object(m_.L0(m_.product(uw)), m_.product(lu_lw))) {
                p = Verdict::failure("L0(X x Y) differs from L0(X) x L0(Y) for " + m_.describe(u) + ", " +
                                     m_.describe(w));
                break;
            }
        }
        record("L.product", p);
    }

    void restriction_of_derivative(const Map& f) {
        Object x = m_.dom(f);
        Object a = m_.L0(x);
        auto ax = objs({a, x});
        Object dom = m_.product(ax);
        Map one_times_rf = pair(dom, proj(ax, 0), m_.then(proj(ax, 1), m_.restriction(f)));
        // D[rs f] = (1 x rs f) pi_0
        expect_equal("DR.8", m_.D(m_.restriction(f)), m_.then(one_times_rf, proj(ax, 0)));
        // rs(D f) = 1 x rs f
        expect_equal("DR.9", m_.restriction(m_.D(f)), one_times_rf);
        record("DR.9.structural", m_.guard_on_point_block(m_.D(f), x));
    }

    void restriction_axioms(const Map& f, const Map& g) {
        Map h = m_.then(f, g);
        Map rf = m_.restriction(f);
        Map rh = m_.restriction(h);
        expect_equal("R.1", m_.then(rf, f), f);
        expect_equal("R.2", m_.then(rf, rh), m_.then(rh, rf));
        expect_equal("R.3", m_.restriction(m_.then(rf, h)), m_.then(rf, rh));
        expect_equal("R.4", m_.then(f, m_.restriction(g)), m_.then(rh, f));

        Object x = m_.dom(f);
        Map fh = pair(x, f, h);
        auto yz = objs({m_.cod(f), m_.cod(h)});
        Map first = m_.then(fh, proj(yz, 0));
        // <f, h> pi_0 <= f, i.e. rs(<f,h> pi_0) f = <f,h> pi_0
        expect_equal("P.leq", m_.then(m_.restriction(first), f), first);
        expect_equal("P.restriction", m_.restriction(fh), m_.then(rf, rh));
    }

    const M& m_;
    Config cfg_;
    std::string suite_;
    std::size_t index_;
    std::vector<Check>& out_;
};

}  // namespace gcdc
