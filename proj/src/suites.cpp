#include "gcdc/suites.hpp"

#include <algorithm>
#include <stdexcept>

#include "gcdc/faa/comonad.hpp"
#include "gcdc/faa/laws.hpp"
#include "gcdc/report.hpp"
#include "gcdc/sampling.hpp"
#include "gcdc/smooth_model.hpp"
#include "gcdc/splitting.hpp"

namespace gcdc {

namespace {

using F1 = Faa<Smooth>;
using F2 = Faa<Faa<Smooth>>;
using F3 = Faa<Faa<Faa<Smooth>>>;

class Recorder {
public:
    Recorder(std::string suite, std::size_t index, std::vector<Check>& out)
        : suite_(std::move(suite)), index_(index), out_(out) {}

    std::string label(const std::string& axiom) const {
        return suite_ + "/" + std::to_string(index_) + "/" + axiom;
    }
    void record(const std::string& axiom, const Verdict& v) { out_.push_back({suite_, index_, axiom, v}); }
    void expect(const std::string& axiom, bool holds, const std::string& detail) {
        record(axiom, holds ? Verdict{} : Verdict::failure(detail));
    }

private:
    std::string suite_;
    std::size_t index_;
    std::vector<Check>& out_;
};

Verdict info(std::string detail) {
    Verdict v;
    v.status = Status::info;
    v.detail = std::move(detail);
    return v;
}

/// Runs `body`, turning an unexpected exception into a failed check.
template <class Body>
void guarded(Recorder& r, const std::string& axiom, Body body) {
    try {
        body();
    } catch (const std::exception& e) {
        r.record(axiom, Verdict::failure(std::string("exception: ") + e.what()));
    }
}

void wellformed(Recorder& r, const SmoothJet& j, const Config& cfg, const std::string& tag) {
    WellFormedness w = check_wellformed(j, cfg, r.label(tag));
    r.record("W.additive" + tag, w.additive);
    r.record("W.symmetric" + tag, w.symmetric);
    r.record("W.side-condition" + tag, w.side_condition);
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"cd", "dr", "faa-r", "comonad", "linear", "split"};
    return names;
}

bool is_suite(const std::string& name) {
    const auto& n = suite_names();
    return std::find(n.begin(), n.end(), name) != n.end();
}

const std::string& default_corpus_for(const std::string& suite) {
    if (suite == "dr" || suite == "faa-r") {
        return guarded_corpus_text();
    }
    if (suite == "comonad") {
        return polynomial_corpus_text();
    }
    if (suite == "split") {
        return split_corpus_text();
    }
    return default_corpus_text();
}

std::vector<Check> run_cd_suite(const Corpus& c, const LAssignment& L, const Config& cfg) {
    std::vector<Check> out;
    SmoothModel model(L);
    for (std::size_t i = 0; i < c.maps.size(); ++i) {
        const SmoothMap& f = c.maps[i].parsed.map;
        AxiomChecker<SmoothModel> check(model, cfg, "cd", i, out);
        check.cd(f, partner_map(c, i));
        if (L.variant() == LAssignment::Variant::classical) {
            check.record("FD", check_finite_diff(f, D(f, L), cfg, check.label("FD")));
        }
    }
    return out;
}

std::vector<Check> run_dr_suite(const Corpus& c, const LAssignment& L, const Config& cfg) {
    std::vector<Check> out;
    SmoothModel model(L);
    for (std::size_t i = 0; i < c.maps.size(); ++i) {
        AxiomChecker<SmoothModel> check(model, cfg, "dr", i, out);
        check.dr(c.maps[i].parsed.map, partner_map(c, i));
    }
    return out;
}

std::vector<Check> run_faa_r_suite(const Corpus& c, const LAssignment& L, const Config& cfg) {
    std::vector<Check> out;
    const std::size_t N = cfg.order;
    for (std::size_t i = 0; i < c.maps.size(); ++i) {
        Recorder r("faa-r", i, out);
        const SmoothMap& f = c.maps[i].parsed.map;
        const SmoothMap g = partner_map(c, i);
        SmoothJet J = cofree(f, L, N);
        SmoothJet K = cofree(g, L, N);
        SmoothJet H = F1::then(J, K);
        SmoothJet rJ = F1::restriction(J);

        guarded(r, "W", [&] {
            wellformed(r, J, cfg, "");
            wellformed(r, H, cfg, ".composite");
            wellformed(r, rJ, cfg, ".restriction");
            if (N >= 1) {
                wellformed(r, derivative_jet(J), cfg, ".derivative");
            }
        });

        guarded(r, "R", [&] {
            SmoothJet rH = F1::restriction(H);
            r.record("R.1", F1::compare(F1::then(rJ, J), J, cfg, r.label("R.1")));
            r.record("R.2", F1::compare(F1::then(rJ, rH), F1::then(rH, rJ), cfg, r.label("R.2")));
            r.record("R.3", F1::compare(F1::restriction(F1::then(rJ, H)), F1::then(rJ, rH), cfg, r.label("R.3")));
            r.record("R.4", F1::compare(F1::then(J, F1::restriction(K)), F1::then(rH, J), cfg, r.label("R.4")));
        });

        // (rs(f) h)_n = rs(pi_n f_*) h_n
        guarded(r, "Lemma.restricted-composite", [&] {
            SmoothJet lhs = F1::then(rJ, H);
            Verdict v;
            for (std::size_t n = 0; n <= N; ++n) {
                auto fs = F1::factors(J.src, n);
                SmoothMap pin = Smooth::projection(fs, n);
                SmoothMap rhs = Smooth::then(Smooth::restriction(Smooth::then(pin, J.star)), F1::component(H, n));
                v = combine_component(
                    v, compare_maps(F1::component(lhs, n), rhs, cfg, r.label("Lemma/" + std::to_string(n))), n);
            }
            r.record("Lemma.restricted-composite", v);
        });

        guarded(r, "P", [&] {
            std::vector<SmoothJet> pair{J, H};
            SmoothJet fh = F1::tuple(J.src, pair);
            std::vector<FaaObject<Smooth>> yz{J.dst, H.dst};
            SmoothJet first = F1::then(fh, F1::projection(yz, 0));
            r.record("P.restriction", F1::compare(F1::restriction(fh), F1::then(rJ, F1::restriction(H)), cfg,
                                                  r.label("P.restriction")));
            r.expect("P.leq", leq(first, J, cfg, r.label("P.leq")), "<f, h> pi_0 is not below f");
            std::vector<FaaObject<Smooth>> xy{J.src, J.dst};
            FaaObject<Smooth> prod = F1::product(xy);
            std::vector<SmoothJet> projs{F1::projection(xy, 0), F1::projection(xy, 1)};
            r.record("P.identity",
                     F1::compare(F1::tuple(prod, projs), F1::identity(prod), cfg, r.label("P.identity")));
        });

        guarded(r, "I", [&] {
            bool jet_total = is_total(J, cfg, r.label("I.total/jet"));
            bool star_total = is_total(J.star, cfg, r.label("I.total/star"));
            r.expect("I.total", jet_total == star_total, "totality of the jet and of f_* disagree");

            SmoothJet below = F1::then(rJ, H);
            bool ok = leq(below, H, cfg, r.label("I.leq/a"));
            bool agree = ok == leq_componentwise(below, H, cfg, r.label("I.leq/ac"));
            bool back = leq(H, below, cfg, r.label("I.leq/b"));
            agree = agree && back == leq_componentwise(H, below, cfg, r.label("I.leq/bc"));
            r.expect("I.leq", ok && agree, ok ? "jet order and componentwise order disagree"
                                              : "rs(f) h is not below h");

            bool compat = compatible(below, H, cfg, r.label("I.compatible/a"));
            bool cagree = compat == compatible_componentwise(below, H, cfg, r.label("I.compatible/ac"));
            SmoothJet other = cofree(Smooth::then(f, componentwise_sin(f.cod().dim)), L, N);
            SmoothJet shifted = F1::then(J, cofree(componentwise_sin(f.cod().dim), L, N));
            bool c2 = compatible(other, shifted, cfg, r.label("I.compatible/b"));
            cagree = cagree && c2 == compatible_componentwise(other, shifted, cfg, r.label("I.compatible/bc"));
            r.expect("I.compatible", compat && cagree,
                     compat ? "compatibility of jets and of components disagree" : "rs(f) h and h are not compatible");
        });

        guarded(r, "assoc", [&] {
            SmoothJet I = cofree(componentwise_sin(g.cod().dim), L, N);
            r.record("assoc", F1::compare(F1::then(H, I), F1::then(J, F1::then(K, I)), cfg, r.label("assoc")));
            Verdict unit = combine(F1::compare(F1::then(F1::identity(J.src), J), J, cfg, r.label("unit/left")),
                                   F1::compare(F1::then(J, F1::identity(J.dst)), J, cfg, r.label("unit/right")));
            r.record("unit", unit);
        });

        guarded(r, "E.preserves", [&] {
            Verdict v = compare_maps(epsilon(H), Smooth::then(J.star, K.star), cfg, r.label("E/then"));
            v = combine(v, compare_maps(epsilon(rJ), Smooth::restriction(J.star), cfg, r.label("E/rs")));
            std::vector<SmoothJet> pair{J, H};
            std::vector<SmoothMap> stars{J.star, H.star};
            v = combine(v, compare_maps(epsilon(F1::tuple(J.src, pair)), Smooth::tuple(f.dom(), stars), cfg,
                                        r.label("E/tuple")));
            r.record("E.preserves", v);
        });

        guarded(r, "functoriality",
                [&] { r.record("functoriality", check_functoriality(f, g, L, N, cfg, r.label("functoriality"))); });
    }

    for (std::size_t k = 0; k < c.jets.size(); ++k) {
        Recorder r("faa-r", c.maps.size() + k, out);
        guarded(r, "W", [&] { wellformed(r, c.jets[k].jet, cfg, ".hand-written"); });
    }
    return out;
}

std::vector<Check> run_comonad_suite(const Corpus& c, const LAssignment& L, const Config& cfg) {
    std::vector<Check> out;
    const std::size_t N = cfg.order;
    for (std::size_t i = 0; i < c.maps.size(); ++i) {
        Recorder r("comonad", i, out);
        const SmoothMap& f = c.maps[i].parsed.map;
        SmoothJet J = cofree(f, L, N);

        guarded(r, "counit", [&] {
            Jet<F1> d = delta(J);
            r.record("counit.left", exact_or_tight(d.star, J, cfg, r.label("counit.left")));
            r.record("counit.right", exact_or_tight(faa_epsilon(d), J, cfg, r.label("counit.right")));
        });

        guarded(r, "coassoc", [&] {
            Jet<F1> d = delta(J);
            auto lhs = delta(d, std::size_t{2});
            auto rhs = faa_delta(d, std::size_t{2});
            r.record("coassoc", F3::compare(lhs, rhs, cfg, r.label("coassoc")));
        });

        guarded(r, "coalgebra", [&] {
            Jet<F1> d = delta(J);
            for (std::size_t n = 1; n <= std::min<std::size_t>(2, N); ++n) {
                SmoothJet square = cofree(nested_Dn(f, n, L), L, N - n);
                std::string id = "coalgebra." + std::to_string(n);
                r.record(id, F1::compare(d.derivs[n - 1], square, cfg, r.label(id)));
            }
        });

        guarded(r, "derivative", [&] {
            SmoothJet dj = derivative_jet(J);
            r.record("delta.1", F1::compare(delta(J).derivs.at(0), dj, cfg, r.label("delta.1")));
            r.record("derivative.cofree", F1::compare(dj, cofree(D(f, L), L, N - 1), cfg, r.label("derivative.cofree")));
            if (N >= 2) {
                SmoothMap c1 = F1::component(dj, 1);
                SmoothMap anchor = derivative_anchor(J);
                r.record("derivative.anchor", Smooth::structurally_equal(c1, anchor)
                                                  ? Verdict{}
                                                  : compare_maps(c1, anchor, cfg, r.label("derivative.anchor")));
            }
        });

        guarded(r, "restriction", [&] {
            r.record("restriction.delta", F2::compare(delta(F1::restriction(J)), F2::restriction(delta(J)), cfg,
                                                      r.label("restriction.delta")));
            r.record("restriction.epsilon", compare_maps(epsilon(F1::restriction(J)), Smooth::restriction(J.star),
                                                         cfg, r.label("restriction.epsilon")));
        });

        guarded(r, "literal", [&] {
            Jet<F1> d = delta(J);
            for (std::size_t n = 1; n <= std::min<std::size_t>(3, N); ++n) {
                std::string id = "literal." + std::to_string(n);
                Verdict v = F1::compare(literal_delta_component(J, n), d.derivs[n - 1], cfg, r.label(id));
                v = combine(v, compare_maps(literal_Dn(f, n, L), nested_Dn(f, n, L), cfg, r.label(id + "/Dn")));
                r.record(id, v);
            }
        });
    }
    return out;
}

SmoothMap random_matrix_map(std::size_t rows, std::size_t cols, const Config& cfg, const std::string& label) {
    Sampler rng(cfg.seed, label);
    std::vector<Expr> coords;
    for (std::size_t i = 0; i < rows; ++i) {
        std::vector<Expr> terms;
        for (std::size_t j = 0; j < cols; ++j) {
            auto entry = static_cast<long long>(rng.next() % 7) - 3;
            terms.push_back(Expr::constant(Rational(entry)) * Expr::var(j));
        }
        coords.push_back(sum(terms));
    }
    return SmoothMap(cols, std::move(coords));
}

std::vector<Check> run_linear_suite(const Corpus& c, const LAssignment& L, const Config& cfg) {
    std::vector<Check> out;
    const std::size_t N = cfg.order;

    // lambda-images of seeded integer matrices are linear and lambda-images
    for (std::size_t k = 0; k < 10; ++k) {
        Recorder r("linear", k, out);
        guarded(r, "lambda", [&] {
            Sampler dims(cfg.seed, "linear/dims/" + std::to_string(k));
            std::size_t rows = 1 + dims.next() % 3;
            std::size_t cols = 1 + dims.next() % 3;
            SmoothMap h = random_matrix_map(rows, cols, cfg, "linear/matrix/" + std::to_string(k));
            SmoothJet j = lambda_embed_checked<Smooth>(h, componentwise_monoid({cols}), componentwise_monoid({rows}),
                                                       cfg);
            bool lin = is_linear(j, cfg, r.label("is_linear"));
            bool member = lambda_membership(j, cfg, r.label("member")).ok();
            r.expect("linear.agree", lin == member, "is_linear and lambda membership disagree");
            r.expect("linear.lambda-image", lin && member, "a lambda-image is not linear");
            Verdict shape;
            SmoothMap pi0_star = Smooth::then(Smooth::projection(F1::factors(j.src, 1), 0), h);
            shape = combine_component(shape, compare_maps(F1::component(j, 1), pi0_star, cfg, r.label("f1")), 1);
            for (std::size_t n = 2; n <= N; ++n) {
                SmoothMap zero = restricted_zero(F1::component(j, n), rows);
                shape = combine_component(
                    shape, compare_maps(F1::component(j, n), zero, cfg, r.label("f" + std::to_string(n))), n);
            }
            r.record("linear.components", shape);
        });
    }

    // cofree images of the corpus maps
    for (std::size_t i = 0; i < c.maps.size(); ++i) {
        Recorder r("linear", 10 + i, out);
        const SmoothMap& f = c.maps[i].parsed.map;
        SmoothJet j = cofree(f, L, N);
        guarded(r, "linear.agree", [&] {
            if (j.src.point != j.src.monoid.carrier || j.dst.point != j.dst.monoid.carrier) {
                r.record("linear.agree", info("not applicable: objects are not linear under this L"));
                return;
            }
            bool lin = is_linear(j, cfg, r.label("is_linear"));
            bool member = lambda_membership(j, cfg, r.label("member")).ok();
            Verdict v = lin == member ? Verdict{} : Verdict::failure("is_linear and lambda membership disagree");
            v.detail = lin ? "linear" : "not linear";
            r.record("linear.agree", v);
        });
    }

    // D(3x) is linear and equals lambda(3x)
    Recorder r("linear", 10 + c.maps.size(), out);
    guarded(r, "linear.3x", [&] {
        if (L.variant() != LAssignment::Variant::classical) {
            r.record("linear.3x", info("not applicable: objects are not linear under this L"));
            return;
        }
        SmoothMap triple(1, {Expr::constant(Rational(3)) * Expr::var(0)});
        SmoothJet j = cofree(triple, L, N);
        SmoothJet lam = lambda_embed<Smooth>(triple, componentwise_monoid({1}), componentwise_monoid({1}));
        Verdict v = F1::compare(j, lam, cfg, r.label("linear.3x"));
        if (!is_linear(j, cfg, r.label("linear.3x/is_linear"))) {
            v = combine(v, Verdict::failure("D(3x) is not linear"));
        }
        r.record("linear.3x", v);
    });
    return out;
}

std::vector<Check> run_split_suite(const Corpus& c, const LAssignment& L, const Config& cfg) {
    std::vector<Check> out;
    SplitModel model(L);
    for (std::size_t i = 0; i < c.maps.size(); ++i) {
        const SmoothMap& f = c.maps[i].parsed.map;
        SplitObject obj = c.maps[i].object ? *c.maps[i].object : SplitObject::whole(f.dom().dim);
        AxiomChecker<SplitModel> check(model, cfg, "split", i, out);
        SplitMap F;
        try {
            F = restrict_to(f, obj);
        } catch (const std::exception& e) {
            check.record("hom", Verdict::failure(e.what()));
            continue;
        }
        SplitMap G = restrict_to(partner_map(c, i), SplitObject::whole(f.cod().dim));
        check.cd(F, G);
        check.dr(F, G);

        Verdict hom = check_hom_condition(F, cfg, check.label("hom/f"));
        hom = combine(hom, check_hom_condition(model.D(F), cfg, check.label("hom/D")));
        hom = combine(hom, check_hom_condition(model.then(F, G), cfg, check.label("hom/then")));
        hom = combine(hom, check_hom_condition(model.restriction(F), cfg, check.label("hom/rs")));
        check.record("hom", hom);

        SplitObject l0 = model.L0(obj);
        check.record("L.split-idempotent", same_split_object(model.L0(l0), l0)
                                               ? Verdict{}
                                               : Verdict::failure("split L is not idempotent on " + obj.to_string()));
        check.record("idem", compare_maps(Smooth::then(obj.idem, obj.idem), obj.idem, cfg, check.label("idem")));
    }
    return out;
}

std::vector<Check> run_suite(const std::string& name, const Corpus& c, const LAssignment& L, const Config& cfg) {
    std::vector<Check> out;
    if (name == "cd") {
        out = run_cd_suite(c, L, cfg);
    } else if (name == "dr") {
        out = run_dr_suite(c, L, cfg);
    } else if (name == "faa-r") {
        out = run_faa_r_suite(c, L, cfg);
    } else if (name == "comonad") {
        out = run_comonad_suite(c, L, cfg);
    } else if (name == "linear") {
        out = run_linear_suite(c, L, cfg);
    } else if (name == "split") {
        out = run_split_suite(c, L, cfg);
    } else {
        throw std::invalid_argument("unknown suite: " + name);
    }
    sort_checks(out);
    return out;
}

}  // namespace gcdc
