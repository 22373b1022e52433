#include "gcdc/faa/laws.hpp"

#include <algorithm>
#include <numeric>

#include "gcdc/sampling.hpp"

namespace gcdc {

namespace {

std::vector<SpaceObject> blocks(std::size_t copies, std::size_t carrier, std::size_t point) {
    std::vector<SpaceObject> fs(copies, SpaceObject{carrier});
    fs.push_back({point});
    return fs;
}

}  // namespace

WellFormedness check_wellformed(const SmoothJet& j, const Config& cfg, const std::string& label,
                                std::size_t max_order) {
    WellFormedness w;
    std::size_t a = j.src.monoid.carrier.dim;
    std::size_t d = j.src.point.dim;
    std::size_t top = std::min(max_order, j.explicit_order());
    for (std::size_t n = 1; n <= top; ++n) {
        const SmoothMap& fn = j.derivs[n - 1];
        std::string tag = label + "/" + std::to_string(n);

        // additivity in block i, with an extra block n as the second summand
        auto fs = blocks(n + 1, a, d);
        SpaceObject dom = Smooth::product(fs);
        for (std::size_t i = 0; i < n; ++i) {
            auto args_with = [&](std::optional<std::size_t> replace_by, bool summed) {
                std::vector<SmoothMap> args;
                for (std::size_t k = 0; k < n; ++k) {
                    if (k == i && summed) {
                        args.push_back(pointwise_sum(Smooth::projection(fs, i), Smooth::projection(fs, n)));
                    } else if (k == i && replace_by) {
                        args.push_back(Smooth::projection(fs, *replace_by));
                    } else {
                        args.push_back(Smooth::projection(fs, k));
                    }
                }
                args.push_back(Smooth::projection(fs, n + 1));
                return Smooth::then(Smooth::tuple(dom, args), fn);
            };
            SmoothMap lhs = args_with(std::nullopt, true);
            SmoothMap rhs = pointwise_sum(args_with(i, false), args_with(n, false));
            w.additive = combine_component(w.additive, compare_maps(lhs, rhs, cfg, tag + "/add" + std::to_string(i)), n);
        }

        // symmetry: every permutation for n <= 3, ten seeded ones beyond
        auto gs = blocks(n, a, d);
        SpaceObject gdom = Smooth::product(gs);
        std::vector<std::vector<std::size_t>> perms;
        std::vector<std::size_t> p(n);
        std::iota(p.begin(), p.end(), 0);
        if (n <= 3) {
            do {
                perms.push_back(p);
            } while (std::next_permutation(p.begin(), p.end()));
        } else {
            Sampler rng(cfg.seed, tag + "/perm");
            for (int t = 0; t < 10; ++t) {
                for (std::size_t k = n; k > 1; --k) {
                    std::swap(p[k - 1], p[rng.next() % k]);
                }
                perms.push_back(p);
            }
        }
        for (std::size_t t = 0; t < perms.size(); ++t) {
            std::vector<SmoothMap> args;
            for (std::size_t k = 0; k < n; ++k) {
                args.push_back(Smooth::projection(gs, perms[t][k]));
            }
            args.push_back(Smooth::projection(gs, n));
            SmoothMap permuted = Smooth::then(Smooth::tuple(gdom, args), fn);
            w.symmetric = combine_component(
                w.symmetric, compare_maps(permuted, fn, cfg, tag + "/perm" + std::to_string(t)), n);
        }

        // side condition
        Verdict side;
        if (!fn.guard().variables_within(n * a, n * a + d)) {
            side = Verdict::failure("guard mentions a direction block");
        } else {
            SmoothMap expected = Smooth::restriction(Smooth::then(Smooth::projection(gs, n), j.star));
            side = compare_maps(Smooth::restriction(fn), expected, cfg, tag + "/side");
        }
        w.side_condition = combine_component(w.side_condition, side, n);
    }
    return w;
}

bool is_total(const SmoothMap& f, const Config& cfg, const std::string& label) {
    return compare_maps(Smooth::restriction(f), Smooth::identity(f.dom()), cfg, label).ok();
}

bool is_total(const SmoothJet& f, const Config& cfg, const std::string& label) {
    return SmoothFaa::compare(SmoothFaa::restriction(f), SmoothFaa::identity(f.src), cfg, label).ok();
}

bool leq(const SmoothMap& a, const SmoothMap& b, const Config& cfg, const std::string& label) {
    return compare_maps(Smooth::then(Smooth::restriction(a), b), a, cfg, label).ok();
}

bool leq(const SmoothJet& a, const SmoothJet& b, const Config& cfg, const std::string& label) {
    return SmoothFaa::compare(SmoothFaa::then(SmoothFaa::restriction(a), b), a, cfg, label).ok();
}

bool compatible(const SmoothMap& a, const SmoothMap& b, const Config& cfg, const std::string& label) {
    return compare_maps(Smooth::then(Smooth::restriction(a), b), Smooth::then(Smooth::restriction(b), a), cfg, label)
        .ok();
}

bool compatible(const SmoothJet& a, const SmoothJet& b, const Config& cfg, const std::string& label) {
    return SmoothFaa::compare(SmoothFaa::then(SmoothFaa::restriction(a), b),
                              SmoothFaa::then(SmoothFaa::restriction(b), a), cfg, label)
        .ok();
}

namespace {

template <class Pred>
bool componentwise(const SmoothJet& a, const SmoothJet& b, Pred pred, const std::string& label) {
    std::size_t m = std::min(a.order(), b.order());
    if (a.zero_tail && b.zero_tail) {
        m = std::max(a.explicit_order(), b.explicit_order());
    }
    for (std::size_t n = 0; n <= m; ++n) {
        if (!pred(SmoothFaa::component(a, n), SmoothFaa::component(b, n), label + "/" + std::to_string(n))) {
            return false;
        }
    }
    return true;
}

}  // namespace

bool leq_componentwise(const SmoothJet& a, const SmoothJet& b, const Config& cfg, const std::string& label) {
    return componentwise(
        a, b, [&](const SmoothMap& x, const SmoothMap& y, const std::string& l) { return leq(x, y, cfg, l); }, label);
}

bool compatible_componentwise(const SmoothJet& a, const SmoothJet& b, const Config& cfg, const std::string& label) {
    return componentwise(
        a, b, [&](const SmoothMap& x, const SmoothMap& y, const std::string& l) { return compatible(x, y, cfg, l); },
        label);
}

Verdict linearity(const SmoothJet& f, const Config& cfg, const std::string& label) {
    if (f.src.point != f.src.monoid.carrier || f.dst.point != f.dst.monoid.carrier) {
        throw NonLinearObject("linearity needs objects whose point object is the carrier");
    }
    std::vector<FaaObject<Smooth>> parts{SmoothFaa::linear_object(f.src), f.src};
    SmoothJet pi0 = SmoothFaa::projection(parts, 0);
    return SmoothFaa::compare(derivative_jet(f), SmoothFaa::then(pi0, f), cfg, label);
}

bool is_linear(const SmoothJet& f, const Config& cfg, const std::string& label) {
    return linearity(f, cfg, label).ok();
}

Verdict lambda_membership(const SmoothJet& f, const Config& cfg, const std::string& label) {
    return SmoothFaa::compare(f, lambda_embed<Smooth>(f.star, f.src.monoid, f.dst.monoid), cfg, label);
}

Verdict check_functoriality(const SmoothMap& f, const SmoothMap& g, const LAssignment& L, std::size_t order,
                            const Config& cfg, const std::string& label) {
    SmoothJet lhs = compose_jets(cofree(f, L, order), cofree(g, L, order));
    SmoothJet rhs = cofree(Smooth::then(f, g), L, order);
    return SmoothFaa::compare(lhs, rhs, cfg, label);
}

Verdict exact_or_tight(const SmoothJet& a, const SmoothJet& b, const Config& cfg, const std::string& label) {
    if (SmoothFaa::structurally_equal(a, b)) {
        Verdict v;
        v.detail = "structurally equal";
        return v;
    }
    Config tight = cfg;
    tight.tol_rel = 1e-12;
    tight.tol_abs = 1e-12;
    return SmoothFaa::compare(a, b, tight, label);
}

SmoothMap derivative_anchor(const SmoothJet& f) {
    std::size_t a = f.src.monoid.carrier.dim;
    std::size_t d = f.src.point.dim;
    // domain blocks: a, b, c, x
    std::vector<SpaceObject> fs{{a}, {a}, {a}, {d}};
    SpaceObject dom = Smooth::product(fs);
    auto p = [&](std::size_t i) { return Smooth::projection(fs, i); };
    std::vector<SmoothMap> second{p(1), p(2), p(3)};
    std::vector<SmoothMap> first{p(0), p(3)};
    SmoothMap f2 = Smooth::then(Smooth::tuple(dom, second), SmoothFaa::component(f, 2));
    SmoothMap f1 = Smooth::then(Smooth::tuple(dom, first), SmoothFaa::component(f, 1));
    return pointwise_sum(f2, f1);
}

}  // namespace gcdc
