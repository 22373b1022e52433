#include <doctest.h>

#include "gcdc/axioms.hpp"
#include "gcdc/sampling.hpp"
#include "gcdc/splitting.hpp"
#include "support.hpp"

using namespace gcdc;
using oracle::map;

namespace {

const LAssignment classical;
const Config cfg;

SplitObject positive() { return SplitObject::make(1, Guard::atom(Expr::var(0), true)); }

}  // namespace

TEST_CASE("identity on an open subset is its idempotent") {
    SplitMap id = split_identity(positive());
    CHECK(id.f.to_string() == "fn(x) -> (x) where x > 0");
    CHECK(positive().to_string() == "R^1 | x > 0");
    CHECK(SplitObject::whole(2).to_string() == "R^2 | true");
    CHECK(compare_maps(Smooth::then(positive().idem, positive().idem), positive().idem, cfg, "idem").ok());
}

TEST_CASE("inclusion then 1/x keeps the subset guard") {
    SplitMap f = restrict_to(map("fn(x) -> (1/x)"), positive());
    CHECK(f.f.guard().eval(std::vector<double>{2.0}));
    CHECK_FALSE(f.f.guard().eval(std::vector<double>{-2.0}));
    CHECK(check_hom_condition(f, cfg, "hom").ok());
    SplitMap r = split_restriction(f);
    CHECK(compare_maps(split_then(r, f).f, f.f, cfg, "R.1").ok());
}

TEST_CASE("composition requires matching objects") {
    SplitMap f = restrict_to(map("fn(x) -> (x^2)"), positive());
    SplitMap g = restrict_to(map("fn(x) -> (log(x))"), positive());
    CHECK_THROWS(split_then(f, g));
}

TEST_CASE("split L and D") {
    SplitModel model(classical);
    SplitObject o = positive();
    SplitObject l0 = model.L0(o);
    CHECK(l0.guard().is_true());
    CHECK(same_split_object(model.L0(l0), l0));

    SplitMap id = split_identity(o);
    SplitMap did = model.D(id);
    CHECK(did.f.to_string({"v", "x"}) == "fn(v, x) -> (v) where x > 0");

    SplitMap sq = restrict_to(map("fn(x) -> (x^2)"), o);
    SplitMap dsq = model.D(sq);
    CHECK(check_hom_condition(dsq, cfg, "hom D").ok());
    oracle::Points pts(3);
    for (int k = 0; k < 200; ++k) {
        auto p = pts.next(2);
        auto r = dsq.f.evaluate(p);
        CHECK(r.defined == (p[1] > 0));
        if (r.defined) {
            CHECK(oracle::close(r.values[0], 2 * p[1] * p[0], 1e-12, 1e-12));
        }
    }
}

TEST_CASE("CD and DR suites inside the splitting") {
    for (auto variant : {LAssignment::Variant::classical, LAssignment::Variant::trivial}) {
        SplitModel model{LAssignment(variant)};
        SplitObject nonzero = SplitObject::make(1, Guard::atom(Expr::var(0), false));
        SplitMap f = restrict_to(map("fn(x) -> (1/x)"), nonzero);
        SplitMap g = restrict_to(map("fn(y) -> (sin(y))"), SplitObject::whole(1));
        std::vector<Check> out;
        AxiomChecker<SplitModel> check(model, cfg, "split", 0, out);
        check.cd(f, g);
        check.dr(f, g);
        for (const Check& c : out) {
            INFO(c.axiom, ": ", c.verdict.detail);
            CHECK(c.verdict.ok());
        }
    }
}

TEST_CASE("CD.6 on 1/x restricted to the positive half-line") {
    SplitModel model(classical);
    SplitMap f = restrict_to(map("fn(x) -> (1/x)"), positive());
    SplitMap d2 = model.D(model.D(f));
    SplitMap d1 = model.D(f);
    oracle::Points pts(8);
    int tested = 0;
    for (int k = 0; k < 1000 && tested < 100; ++k) {
        auto p = pts.next(3);
        if (p[2] <= 0) {
            continue;
        }
        ++tested;
        double a = p[0], c = p[1], x = p[2];
        double lhs = oracle::scalar(d2.f, {a, 0.0, c, x});
        CHECK(oracle::close(lhs, oracle::scalar(d1.f, {a, x}), 1e-9, 1e-8));
        CHECK(oracle::close(lhs, -a / (x * x), 1e-9, 1e-8));
    }
    CHECK(tested == 100);
}
