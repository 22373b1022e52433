#include <doctest.h>

#include "gcdc/faa/comonad.hpp"
#include "gcdc/faa/laws.hpp"
#include "gcdc/sampling.hpp"
#include "support.hpp"

using namespace gcdc;
using oracle::map;
using F1 = Faa<Smooth>;
using F2 = Faa<Faa<Smooth>>;
using F3 = Faa<Faa<Faa<Smooth>>>;

namespace {

const LAssignment classical;
const Config cfg;

void require_pass(const Verdict& v) {
    INFO(v.detail);
    CHECK(v.ok());
}

}  // namespace

TEST_CASE("delta keeps f as its star and D f as its first component") {
    SmoothJet f = cofree(map("fn(x, y) -> (x*exp(y))"), classical, 4);
    Jet<F1> d = delta(f);
    CHECK(F1::structurally_equal(d.star, f));
    CHECK(F1::structurally_equal(epsilon(d), f));
    require_pass(F1::compare(d.derivs.at(0), derivative_jet(f), cfg, "delta 1"));
    // usable order falls by one per component
    for (std::size_t n = 1; n <= 4; ++n) {
        CHECK(d.derivs[n - 1].explicit_order() == 4 - n);
    }
}

TEST_CASE("the delta object is the lambda-image monoid") {
    FaaObject<Smooth> o = smooth_faa_object({2}, classical);
    FaaObject<F1> d = delta_object(o);
    CHECK(d.monoid.carrier.point.dim == 2);
    CHECK(d.monoid.carrier.monoid.carrier.dim == 2);
    require_pass(F1::compare(d.monoid.add, lambda_embed<Smooth>(o.monoid.add, d.monoid.add.src.monoid, o.monoid),
                             cfg, "lambda(+)"));
}

TEST_CASE("counit laws hold exactly on polynomials") {
    for (const char* text : {"fn(x) -> (x^2)", "fn(x) -> (x^3 - x)", "fn(x, y) -> (x*y, x^2 + y)"}) {
        SmoothJet f = cofree(map(text), classical, 4);
        Jet<F1> d = delta(f);
        CHECK(F1::structurally_equal(d.star, f));
        CHECK(F1::structurally_equal(faa_epsilon(d), f));
    }
}

TEST_CASE("coassociativity on the jet of sin") {
    SmoothJet f = cofree(map("fn(x) -> (sin(x))"), classical, 3);
    Jet<F1> d = delta(f);
    require_pass(F3::compare(delta(d, std::size_t{2}), faa_delta(d, std::size_t{2}), cfg, "coassoc"));
}

TEST_CASE("coassociativity fails for a different jet") {
    SmoothJet f = cofree(map("fn(x) -> (sin(x))"), classical, 3);
    SmoothJet g = cofree(map("fn(x) -> (sin(x) + x^3)"), classical, 3);
    Verdict v = F3::compare(delta(delta(f), std::size_t{2}), faa_delta(delta(g), std::size_t{2}), cfg, "neg");
    CHECK(v.status == Status::fail);
}

TEST_CASE("the coalgebra square") {
    for (const char* text : {"fn(x) -> (x^4 - x)", "fn(x, y) -> (sin(x*y))", "fn(x) -> (1/x)"}) {
        SmoothMap f = map(text);
        Jet<F1> d = delta(cofree(f, classical, 4));
        for (std::size_t n = 1; n <= 3; ++n) {
            INFO(text, " n=", n);
            require_pass(F1::compare(d.derivs[n - 1], cofree(nested_Dn(f, n, classical), classical, 4 - n), cfg, "sq"));
        }
    }
}

TEST_CASE("closed-form delta equals the literal zero-insertion route") {
    for (const char* text : {"fn(x) -> (exp(x) * x)", "fn(x, y) -> (x/y)"}) {
        SmoothJet f = cofree(map(text), classical, 4);
        Jet<F1> d = delta(f);
        for (std::size_t n = 1; n <= 3; ++n) {
            INFO(text, " n=", n);
            require_pass(F1::compare(literal_delta_component(f, n), d.derivs[n - 1], cfg, "literal"));
        }
    }
}

TEST_CASE("delta commutes with restriction") {
    for (const char* text : {"fn(x) -> (1/x)", "fn(x) -> (log(x))", "fn(x) -> (sqrt(x))"}) {
        SmoothJet f = cofree(map(text), classical, 4);
        require_pass(F2::compare(delta(F1::restriction(f)), F2::restriction(delta(f)), cfg, "delta rs"));
        require_pass(compare_maps(epsilon(F1::restriction(f)), Smooth::restriction(f.star), cfg, "eps rs"));
        require_pass(F3::compare(delta(delta(f), std::size_t{2}), faa_delta(delta(f), std::size_t{2}), cfg, "coassoc"));
    }
}

TEST_CASE("zero-tail jets keep an unbounded order through delta") {
    SmoothJet id = identity_jet(smooth_faa_object({1}, classical));
    Jet<F1> d = delta(id);
    CHECK(d.order() == unbounded_order);
    require_pass(F1::compare(d.derivs.at(0), derivative_jet(id), cfg, "id"));
}
