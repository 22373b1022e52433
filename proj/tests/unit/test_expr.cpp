#include <doctest.h>

#include <bit>
#include <cmath>
#include <limits>

#include "gcdc/expr.hpp"
#include "gcdc/guard.hpp"
#include "gcdc/parser.hpp"
#include "gcdc/program.hpp"
#include "gcdc/sampling.hpp"
#include "support.hpp"

using namespace gcdc;

namespace {

const std::vector<std::string> xy{"x", "y"};

double value_at(const Expr& e, std::vector<double> p) {
    auto v = eval(e, p);
    return v ? *v : std::nan("");
}

/// Random unsimplified trees over x, y from primitives that are smooth on all
/// of R^2 (denominators and log/sqrt arguments are kept positive).
class Trees {
public:
    explicit Trees(std::uint64_t seed) : rng_(seed) {}

    Expr make(int depth) {
        std::uniform_int_distribution<int> pick(0, depth <= 0 ? 2 : 12);
        switch (pick(rng_)) {
            case 0:
            case 1:
                return Expr::var(rng_() % 2);
            case 2: {
                static const char* consts[] = {"0", "1", "2", "0.5", "3", "0.1", "1.5"};
                return Expr::constant(*Rational::from_decimal(consts[rng_() % 7]));
            }
            case 3:
                return Expr::raw(Op::add, make(depth - 1), make(depth - 1));
            case 4:
                return Expr::raw(Op::sub, make(depth - 1), make(depth - 1));
            case 5:
                return Expr::raw(Op::mul, make(depth - 1), make(depth - 1));
            case 6:
                return Expr::raw(Op::div, make(depth - 1), positive(depth - 1));
            case 7:
                return Expr::raw_pow(make(depth - 1), static_cast<unsigned>(rng_() % 4));
            case 8:
                return Expr::raw(Op::neg, make(depth - 1));
            case 9:
                return Expr::raw(Op::sin, make(depth - 1));
            case 10:
                return Expr::raw(Op::cos, make(depth - 1));
            case 11:
                return Expr::raw(Op::log, positive(depth - 1));
            default:
                return Expr::raw(Op::sqrt, positive(depth - 1));
        }
    }

private:
    // 1 + e^2 > 0 everywhere
    Expr positive(int depth) {
        return Expr::raw(Op::add, Expr::constant(Rational(1)), Expr::raw_pow(make(depth), 2));
    }
    std::mt19937_64 rng_;
};

std::uint64_t ulp_distance(double a, double b) {
    if (a == b) {
        return 0;
    }
    auto key = [](double d) {
        auto i = std::bit_cast<std::int64_t>(d);
        return i < 0 ? std::numeric_limits<std::int64_t>::min() - i : i;
    };
    std::int64_t ka = key(a), kb = key(b);
    return ka > kb ? static_cast<std::uint64_t>(ka - kb) : static_cast<std::uint64_t>(kb - ka);
}

}  // namespace

TEST_CASE("parse_map reads the grammar") {
    auto sq = parse_map("fn(x) -> (x^2)");
    CHECK(sq.map.dom().dim == 1);
    CHECK(sq.map.cod().dim == 1);
    CHECK(sq.map.guard().is_true());
    CHECK(oracle::scalar(sq.map, {3.0}) == 9.0);

    auto two = parse_map("fn(x,y) -> (x+y, x*y)");
    CHECK(two.map.dom().dim == 2);
    CHECK(two.map.cod().dim == 2);
    CHECK(*oracle::at(two.map, {2.0, 5.0}) == std::vector<double>{7.0, 10.0});

    auto inv = parse_map("fn(x) -> (1/x) where x != 0");
    CHECK(inv.map.guard().to_string({"x"}) == "x != 0");
    CHECK_FALSE(inv.map.evaluate(std::vector<double>{0.0}).defined);
}

TEST_CASE("parsing adds domain atoms after the explicit ones") {
    auto m = parse_map("fn(x) -> (log(x) + 1/(x - 1)) where x - 3 != 0");
    CHECK(m.map.guard().to_string({"x"}) == "x - 3 != 0 && x > 0 && x - 1 != 0");
    // an explicit atom equal to an implied one is not repeated
    CHECK(parse_map("fn(x) -> (1/x) where x != 0").map.guard().atoms().size() == 1);
}

TEST_CASE("parse errors carry their kind and position") {
    auto kind_of = [](const char* text) {
        try {
            parse_map(text);
        } catch (const ParseError& e) {
            return std::optional{std::pair{e.kind(), e.column()}};
        }
        return std::optional<std::pair<ParseError::Kind, std::size_t>>{};
    };
    auto syntax = kind_of("fn(x) -> (x +)");
    REQUIRE(syntax);
    CHECK(syntax->first == ParseError::Kind::syntax);
    CHECK(syntax->second == 14);
    CHECK(kind_of("fn(x) -> (y)")->first == ParseError::Kind::unbound_variable);
    CHECK(kind_of("fn(x) -> (sin(x, x))")->first == ParseError::Kind::wrong_arity);
    CHECK(kind_of("fn(x, x) -> (x)"));
    CHECK(kind_of("fn(x) -> (x) where x > 1"));
    CHECK(kind_of("fn(x) -> (x^-1)"));
    CHECK_FALSE(kind_of("fn(x) -> (2.5e-1*x)"));

    try {
        parse_map("fn(x) ->\n (x $ 1)");
        FAIL("no error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
        CHECK(e.column() == 5);
    }
}

TEST_CASE("eval examples") {
    auto x = Expr::var(0);
    CHECK(*eval(sin(x), std::vector<double>{0.0}) == 0.0);
    Env env{{"x", 3.0}};
    CHECK(*eval(parse_expr("x^2 + 1", {"x"}), {"x"}, env) == 10.0);
    CHECK_FALSE(eval(log(x), std::vector<double>{-1.0}));
    CHECK_FALSE(eval(Expr::constant(1.0) / x, std::vector<double>{0.0}));
    CHECK_THROWS_AS(eval(Expr::var(1), std::vector<double>{1.0}), UnboundVariable);
    CHECK_THROWS_AS(eval(Expr::var(0), {"x"}, Env{}), UnboundVariable);
}

TEST_CASE("diff examples") {
    auto x = Expr::var(0), y = Expr::var(1);
    CHECK(structurally_equal(diff(x * y, 0), y));
    CHECK(structurally_equal(diff(sin(x), 0), cos(x)));
    Expr d = diff(pow(x, 3), 0);
    CHECK(to_string(d, {"x"}) == "3*x^2");
    CHECK(value_at(d, {2.0}) == 12.0);
    auto cube = [](double t) { return t * t * t; };
    CHECK(oracle::close(value_at(d, {2.0}), oracle::central(cube, 2.0), 1e-5, 1e-8));
}

TEST_CASE("simplify examples") {
    auto x = Expr::var(0);
    auto one = Expr::constant(Rational(1));
    auto zero = Expr::constant(Rational(0));
    CHECK(structurally_equal(simplify(Expr::raw(Op::add, zero, x)), x));
    CHECK(structurally_equal(simplify(Expr::raw(Op::mul, one, Expr::raw(Op::mul, x, one))), x));
    auto five = simplify(Expr::raw(Op::add, Expr::constant(Rational(2)), Expr::constant(Rational(3))));
    CHECK(five.is_constant(5.0));
    CHECK(structurally_equal(simplify(Expr::raw(Op::mul, zero, sin(x))), zero));
    CHECK(structurally_equal(simplify(Expr::raw_pow(x, 1)), x));
    CHECK(simplify(Expr::raw_pow(x, 0)).is_one());
    CHECK(structurally_equal(simplify(Expr::raw(Op::neg, Expr::raw(Op::neg, x))), x));
    CHECK(structurally_equal(simplify(Expr::raw(Op::add, x, zero)), x));
    // exact decimals fold without rounding
    auto tenth = Expr::raw(Op::add, Expr::constant(*Rational::from_decimal("0.1")),
                           Expr::constant(*Rational::from_decimal("0.2")));
    CHECK(to_string(simplify(tenth), {}) == "0.3");
}

TEST_CASE("simplify preserves values to 4 ulp") {
    Trees trees(7);
    oracle::Points pts(11);
    for (int t = 0; t < 60; ++t) {
        Expr e = trees.make(4);
        Expr s = simplify(e);
        for (int k = 0; k < 100; ++k) {
            auto p = pts.next(2);
            double a = value_at(e, p), b = value_at(s, p);
            if (std::isnan(a) && std::isnan(b)) {
                continue;
            }
            INFO(to_string(e, xy), " vs ", to_string(s, xy));
            REQUIRE(ulp_distance(a, b) <= 4);
        }
    }
}

TEST_CASE("derivatives agree with central differences") {
    Trees trees(19);
    oracle::Points pts(23);
    for (int t = 0; t < 40; ++t) {
        Expr e = trees.make(3);
        for (std::size_t v = 0; v < 2; ++v) {
            Expr d = diff(e, v);
            for (int k = 0; k < 200; ++k) {
                auto p = pts.next(2);
                auto along = [&](double s) {
                    auto q = p;
                    q[v] = s;
                    return value_at(e, q);
                };
                double exact = value_at(d, p);
                double approx = oracle::central(along, p[v]);
                // skip points where the quotient itself has not settled
                if (!oracle::close(approx, oracle::central(along, p[v], 2e-4), 1e-5, 1e-8)) {
                    continue;
                }
                INFO(to_string(e, xy), " d/d", xy[v], " at ", p[0], ", ", p[1]);
                REQUIRE(oracle::close(exact, approx, 1e-5, 1e-8));
            }
        }
    }
}

TEST_CASE("printing and parsing round-trip") {
    Trees trees(31);
    for (int t = 0; t < 200; ++t) {
        Expr s = simplify(trees.make(4));
        std::string text = to_string(s, xy);
        Expr back = simplify(parse_expr(text, xy));
        INFO(text);
        CHECK(structurally_equal(back, s));
    }
    for (const char* text : {"fn(x) -> (x^2)", "fn(x, y) -> (x + y, x*y)", "fn(x) -> (1/x) where x != 0",
                             "fn(a, b) -> (sin(a)*exp(-b), log(a^2 + 1)) where a - b > 0"}) {
        auto m = parse_map(text);
        auto again = parse_map(m.map.to_string(m.params));
        CHECK(structurally_equal(m.map, again.map));
    }
}

TEST_CASE("simplify is idempotent on derivatives") {
    Trees trees(37);
    for (int t = 0; t < 50; ++t) {
        Expr d = diff(trees.make(3), 0);
        CHECK(structurally_equal(simplify(d), d));
    }
}

TEST_CASE("compiled programs agree with tree evaluation") {
    Trees trees(41);
    oracle::Points pts(43);
    std::vector<Expr> outs;
    for (int t = 0; t < 8; ++t) {
        outs.push_back(trees.make(4));
    }
    Program prog(outs);
    std::vector<double> out(outs.size());
    for (int k = 0; k < 50; ++k) {
        auto p = pts.next(2);
        prog.run(p, out);
        for (std::size_t i = 0; i < outs.size(); ++i) {
            double ref = value_at(outs[i], p);
            CHECK((std::isnan(ref) ? std::isnan(out[i]) : out[i] == ref));
        }
    }
}

TEST_CASE("guard examples") {
    auto x = Expr::var(0);
    Guard nonzero = Guard::atom(x, false);
    CHECK(structurally_equal(guard_and(Guard{}, nonzero), nonzero));
    Guard both = guard_and(Guard::atom(x, true), nonzero);
    CHECK(both.eval(std::vector<double>{2.0}));
    CHECK(both.eval({"x"}, Env{{"x", 2.0}}));
    // x > 0 with x := y*y + 1, at y = 0
    std::vector<Expr> sub{x * x + Expr::constant(Rational(1))};
    CHECK(guard_subst(Guard::atom(x, true), sub).eval(std::vector<double>{0.0}));
}

TEST_CASE("guard conjunction laws at sampled points") {
    auto x = Expr::var(0), y = Expr::var(1);
    std::vector<Guard> gs{Guard{}, Guard::atom(x, true), Guard::atom(x - y, false),
                          Guard::atom(sin(x) + y, true), Guard::from_domain_of(std::vector<Expr>{log(y)})};
    oracle::Points pts(5);
    for (const Guard& a : gs) {
        CHECK(structurally_equal(guard_and(a, a), a));
        for (const Guard& b : gs) {
            Guard ab = guard_and(a, b), ba = guard_and(b, a);
            for (int k = 0; k < 100; ++k) {
                auto p = pts.next(2);
                bool expected = a.eval(p) && b.eval(p);
                CHECK(ab.eval(p) == expected);
                CHECK(ba.eval(p) == expected);
            }
        }
    }
}

TEST_CASE("guard substitution commutes with evaluation") {
    auto x = Expr::var(0), y = Expr::var(1);
    Guard g = guard_and(Guard::atom(x - Expr::constant(Rational(1)), true), Guard::atom(x * y, false));
    std::vector<Expr> sub{sin(x) + y * y, x - y};
    Guard moved = guard_subst(g, sub);
    oracle::Points pts(9);
    for (int k = 0; k < 200; ++k) {
        auto p = pts.next(2);
        std::vector<double> image{*eval(sub[0], p), *eval(sub[1], p)};
        CHECK(moved.eval(p) == g.eval(image));
    }
}

TEST_CASE("an atom that faults is false") {
    Guard g = Guard::atom(log(Expr::var(0)), true);
    CHECK_FALSE(g.eval(std::vector<double>{-1.0}));
    CHECK(g.eval(std::vector<double>{3.0}));
}

TEST_CASE("finite_diff examples") {
    std::vector<double> one{1.0}, zero{0.0}, dir{1.0};
    CHECK(std::fabs(finite_diff(oracle::map("fn(x) -> (x^2)"), one, dir, 1e-4)[0] - 2.0) < 1e-8);
    CHECK(std::fabs(finite_diff(oracle::map("fn(x) -> (sin(x))"), zero, dir, 1e-4)[0] - 1.0) < 1e-8);
    std::vector<double> p{0.3, -1.2}, v{0.7, 2.0};
    CHECK(std::fabs(finite_diff(oracle::map("fn(x, y) -> (4.5)"), p, v, 1e-4)[0]) < 1e-12);
    std::vector<double> near{0.00005};
    CHECK_THROWS_AS(finite_diff(oracle::map("fn(x) -> (log(x))"), near, dir, 1e-4), OutOfDomain);
}

TEST_CASE("number printing") {
    CHECK(to_string(Expr::constant(*Rational::make(1, 4)), {}) == "0.25");
    CHECK(to_string(Expr::constant(*Rational::make(1, 3)), {}) == "(1/3)");
    CHECK(to_string(Expr::constant(std::sqrt(2.0)), {}) == "1.4142135623730951");
    CHECK(to_string(-Expr::var(0), {"x"}) == "-x");
    CHECK(to_string(pow(Expr::var(0) + Expr::var(1), 2), xy) == "(x + y)^2");
}
