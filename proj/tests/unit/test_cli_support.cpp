#include <doctest.h>

#include "gcdc/corpus.hpp"
#include "gcdc/faa/comonad.hpp"
#include "gcdc/faa/laws.hpp"
#include "gcdc/report.hpp"
#include "gcdc/suites.hpp"
#include "support.hpp"

using namespace gcdc;

namespace {

const LAssignment classical;

}  // namespace

TEST_CASE("corpus parsing") {
    Corpus c = parse_corpus(R"txt(# comment
fn(x) -> (x^2)   # trailing comment

obj (1) where x > 0
fn(x) -> (log(x))
jet {"star": "fn(x) -> (x^2)", "derivs": ["fn(v, x) -> (2*x*v)"]}
)txt");
    REQUIRE(c.maps.size() == 2);
    CHECK(c.maps[0].line == 2);
    CHECK_FALSE(c.maps[0].object);
    REQUIRE(c.maps[1].object);
    CHECK(c.maps[1].object->to_string() == "R^1 | x > 0");
    REQUIRE(c.jets.size() == 1);
    CHECK(c.jets[0].jet.explicit_order() == 1);

    try {
        parse_corpus("fn(x) -> (x)\nfn(x) -> (x +)\n");
        FAIL("no error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
    }
    CHECK_THROWS_AS(parse_corpus("obj (2) where x1 > 0\nfn(x) -> (x)\n"), ParseError);
    CHECK_THROWS_AS(parse_corpus(R"txt(jet {"star": "fn(x) -> (x)", "derivs": ["fn(x) -> (x)"]})txt"), ParseError);
}

TEST_CASE("partners are the next map with a matching domain") {
    Corpus c = parse_corpus("fn(x) -> (x, x)\nfn(x) -> (x)\nfn(a, b) -> (a*b)\n");
    CHECK(partner(c, 0) == std::optional<std::size_t>{2});
    CHECK(partner(c, 1) == std::optional<std::size_t>{0});
    CHECK(partner(c, 2) == std::optional<std::size_t>{0});
    Corpus lone = parse_corpus("fn(x) -> (x, x)\n");
    CHECK_FALSE(partner(lone, 0));
    CHECK(partner_map(lone, 0).dom().dim == 2);
}

TEST_CASE("jets round-trip through JSON") {
    SmoothJet j = cofree(oracle::map("fn(x, y) -> (x/y, sin(x))"), classical, 3);
    nlohmann::json doc = jet_to_json(j);
    CHECK(doc["order"] == 3);
    CHECK(doc["derivs"].size() == 3);
    SmoothJet back = jet_from_json(doc);
    CHECK(Faa<Smooth>::compare(back, j, Config{}, "json").ok());
    CHECK(component_names(2, 1, 1) == std::vector<std::string>{"v1", "v2", "x"});
    CHECK(component_names(1, 2, 2) == std::vector<std::string>{"v1_1", "v1_2", "x1", "x2"});
}

TEST_CASE("reports are sorted, counted and deterministic") {
    Corpus c = parse_corpus(guarded_corpus_text());
    Config cfg;
    auto checks = run_suite("dr", c, classical, cfg);
    for (std::size_t i = 1; i < checks.size(); ++i) {
        auto key = [](const Check& k) { return std::tie(k.suite, k.map_index, k.axiom); };
        CHECK(key(checks[i - 1]) < key(checks[i]));
    }
    std::string first = report_json("dr", "classical", cfg, checks).dump();
    std::string second = report_json("dr", "classical", cfg, run_suite("dr", c, classical, cfg)).dump();
    CHECK(first == second);
    nlohmann::json doc = nlohmann::json::parse(first);
    CHECK(doc["schema"] == 1);
    CHECK(doc["summary"]["fail"] == 0);
    CHECK(doc["checks"].size() == checks.size());
    CHECK(exit_code(checks) == 0);
}

TEST_CASE("exit codes order failure over starvation") {
    Check pass{"s", 0, "a", {}};
    Check starved{"s", 0, "b", {}};
    starved.verdict.status = Status::starved;
    Check failed{"s", 0, "c", Verdict::failure("x")};
    CHECK(exit_code({pass}) == 0);
    CHECK(exit_code({pass, starved}) == 3);
    CHECK(exit_code({starved, failed}) == 1);
}

TEST_CASE("every suite passes on its built-in corpus under both assignments") {
    for (auto variant : {LAssignment::Variant::classical, LAssignment::Variant::trivial}) {
        LAssignment L(variant);
        for (const std::string& suite : suite_names()) {
            Corpus c = parse_corpus(default_corpus_for(suite));
            for (const Check& k : run_suite(suite, c, L, Config{})) {
                INFO(L.name(), " ", format_check(k));
                CHECK(k.verdict.ok());
            }
        }
    }
}

TEST_CASE("a wrong hand-written jet fails the faa-r suite with a witness") {
    Corpus c = parse_corpus(R"txt(fn(x) -> (x^2)
jet {"star": "fn(x) -> (x^2)", "derivs": ["fn(v, x) -> (2*x*v)", "fn(a, b, x) -> (2*a*a)"]}
)txt");
    auto checks = run_suite("faa-r", c, classical, Config{});
    CHECK(exit_code(checks) == 1);
    bool witnessed = false;
    for (const Check& k : checks) {
        witnessed = witnessed || (k.verdict.status == Status::fail && k.verdict.witness);
    }
    CHECK(witnessed);
}

TEST_CASE("random matrix maps are seeded") {
    Config cfg;
    SmoothMap a = random_matrix_map(2, 3, cfg, "m");
    SmoothMap b = random_matrix_map(2, 3, cfg, "m");
    CHECK(structurally_equal(a, b));
    CHECK(a.dom().dim == 3);
    CHECK(a.cod().dim == 2);
}
