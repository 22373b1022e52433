// Command-line front end: jets, composition, derivatives and law suites.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "gcdc/corpus.hpp"
#include "gcdc/faa/comonad.hpp"
#include "gcdc/parser.hpp"
#include "gcdc/report.hpp"
#include "gcdc/suites.hpp"

using namespace gcdc;

namespace {

constexpr int exit_usage = 2;

struct Options {
    Config cfg;
    std::string model = "classical";
    std::string json_path;
    std::string corpus_path;
    std::string suite;
    std::string map_text;
    std::string second_text;
    std::vector<double> point;
    std::vector<double> direction;
    bool order_given = false;
};

LAssignment assignment(const Options& o) {
    return LAssignment(o.model == "trivial" ? LAssignment::Variant::trivial : LAssignment::Variant::classical);
}

void write_json(const Options& o, const nlohmann::json& doc) {
    if (o.json_path.empty()) {
        return;
    }
    std::string text = doc.dump(2) + "\n";
    if (o.json_path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(o.json_path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write " + o.json_path);
    }
    out << text;
}

std::string format_values(const std::vector<double>& v) {
    std::ostringstream os;
    os.precision(17);
    if (v.size() == 1) {
        os << v[0];
        return os.str();
    }
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        os << (i ? ", " : "") << v[i];
    }
    os << ")";
    return os.str();
}

void print_jet(const Jet<Smooth>& j) {
    std::size_t a = j.src.monoid.carrier.dim;
    std::size_t d = j.src.point.dim;
    for (std::size_t n = 0; n <= j.explicit_order(); ++n) {
        const SmoothMap& c = Faa<Smooth>::component(j, n);
        std::string name = n == 0 ? "f_*" : "f_" + std::to_string(n);
        std::cout << name << " = " << c.to_string(component_names(n, a, d)) << "\n";
    }
}

/// f_n(v, ..., v; x) for n = 0..order.
int print_tower(const Jet<Smooth>& j, const Options& o) {
    std::size_t a = j.src.monoid.carrier.dim;
    std::size_t d = j.src.point.dim;
    if (o.point.size() != d) {
        std::cerr << "error: --point needs " << d << " coordinate(s)\n";
        return exit_usage;
    }
    std::vector<double> v = o.direction;
    if (v.empty()) {
        v.assign(a, 1.0);
    }
    if (v.size() != a) {
        std::cerr << "error: --direction needs " << a << " coordinate(s)\n";
        return exit_usage;
    }
    std::vector<std::string> entries;
    for (std::size_t n = 0; n <= j.explicit_order(); ++n) {
        std::vector<double> in;
        for (std::size_t k = 0; k < n; ++k) {
            in.insert(in.end(), v.begin(), v.end());
        }
        in.insert(in.end(), o.point.begin(), o.point.end());
        auto r = Faa<Smooth>::component(j, n).evaluate(in);
        if (!r.defined || r.fault) {
            std::cerr << "error: point " << format_values(o.point) << " is outside the domain of the map ("
                      << j.star.guard().to_string(point_names(d)) << ")\n";
            return exit_usage;
        }
        entries.push_back(format_values(r.values));
    }
    std::cout << "tower: [";
    for (std::size_t i = 0; i < entries.size(); ++i) {
        std::cout << (i ? ", " : "") << entries[i];
    }
    std::cout << "]\n";
    return 0;
}

int cmd_jet(const Options& o) {
    SmoothMap f = parse_map(o.map_text).map;
    Jet<Smooth> j = cofree(f, assignment(o), o.cfg.order);
    print_jet(j);
    write_json(o, jet_to_json(j));
    return o.point.empty() && o.direction.empty() ? 0 : print_tower(j, o);
}

int cmd_compose(const Options& o) {
    SmoothMap f = parse_map(o.map_text).map;
    SmoothMap g = parse_map(o.second_text).map;
    if (f.cod() != g.dom()) {
        std::cerr << "error: the first map lands in R^" << f.cod().dim << " but the second starts at R^"
                  << g.dom().dim << "\n";
        return exit_usage;
    }
    LAssignment L = assignment(o);
    Jet<Smooth> h = compose_jets(cofree(f, L, o.cfg.order), cofree(g, L, o.cfg.order));
    print_jet(h);
    write_json(o, jet_to_json(h));
    return o.point.empty() && o.direction.empty() ? 0 : print_tower(h, o);
}

int cmd_diff(const Options& o) {
    SmoothMap f = parse_map(o.map_text).map;
    LAssignment L = assignment(o);
    std::size_t n = o.order_given ? o.cfg.order : 1;
    SmoothMap dn = n == 0 ? f : nested_Dn(f, n, L);
    std::size_t a = L.L0(f.dom()).dim;
    std::string text = dn.to_string(component_names(n, a, f.dom().dim));
    std::cout << "D_" << n << " = " << text << "\n";
    write_json(o, nlohmann::json{{"order", n}, {"map", text}});
    return 0;
}

int cmd_axioms(const Options& o) {
    Corpus corpus = o.corpus_path.empty() ? parse_corpus(default_corpus_for(o.suite)) : read_corpus_file(o.corpus_path);
    LAssignment L = assignment(o);
    std::vector<Check> checks = run_suite(o.suite, corpus, L, o.cfg);
    int code = exit_code(checks);
    // with the report on stdout, the text summary moves to stderr
    std::ostream& text = o.json_path == "-" ? std::cerr : std::cout;
    for (const Check& c : checks) {
        text << format_check(c) << "\n";
    }
    text << (code == 0 ? "all checks passed" : code == 1 ? "law failures found" : "sampling starved") << " ("
         << checks.size() << " checks)\n";
    write_json(o, report_json(o.suite, L.name(), o.cfg, checks));
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    Options o;
    CLI::App app{"Jets, Faa di Bruno composition and differential law checks over guarded smooth maps"};
    app.require_subcommand(1);

    auto numeric = [&](CLI::App* sub) {
        sub->add_option("--order", o.cfg.order, "truncation order N")->check(CLI::NonNegativeNumber);
        sub->add_option("--seed", o.cfg.seed, "sampling seed");
        sub->add_option("--samples", o.cfg.samples, "accepted points per comparison")->check(CLI::PositiveNumber);
        sub->add_option("--tol-rel", o.cfg.tol_rel, "relative tolerance")->check(CLI::PositiveNumber);
        sub->add_option("--tol-abs", o.cfg.tol_abs, "absolute tolerance floor")->check(CLI::PositiveNumber);
        sub->add_option("--radius", o.cfg.radius, "half-width of the sampling box")->check(CLI::PositiveNumber);
        sub->add_option("--retry-cap", o.cfg.retry_cap, "draws allowed per comparison")->check(CLI::PositiveNumber);
        sub->add_option("--model", o.model, "vector space assignment")
            ->check(CLI::IsMember({"classical", "trivial"}));
        sub->add_option("--json", o.json_path, "write a JSON report to this path (- for stdout)");
    };
    auto tower = [&](CLI::App* sub) {
        sub->add_option("--point", o.point, "evaluate the tower at this point")->delimiter(',');
        sub->add_option("--direction", o.direction, "direction fed to every block (default all ones)")
            ->delimiter(',');
    };

    auto* jet = app.add_subcommand("jet", "print the jet (f, D f, D_2 f, ...) of a map");
    jet->add_option("map", o.map_text, "map text, e.g. 'fn(x) -> (x^3)'")->required();
    numeric(jet);
    tower(jet);

    auto* compose = app.add_subcommand("compose", "compose the jets of f and g");
    compose->add_option("f", o.map_text, "first map")->required();
    compose->add_option("g", o.second_text, "second map")->required();
    numeric(compose);
    tower(compose);

    auto* diff = app.add_subcommand("diff", "print the n-th derivative D_n f (n = --order, default 1)");
    diff->add_option("map", o.map_text, "map text")->required();
    numeric(diff);

    auto* axioms = app.add_subcommand("axioms", "run a law suite over a corpus");
    axioms->add_option("--suite", o.suite, "cd, dr, faa-r, comonad, linear or split")
        ->required()
        ->check(CLI::IsMember(suite_names()));
    axioms->add_option("--corpus", o.corpus_path, "corpus file (default: built-in corpus for the suite)");
    numeric(axioms);

    struct Alias {
        const char* name;
        const char* suite;
        const char* help;
    };
    std::vector<std::pair<CLI::App*, std::string>> aliases;
    for (const Alias& a : {Alias{"comonad-check", "comonad", "run the comonad suite"},
                           Alias{"linear-check", "linear", "run the linearity suite"},
                           Alias{"split-check", "split", "run the splitting suite"}}) {
        auto* sub = app.add_subcommand(a.name, a.help);
        sub->add_option("--corpus", o.corpus_path, "corpus file");
        numeric(sub);
        aliases.emplace_back(sub, a.suite);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }
    for (const auto& [sub, suite] : aliases) {
        if (sub->parsed()) {
            o.suite = suite;
        }
    }
    for (auto* sub : {jet, compose, diff, axioms}) {
        if (sub->parsed() && sub->count("--order") > 0) {
            o.order_given = true;
        }
    }

    try {
        if (jet->parsed()) {
            return cmd_jet(o);
        }
        if (compose->parsed()) {
            return cmd_compose(o);
        }
        if (diff->parsed()) {
            return cmd_diff(o);
        }
        return cmd_axioms(o);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
}
