#include "gcdc/corpus.hpp"

#include <fstream>
#include <sstream>

#include "gcdc/faa/comonad.hpp"
#include "gcdc/smooth_model.hpp"

namespace gcdc {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) {
        return "";
    }
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

ParseError at_line(const ParseError& e, std::size_t line) {
    std::string msg = e.what();
    std::size_t cut = msg.find(": ");
    return ParseError(e.kind(), line + e.line() - 1, e.column(), cut == std::string::npos ? msg : msg.substr(cut + 2));
}

SplitObject parse_object(const std::string& rest, std::size_t line) {
    // rest: "(n) where guard" or "(n)"
    std::size_t open = rest.find('(');
    std::size_t close = rest.find(')');
    if (open == std::string::npos || close == std::string::npos || close < open) {
        throw ParseError(ParseError::Kind::syntax, line, 1, "expected obj (n) [where guard]");
    }
    std::size_t dim = 0;
    try {
        dim = std::stoul(rest.substr(open + 1, close - open - 1));
    } catch (const std::exception&) {
        throw ParseError(ParseError::Kind::syntax, line, open + 2, "object dimension must be a natural number");
    }
    std::string tail = trim(rest.substr(close + 1));
    Guard g;
    if (!tail.empty()) {
        if (tail.rfind("where", 0) != 0) {
            throw ParseError(ParseError::Kind::syntax, line, close + 2, "expected 'where'");
        }
        try {
            g = parse_guard(tail.substr(5), point_names(dim));
        } catch (const ParseError& e) {
            throw at_line(e, line);
        }
    }
    return SplitObject::make(dim, g);
}

}  // namespace

std::vector<std::string> component_names(std::size_t n, std::size_t carrier, std::size_t point) {
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = 1; j <= carrier; ++j) {
            names.push_back("v" + std::to_string(i) + (carrier == 1 ? "" : "_" + std::to_string(j)));
        }
    }
    for (const std::string& x : point_names(point)) {
        names.push_back(x);
    }
    return names;
}

nlohmann::json jet_to_json(const Jet<Smooth>& j) {
    nlohmann::json doc;
    auto obj = [](const FaaObject<Smooth>& o) {
        return nlohmann::json{{"carrier", o.monoid.carrier.dim}, {"point", o.point.dim}};
    };
    doc["src"] = obj(j.src);
    doc["dst"] = obj(j.dst);
    doc["order"] = j.explicit_order();
    doc["star"] = j.star.to_string();
    nlohmann::json derivs = nlohmann::json::array();
    for (std::size_t n = 1; n <= j.explicit_order(); ++n) {
        derivs.push_back(j.derivs[n - 1].to_string(component_names(n, j.src.monoid.carrier.dim, j.src.point.dim)));
    }
    doc["derivs"] = derivs;
    return doc;
}

Jet<Smooth> jet_from_json(const nlohmann::json& doc) {
    if (!doc.is_object() || !doc.contains("star") || !doc["star"].is_string()) {
        throw ParseError(ParseError::Kind::syntax, 1, 1, "jet needs a \"star\" map text");
    }
    SmoothMap star = parse_map(doc["star"].get<std::string>()).map;
    LAssignment L;
    Jet<Smooth> j{smooth_faa_object(star.dom(), L), smooth_faa_object(star.cod(), L), star, {}, false};
    if (doc.contains("derivs")) {
        std::size_t n = 0;
        for (const auto& d : doc["derivs"]) {
            ++n;
            SmoothMap m = parse_map(d.get<std::string>()).map;
            std::size_t want = n * star.dom().dim + star.dom().dim;
            if (m.dom().dim != want || m.cod() != star.cod()) {
                throw ParseError(ParseError::Kind::wrong_arity, 1, 1,
                                 "wrong arity: component " + std::to_string(n) + " must be a map R^" +
                                     std::to_string(want) + " -> R^" + std::to_string(star.cod().dim));
            }
            j.derivs.push_back(m);
        }
    }
    return j;
}

Corpus parse_corpus(const std::string& text) {
    Corpus c;
    std::istringstream in(text);
    std::string raw;
    std::size_t line = 0;
    std::optional<SplitObject> object;
    while (std::getline(in, raw)) {
        ++line;
        std::string s = trim(raw.substr(0, raw.find('#')));
        if (s.empty()) {
            continue;
        }
        if (s.rfind("obj", 0) == 0 && (s.size() == 3 || s[3] == ' ' || s[3] == '(')) {
            object = parse_object(s.substr(3), line);
            continue;
        }
        if (s.rfind("jet", 0) == 0 && (s.size() > 3 && (s[3] == ' ' || s[3] == '{'))) {
            std::string body = trim(s.substr(3));
            nlohmann::json doc;
            try {
                doc = nlohmann::json::parse(body);
            } catch (const nlohmann::json::exception& e) {
                throw ParseError(ParseError::Kind::syntax, line, 5, std::string("bad jet document: ") + e.what());
            }
            try {
                c.jets.push_back({line, body, jet_from_json(doc)});
            } catch (const ParseError& e) {
                throw ParseError(e.kind(), line, 1, e.what());
            }
            continue;
        }
        try {
            ParsedMap pm = parse_map(s);
            if (object && object->space != pm.map.dom()) {
                throw ParseError(ParseError::Kind::wrong_arity, line, 1,
                                 "wrong arity: map domain differs from the object annotation");
            }
            c.maps.push_back({line, s, std::move(pm), object});
        } catch (const ParseError& e) {
            if (e.line() == 1) {
                throw at_line(e, line);
            }
            throw;
        }
    }
    return c;
}

Corpus read_corpus_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot read corpus file " + path);
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_corpus(buf.str());
}

std::optional<std::size_t> partner(const Corpus& c, std::size_t i) {
    std::size_t n = c.maps.size();
    for (std::size_t k = 1; k < n; ++k) {
        std::size_t j = (i + k) % n;
        if (c.maps[j].parsed.map.dom() == c.maps[i].parsed.map.cod()) {
            return j;
        }
    }
    return std::nullopt;
}

SmoothMap partner_map(const Corpus& c, std::size_t i) {
    if (auto j = partner(c, i)) {
        return c.maps[*j].parsed.map;
    }
    return componentwise_sin(c.maps[i].parsed.map.cod().dim);
}

const std::string& default_corpus_text() {
    static const std::string text = R"(# polynomials, transcendental maps, several dimensions
fn(x) -> (x^3 - 2*x + 1)
fn(x) -> (sin(x))
fn(x) -> (exp(x) * cos(x))
fn(x, y) -> (x*y + y^2, x - 3*y)
fn(x, y) -> (sin(x*y))
fn(x) -> (x^4 + x, cos(x))
fn(x, y, z) -> (x*y*z, exp(z) + x^2)
fn(u, v) -> (u^2 - v^2, 2*u*v, u + v)
)";
    return text;
}

const std::string& guarded_corpus_text() {
    static const std::string text = R"(# partial maps: guards come from division, log and sqrt
fn(x) -> (x^2 + 1)
fn(x) -> (log(x))
fn(x) -> (x^2 - 1)
fn(x) -> (sqrt(x))
fn(x) -> (1/x)
fn(x, y) -> (x/y, log(x^2 + y^2))
fn(x) -> (sin(x) / x)
fn(x) -> (exp(x) - 2) where x > 0
)";
    return text;
}

const std::string& split_corpus_text() {
    static const std::string text = R"(# maps on open subsets of the line
obj (1) where x != 0
fn(x) -> (1/x)
obj (1) where x > 0
fn(x) -> (log(x))
fn(x) -> (sqrt(x))
obj (1) where x - 1 != 0
fn(x) -> (1/(x - 1))
)";
    return text;
}

const std::string& polynomial_corpus_text() {
    static const std::string text = R"(# polynomial maps
fn(x) -> (x^2)
fn(x) -> (x^3 - x)
fn(x, y) -> (x*y, x^2 + y)
fn(x) -> (3*x^4 - 2*x^2 + 5)
)";
    return text;
}

}  // namespace gcdc
