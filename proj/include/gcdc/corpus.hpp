#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "gcdc/faa/jet.hpp"
#include "gcdc/parser.hpp"
#include "gcdc/smooth.hpp"
#include "gcdc/splitting.hpp"

#include <json.hpp>

namespace gcdc {

struct CorpusMap {
    std::size_t line = 0;
    std::string text;
    ParsedMap parsed;
    std::optional<SplitObject> object;  // from the most recent `obj` line
};

struct CorpusJet {
    std::size_t line = 0;
    std::string text;
    Jet<Smooth> jet;
};

/// Corpus file: one map per line in the map grammar, `#` starts a comment.
/// Two extra line forms:
///   obj (n) where <guard>   sets the open subset for the maps that follow
///   jet {json}              a hand-written jet (see jet_from_json)
struct Corpus {
    std::vector<CorpusMap> maps;
    std::vector<CorpusJet> jets;
};

/// Throws ParseError with the line number of the offending entry.
Corpus parse_corpus(const std::string& text);
Corpus read_corpus_file(const std::string& path);

/// Index of the first later map (cyclically) whose domain is the codomain of
/// map i, if any.
std::optional<std::size_t> partner(const Corpus& c, std::size_t i);

/// Second map for the composite laws: the partner, or sin on every coordinate.
SmoothMap partner_map(const Corpus& c, std::size_t i);

/// {"src": {"carrier", "point"}, "dst": ..., "order", "star", "derivs": [...]}
/// with component texts in the map grammar: v1..vn (or v1_1.. for wider
/// carriers) for directions, x (or x1..) for the point.
nlohmann::json jet_to_json(const Jet<Smooth>& j);

/// Reads {"star": text, "derivs": [text, ...]} (src/dst optional) into a jet
/// over the classical vector spaces.
Jet<Smooth> jet_from_json(const nlohmann::json& doc);

/// Parameter names for the n-th component of a jet.
std::vector<std::string> component_names(std::size_t n, std::size_t carrier, std::size_t point);

/// Built-in corpora used when no file is given.
const std::string& default_corpus_text();
const std::string& guarded_corpus_text();
const std::string& split_corpus_text();
const std::string& polynomial_corpus_text();

}  // namespace gcdc
