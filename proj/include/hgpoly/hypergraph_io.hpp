#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "hgpoly/betti.hpp"
#include "hgpoly/bipoly.hpp"
#include "hgpoly/hypergraph.hpp"

namespace hgpoly {

using json = nlohmann::ordered_json;

// Hypergraph files come in two formats:
//   JSON:  {"vertices": ["a","b","c"], "edges": [["a","b"],["b","c"]]}
//   lines: first line lists vertex labels, each further line is one edge;
//          labels are separated by whitespace, blank lines are skipped.
// The format is picked by the first non-blank character ('{' means JSON).

Hypergraph parse_hypergraph(std::string_view text);
Hypergraph parse_hypergraph_json(const json& doc);
Hypergraph parse_hypergraph_lines(std::string_view text);
Hypergraph read_hypergraph_file(const std::filesystem::path& path);

json hypergraph_to_json(const Hypergraph& h);
std::string hypergraph_to_lines(const Hypergraph& h);

/// [[i, j, "coeff"], ...] in (i, j) order; coefficients as decimal strings.
json bipoly_to_json(const BiPoly& p);
BiPoly bipoly_from_json(const json& doc);

/// Dense coefficient list as decimal strings.
json unipoly_to_json(const UniPoly& p);
json bigints_to_json(const std::vector<BigInt>& values);

/// Card files written by write_deck: card_00.json, card_01.json, ... Each is a
/// hypergraph document plus "card" (its index) and "deleted_vertex".
void write_deck(const Deck& deck, const std::vector<std::string>& parent_labels, const std::filesystem::path& dir);
Deck read_deck(const std::filesystem::path& dir);

/// All hypergraph files (*.json, *.hg, *.txt) in `dir`, sorted by file name.
/// Parse failures are collected and reported together as one ParseError.
struct CorpusEntry {
  std::string name;
  Hypergraph hypergraph;
};
std::vector<CorpusEntry> load_corpus(const std::filesystem::path& dir);

}  // namespace hgpoly
