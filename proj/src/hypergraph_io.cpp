#include "hgpoly/hypergraph_io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "hgpoly/error.hpp"

namespace hgpoly {

namespace fs = std::filesystem;

namespace {

std::vector<std::string> split_ws(std::string_view line) {
  std::vector<std::string> out;
  std::size_t k = 0;
  while (k < line.size()) {
    while (k < line.size() && std::isspace(static_cast<unsigned char>(line[k]))) ++k;
    const std::size_t start = k;
    while (k < line.size() && !std::isspace(static_cast<unsigned char>(line[k]))) ++k;
    if (k > start) out.emplace_back(line.substr(start, k - start));
  }
  return out;
}

std::vector<std::string> string_list(const json& value, const char* what) {
  if (!value.is_array()) throw Error(ErrorCode::ParseError, std::string(what) + " must be an array of strings");
  std::vector<std::string> out;
  for (const auto& item : value) {
    if (!item.is_string()) throw Error(ErrorCode::ParseError, std::string(what) + " must contain only strings");
    out.push_back(item.get<std::string>());
  }
  return out;
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::IoError, "cannot write '" + path.string() + "'");
  out << text;
}

json parse_json_text(std::string_view text) {
  try {
    return json::parse(text);  // rejects trailing content
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

}  // namespace

Hypergraph parse_hypergraph_json(const json& doc) {
  if (!doc.is_object()) throw Error(ErrorCode::ParseError, "hypergraph document must be a JSON object");
  for (const auto& [key, value] : doc.items()) {
    if (key != "vertices" && key != "edges") throw Error(ErrorCode::ParseError, "unexpected key '" + key + "'");
  }
  if (!doc.contains("vertices") || !doc.contains("edges")) {
    throw Error(ErrorCode::ParseError, "hypergraph document needs \"vertices\" and \"edges\"");
  }
  auto vertices = string_list(doc.at("vertices"), "\"vertices\"");
  const json& edges_json = doc.at("edges");
  if (!edges_json.is_array()) throw Error(ErrorCode::ParseError, "\"edges\" must be an array of arrays");
  std::vector<std::vector<std::string>> edges;
  for (const auto& e : edges_json) edges.push_back(string_list(e, "each edge"));
  return Hypergraph::validate(std::move(vertices), edges);
}

Hypergraph parse_hypergraph_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find('\n', start), text.size());
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  std::vector<std::string> vertices = lines.empty() ? std::vector<std::string>{} : split_ws(lines.front());
  std::vector<std::vector<std::string>> edges;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    auto tokens = split_ws(lines[k]);
    if (!tokens.empty()) edges.push_back(std::move(tokens));
  }
  return Hypergraph::validate(std::move(vertices), edges);
}

Hypergraph parse_hypergraph(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') return parse_hypergraph_json(parse_json_text(text));
  return parse_hypergraph_lines(text);
}

Hypergraph read_hypergraph_file(const fs::path& path) { return parse_hypergraph(read_file(path)); }

json hypergraph_to_json(const Hypergraph& h) {
  json edges = json::array();
  for (VertexMask e : h.edges()) edges.push_back(h.labels_of(e));
  return json{{"vertices", h.labels()}, {"edges", std::move(edges)}};
}

std::string hypergraph_to_lines(const Hypergraph& h) {
  auto join = [](const std::vector<std::string>& items) {
    std::string out;
    for (std::size_t k = 0; k < items.size(); ++k) out += (k ? " " : "") + items[k];
    return out;
  };
  std::string out = join(h.labels()) + "\n";
  for (VertexMask e : h.edges()) out += join(h.labels_of(e)) + "\n";
  return out;
}

json bipoly_to_json(const BiPoly& p) {
  json out = json::array();
  for (const auto& [e, c] : p.terms()) out.push_back(json::array({e.first, e.second, to_decimal(c)}));
  return out;
}

BiPoly bipoly_from_json(const json& doc) {
  if (!doc.is_array()) throw Error(ErrorCode::ParseError, "polynomial must be an array of [i, j, \"coeff\"]");
  BiPoly out;
  for (const auto& term : doc) {
    if (!term.is_array() || term.size() != 3 || !term[0].is_number_unsigned() || !term[1].is_number_unsigned() ||
        !term[2].is_string()) {
      throw Error(ErrorCode::ParseError, "polynomial term must be [i, j, \"coeff\"]: " + term.dump());
    }
    out.add_term(term[0].get<std::uint32_t>(), term[1].get<std::uint32_t>(),
                 parse_decimal(term[2].get<std::string>()));
  }
  return out;
}

json bigints_to_json(const std::vector<BigInt>& values) {
  json out = json::array();
  for (const auto& v : values) out.push_back(to_decimal(v));
  return out;
}

json unipoly_to_json(const UniPoly& p) { return bigints_to_json(p.coeffs()); }

void write_deck(const Deck& deck, const std::vector<std::string>& parent_labels, const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw Error(ErrorCode::IoError, "cannot create '" + dir.string() + "': " + ec.message());
  for (std::size_t l = 0; l < deck.cards.size(); ++l) {
    json doc;
    doc["card"] = l;
    doc["deleted_vertex"] = l < parent_labels.size() ? parent_labels[l] : "";
    doc["origin_n"] = deck.origin_n;
    const json body = hypergraph_to_json(deck.cards[l]);
    doc["vertices"] = body["vertices"];
    doc["edges"] = body["edges"];
    char name[32];
    std::snprintf(name, sizeof name, "card_%02zu.json", l);
    write_file(dir / name, doc.dump(2) + "\n");
  }
}

Deck read_deck(const fs::path& dir) {
  if (!fs::is_directory(dir)) throw Error(ErrorCode::IoError, "'" + dir.string() + "' is not a directory");
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    const auto name = entry.path().filename().string();
    if (entry.is_regular_file() && name.rfind("card_", 0) == 0 && entry.path().extension() == ".json") {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());
  Deck deck;
  for (std::size_t l = 0; l < files.size(); ++l) {
    json doc = parse_json_text(read_file(files[l]));
    if (!doc.is_object() || !doc.contains("card") || !doc["card"].is_number_unsigned()) {
      throw Error(ErrorCode::ParseError, files[l].string() + ": card file needs an unsigned \"card\" index");
    }
    if (doc["card"].get<std::size_t>() != l) {
      throw Error(ErrorCode::InconsistentDeck, files[l].string() + ": card index " + doc["card"].dump() +
                                                   " out of sequence (expected " + std::to_string(l) + ")");
    }
    if (doc.contains("origin_n")) {
      if (!doc["origin_n"].is_number_unsigned()) throw Error(ErrorCode::ParseError, "\"origin_n\" must be unsigned");
      deck.origin_n = doc["origin_n"].get<std::size_t>();
    }
    doc.erase("card");
    doc.erase("deleted_vertex");
    doc.erase("origin_n");
    try {
      deck.cards.push_back(parse_hypergraph_json(doc));
    } catch (const Error& e) {
      throw Error(e.code(), files[l].string() + ": " + e.what());
    }
  }
  if (deck.origin_n == 0) deck.origin_n = deck.cards.size();
  return deck;
}

std::vector<CorpusEntry> load_corpus(const fs::path& dir) {
  if (!fs::is_directory(dir)) throw Error(ErrorCode::IoError, "'" + dir.string() + "' is not a directory");
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    const auto ext = entry.path().extension();
    if (entry.is_regular_file() && (ext == ".json" || ext == ".hg" || ext == ".txt")) files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<CorpusEntry> out;
  std::string failures;
  for (const auto& path : files) {
    try {
      out.push_back({path.filename().string(), read_hypergraph_file(path)});
    } catch (const Error& e) {
      failures += "\n  " + path.filename().string() + ": " + e.what();
    }
  }
  if (!failures.empty()) throw Error(ErrorCode::ParseError, "corpus files failed to load:" + failures);
  return out;
}

}  // namespace hgpoly
