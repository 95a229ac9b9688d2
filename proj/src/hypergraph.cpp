#include "hgpoly/hypergraph.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "hgpoly/error.hpp"

namespace hgpoly {

namespace {

// Lexicographic order on the sorted index lists the masks represent.
bool lex_less(VertexMask a, VertexMask b) {
  while (a != 0 && b != 0) {
    const int x = std::countr_zero(a);
    const int y = std::countr_zero(b);
    if (x != y) return x < y;
    a &= a - 1;
    b &= b - 1;
  }
  return a == 0 && b != 0;
}

std::string format_set(const std::vector<std::string>& labels, VertexMask mask) {
  std::string out = "{";
  bool first = true;
  for (VertexMask m = mask; m != 0; m &= m - 1) {
    if (!first) out += ",";
    out += labels[static_cast<std::size_t>(std::countr_zero(m))];
    first = false;
  }
  return out + "}";
}

void check_labels(const std::vector<std::string>& vertices) {
  if (vertices.size() > kMaxVertices) {
    throw Error(ErrorCode::LimitExceeded, "hypergraph has " + std::to_string(vertices.size()) +
                                              " vertices; at most " + std::to_string(kMaxVertices) +
                                              " are supported");
  }
  std::unordered_set<std::string> seen;
  for (const auto& label : vertices) {
    if (!seen.insert(label).second) {
      throw Error(ErrorCode::DuplicateVertexLabel, "vertex label '" + label + "' appears twice");
    }
  }
}

}  // namespace

VertexMask compress_bits(VertexMask mask, VertexMask keep) {
  VertexMask out = 0;
  int pos = 0;
  for (VertexMask k = keep; k != 0; k &= k - 1, ++pos) {
    if (mask & (k & -k)) out |= VertexMask{1} << pos;
  }
  return out;
}

VertexMask expand_bits(VertexMask packed, VertexMask keep) {
  VertexMask out = 0;
  int pos = 0;
  for (VertexMask k = keep; k != 0; k &= k - 1, ++pos) {
    if (packed & (VertexMask{1} << pos)) out |= k & -k;
  }
  return out;
}

Hypergraph Hypergraph::from_masks(std::vector<std::string> vertices, std::vector<VertexMask> edges) {
  check_labels(vertices);
  const VertexMask all = full_mask(vertices.size());
  for (VertexMask e : edges) {
    if (e == 0) throw Error(ErrorCode::EmptyEdge, "edges must be nonempty");
    if (e & ~all) throw Error(ErrorCode::UnknownVertex, "edge mentions a vertex index >= n");
  }
  std::sort(edges.begin(), edges.end(), lex_less);
  for (std::size_t i = 1; i < edges.size(); ++i) {
    if (edges[i] == edges[i - 1]) {
      throw Error(ErrorCode::DuplicateEdge, "edge " + format_set(vertices, edges[i]) + " listed twice");
    }
  }
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = 0; j < edges.size(); ++j) {
      if (i != j && (edges[i] & ~edges[j]) == 0) {
        throw Error(ErrorCode::AntichainViolation, "edge " + format_set(vertices, edges[i]) +
                                                       " is contained in edge " +
                                                       format_set(vertices, edges[j]));
      }
    }
  }
  Hypergraph h;
  h.labels_ = std::move(vertices);
  h.edges_ = std::move(edges);
  return h;
}

Hypergraph Hypergraph::validate(std::vector<std::string> vertices,
                                const std::vector<std::vector<std::string>>& edges) {
  check_labels(vertices);
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < vertices.size(); ++i) index.emplace(vertices[i], i);

  std::vector<VertexMask> masks;
  masks.reserve(edges.size());
  for (const auto& edge : edges) {
    if (edge.empty()) throw Error(ErrorCode::EmptyEdge, "edges must be nonempty");
    VertexMask mask = 0;
    for (const auto& label : edge) {
      auto it = index.find(label);
      if (it == index.end()) {
        throw Error(ErrorCode::UnknownVertexLabel, "edge mentions unknown vertex '" + label + "'");
      }
      const VertexMask bit = VertexMask{1} << it->second;
      if (mask & bit) {
        throw Error(ErrorCode::ParseError, "vertex '" + label + "' repeated inside one edge");
      }
      mask |= bit;
    }
    masks.push_back(mask);
  }
  return from_masks(std::move(vertices), std::move(masks));
}

std::size_t Hypergraph::index_of(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw Error(ErrorCode::UnknownVertexLabel, "no vertex '" + label + "'");
  return static_cast<std::size_t>(it - labels_.begin());
}

VertexMask Hypergraph::mask_of(std::span<const std::string> labels) const {
  VertexMask mask = 0;
  for (const auto& label : labels) mask |= VertexMask{1} << index_of(label);
  return mask;
}

std::vector<std::string> Hypergraph::labels_of(VertexMask mask) const {
  require_subset(mask);
  std::vector<std::string> out;
  for (VertexMask m = mask; m != 0; m &= m - 1) {
    out.push_back(labels_[static_cast<std::size_t>(std::countr_zero(m))]);
  }
  return out;
}

void Hypergraph::require_subset(VertexMask mask) const {
  if (mask & ~all_vertices()) {
    throw Error(ErrorCode::UnknownVertex, "vertex index " + std::to_string(std::bit_width(mask) - 1) +
                                              " out of range for n=" + std::to_string(labels_.size()));
  }
}

std::vector<std::string> Deck::parent_labels() const {
  if (cards.size() < 2) {
    throw Error(ErrorCode::TooFewVertices, "need at least two cards to recover parent labels");
  }
  // card 0 lacks v_0 and lists v_1..v_{n-1}; card 1 lacks v_1, so it starts with v_0.
  const auto& rest = cards[0].labels();
  const auto& second = cards[1].labels();
  if (second.empty() || rest.size() + 1 != cards.size()) {
    throw Error(ErrorCode::InconsistentDeck, "card vertex counts do not match the number of cards");
  }
  std::vector<std::string> labels;
  labels.reserve(cards.size());
  labels.push_back(second.front());
  labels.insert(labels.end(), rest.begin(), rest.end());
  for (std::size_t l = 0; l < cards.size(); ++l) {
    std::vector<std::string> expected = labels;
    expected.erase(expected.begin() + static_cast<std::ptrdiff_t>(l));
    if (cards[l].labels() != expected) {
      throw Error(ErrorCode::InconsistentDeck,
                  "card " + std::to_string(l) + " is not the parent minus vertex " + labels[l]);
    }
  }
  return labels;
}

Hypergraph vertex_induced(const Hypergraph& h, VertexMask w) {
  h.require_subset(w);
  std::vector<VertexMask> kept;
  for (VertexMask e : h.edges()) {
    if ((e & ~w) == 0) kept.push_back(compress_bits(e, w));
  }
  return Hypergraph::from_masks(h.labels_of(w), std::move(kept));
}

VertexMask edge_union(const Hypergraph& h, std::span<const std::size_t> edge_indices) {
  VertexMask out = 0;
  for (std::size_t idx : edge_indices) {
    if (idx >= h.num_edges()) {
      throw Error(ErrorCode::UnknownEdge, "edge index " + std::to_string(idx) + " out of range for m=" +
                                              std::to_string(h.num_edges()));
    }
    out |= h.edges()[idx];
  }
  return out;
}

bool is_independent(const Hypergraph& h, VertexMask w) {
  h.require_subset(w);
  return is_independent_unchecked(h.edges(), w);
}

Hypergraph card(const Hypergraph& h, std::size_t l) {
  if (l >= h.num_vertices()) {
    throw Error(ErrorCode::IndexOutOfRange, "card index " + std::to_string(l) + " out of range for n=" +
                                                std::to_string(h.num_vertices()));
  }
  return vertex_induced(h, h.all_vertices() & ~(VertexMask{1} << l));
}

Deck deck(const Hypergraph& h) {
  Deck d;
  d.origin_n = h.num_vertices();
  d.cards.reserve(h.num_vertices());
  for (std::size_t l = 0; l < h.num_vertices(); ++l) d.cards.push_back(card(h, l));
  return d;
}

std::vector<Hypergraph> connected_components(const Hypergraph& h) {
  const std::size_t n = h.num_vertices();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (VertexMask e : h.edges()) {
    const auto root = static_cast<std::size_t>(std::countr_zero(e));
    for (VertexMask m = e & (e - 1); m != 0; m &= m - 1) {
      parent[find(static_cast<std::size_t>(std::countr_zero(m)))] = find(root);
    }
  }
  // Components ordered by their smallest vertex.
  std::vector<VertexMask> groups;
  std::vector<std::size_t> group_of_root(n, n);
  for (std::size_t v = 0; v < n; ++v) {
    const std::size_t r = find(v);
    if (group_of_root[r] == n) {
      group_of_root[r] = groups.size();
      groups.push_back(0);
    }
    groups[group_of_root[r]] |= VertexMask{1} << v;
  }
  std::vector<Hypergraph> out;
  out.reserve(groups.size());
  for (VertexMask g : groups) out.push_back(vertex_induced(h, g));
  return out;
}

Hypergraph disjoint_union(const Hypergraph& a, const Hypergraph& b) {
  std::vector<std::string> labels = a.labels();
  labels.insert(labels.end(), b.labels().begin(), b.labels().end());
  std::vector<VertexMask> edges(a.edges().begin(), a.edges().end());
  if (labels.size() > kMaxVertices) {
    throw Error(ErrorCode::LimitExceeded, "disjoint union exceeds " + std::to_string(kMaxVertices) + " vertices");
  }
  const auto shift = static_cast<int>(a.num_vertices());
  for (VertexMask e : b.edges()) edges.push_back(e << shift);
  return Hypergraph::from_masks(std::move(labels), std::move(edges));
}

std::vector<std::vector<std::string>> edge_ideal_generators(const Hypergraph& h) {
  std::vector<std::vector<std::string>> out;
  out.reserve(h.num_edges());
  for (VertexMask e : h.edges()) out.push_back(h.labels_of(e));
  return out;
}

}  // namespace hgpoly
