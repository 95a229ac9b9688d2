#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace hgpoly {

/// Bit i set means vertex i (in the hypergraph's label order) is in the set.
using VertexMask = std::uint64_t;

inline constexpr std::size_t kMaxVertices = 64;

inline int popcount(VertexMask mask) { return std::popcount(mask); }
inline VertexMask full_mask(std::size_t n) {
  return n >= 64 ? ~VertexMask{0} : (VertexMask{1} << n) - 1;
}

/// Packs the bits of `mask` selected by `keep` into the low bits, preserving order.
VertexMask compress_bits(VertexMask mask, VertexMask keep);
/// Inverse of compress_bits: spreads the low bits of `packed` onto the set bits of `keep`.
VertexMask expand_bits(VertexMask packed, VertexMask keep);

/// A finite hypergraph (clutter): labeled vertices and an antichain of
/// nonempty edges. Immutable once built; edges are kept in canonical order
/// (lexicographic on sorted vertex-index lists) so equality is structural.
class Hypergraph {
 public:
  Hypergraph() = default;

  /// Builds a hypergraph from labels. Throws DuplicateVertexLabel,
  /// UnknownVertexLabel, EmptyEdge, DuplicateEdge or AntichainViolation.
  static Hypergraph validate(std::vector<std::string> vertices,
                             const std::vector<std::vector<std::string>>& edges);

  /// Same checks as validate(), edges given as masks over `vertices`.
  static Hypergraph from_masks(std::vector<std::string> vertices, std::vector<VertexMask> edges);

  std::size_t num_vertices() const { return labels_.size(); }
  std::size_t num_edges() const { return edges_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::span<const VertexMask> edges() const { return edges_; }
  VertexMask all_vertices() const { return full_mask(labels_.size()); }

  /// Index of a label; throws UnknownVertexLabel.
  std::size_t index_of(const std::string& label) const;
  VertexMask mask_of(std::span<const std::string> labels) const;
  std::vector<std::string> labels_of(VertexMask mask) const;

  /// Throws UnknownVertex if `mask` names a vertex index >= n.
  void require_subset(VertexMask mask) const;

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

 private:
  std::vector<std::string> labels_;
  std::vector<VertexMask> edges_;
};

/// Deck of vertex-deleted cards; card l drops vertex l and every edge through it.
struct Deck {
  std::vector<Hypergraph> cards;
  std::size_t origin_n = 0;

  /// Parent vertex labels in order, recovered from the cards themselves
  /// (card l is missing exactly the parent's vertex l). Requires >= 2 cards.
  std::vector<std::string> parent_labels() const;
};

/// (W, {e in E : e subset of W}), relabeled onto W in parent order.
Hypergraph vertex_induced(const Hypergraph& h, VertexMask w);
/// Union of the edges with the given indices; throws UnknownEdge.
VertexMask edge_union(const Hypergraph& h, std::span<const std::size_t> edge_indices);
/// True iff no edge lies inside `w`.
bool is_independent(const Hypergraph& h, VertexMask w);
/// Mask form without the subset check, for inner loops.
inline bool is_independent_unchecked(std::span<const VertexMask> edges, VertexMask w) {
  for (VertexMask e : edges) {
    if ((e & ~w) == 0) return false;
  }
  return true;
}

Hypergraph card(const Hypergraph& h, std::size_t l);
Deck deck(const Hypergraph& h);

std::vector<Hypergraph> connected_components(const Hypergraph& h);
/// Vertices of `b` follow those of `a`; throws DuplicateVertexLabel on clashes.
Hypergraph disjoint_union(const Hypergraph& a, const Hypergraph& b);

/// Minimal squarefree generators of the edge ideal, one vertex set per edge.
std::vector<std::vector<std::string>> edge_ideal_generators(const Hypergraph& h);

}  // namespace hgpoly
