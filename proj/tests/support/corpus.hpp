#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "hgpoly/hypergraph.hpp"

namespace hgpoly::testing {

struct NamedHypergraph {
  std::string name;
  Hypergraph h;
};

/// Labels v0, v1, ...
std::vector<std::string> default_labels(std::size_t n);
Hypergraph from_masks(std::size_t n, std::vector<VertexMask> edges);

/// Every clutter on n <= 4 labeled vertices, including the edgeless ones.
std::vector<NamedHypergraph> all_clutters_up_to(std::size_t n_max);

/// Random clutter with at most `m_max` edges on n vertices. Edge sizes are
/// drawn from [1, max_edge_size]; candidates comparable to a kept edge are dropped.
Hypergraph random_clutter(std::uint64_t seed, std::size_t n, std::size_t m_max, std::size_t max_edge_size);

/// The fixed test corpus: all clutters on n <= 4, 40 random ones on n = 5,
/// and 80 random ones with 6 <= n <= 8, m <= 10. Same seed, same corpus.
std::vector<NamedHypergraph> standard_corpus();

/// Larger instances (10 <= n <= 12) used for the homology slice.
std::vector<NamedHypergraph> homology_extras();

/// Disjoint union on fresh default labels.
Hypergraph disjoint(const Hypergraph& a, const Hypergraph& b);

Hypergraph complete_graph(std::size_t n);
Hypergraph star(std::size_t leaves);
Hypergraph path(std::size_t n);
Hypergraph cycle(std::size_t n);

}  // namespace hgpoly::testing
