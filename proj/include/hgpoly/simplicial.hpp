#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "hgpoly/exec.hpp"
#include "hgpoly/hypergraph.hpp"

namespace hgpoly {

/// Downward-closed family of vertex subsets of a ground set {0..n-1}. Faces
/// are kept in colex order, which for bitmasks is plain numeric order. A
/// nonvoid complex contains the empty face; the void complex has no faces.
/// Singletons need not be faces.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  /// Throws ParseError if the family is not closed under taking subsets, or
  /// UnknownVertex if a face leaves the ground set.
  static SimplicialComplex from_faces(std::size_t ground_size, std::vector<VertexMask> faces);

  std::size_t ground_size() const { return ground_size_; }
  std::span<const VertexMask> faces() const { return faces_; }
  bool is_void() const { return faces_.empty(); }
  bool contains(VertexMask face) const;
  /// Largest face size minus one; -1 for {∅}, -2 for the void complex.
  long dimension() const;
  /// counts[s] = number of faces with s vertices.
  std::vector<std::size_t> face_counts() const;

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

  /// Δ_H(B) built by walking the subsets of B against a table of independent
  /// sets (`independent[w]` for every mask w over the ground set).
  static SimplicialComplex independent_subsets(std::size_t ground_size, const std::vector<bool>& independent,
                                               VertexMask b);

 private:
  friend SimplicialComplex restrict(const SimplicialComplex& complex, VertexMask b);
  std::size_t ground_size_ = 0;
  std::vector<VertexMask> faces_;
};

/// All independent sets of H.
SimplicialComplex independence_complex(const Hypergraph& h, const Limits& limits = {});

/// Δ(B): the faces contained in B. Throws UnknownVertex if B leaves the ground set.
SimplicialComplex restrict(const SimplicialComplex& complex, VertexMask b);

/// Order in which elimination picks pivots. Ranks must not depend on it.
enum class PivotOrder { LowestColumn, HighestColumn };

/// Integer matrix row: (column, value) pairs sorted by column, no zeros.
using SparseRow = std::vector<std::pair<std::uint32_t, std::int64_t>>;

/// Rank over the rationals by fraction-free integer elimination. Runs in
/// 64-bit arithmetic and redoes the work with big integers on overflow.
std::size_t exact_rank(const std::vector<SparseRow>& rows, std::size_t cols,
                       PivotOrder order = PivotOrder::LowestColumn);

/// Same, big-integer arithmetic only.
std::size_t exact_rank_bigint(const std::vector<SparseRow>& rows, std::size_t cols,
                              PivotOrder order = PivotOrder::LowestColumn);

/// Boundary matrix from faces with s vertices to faces with s - 1 vertices:
/// one row per s-vertex face, signs (-1)^position. s = 0 gives no rows.
std::vector<SparseRow> boundary_rows(const SimplicialComplex& complex, std::size_t s,
                                     std::size_t* cols_out = nullptr);

/// Reduced homology over Q: entry k is dim H̃_{k-1}, for k = 0..dim+1, so
/// entry 0 is H̃_{-1}. The void complex gives an empty list (all zero);
/// {∅} gives {1}.
std::vector<std::size_t> reduced_homology_dims(const SimplicialComplex& complex,
                                               PivotOrder order = PivotOrder::LowestColumn);

/// dim H̃_q read from a reduced_homology_dims result, zero outside its range.
std::size_t reduced_betti_at(const std::vector<std::size_t>& dims, long q);

/// sum_q (-1)^q dim H̃_q computed from homology and from face counts.
long reduced_euler_from_homology(const std::vector<std::size_t>& dims);
long reduced_euler_from_faces(const SimplicialComplex& complex);

}  // namespace hgpoly
