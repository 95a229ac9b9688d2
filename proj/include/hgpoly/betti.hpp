#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>

#include "hgpoly/bipoly.hpp"
#include "hgpoly/exec.hpp"
#include "hgpoly/hypergraph.hpp"
#include "hgpoly/simplicial.hpp"

namespace hgpoly {

/// Betti numbers of R = K[x_1..x_n] / I_H over a characteristic-zero field.
/// Multidegrees are squarefree, so each is a vertex subset B. Only nonzero
/// entries are stored.
struct BettiTable {
  std::size_t n = 0;
  std::map<std::pair<std::size_t, VertexMask>, std::uint64_t> multigraded;  // (i, B) -> b_{i,B}
  std::map<std::pair<std::size_t, std::size_t>, std::uint64_t> graded;      // (i, j) -> b_{ij}

  std::uint64_t at(std::size_t i, std::size_t j) const;
  std::uint64_t at_mask(std::size_t i, VertexMask b) const;
  /// Rebuilds `graded` by summing `multigraded` over |B| = j.
  void collapse();

  friend bool operator==(const BettiTable&, const BettiTable&) = default;
};

/// Betti numbers of the Stanley-Reisner ring restricted to one vertex set:
/// b_{i,B} = dim H̃_{|B|-i-1}(Δ_H(B)) for every i.
std::map<std::size_t, std::uint64_t> hochster_entries(const Hypergraph& h, VertexMask b,
                                                      PivotOrder order = PivotOrder::LowestColumn);

/// Full multigraded table from the reduced homology of every restriction
/// Δ_H(B). Throws LimitExceeded when n > limits.max_homology_vertices.
BettiTable hochster_betti(const Hypergraph& h, const Limits& limits = {}, ExecPolicy exec = {},
                          PivotOrder order = PivotOrder::LowestColumn);

struct HomologicalInvariants {
  std::size_t projective_dimension = 0;
  std::size_t regularity = 0;  // of R; reg(I_H) = regularity + 1 when I_H != 0
  std::size_t depth = 0;       // n - pd (Auslander-Buchsbaum)
};

HomologicalInvariants pd_reg_depth(const BettiTable& table, std::size_t n);

/// sum_{i,j} (-1)^i b_{ij} t^j
UniPoly alternating_betti_poly(const BettiTable& table);

/// True iff S_H(t, -1) equals the alternating Betti sum coefficientwise.
bool betti_euler_identity_holds(const Hypergraph& h, const Limits& limits = {}, ExecPolicy exec = {});

struct AntidiagonalRecovery {
  bool applicable = false;
  /// First total degree j carrying two or more nonzero b_{ij}, if any.
  std::optional<std::size_t> violating_column;
  /// j -> |c_j|, c_j the t^j coefficient of K(R, t), for j >= 1 with a nonzero entry.
  std::map<std::size_t, BigInt> recovered;
  /// Recovered values equal the table entries (only meaningful when applicable).
  bool matches_table = false;
};

/// When every total degree j holds at most one nonzero Betti number, that
/// number is |c_j|. Checks the condition and the recovered values.
AntidiagonalRecovery antidiagonal_recovery(const BettiTable& table, const UniPoly& k_poly);
AntidiagonalRecovery antidiagonal_recovery(const Hypergraph& h, const Limits& limits = {}, ExecPolicy exec = {});

}  // namespace hgpoly
