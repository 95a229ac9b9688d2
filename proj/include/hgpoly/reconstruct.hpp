#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <utility>
#include <vector>

#include "hgpoly/betti.hpp"
#include "hgpoly/bipoly.hpp"
#include "hgpoly/exec.hpp"
#include "hgpoly/hypergraph.hpp"

namespace hgpoly {

// Reconstruction of invariants from the labeled deck of vertex-deleted cards.
// Every entry point first rejects the hypergraphs no deck can pin down: fewer
// than three vertices, no edges, or a single edge spanning every vertex.

/// Throws TooFewVertices, NoEdges or SingleSpanningEdge.
void check_reconstructible(const Hypergraph& h);

/// Deck-side version of the same check. A deck whose cards are all edgeless
/// comes from either an edgeless parent or a single spanning edge, and the
/// two cannot be told apart; that case reports NoEdges.
void check_reconstructible(const Deck& deck);

enum class PolyKind { EdgeInduced, VertexInduced };

/// n F_H = x dF_H/dx + sum over cards of F_{H_l}, exactly, for F = S or P.
bool deck_derivative_identity_holds(const Hypergraph& h, PolyKind which, const Limits& limits = {},
                                    ExecPolicy exec = {});

/// S_H from the cards' S polynomials (card l first). Rows i < n use
///   sum_l theta^(l)_ij = (n - i) theta_ij;
/// the i = n row is completed from the column sums sum_i theta_ij = C(m, j)
/// with m = sum_{i<n} theta_i1. Throws NonIntegerCoefficient on an inexact
/// division, NegativeTopCoefficient if the completion goes negative,
/// InconsistentDeck if a card lacks the constant term 1.
BiPoly reconstruct_S(std::span<const BiPoly> card_polys, std::size_t n);

/// P_H from the cards' P polynomials. Rows i < n by the same counting
/// relation; the top row is x^n y^m with m read from the S reconstruction of
/// the transformed cards. Cross-checked against s_to_p of that S; throws
/// PathsDisagree if the two routes differ.
BiPoly reconstruct_P(std::span<const BiPoly> card_polys, std::size_t n);

/// f-vector of Δ_H from the cards' f-vectors:
///   f_{l-1} = (sum over cards of f_{l-1}) / (n - l) for 1 <= l < n.
std::vector<BigInt> reconstruct_f_vector(const Deck& deck, const Limits& limits = {}, ExecPolicy exec = {});

/// Hilbert function of R for degrees 0..k_max from the deck. Computed from the
/// reconstructed S_H and verified against n H = t (1 - t) H' + sum_l H_l.
std::vector<BigInt> reconstruct_hilbert(const Deck& deck, std::size_t k_max, const Limits& limits = {},
                                        ExecPolicy exec = {});

/// Betti numbers known from the deck: every b_{i,B} with |B| < n, read off a
/// card that misses some vertex outside B. Degrees j = n are unknown.
struct PartialBettiTable {
  std::size_t n = 0;
  std::map<std::pair<std::size_t, VertexMask>, std::uint64_t> multigraded;  // over parent vertex indices
  std::map<std::pair<std::size_t, std::size_t>, std::uint64_t> graded;      // only j < n
  std::size_t unknown_total_degree = 0;                                    // = n
};

PartialBettiTable reconstruct_multigraded_betti(const Deck& deck, const Limits& limits = {},
                                                ExecPolicy exec = {});

/// Whether the extremal (j = n) row of the Betti table follows from the
/// t^n coefficient c_n of S_H(t, -1), i.e. whether exactly one b_{in} is nonzero.
struct TopBettiReport {
  BigInt c_n;
  std::set<std::size_t> nonzero_degrees;  // {i : b_{in} != 0}
  bool determined = false;                // at most one nonzero b_{in}
  /// pd, reg and depth then follow from the deck as well.
  bool homological_invariants_reconstructible = false;
};

TopBettiReport top_betti_report(const Hypergraph& h, const Limits& limits = {}, ExecPolicy exec = {});

/// Per-card polynomials, card order.
std::vector<BiPoly> card_polys(const Deck& deck, PolyKind which, const Limits& limits = {}, ExecPolicy exec = {});

}  // namespace hgpoly
