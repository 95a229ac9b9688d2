#include "hgpoly/reconstruct.hpp"

#include <bit>
#include <string>

#include "hgpoly/enumerate.hpp"
#include "hgpoly/error.hpp"
#include "hgpoly/sr_algebra.hpp"

namespace hgpoly {

void check_reconstructible(const Hypergraph& h) {
  const std::size_t n = h.num_vertices();
  if (n < 3) throw Error(ErrorCode::TooFewVertices, "reconstruction needs n >= 3, got n=" + std::to_string(n));
  if (h.num_edges() == 0) throw Error(ErrorCode::NoEdges, "the edgeless hypergraph on " + std::to_string(n) +
                                                              " vertices is not determined by its deck");
  if (h.num_edges() == 1 && h.edges()[0] == h.all_vertices()) {
    throw Error(ErrorCode::SingleSpanningEdge,
                "a single edge through all " + std::to_string(n) + " vertices is not determined by its deck");
  }
}

void check_reconstructible(const Deck& deck) {
  const std::size_t n = deck.cards.size();
  if (n < 3) throw Error(ErrorCode::TooFewVertices, "reconstruction needs n >= 3 cards, got " + std::to_string(n));
  if (deck.origin_n != 0 && deck.origin_n != n) {
    throw Error(ErrorCode::InconsistentDeck, "deck declares n=" + std::to_string(deck.origin_n) + " but has " +
                                                 std::to_string(n) + " cards");
  }
  bool any_edges = false;
  for (std::size_t l = 0; l < n; ++l) {
    if (deck.cards[l].num_vertices() + 1 != n) {
      throw Error(ErrorCode::InconsistentDeck, "card " + std::to_string(l) + " has " +
                                                   std::to_string(deck.cards[l].num_vertices()) +
                                                   " vertices; expected " + std::to_string(n - 1));
    }
    any_edges = any_edges || deck.cards[l].num_edges() > 0;
  }
  if (!any_edges) {
    throw Error(ErrorCode::NoEdges,
                "every card is edgeless: the parent is edgeless or a single spanning edge, and neither is "
                "determined by its deck");
  }
}

std::vector<BiPoly> card_polys(const Deck& deck, PolyKind which, const Limits& limits, ExecPolicy exec) {
  std::vector<BiPoly> out;
  out.reserve(deck.cards.size());
  for (const auto& c : deck.cards) {
    out.push_back(which == PolyKind::EdgeInduced ? edge_induced_poly(c, limits, exec)
                                                 : vertex_induced_poly(c, limits, exec));
  }
  return out;
}

bool deck_derivative_identity_holds(const Hypergraph& h, PolyKind which, const Limits& limits, ExecPolicy exec) {
  const BiPoly f = which == PolyKind::EdgeInduced ? edge_induced_poly(h, limits, exec)
                                                  : vertex_induced_poly(h, limits, exec);
  BiPoly rhs = shift_x(partial_x(f));
  for (const auto& c : card_polys(deck(h), which, limits, exec)) rhs = rhs + c;
  return BigInt(static_cast<unsigned long>(h.num_vertices())) * f == rhs;
}

namespace {

void check_card_polys(std::span<const BiPoly> card_polys, std::size_t n) {
  if (n < 3) throw Error(ErrorCode::TooFewVertices, "reconstruction needs n >= 3, got n=" + std::to_string(n));
  if (card_polys.size() != n) {
    throw Error(ErrorCode::LengthMismatch, "expected " + std::to_string(n) + " card polynomials, got " +
                                               std::to_string(card_polys.size()));
  }
  for (std::size_t l = 0; l < n; ++l) {
    if (card_polys[l].coeff(0, 0) != 1) {
      throw Error(ErrorCode::InconsistentDeck, "card " + std::to_string(l) + " has constant term " +
                                                   to_decimal(card_polys[l].coeff(0, 0)) + ", expected 1");
    }
    if (card_polys[l].degree_x() > static_cast<long>(n - 1)) {
      throw Error(ErrorCode::InconsistentDeck, "card " + std::to_string(l) + " has x-degree above n-1");
    }
  }
}

// Rows i < n: sum over cards of the (i, j) coefficient equals (n - i) times
// the parent's, since an i-vertex configuration survives on exactly n - i cards.
BiPoly lower_rows(std::span<const BiPoly> card_polys, std::size_t n) {
  BiPoly sum;
  for (const auto& p : card_polys) sum = sum + p;
  BiPoly out;
  for (const auto& [e, c] : sum.terms()) {
    const auto divisor = static_cast<unsigned long>(n - e.first);
    if (c % divisor != 0) {
      throw Error(ErrorCode::NonIntegerCoefficient,
                  "card coefficients at x^" + std::to_string(e.first) + "*y^" + std::to_string(e.second) +
                      " sum to " + to_decimal(c) + ", not divisible by n - i = " + std::to_string(divisor));
    }
    out.add_term(e.first, e.second, c / divisor);
  }
  return out;
}

}  // namespace

BiPoly reconstruct_S(std::span<const BiPoly> card_polys, std::size_t n) {
  check_card_polys(card_polys, n);
  bool any_edges = false;
  for (const auto& p : card_polys) any_edges = any_edges || p != BiPoly::constant(1);
  if (!any_edges) {
    throw Error(ErrorCode::NoEdges, "every card polynomial is 1: parent is edgeless or a single spanning edge");
  }

  BiPoly out = lower_rows(card_polys, n);
  // All edges have fewer than n vertices here, so single-edge terms all sit in rows i < n.
  BigInt m = 0;
  for (const auto& [e, c] : out.terms()) {
    if (e.second == 1) m += c;
  }
  if (!m.fits_ulong_p()) throw Error(ErrorCode::InconsistentDeck, "edge count out of range");
  const unsigned long edges = m.get_ui();
  const auto max_j = std::max<unsigned long>(edges, static_cast<unsigned long>(std::max(out.degree_y(), 0L)));
  const BinomialTable binom(max_j);
  for (unsigned long j = 1; j <= max_j; ++j) {
    BigInt top = binom(edges, j);
    for (const auto& [e, c] : out.terms()) {
      if (e.second == j) top -= c;
    }
    if (sgn(top) < 0) {
      throw Error(ErrorCode::NegativeTopCoefficient,
                  "column j=" + std::to_string(j) + " exceeds C(m, j) with m=" + std::to_string(edges) +
                      "; the cards do not form a deck");
    }
    out.add_term(static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(j), top);
  }
  return out;
}

BiPoly reconstruct_P(std::span<const BiPoly> card_polys, std::size_t n) {
  check_card_polys(card_polys, n);
  BiPoly direct = lower_rows(card_polys, n);

  std::vector<BiPoly> card_s;
  card_s.reserve(n);
  for (const auto& p : card_polys) card_s.push_back(p_to_s(p, n - 1));
  const BiPoly s = reconstruct_S(card_s, n);
  BigInt m = 0;
  for (const auto& [e, c] : s.terms()) {
    if (e.second == 1) m += c;
  }
  direct.add_term(static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(m.get_ui()), 1);

  const BiPoly via_transform = s_to_p(s, n);
  if (direct != via_transform) {
    throw Error(ErrorCode::PathsDisagree, "counting route gives " + direct.to_string() + " but the transform gives " +
                                              via_transform.to_string());
  }
  return direct;
}

std::vector<BigInt> reconstruct_f_vector(const Deck& deck, const Limits& limits, ExecPolicy exec) {
  check_reconstructible(deck);
  const std::size_t n = deck.cards.size();
  std::vector<BigInt> sum(n + 1);
  for (const auto& c : deck.cards) {
    const auto f = f_vector(c, limits, exec);
    for (std::size_t k = 0; k < f.size(); ++k) sum[k] += f[k];
  }
  // Index k holds f_{k-1}; a (k)-vertex independent set survives on n - k cards.
  std::vector<BigInt> f(n);
  f[0] = 1;
  for (std::size_t k = 1; k < n; ++k) {
    const auto divisor = static_cast<unsigned long>(n - k);
    if (sum[k] % divisor != 0) {
      throw Error(ErrorCode::NonIntegerCoefficient, "card f-vectors sum to " + to_decimal(sum[k]) + " at f_" +
                                                        std::to_string(k - 1) + ", not divisible by " +
                                                        std::to_string(divisor));
    }
    f[k] = sum[k] / divisor;
  }
  while (f.size() > 1 && f.back() == 0) f.pop_back();
  return f;
}

std::vector<BigInt> reconstruct_hilbert(const Deck& deck, std::size_t k_max, const Limits& limits, ExecPolicy exec) {
  check_reconstructible(deck);
  const std::size_t n = deck.cards.size();
  const BiPoly s = reconstruct_S(card_polys(deck, PolyKind::EdgeInduced, limits, exec), n);
  const auto hilbert = expand_series(eval_y(s, -1), n, k_max);

  // n h_k = k h_k - (k - 1) h_{k-1} + sum_l h^(l)_k, the coefficients of
  // n H = t (1 - t) H' + sum_l H_l.
  std::vector<BigInt> card_sum(k_max + 1);
  for (const auto& c : deck.cards) {
    const auto hl = hilbert_function(c, k_max, limits, exec);
    for (std::size_t k = 0; k <= k_max; ++k) card_sum[k] += hl[k];
  }
  for (std::size_t k = 0; k <= k_max; ++k) {
    BigInt rhs = BigInt(static_cast<unsigned long>(k)) * hilbert[k] + card_sum[k];
    if (k > 0) rhs -= BigInt(static_cast<unsigned long>(k - 1)) * hilbert[k - 1];
    if (BigInt(static_cast<unsigned long>(n)) * hilbert[k] != rhs) {
      throw Error(ErrorCode::PathsDisagree, "Hilbert differential identity fails at degree " + std::to_string(k));
    }
  }
  return hilbert;
}

PartialBettiTable reconstruct_multigraded_betti(const Deck& deck, const Limits& limits, ExecPolicy exec) {
  check_reconstructible(deck);
  const std::size_t n = deck.cards.size();
  deck.parent_labels();  // validates card labeling
  PartialBettiTable out;
  out.n = n;
  out.unknown_total_degree = n;
  const VertexMask all = full_mask(n);
  for (std::size_t l = 0; l < n; ++l) {
    const VertexMask kept = all & ~(VertexMask{1} << l);
    const BettiTable table = hochster_betti(deck.cards[l], limits, exec);
    for (const auto& [key, value] : table.multigraded) {
      const VertexMask b = expand_bits(key.second, kept);
      // Each B is read from the lowest-index card that misses a vertex outside B.
      if (static_cast<std::size_t>(std::countr_zero(~b)) == l) out.multigraded.emplace(std::make_pair(key.first, b), value);
    }
  }
  for (const auto& [key, value] : out.multigraded) {
    out.graded[{key.first, static_cast<std::size_t>(popcount(key.second))}] += value;
  }
  return out;
}

TopBettiReport top_betti_report(const Hypergraph& h, const Limits& limits, ExecPolicy exec) {
  TopBettiReport report;
  const std::size_t n = h.num_vertices();
  report.c_n = k_polynomial(h, limits, exec)[n];
  const BettiTable table = hochster_betti(h, limits, exec);
  for (const auto& [key, value] : table.graded) {
    if (key.second == n && value != 0) report.nonzero_degrees.insert(key.first);
  }
  report.determined = report.nonzero_degrees.size() <= 1;
  if (report.nonzero_degrees.size() == 1 && abs(report.c_n) != BigInt(table.at(*report.nonzero_degrees.begin(), n))) {
    throw Error(ErrorCode::InternalMismatch, "single extremal Betti number differs from |c_n|");
  }
  report.homological_invariants_reconstructible = report.determined;
  return report;
}

}  // namespace hgpoly
