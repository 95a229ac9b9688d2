#include "hgpoly/enumerate.hpp"

#include <omp.h>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "hgpoly/error.hpp"

namespace hgpoly {

namespace {

using Count = std::uint64_t;

// Counts indexed [row * cols + col].
struct Tally {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Count> cells;

  Tally(std::size_t r, std::size_t c) : rows(r), cols(c), cells(r * c, 0) {}
  Count& at(std::size_t r, std::size_t c) { return cells[r * cols + c]; }
  void merge(const Tally& other) {
    for (std::size_t k = 0; k < cells.size(); ++k) cells[k] += other.cells[k];
  }
};

inline std::uint64_t gray(std::uint64_t k) { return k ^ (k >> 1); }

// 2^62 subsets is already far past anything that finishes.
constexpr std::size_t kHardCap = 62;

void require_at_most(std::size_t value, std::size_t limit, const char* what) {
  limit = std::min(limit, kHardCap);
  if (value > limit) {
    throw Error(ErrorCode::LimitExceeded, std::string(what) + " = " + std::to_string(value) +
                                              " exceeds the configured limit " + std::to_string(limit));
  }
}

// Splits [0, total) into contiguous blocks, runs `kernel(lo, hi, tally)` on
// each and sums the tallies in block order.
template <class Kernel>
Tally sweep(std::uint64_t total, std::size_t rows, std::size_t cols, ExecPolicy exec, Kernel kernel) {
  Tally result(rows, cols);
  if (!exec.parallel || total < 1024) {
    kernel(std::uint64_t{0}, total, result);
    return result;
  }
  const int threads = exec.threads > 0 ? exec.threads : omp_get_max_threads();
  const auto blocks = static_cast<std::int64_t>(std::min<std::uint64_t>(total, std::uint64_t(threads) * 8));
  std::vector<Tally> partial(static_cast<std::size_t>(blocks), Tally(rows, cols));
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
  for (std::int64_t b = 0; b < blocks; ++b) {
    const std::uint64_t lo = total / blocks * b + std::min<std::uint64_t>(b, total % blocks);
    const std::uint64_t hi = lo + total / blocks + (std::uint64_t(b) < total % blocks ? 1 : 0);
    kernel(lo, hi, partial[static_cast<std::size_t>(b)]);
  }
  for (const auto& t : partial) result.merge(t);
  return result;
}

BiPoly to_bipoly(const Tally& t) {
  BiPoly out;
  for (std::size_t i = 0; i < t.rows; ++i) {
    for (std::size_t j = 0; j < t.cols; ++j) {
      const Count c = t.cells[i * t.cols + j];
      if (c != 0) out.add_term(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j), BigInt(c));
    }
  }
  return out;
}

UniPoly to_unipoly(const Tally& t) {
  std::vector<BigInt> coeffs(t.cells.size());
  for (std::size_t k = 0; k < t.cells.size(); ++k) coeffs[k] = BigInt(t.cells[k]);
  return UniPoly(std::move(coeffs));
}

}  // namespace

BiPoly vertex_induced_poly(const Hypergraph& h, const Limits& limits, ExecPolicy exec) {
  const std::size_t n = h.num_vertices();
  const std::size_t m = h.num_edges();
  require_at_most(n, limits.max_vertices, "vertex count n");
  const std::vector<VertexMask> edges(h.edges().begin(), h.edges().end());

  // incident[v] lists the edges through v.
  std::vector<std::vector<std::uint32_t>> incident(n);
  for (std::size_t e = 0; e < m; ++e) {
    for (VertexMask b = edges[e]; b != 0; b &= b - 1) {
      incident[static_cast<std::size_t>(std::countr_zero(b))].push_back(static_cast<std::uint32_t>(e));
    }
  }

  auto kernel = [&](std::uint64_t lo, std::uint64_t hi, Tally& tally) {
    if (lo >= hi) return;
    VertexMask w = gray(lo);
    // missing[e] = |e \ W|; an edge lies inside W exactly when it is 0.
    std::vector<std::uint32_t> missing(m);
    std::size_t inside = 0;
    for (std::size_t e = 0; e < m; ++e) {
      missing[e] = static_cast<std::uint32_t>(std::popcount(edges[e] & ~w));
      if (missing[e] == 0) ++inside;
    }
    for (std::uint64_t k = lo;; ++k) {
      ++tally.at(static_cast<std::size_t>(std::popcount(w)), inside);
      if (k + 1 == hi) break;
      const auto v = static_cast<std::size_t>(std::countr_zero(k + 1));
      const VertexMask bit = VertexMask{1} << v;
      w ^= bit;
      if (w & bit) {
        for (auto e : incident[v]) {
          if (--missing[e] == 0) ++inside;
        }
      } else {
        for (auto e : incident[v]) {
          if (missing[e]++ == 0) --inside;
        }
      }
    }
  };
  return to_bipoly(sweep(std::uint64_t{1} << n, n + 1, m + 1, exec, kernel));
}

BiPoly edge_induced_poly(const Hypergraph& h, const Limits& limits, ExecPolicy exec) {
  const std::size_t n = h.num_vertices();
  const std::size_t m = h.num_edges();
  require_at_most(m, limits.max_edges, "edge count m");
  const std::vector<VertexMask> edges(h.edges().begin(), h.edges().end());

  auto kernel = [&](std::uint64_t lo, std::uint64_t hi, Tally& tally) {
    if (lo >= hi) return;
    std::uint64_t chosen = gray(lo);
    // cover[v] = number of chosen edges through v.
    std::vector<std::uint32_t> cover(n, 0);
    std::size_t covered = 0;
    for (std::uint64_t c = chosen; c != 0; c &= c - 1) {
      for (VertexMask b = edges[static_cast<std::size_t>(std::countr_zero(c))]; b != 0; b &= b - 1) {
        if (cover[static_cast<std::size_t>(std::countr_zero(b))]++ == 0) ++covered;
      }
    }
    for (std::uint64_t k = lo;; ++k) {
      ++tally.at(covered, static_cast<std::size_t>(std::popcount(chosen)));
      if (k + 1 == hi) break;
      const auto e = static_cast<std::size_t>(std::countr_zero(k + 1));
      chosen ^= std::uint64_t{1} << e;
      if (chosen & (std::uint64_t{1} << e)) {
        for (VertexMask b = edges[e]; b != 0; b &= b - 1) {
          if (cover[static_cast<std::size_t>(std::countr_zero(b))]++ == 0) ++covered;
        }
      } else {
        for (VertexMask b = edges[e]; b != 0; b &= b - 1) {
          if (--cover[static_cast<std::size_t>(std::countr_zero(b))] == 0) --covered;
        }
      }
    }
  };
  return to_bipoly(sweep(std::uint64_t{1} << m, n + 1, m + 1, exec, kernel));
}

UniPoly independence_poly(const Hypergraph& h, const Limits& limits, ExecPolicy exec) {
  const std::size_t n = h.num_vertices();
  require_at_most(n, limits.max_vertices, "vertex count n");
  const std::vector<VertexMask> edges(h.edges().begin(), h.edges().end());

  auto kernel = [&](std::uint64_t lo, std::uint64_t hi, Tally& tally) {
    for (std::uint64_t w = lo; w < hi; ++w) {
      if (is_independent_unchecked(edges, w)) ++tally.at(0, static_cast<std::size_t>(std::popcount(w)));
    }
  };
  return to_unipoly(sweep(std::uint64_t{1} << n, 1, n + 1, exec, kernel));
}

namespace reference {

BiPoly vertex_induced_poly(const Hypergraph& h) {
  BiPoly out;
  for (VertexMask w = 0; w <= h.all_vertices(); ++w) {
    std::uint32_t inside = 0;
    for (VertexMask e : h.edges()) inside += (e & ~w) == 0 ? 1 : 0;
    out.add_term(static_cast<std::uint32_t>(std::popcount(w)), inside, 1);
    if (w == h.all_vertices()) break;
  }
  return out;
}

BiPoly edge_induced_poly(const Hypergraph& h) {
  BiPoly out;
  const std::size_t m = h.num_edges();
  for (std::uint64_t chosen = 0; chosen < (std::uint64_t{1} << m); ++chosen) {
    VertexMask u = 0;
    for (std::size_t e = 0; e < m; ++e) {
      if (chosen >> e & 1) u |= h.edges()[e];
    }
    out.add_term(static_cast<std::uint32_t>(std::popcount(u)), static_cast<std::uint32_t>(std::popcount(chosen)), 1);
  }
  return out;
}

UniPoly independence_poly(const Hypergraph& h) { return eval_y(reference::vertex_induced_poly(h), 0); }

}  // namespace reference

}  // namespace hgpoly
