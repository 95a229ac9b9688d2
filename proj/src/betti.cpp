#include "hgpoly/betti.hpp"

#include <omp.h>

#include <algorithm>
#include <string>
#include <vector>

#include "hgpoly/error.hpp"
#include "hgpoly/sr_algebra.hpp"

namespace hgpoly {

std::uint64_t BettiTable::at(std::size_t i, std::size_t j) const {
  auto it = graded.find({i, j});
  return it == graded.end() ? 0 : it->second;
}

std::uint64_t BettiTable::at_mask(std::size_t i, VertexMask b) const {
  auto it = multigraded.find({i, b});
  return it == multigraded.end() ? 0 : it->second;
}

void BettiTable::collapse() {
  graded.clear();
  for (const auto& [key, value] : multigraded) {
    graded[{key.first, static_cast<std::size_t>(popcount(key.second))}] += value;
  }
}

namespace {

std::vector<bool> independence_table(const Hypergraph& h) {
  std::vector<bool> independent(std::size_t{1} << h.num_vertices());
  for (std::size_t w = 0; w < independent.size(); ++w) {
    independent[w] = is_independent_unchecked(h.edges(), w);
  }
  return independent;
}

using Entries = std::vector<std::pair<std::size_t, std::uint64_t>>;

// Hochster: b_{i,B} = dim H̃_{|B|-i-1}(Δ(B)). Entry k of the homology list is
// H̃_{k-1}, so it lands in homological degree i = |B| - k.
Entries entries_for(const std::vector<std::size_t>& dims, VertexMask b) {
  Entries out;
  const auto size = static_cast<std::size_t>(popcount(b));
  for (std::size_t k = dims.size(); k-- > 0;) {
    if (dims[k] != 0) out.emplace_back(size - k, dims[k]);
  }
  return out;
}

}  // namespace

std::map<std::size_t, std::uint64_t> hochster_entries(const Hypergraph& h, VertexMask b, PivotOrder order) {
  h.require_subset(b);
  std::vector<VertexMask> faces;
  VertexMask s = 0;
  do {
    if (is_independent_unchecked(h.edges(), s)) faces.push_back(s);
    s = (s - b) & b;
  } while (s != 0);
  const auto complex = SimplicialComplex::from_faces(h.num_vertices(), std::move(faces));
  std::map<std::size_t, std::uint64_t> out;
  for (const auto& [i, value] : entries_for(reduced_homology_dims(complex, order), b)) out[i] = value;
  return out;
}

BettiTable hochster_betti(const Hypergraph& h, const Limits& limits, ExecPolicy exec, PivotOrder order) {
  const std::size_t n = h.num_vertices();
  if (n > std::min<std::size_t>(limits.max_homology_vertices, 30)) {
    throw Error(ErrorCode::LimitExceeded, "vertex count n = " + std::to_string(n) +
                                              " exceeds the homology limit " +
                                              std::to_string(limits.max_homology_vertices));
  }
  const std::vector<bool> independent = independence_table(h);
  const auto total = static_cast<std::int64_t>(std::size_t{1} << n);
  std::vector<Entries> per_subset(static_cast<std::size_t>(total));

  auto solve = [&](std::int64_t b) {
    const auto mask = static_cast<VertexMask>(b);
    const auto complex = SimplicialComplex::independent_subsets(n, independent, mask);
    per_subset[static_cast<std::size_t>(b)] = entries_for(reduced_homology_dims(complex, order), mask);
  };

  if (exec.parallel) {
    const int threads = exec.threads > 0 ? exec.threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 16) num_threads(threads)
    for (std::int64_t b = 0; b < total; ++b) solve(b);
  } else {
    for (std::int64_t b = 0; b < total; ++b) solve(b);
  }

  BettiTable table;
  table.n = n;
  for (std::int64_t b = 0; b < total; ++b) {
    for (const auto& [i, value] : per_subset[static_cast<std::size_t>(b)]) {
      table.multigraded.emplace(std::make_pair(i, static_cast<VertexMask>(b)), value);
    }
  }
  table.collapse();
  return table;
}

HomologicalInvariants pd_reg_depth(const BettiTable& table, std::size_t n) {
  HomologicalInvariants out;
  for (const auto& [key, value] : table.graded) {
    if (value == 0) continue;
    const auto [i, j] = key;
    out.projective_dimension = std::max(out.projective_dimension, i);
    if (j >= i) out.regularity = std::max(out.regularity, j - i);
  }
  out.depth = n - std::min(n, out.projective_dimension);
  return out;
}

UniPoly alternating_betti_poly(const BettiTable& table) {
  std::vector<BigInt> coeffs(table.n + 1);
  for (const auto& [key, value] : table.graded) {
    const auto [i, j] = key;
    if (j >= coeffs.size()) coeffs.resize(j + 1);
    if (i % 2 == 0) {
      coeffs[j] += BigInt(value);
    } else {
      coeffs[j] -= BigInt(value);
    }
  }
  return UniPoly(std::move(coeffs));
}

bool betti_euler_identity_holds(const Hypergraph& h, const Limits& limits, ExecPolicy exec) {
  return k_polynomial(h, limits, exec) == alternating_betti_poly(hochster_betti(h, limits, exec));
}

AntidiagonalRecovery antidiagonal_recovery(const BettiTable& table, const UniPoly& k_poly) {
  AntidiagonalRecovery out;
  std::map<std::size_t, std::pair<std::size_t, std::uint64_t>> per_column;  // j -> (nonzero count, value)
  for (const auto& [key, value] : table.graded) {
    if (value == 0) continue;
    auto& slot = per_column[key.second];
    ++slot.first;
    slot.second = value;
  }
  for (const auto& [j, slot] : per_column) {
    if (slot.first > 1) {
      out.violating_column = j;
      return out;
    }
  }
  out.applicable = true;
  out.matches_table = true;
  const auto top = std::max<std::size_t>(table.n, static_cast<std::size_t>(std::max(k_poly.degree(), 0L)));
  for (std::size_t j = 1; j <= top; ++j) {
    const BigInt c = abs(k_poly[j]);
    auto it = per_column.find(j);
    const BigInt expected = it == per_column.end() ? BigInt(0) : BigInt(it->second.second);
    if (c != 0 || it != per_column.end()) out.recovered[j] = c;
    if (c != expected) out.matches_table = false;
  }
  return out;
}

AntidiagonalRecovery antidiagonal_recovery(const Hypergraph& h, const Limits& limits, ExecPolicy exec) {
  return antidiagonal_recovery(hochster_betti(h, limits, exec), k_polynomial(h, limits, exec));
}

}  // namespace hgpoly
