#include <doctest.h>

#include <random>

#include "corpus.hpp"
#include "hgpoly/betti.hpp"
#include "hgpoly/error.hpp"
#include "hgpoly/sr_algebra.hpp"

using namespace hgpoly;
namespace ht = hgpoly::testing;

namespace {

using Graded = std::map<std::pair<std::size_t, std::size_t>, std::uint64_t>;

// Dense rank over Q by plain fraction arithmetic, as an oracle.
std::size_t dense_rank(const std::vector<SparseRow>& rows, std::size_t cols) {
  std::vector<std::vector<mpq_class>> m(rows.size(), std::vector<mpq_class>(cols));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (const auto& [c, v] : rows[r]) m[r][c] = v;
  }
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < m.size() && m[pivot][c] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[pivot], m[rank]);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || m[r][c] == 0) continue;
      const mpq_class factor = m[r][c] / m[rank][c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= factor * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

SimplicialComplex boundary_of_simplex(std::size_t n) {
  std::vector<VertexMask> faces;
  for (VertexMask w = 0; w + 1 < (VertexMask{1} << n); ++w) faces.push_back(w);
  return SimplicialComplex::from_faces(n, faces);
}

}  // namespace

TEST_CASE("reduced homology of small complexes") {
  CHECK(reduced_homology_dims(SimplicialComplex{}).empty());
  CHECK(reduced_homology_dims(SimplicialComplex::from_faces(2, {0})) == std::vector<std::size_t>{1});
  // two points: one reduced H_0
  CHECK(reduced_homology_dims(SimplicialComplex::from_faces(2, {0, 1, 2})) == std::vector<std::size_t>{0, 1});
  // boundary of a triangle is a circle, of a tetrahedron a sphere
  CHECK(reduced_homology_dims(boundary_of_simplex(3)) == std::vector<std::size_t>{0, 0, 1});
  CHECK(reduced_homology_dims(boundary_of_simplex(4)) == std::vector<std::size_t>{0, 0, 0, 1});
  // full simplex is contractible
  std::vector<VertexMask> all;
  for (VertexMask w = 0; w < 8; ++w) all.push_back(w);
  CHECK(reduced_homology_dims(SimplicialComplex::from_faces(3, all)) == std::vector<std::size_t>{0, 0, 0, 0});
}

TEST_CASE("from_faces rejects families that are not closed") {
  CHECK_THROWS_AS(SimplicialComplex::from_faces(3, {0, 0b011}), Error);
  CHECK_THROWS_AS(SimplicialComplex::from_faces(2, {0, 0b100}), Error);
}

TEST_CASE("sparse rank agrees with a rational oracle under both pivot orders") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> val(-3, 3);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t rows = 1 + trial % 9;
    const std::size_t cols = 1 + (trial * 7) % 11;
    std::vector<SparseRow> m(rows);
    for (auto& row : m) {
      for (std::uint32_t c = 0; c < cols; ++c) {
        const int v = rng() % 3 == 0 ? val(rng) : 0;
        if (v != 0) row.emplace_back(c, v);
      }
    }
    const auto expected = dense_rank(m, cols);
    CHECK(exact_rank(m, cols, PivotOrder::LowestColumn) == expected);
    CHECK(exact_rank(m, cols, PivotOrder::HighestColumn) == expected);
    CHECK(exact_rank_bigint(m, cols) == expected);
  }
}

TEST_CASE("int64 overflow falls back to big integers") {
  const std::int64_t big = std::int64_t{1} << 40;
  std::vector<SparseRow> m = {{{0, big}, {1, big + 1}, {2, 3}},
                              {{0, big + 1}, {1, big}, {2, 5}},
                              {{0, 2 * big + 1}, {1, 2 * big + 1}, {2, 8}}};
  CHECK(exact_rank(m, 3) == dense_rank(m, 3));
  CHECK(exact_rank(m, 3) == 2);
}

TEST_CASE("Euler characteristic from homology equals the face count one") {
  for (const auto& [name, h] : ht::standard_corpus()) {
    const auto delta = independence_complex(h);
    const auto dims = reduced_homology_dims(delta);
    CHECK_MESSAGE(reduced_euler_from_homology(dims) == reduced_euler_from_faces(delta), name);
    CHECK_MESSAGE(dims == reduced_homology_dims(delta, PivotOrder::HighestColumn), name);
  }
}

TEST_CASE("triangle Betti table") {
  const auto table = hochster_betti(ht::complete_graph(3));
  CHECK(table.graded == Graded{{{0, 0}, 1}, {{1, 2}, 3}, {{2, 3}, 2}});
  const auto inv = pd_reg_depth(table, 3);
  CHECK(inv.projective_dimension == 2);
  CHECK(inv.regularity == 1);
  CHECK(inv.depth == 1);
  CHECK(table.at_mask(1, 0b011) == 1);
  CHECK(table.at_mask(2, 0b111) == 2);
}

TEST_CASE("Betti tables known in closed form") {
  // (ab, bc) = b(a, c): 0 <- R <- S(-2)^2 <- S(-3) <- 0
  CHECK(hochster_betti(ht::path(3)).graded == Graded{{{0, 0}, 1}, {{1, 2}, 2}, {{2, 3}, 1}});
  // Koszul complex on ab, cd
  const auto ci = hochster_betti(ht::from_masks(4, {0b0011, 0b1100}));
  CHECK(ci.graded == Graded{{{0, 0}, 1}, {{1, 2}, 2}, {{2, 4}, 1}});
  CHECK(pd_reg_depth(ci, 4).regularity == 2);
  // the 4-cycle has a linear resolution 1, 4, 4, 1
  const auto c4 = hochster_betti(ht::cycle(4));
  CHECK(c4.graded == Graded{{{0, 0}, 1}, {{1, 2}, 4}, {{2, 3}, 4}, {{3, 4}, 1}});
  // principal ideal (abc)
  const auto single = hochster_betti(ht::from_masks(4, {0b0111}));
  CHECK(single.graded == Graded{{{0, 0}, 1}, {{1, 3}, 1}});
  const auto inv = pd_reg_depth(single, 4);
  CHECK(inv.projective_dimension == 1);
  CHECK(inv.regularity == 2);
  CHECK(inv.depth == 3);
  // no edges: R is the polynomial ring
  CHECK(hochster_betti(ht::from_masks(3, {})).graded == Graded{{{0, 0}, 1}});
}

TEST_CASE("alternating Betti sum equals S(t, -1)") {
  for (const auto& [name, h] : ht::standard_corpus()) {
    CHECK_MESSAGE(betti_euler_identity_holds(h), name);
  }
}

TEST_CASE("independent B carry no Betti numbers above degree 0") {
  for (const auto& [name, h] : ht::standard_corpus()) {
    const auto table = hochster_betti(h);
    for (const auto& [key, value] : table.multigraded) {
      CHECK_MESSAGE(value > 0, name);
      if (key.first > 0) CHECK_MESSAGE(!is_independent(h, key.second), name);
    }
    auto copy = table;
    copy.collapse();
    CHECK_MESSAGE(copy.graded == table.graded, name);
    // b_{1,B} = 1 exactly on the edges
    for (VertexMask e : h.edges()) CHECK_MESSAGE(table.at_mask(1, e) == 1, name);
  }
}

TEST_CASE("pivot order and thread count do not change the table") {
  for (const auto& [name, h] : ht::homology_extras()) {
    const auto serial = hochster_betti(h);
    CHECK_MESSAGE(serial == hochster_betti(h, {}, ExecPolicy::omp(3), PivotOrder::HighestColumn), name);
    CHECK_MESSAGE(alternating_betti_poly(serial) == k_polynomial(h), name);
  }
}

TEST_CASE("antidiagonal recovery") {
  const auto k3 = antidiagonal_recovery(ht::complete_graph(3));
  CHECK(k3.applicable);
  CHECK(k3.matches_table);
  CHECK(k3.recovered == std::map<std::size_t, BigInt>{{2, 3}, {3, 2}});
  // complete graphs have linear resolutions: K4 gives 1, 6, 8, 3
  const auto k4 = antidiagonal_recovery(ht::complete_graph(4));
  CHECK(k4.applicable);
  CHECK(k4.recovered == std::map<std::size_t, BigInt>{{2, 6}, {3, 8}, {4, 3}});
}

TEST_CASE("recovered values match whenever the condition holds") {
  std::size_t inapplicable = 0;
  for (const auto& [name, h] : ht::standard_corpus()) {
    const auto r = antidiagonal_recovery(h);
    CHECK_MESSAGE(r.applicable == !r.violating_column.has_value(), name);
    if (r.applicable) {
      CHECK_MESSAGE(r.matches_table, name);
    } else {
      ++inapplicable;
      const auto table = hochster_betti(h);
      std::size_t in_column = 0;
      for (const auto& [key, value] : table.graded) in_column += key.second == *r.violating_column;
      CHECK_MESSAGE(in_column >= 2, name);
    }
  }
  CHECK(inapplicable > 0);
}

TEST_CASE("homology limit") {
  Limits tight;
  tight.max_homology_vertices = 4;
  try {
    hochster_betti(ht::path(5), tight);
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::LimitExceeded);
  }
}
