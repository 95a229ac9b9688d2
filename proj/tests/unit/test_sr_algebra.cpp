#include <doctest.h>

#include "corpus.hpp"
#include "hgpoly/enumerate.hpp"
#include "hgpoly/error.hpp"
#include "hgpoly/sr_algebra.hpp"

using namespace hgpoly;
namespace ht = hgpoly::testing;

namespace {

using Big = std::vector<BigInt>;

// dim R_k by listing monomials of degree k whose support is independent.
Big hilbert_by_monomials(const Hypergraph& h, std::size_t k_max) {
  const std::size_t n = h.num_vertices();
  Big out(k_max + 1);
  // count exponent vectors of total degree k with independent support:
  // sum over independent supports W with |W| = s <= k of C(k - 1, s - 1).
  std::vector<std::vector<BigInt>> ways(k_max + 1, std::vector<BigInt>(n + 1));
  for (std::size_t k = 0; k <= k_max; ++k) {
    for (std::size_t s = 0; s <= n; ++s) {
      // compositions of k into s positive parts, by recursion
      if (s == 0) {
        ways[k][s] = k == 0 ? 1 : 0;
      } else {
        BigInt total = 0;
        for (std::size_t first = 1; first <= k; ++first) total += ways[k - first][s - 1];
        ways[k][s] = total;
      }
    }
  }
  for (VertexMask w = 0; w < (VertexMask{1} << n); ++w) {
    if (!is_independent(h, w)) continue;
    const auto s = static_cast<std::size_t>(popcount(w));
    for (std::size_t k = 0; k <= k_max; ++k) out[k] += ways[k][s];
  }
  return out;
}

}  // namespace

TEST_CASE("triangle") {
  const auto k3 = ht::complete_graph(3);
  const auto inv = sr_invariants(k3);
  CHECK(inv.k_polynomial == UniPoly({1, 0, -3, 2}));
  CHECK(inv.f == Big{1, 3});
  CHECK(inv.h == Big{1, 2});
  CHECK(inv.krull_dim == 1);
  CHECK(inv.multiplicity == 3);
  CHECK(inv.reduced_numerator == UniPoly({1, 2}));
  CHECK(hilbert_function(k3, 6) == Big{1, 3, 3, 3, 3, 3, 3});
}

TEST_CASE("path on three vertices: R = K[a,b,c]/(ab,bc)") {
  const auto p3 = ht::path(3);
  const auto inv = sr_invariants(p3);
  CHECK(inv.k_polynomial == UniPoly({1, 0, -2, 1}));
  CHECK(inv.f == Big{1, 3, 1});
  CHECK(inv.h == Big{1, 1, -1});
  CHECK(inv.krull_dim == 2);
  CHECK(inv.multiplicity == 1);
  // b^k plus the k + 1 monomials in a and c
  CHECK(hilbert_function(p3, 5) == Big{1, 3, 4, 5, 6, 7});
}

TEST_CASE("two disjoint edges: a complete intersection") {
  const auto h = ht::from_masks(4, {0b0011, 0b1100});
  const auto inv = sr_invariants(h);
  CHECK(inv.k_polynomial == UniPoly({1, 0, -2, 0, 1}));
  CHECK(inv.h == Big{1, 2, 1});
  CHECK(inv.multiplicity == 4);
}

TEST_CASE("edgeless hypergraph is the polynomial ring") {
  const auto h = ht::from_masks(3, {});
  const auto inv = sr_invariants(h);
  CHECK(inv.k_polynomial == UniPoly({1}));
  CHECK(inv.krull_dim == 3);
  CHECK(inv.h == Big{1, 0, 0, 0});
  CHECK(hilbert_function(h, 3) == Big{1, 3, 6, 10});
}

TEST_CASE("K(t) = sum f_{i-1} t^i (1 - t)^(n - i) on the corpus") {
  for (const auto& [name, h] : ht::standard_corpus()) {
    const auto f = f_vector(h);
    CHECK_MESSAGE(k_polynomial(h) == face_numerator(f, h.num_vertices()), name);
  }
}

TEST_CASE("Hilbert function routes and a monomial count agree") {
  for (const auto& [name, h] : ht::standard_corpus()) {
    const std::size_t k_max = 2 * h.num_vertices();
    const auto direct = hilbert_function(h, k_max);
    CHECK_MESSAGE(direct == hilbert_function_from_f(f_vector(h), k_max), name);
    if (h.num_vertices() <= 6) CHECK_MESSAGE(direct == hilbert_by_monomials(h, k_max), name);
  }
}

TEST_CASE("h-vector sums to the multiplicity and the reduced numerator is h") {
  for (const auto& [name, h] : ht::standard_corpus()) {
    const auto inv = sr_invariants(h);
    BigInt sum = 0;
    for (const auto& v : inv.h) sum += v;
    CHECK_MESSAGE(sum == inv.multiplicity, name);
    CHECK_MESSAGE(inv.reduced_numerator == UniPoly(inv.h), name);
  }
}

TEST_CASE("exterior face ring series is the face polynomial") {
  const auto c4 = ht::cycle(4);
  CHECK(exterior_face_poly(c4) == UniPoly({1, 4, 2}));
  for (const auto& [name, h] : ht::standard_corpus()) {
    CHECK_MESSAGE(exterior_face_poly(h) == UniPoly(f_vector(h)), name);
  }
}

TEST_CASE("h_vector checks its input length") {
  CHECK_THROWS_AS(h_vector(Big{1, 3}, 2), Error);
}
