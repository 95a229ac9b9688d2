#include <doctest.h>

#include "corpus.hpp"
#include "hgpoly/error.hpp"
#include "hgpoly/hypergraph.hpp"

using namespace hgpoly;
using hgpoly::testing::from_masks;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an hgpoly::Error");
  return ErrorCode::InternalMismatch;
}

}  // namespace

TEST_CASE("validate builds canonical edge order") {
  const auto h = Hypergraph::validate({"a", "b", "c"}, {{"c", "b"}, {"a", "b"}});
  CHECK(h.num_vertices() == 3);
  CHECK(h.num_edges() == 2);
  CHECK(h.edges()[0] == 0b011);
  CHECK(h.edges()[1] == 0b110);
  CHECK(h.labels_of(h.edges()[1]) == std::vector<std::string>{"b", "c"});
  CHECK(h.index_of("c") == 2);
}

TEST_CASE("same clutter in any edge order compares equal") {
  const auto a = Hypergraph::validate({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
  const auto b = Hypergraph::validate({"a", "b", "c"}, {{"c", "b"}, {"b", "a"}});
  CHECK(a == b);
}

TEST_CASE("validation errors") {
  CHECK(code_of([] { Hypergraph::validate({"a", "a"}, {}); }) == ErrorCode::DuplicateVertexLabel);
  CHECK(code_of([] { Hypergraph::validate({"a", "b"}, {{}}); }) == ErrorCode::EmptyEdge);
  CHECK(code_of([] { Hypergraph::validate({"a", "b"}, {{"a", "z"}}); }) == ErrorCode::UnknownVertexLabel);
  CHECK(code_of([] { Hypergraph::validate({"a", "b"}, {{"a", "b"}, {"b", "a"}}); }) == ErrorCode::DuplicateEdge);
  CHECK(code_of([] { Hypergraph::validate({"a", "b", "c"}, {{"a", "b"}, {"a", "b", "c"}}); }) ==
        ErrorCode::AntichainViolation);
  CHECK(code_of([] { Hypergraph::validate({"a", "b"}, {{"a", "a"}}); }) == ErrorCode::ParseError);
  CHECK(code_of([] { Hypergraph::from_masks({"a", "b"}, {0b100}); }) == ErrorCode::UnknownVertex);
}

TEST_CASE("antichain violation names both edges") {
  try {
    Hypergraph::validate({"a", "b", "c"}, {{"a"}, {"a", "c"}});
    FAIL("no throw");
  } catch (const Error& e) {
    const std::string what = e.what();
    CHECK(what.find("{a}") != std::string::npos);
    CHECK(what.find("{a,c}") != std::string::npos);
  }
}

TEST_CASE("vertex_induced keeps edges inside W and relabels densely") {
  const auto k4 = hgpoly::testing::complete_graph(4);
  const auto sub = vertex_induced(k4, 0b1011);
  CHECK(sub.num_vertices() == 3);
  CHECK(sub.num_edges() == 3);
  CHECK(sub.labels() == std::vector<std::string>{"v0", "v1", "v3"});
  CHECK(code_of([&] { vertex_induced(k4, 0b10000); }) == ErrorCode::UnknownVertex);
}

TEST_CASE("edge_union and independence") {
  const auto p = hgpoly::testing::path(4);
  const std::size_t pick[] = {0, 2};
  CHECK(edge_union(p, pick) == 0b1111);
  const std::size_t bad[] = {5};
  CHECK(code_of([&] { edge_union(p, bad); }) == ErrorCode::UnknownEdge);
  CHECK(is_independent(p, 0b0101));
  CHECK_FALSE(is_independent(p, 0b0110));
  CHECK(is_independent(p, 0));
}

TEST_CASE("cards and the deck") {
  const auto p = hgpoly::testing::path(4);
  const auto c1 = card(p, 1);
  CHECK(c1.labels() == std::vector<std::string>{"v0", "v2", "v3"});
  CHECK(c1.num_edges() == 1);
  const auto d = deck(p);
  CHECK(d.cards.size() == 4);
  CHECK(d.origin_n == 4);
  CHECK(d.parent_labels() == p.labels());
  CHECK(code_of([&] { card(p, 4); }) == ErrorCode::IndexOutOfRange);
}

TEST_CASE("edge counts over the deck: each edge missing from n - |e| cards") {
  for (const auto& [name, h] : hgpoly::testing::standard_corpus()) {
    std::size_t total = 0;
    std::size_t expected = 0;
    for (const auto& c : deck(h).cards) total += c.num_edges();
    for (VertexMask e : h.edges()) expected += h.num_vertices() - static_cast<std::size_t>(popcount(e));
    CHECK_MESSAGE(total == expected, name);
  }
}

TEST_CASE("connected components") {
  const auto h = from_masks(6, {0b000011, 0b000110, 0b110000});
  const auto comps = connected_components(h);
  REQUIRE(comps.size() == 3);
  CHECK(comps[0].num_vertices() == 3);
  CHECK(comps[1].labels() == std::vector<std::string>{"v3"});
  CHECK(comps[2].num_edges() == 1);
}

TEST_CASE("bit compression round trip") {
  const VertexMask keep = 0b101101;
  for (VertexMask packed = 0; packed < 16; ++packed) {
    CHECK(compress_bits(expand_bits(packed, keep), keep) == packed);
  }
}

TEST_CASE("disjoint union rejects clashing labels and shifts edges") {
  const auto a = Hypergraph::validate({"a", "b"}, {{"a", "b"}});
  const auto b = Hypergraph::validate({"c", "d", "e"}, {{"d", "e"}});
  const auto u = disjoint_union(a, b);
  CHECK(u.num_vertices() == 5);
  CHECK(u.edges()[1] == 0b11000);
  CHECK(code_of([&] { disjoint_union(a, a); }) == ErrorCode::DuplicateVertexLabel);
}

TEST_CASE("edge ideal generators list the edge monomials") {
  const auto h = Hypergraph::validate({"x", "y", "z"}, {{"x", "y"}, {"z"}});
  CHECK(edge_ideal_generators(h) == std::vector<std::vector<std::string>>{{"x", "y"}, {"z"}});
}
