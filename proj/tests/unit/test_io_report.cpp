#include <doctest.h>

#include <filesystem>

#include "corpus.hpp"
#include "hgpoly/enumerate.hpp"
#include "hgpoly/error.hpp"
#include "hgpoly/hypergraph_io.hpp"
#include "hgpoly/report.hpp"

using namespace hgpoly;
namespace ht = hgpoly::testing;
namespace fs = std::filesystem;

namespace {

const fs::path kFixtures = HGPOLY_FIXTURES;

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InternalMismatch;
}

fs::path scratch_dir(const std::string& name) {
  const auto dir = fs::temp_directory_path() / ("hgpoly_test_" + name);
  fs::remove_all(dir);
  return dir;
}

}  // namespace

TEST_CASE("both file formats parse to the same hypergraph") {
  const auto json_h = parse_hypergraph(R"({"vertices": ["a","b","c"], "edges": [["a","b"],["b","c"]]})");
  const auto lines_h = read_hypergraph_file(kFixtures / "path3.hg");
  CHECK(json_h == lines_h);
  CHECK(parse_hypergraph("a b c\n\nb c\n  a   b \n") == lines_h);
  CHECK(parse_hypergraph(hypergraph_to_lines(lines_h)) == lines_h);
  CHECK(parse_hypergraph_json(hypergraph_to_json(lines_h)) == lines_h);
}

TEST_CASE("parse errors") {
  CHECK(code_of([] { read_hypergraph_file(kFixtures / "truncated.json"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { read_hypergraph_file(kFixtures / "unknown_key.json"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { read_hypergraph_file(kFixtures / "antichain_violation.json"); }) ==
        ErrorCode::AntichainViolation);
  CHECK(code_of([] { read_hypergraph_file(kFixtures / "missing.json"); }) == ErrorCode::IoError);
  CHECK(code_of([] { parse_hypergraph(R"({"vertices": ["a"], "edges": [[1]]})"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_hypergraph(R"({"vertices": ["a"]})"); }) == ErrorCode::ParseError);
}

TEST_CASE("polynomial JSON round trip keeps big coefficients") {
  BiPoly p = BiPoly::monomial(3, 1, BigInt("-98765432109876543210"));
  p.add_term(0, 0, 1);
  CHECK(bipoly_from_json(bipoly_to_json(p)) == p);
  CHECK(bipoly_to_json(p).dump() == R"([[0,0,"1"],[3,1,"-98765432109876543210"]])");
  CHECK(code_of([] { bipoly_from_json(json::parse(R"([[0, 0, 1]])")); }) == ErrorCode::ParseError);
}

TEST_CASE("deck files round trip") {
  const auto h = read_hypergraph_file(kFixtures / "star4.json");
  const auto dir = scratch_dir("deck");
  write_deck(deck(h), h.labels(), dir);
  CHECK(fs::exists(dir / "card_00.json"));
  CHECK(fs::exists(dir / "card_04.json"));
  const auto back = read_deck(dir);
  CHECK(back.cards == deck(h).cards);
  CHECK(back.origin_n == 5);
  CHECK(back.parent_labels() == h.labels());
  fs::remove(dir / "card_02.json");
  CHECK(code_of([&] { read_deck(dir); }) == ErrorCode::InconsistentDeck);
  fs::remove_all(dir);
}

TEST_CASE("corpus directory loading") {
  const auto corpus = load_corpus(kFixtures / "corpus");
  REQUIRE(corpus.size() == 5);
  CHECK(corpus[0].name == "c4.hg");
  CHECK(corpus[0].hypergraph.num_edges() == 4);
  const auto bad = scratch_dir("badcorpus");
  fs::create_directories(bad);
  fs::copy_file(kFixtures / "truncated.json", bad / "truncated.json");
  fs::copy_file(kFixtures / "k3.json", bad / "k3.json");
  try {
    load_corpus(bad);
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("truncated.json") != std::string::npos);
  }
  fs::remove_all(bad);
}

TEST_CASE("Betti table text layout") {
  const auto table = hochster_betti(ht::complete_graph(3));
  CHECK(betti_to_text(table.graded) ==
        "       0 1 2\n"
        "total: 1 3 2\n"
        "    0: 1 . .\n"
        "    1: . 3 2\n");
}

TEST_CASE("identity checks") {
  const auto k3 = ht::complete_graph(3);
  const auto all = run_identity_checks(k3, "all", {}, {});
  CHECK(all.size() == identity_ids().size());
  for (const auto& c : all) CHECK_MESSAGE(c.status == CheckStatus::Passed, c.id);
  const auto one = run_identity_checks(k3, "4.3", {}, {});
  REQUIRE(one.size() == 1);
  CHECK(one[0].id == "4.3");
  CHECK(code_of([&] { run_identity_checks(k3, "9.9", {}, {}); }) == ErrorCode::ParseError);
  // the deck identity needs no reconstructibility
  CHECK(run_identity_checks(ht::from_masks(3, {}), "4.2", {}, {})[0].status == CheckStatus::Passed);
  Limits tight;
  tight.max_homology_vertices = 2;
  const auto skipped = run_identity_checks(k3, "4.3", tight, {});
  CHECK(skipped[0].status == CheckStatus::Skipped);
  CHECK(skipped[0].detail.find("LimitExceeded") != std::string::npos);
}

TEST_CASE("full report sections") {
  const auto r = full_report(ht::complete_graph(3), 5, {}, {});
  for (const char* key : {"hypergraph", "polynomials", "stanley_reisner", "betti", "reconstruction", "identities"}) {
    CHECK_MESSAGE(r.contains(key), key);
  }
  CHECK(r["stanley_reisner"]["k_polynomial"] == "1 - 3*t^2 + 2*t^3");
  CHECK(r["betti"]["invariants"]["projective_dimension"] == 2);
  Limits tight;
  tight.max_homology_vertices = 2;
  const auto limited = full_report(ht::complete_graph(3), 5, tight, {});
  CHECK(limited["betti"].contains("skipped"));
  CHECK(limited["polynomials"].contains("S"));
}

TEST_CASE("reports do not depend on the execution policy") {
  for (const auto& [name, h] : ht::homology_extras()) {
    CHECK_MESSAGE(full_report(h, 8, {}, ExecPolicy::serial()).dump() ==
                      full_report(h, 8, {}, ExecPolicy::omp(4)).dump(),
                  name);
  }
}
