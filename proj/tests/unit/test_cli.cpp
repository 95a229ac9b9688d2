#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <sstream>

#include "hgpoly/cli.hpp"
#include "hgpoly/hypergraph_io.hpp"

using namespace hgpoly;
namespace fs = std::filesystem;

namespace {

const fs::path kFixtures = HGPOLY_FIXTURES;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const char* name) { return (kFixtures / name).string(); }

}  // namespace

TEST_CASE("compute") {
  CHECK(run({"compute", "--poly", "S", "--input", fixture("k3.json")}).out == "1 + 3*x^2*y + 3*x^3*y^2 + x^3*y^3\n");
  CHECK(run({"compute", "--poly", "P", "-i", fixture("k3.json")}).out == "1 + 3*x + 3*x^2*y + x^3*y^3\n");
  CHECK(run({"compute", "--poly", "indep", "-i", fixture("path3.hg")}).out == "1 + 3*t + t^2\n");
  const auto j = run({"--format", "json", "compute", "--poly", "S", "-i", fixture("star4.json")});
  CHECK(j.code == kExitOk);
  const auto doc = json::parse(j.out);
  CHECK(doc["terms"].size() == 5);
  CHECK(doc["terms"][4] == json::parse(R"([5, 4, "1"])"));
}

TEST_CASE("global options may follow the subcommand") {
  const auto r = run({"fvector", "-i", fixture("k3.json"), "--format", "json"});
  CHECK(r.code == kExitOk);
  CHECK(json::parse(r.out)["f_vector"] == json::parse(R"(["1", "3"])"));
}

TEST_CASE("algebra subcommands") {
  const auto h = run({"hilbert", "--terms", "4", "-i", fixture("k3.json")});
  CHECK(h.out.find("hilbert_function: 1, 3, 3, 3, 3\n") != std::string::npos);
  CHECK(run({"hvector", "-i", fixture("path3.hg")}).out == "(1, 1, -1)\n");
  const auto b = run({"betti", "-i", fixture("k3.json")});
  CHECK(b.out.find("pd: 2\n") != std::string::npos);
  CHECK(b.out.find("depth: 1\n") != std::string::npos);
}

TEST_CASE("deck then reconstruct") {
  const auto dir = fs::temp_directory_path() / "hgpoly_cli_deck";
  fs::remove_all(dir);
  CHECK(run({"deck", "-i", fixture("star4.json"), "--out-dir", dir.string()}).code == kExitOk);
  const auto direct = run({"compute", "--poly", "P", "-i", fixture("star4.json")});
  const auto rebuilt = run({"reconstruct", "--deck", dir.string(), "--target", "P"});
  CHECK(rebuilt.code == kExitOk);
  CHECK(rebuilt.out == direct.out);
  CHECK(run({"reconstruct", "--deck", dir.string(), "--target", "fvector"}).out.find("f: (1, 5, 6, 4, 1)") == 0);
  fs::remove_all(dir);
}

TEST_CASE("verify") {
  const auto single = run({"verify", "--identity", "all", "-i", fixture("k3.json")});
  CHECK(single.code == kExitOk);
  CHECK(single.out.find("FAIL") == std::string::npos);
  const auto corpus = run({"--format", "json", "verify", "--corpus", (kFixtures / "corpus").string()});
  CHECK(corpus.code == kExitOk);
  CHECK(json::parse(corpus.out).size() == 25);
  CHECK(run({"verify", "--identity", "7.7", "-i", fixture("k3.json")}).code == kExitInputError);
  CHECK(run({"verify"}).code == kExitInputError);
}

TEST_CASE("exit codes") {
  const auto bad = run({"compute", "-i", fixture("antichain_violation.json")});
  CHECK(bad.code == kExitInputError);
  CHECK(bad.err.find("AntichainViolation") != std::string::npos);
  CHECK(run({"compute", "-i", fixture("missing.json")}).code == kExitInputError);
  CHECK(run({"--limit-n", "2", "compute", "--poly", "P", "-i", fixture("k3.json")}).code == kExitLimitExceeded);
  CHECK(run({"--homology-limit", "2", "betti", "-i", fixture("k3.json")}).code == kExitLimitExceeded);
  CHECK(run({"nonsense"}).code == kExitInputError);
  CHECK(run({"--help"}).code == kExitOk);
  CHECK(exit_code_for(ErrorCode::PathsDisagree) == kExitVerificationFailed);
}

TEST_CASE("reconstruct refuses excluded decks") {
  const auto dir = fs::temp_directory_path() / "hgpoly_cli_spanning";
  fs::remove_all(dir);
  run({"deck", "-i", fixture("spanning3.json"), "--out-dir", dir.string()});
  const auto r = run({"reconstruct", "--deck", dir.string(), "--target", "S"});
  CHECK(r.code == kExitInputError);
  CHECK(r.err.find("NoEdges") != std::string::npos);
  fs::remove_all(dir);
}

TEST_CASE("HGPOLY_LIMITS") {
  setenv("HGPOLY_LIMITS", "--limit-n=2", 1);
  CHECK(run({"compute", "--poly", "P", "-i", fixture("k3.json")}).code == kExitLimitExceeded);
  // explicit flags win over the environment
  CHECK(run({"--limit-n", "5", "compute", "--poly", "P", "-i", fixture("k3.json")}).code == kExitOk);
  setenv("HGPOLY_LIMITS", "--bogus", 1);
  CHECK(run({"compute", "-i", fixture("k3.json")}).code == kExitInputError);
  unsetenv("HGPOLY_LIMITS");
}
