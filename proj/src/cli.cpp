#include "hgpoly/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <optional>
#include <ostream>
#include <sstream>

#include "hgpoly/betti.hpp"
#include "hgpoly/enumerate.hpp"
#include "hgpoly/hypergraph_io.hpp"
#include "hgpoly/reconstruct.hpp"
#include "hgpoly/report.hpp"
#include "hgpoly/sr_algebra.hpp"

namespace hgpoly {

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::LimitExceeded: return kExitLimitExceeded;
    case ErrorCode::InternalMismatch:
    case ErrorCode::PathsDisagree: return kExitVerificationFailed;
    default: return kExitInputError;
  }
}

namespace {

struct RunConfig {
  std::string input;
  std::string format = "text";
  std::size_t k_max = 20;
  Limits limits;
  bool parallel = false;
  int threads = 0;

  ExecPolicy exec() const { return parallel ? ExecPolicy::omp(threads) : ExecPolicy::serial(); }
};

void add_limit_options(CLI::App& app, RunConfig& cfg) {
  app.add_option("--limit-n", cfg.limits.max_vertices, "Largest n for 2^n vertex-subset sweeps")
      ->check(CLI::PositiveNumber);
  app.add_option("--limit-m", cfg.limits.max_edges, "Largest m for 2^m edge-subset sweeps")->check(CLI::PositiveNumber);
  app.add_option("--homology-limit", cfg.limits.max_homology_vertices, "Largest n for Betti computations")
      ->check(CLI::PositiveNumber);
}

// HGPOLY_LIMITS takes the same flags, e.g. "--limit-n=28 --homology-limit=12".
void apply_env_limits(RunConfig& cfg) {
  const char* env = std::getenv("HGPOLY_LIMITS");
  if (env == nullptr || *env == '\0') return;
  CLI::App env_app{"HGPOLY_LIMITS"};
  add_limit_options(env_app, cfg);
  std::istringstream in(env);
  std::vector<std::string> tokens{"HGPOLY_LIMITS"};
  for (std::string tok; in >> tok;) tokens.push_back(tok);
  std::vector<const char*> argv;
  for (const auto& t : tokens) argv.push_back(t.c_str());
  try {
    env_app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    throw Error(ErrorCode::ParseError, std::string("HGPOLY_LIMITS: ") + e.what());
  }
}

std::string join(const std::vector<BigInt>& values, const char* sep = ", ") {
  std::string out;
  for (std::size_t k = 0; k < values.size(); ++k) out += (k ? sep : "") + to_decimal(values[k]);
  return out;
}

void emit(std::ostream& out, const RunConfig& cfg, const json& doc, const std::string& text) {
  if (cfg.format == "json") {
    out << doc.dump(2) << "\n";
  } else {
    out << text;
    if (!text.empty() && text.back() != '\n') out << "\n";
  }
}

int cmd_compute(const RunConfig& cfg, const std::string& poly, std::ostream& out) {
  const Hypergraph h = read_hypergraph_file(cfg.input);
  if (poly == "indep") {
    const UniPoly p = independence_poly(h, cfg.limits, cfg.exec());
    emit(out, cfg, json{{"poly", poly}, {"text", p.to_string()}, {"coeffs", unipoly_to_json(p)}}, p.to_string());
    return kExitOk;
  }
  const BiPoly p = poly == "S" ? edge_induced_poly(h, cfg.limits, cfg.exec())
                               : vertex_induced_poly(h, cfg.limits, cfg.exec());
  emit(out, cfg, json{{"poly", poly}, {"n", h.num_vertices()}, {"text", p.to_string()}, {"terms", bipoly_to_json(p)}},
       p.to_string());
  return kExitOk;
}

int cmd_hilbert(const RunConfig& cfg, std::ostream& out) {
  const Hypergraph h = read_hypergraph_file(cfg.input);
  const SRInvariants inv = sr_invariants(h, cfg.limits, cfg.exec());
  const auto values = hilbert_function(h, cfg.k_max, cfg.limits, cfg.exec());
  json doc = sr_invariants_to_json(inv);
  doc["hilbert_function"] = bigints_to_json(values);
  std::string text = "H(t) = " + doc["hilbert_series"].get<std::string>() + "\n" +
                     "reduced: " + doc["hilbert_series_reduced"].get<std::string>() + "\n" +
                     "krull_dim: " + std::to_string(inv.krull_dim) + "\n" +
                     "multiplicity: " + to_decimal(inv.multiplicity) + "\n" + "hilbert_function: " + join(values) + "\n";
  emit(out, cfg, doc, text);
  return kExitOk;
}

int cmd_fvector(const RunConfig& cfg, std::ostream& out) {
  const Hypergraph h = read_hypergraph_file(cfg.input);
  const auto f = f_vector(h, cfg.limits, cfg.exec());
  emit(out, cfg, json{{"f_vector", bigints_to_json(f)}}, "(" + join(f) + ")");
  return kExitOk;
}

int cmd_hvector(const RunConfig& cfg, std::ostream& out) {
  const Hypergraph h = read_hypergraph_file(cfg.input);
  const auto f = f_vector(h, cfg.limits, cfg.exec());
  const auto hv = h_vector(f, krull_dim_of(f));
  emit(out, cfg, json{{"h_vector", bigints_to_json(hv)}, {"krull_dim", krull_dim_of(f)}}, "(" + join(hv) + ")");
  return kExitOk;
}

int cmd_betti(const RunConfig& cfg, std::ostream& out) {
  const Hypergraph h = read_hypergraph_file(cfg.input);
  const BettiTable table = hochster_betti(h, cfg.limits, cfg.exec());
  const auto inv = pd_reg_depth(table, h.num_vertices());
  json doc = betti_to_json(table, h.labels());
  doc["invariants"] = homological_to_json(inv);
  std::string text = betti_to_text(table.graded);
  text += "pd: " + std::to_string(inv.projective_dimension) + "\n";
  text += "reg(R): " + std::to_string(inv.regularity) + "  reg(I): " + std::to_string(inv.regularity + 1) + "\n";
  text += "depth: " + std::to_string(inv.depth) + "\n";
  emit(out, cfg, doc, text);
  return kExitOk;
}

int cmd_deck(const RunConfig& cfg, const std::string& out_dir, std::ostream& out) {
  const Hypergraph h = read_hypergraph_file(cfg.input);
  const Deck d = deck(h);
  write_deck(d, h.labels(), out_dir);
  emit(out, cfg, json{{"cards", d.cards.size()}, {"out_dir", out_dir}},
       "wrote " + std::to_string(d.cards.size()) + " cards to " + out_dir);
  return kExitOk;
}

int cmd_reconstruct(const RunConfig& cfg, const std::string& deck_dir, const std::string& target, std::ostream& out) {
  const Deck d = read_deck(deck_dir);
  check_reconstructible(d);
  const std::size_t n = d.cards.size();
  if (target == "S" || target == "P") {
    const auto kind = target == "S" ? PolyKind::EdgeInduced : PolyKind::VertexInduced;
    const auto polys = card_polys(d, kind, cfg.limits, cfg.exec());
    const BiPoly p = target == "S" ? reconstruct_S(polys, n) : reconstruct_P(polys, n);
    emit(out, cfg, json{{"target", target}, {"text", p.to_string()}, {"terms", bipoly_to_json(p)}}, p.to_string());
  } else if (target == "fvector") {
    const auto f = reconstruct_f_vector(d, cfg.limits, cfg.exec());
    const auto d_dim = krull_dim_of(f);
    const auto hv = h_vector(f, d_dim);
    emit(out, cfg,
         json{{"f_vector", bigints_to_json(f)},
              {"h_vector", bigints_to_json(hv)},
              {"krull_dim", d_dim},
              {"multiplicity", to_decimal(multiplicity_of(f))}},
         "f: (" + join(f) + ")\nh: (" + join(hv) + ")\nkrull_dim: " + std::to_string(d_dim) +
             "\nmultiplicity: " + to_decimal(multiplicity_of(f)));
  } else if (target == "hilbert") {
    const auto values = reconstruct_hilbert(d, cfg.k_max, cfg.limits, cfg.exec());
    emit(out, cfg, json{{"hilbert_function", bigints_to_json(values)}}, join(values));
  } else {
    const auto partial = reconstruct_multigraded_betti(d, cfg.limits, cfg.exec());
    emit(out, cfg, partial_betti_to_json(partial, d.parent_labels()),
         betti_to_text(partial.graded) + "(total degree " + std::to_string(n) + " not determined by the deck)\n");
  }
  return kExitOk;
}

int verify_one(const RunConfig& cfg, const std::string& name, const Hypergraph& h, const std::string& identity,
               json& report, std::string& text) {
  bool failed = false;
  for (const auto& c : run_identity_checks(h, identity, cfg.limits, cfg.exec())) {
    failed = failed || c.status == CheckStatus::Failed;
    text += std::string(to_string(c.status)) + " " + c.id + " " + c.name;
    if (!name.empty()) text += " [" + name + "]";
    if (!c.detail.empty()) text += ": " + c.detail;
    text += "\n";
    report.push_back(json{{"input", name}, {"id", c.id}, {"name", c.name}, {"status", to_string(c.status)},
                          {"detail", c.detail}});
  }
  return failed ? kExitVerificationFailed : kExitOk;
}

int cmd_verify(const RunConfig& cfg, const std::string& identity, const std::string& corpus, std::ostream& out) {
  json report = json::array();
  std::string text;
  int code = kExitOk;
  if (!corpus.empty()) {
    for (const auto& entry : load_corpus(corpus)) {
      code = std::max(code, verify_one(cfg, entry.name, entry.hypergraph, identity, report, text));
    }
  } else {
    code = verify_one(cfg, "", read_hypergraph_file(cfg.input), identity, report, text);
  }
  emit(out, cfg, report, text);
  return code;
}

int cmd_report(const RunConfig& cfg, std::ostream& out) {
  const Hypergraph h = read_hypergraph_file(cfg.input);
  out << full_report(h, cfg.k_max, cfg.limits, cfg.exec()).dump(2) << "\n";
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  try {
    apply_env_limits(cfg);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }

  CLI::App app{"Subhypergraph polynomials, Stanley-Reisner invariants and deck reconstruction", "hgpoly"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--parallel,!--serial", cfg.parallel, "Use the OpenMP kernels");
  app.add_option("--threads", cfg.threads, "OpenMP thread count (0 = runtime default)")->check(CLI::NonNegativeNumber);
  add_limit_options(app, cfg);

  auto add_input = [&](CLI::App* sub) { sub->add_option("--input,-i", cfg.input, "Hypergraph file (JSON or lines)")->required(); };

  std::string poly = "S";
  auto* compute = app.add_subcommand("compute", "Edge-induced (S), vertex-induced (P) or independence polynomial");
  compute->add_option("--poly", poly, "S, P or indep")->check(CLI::IsMember({"S", "P", "indep"}));
  add_input(compute);

  auto* hilbert = app.add_subcommand("hilbert", "Hilbert series and function of the Stanley-Reisner ring");
  hilbert->add_option("--terms", cfg.k_max, "Highest degree k of the Hilbert function")->check(CLI::NonNegativeNumber);
  add_input(hilbert);

  auto* fvec = app.add_subcommand("fvector", "f-vector of the independence complex");
  add_input(fvec);
  auto* hvec = app.add_subcommand("hvector", "h-vector of the independence complex");
  add_input(hvec);
  auto* betti = app.add_subcommand("betti", "Betti table via Hochster's formula");
  add_input(betti);

  std::string out_dir;
  auto* deck_cmd = app.add_subcommand("deck", "Write the vertex-deleted cards as JSON files");
  add_input(deck_cmd);
  deck_cmd->add_option("--out-dir", out_dir, "Directory for card_NN.json files")->required();

  std::string deck_dir;
  std::string target;
  auto* recon = app.add_subcommand("reconstruct", "Rebuild an invariant from a deck directory");
  recon->add_option("--deck", deck_dir, "Directory of card_NN.json files")->required();
  recon->add_option("--target", target, "S, P, fvector, hilbert or betti")
      ->required()
      ->check(CLI::IsMember({"S", "P", "fvector", "hilbert", "betti"}));
  recon->add_option("--terms", cfg.k_max, "Highest degree for --target hilbert")->check(CLI::NonNegativeNumber);

  std::string identity = "all";
  std::string corpus;
  auto* verify = app.add_subcommand("verify", "Check the polynomial and algebraic identities");
  std::vector<std::string> identity_choices = identity_ids();
  identity_choices.push_back("all");
  verify->add_option("--identity", identity, "Identity id or 'all'")->check(CLI::IsMember(identity_choices));
  auto* verify_input = verify->add_option("--input,-i", cfg.input, "Hypergraph file");
  auto* verify_corpus = verify->add_option("--corpus", corpus, "Directory of hypergraph files");
  verify_input->excludes(verify_corpus);
  verify->callback([&] {
    if (cfg.input.empty() && corpus.empty()) throw CLI::ValidationError("verify needs --input or --corpus");
  });

  auto* report = app.add_subcommand("report", "Every invariant of one hypergraph as JSON");
  report->add_option("--terms", cfg.k_max, "Highest Hilbert-function degree")->check(CLI::NonNegativeNumber);
  add_input(report);

  std::vector<const char*> argv{"hgpoly"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (compute->parsed()) return cmd_compute(cfg, poly, out);
    if (hilbert->parsed()) return cmd_hilbert(cfg, out);
    if (fvec->parsed()) return cmd_fvector(cfg, out);
    if (hvec->parsed()) return cmd_hvector(cfg, out);
    if (betti->parsed()) return cmd_betti(cfg, out);
    if (deck_cmd->parsed()) return cmd_deck(cfg, out_dir, out);
    if (recon->parsed()) return cmd_reconstruct(cfg, deck_dir, target, out);
    if (verify->parsed()) return cmd_verify(cfg, identity, corpus, out);
    if (report->parsed()) return cmd_report(cfg, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  }
  return kExitInputError;
}

}  // namespace hgpoly
