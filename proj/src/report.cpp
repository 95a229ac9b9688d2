#include "hgpoly/report.hpp"

#include <algorithm>
#include <functional>

#include "hgpoly/enumerate.hpp"
#include "hgpoly/error.hpp"

namespace hgpoly {

json betti_to_json(const BettiTable& table, const std::vector<std::string>& labels) {
  json multigraded = json::array();
  for (const auto& [key, value] : table.multigraded) {
    json verts = json::array();
    for (VertexMask m = key.second; m != 0; m &= m - 1) verts.push_back(labels.at(static_cast<std::size_t>(std::countr_zero(m))));
    multigraded.push_back(json::array({key.first, std::move(verts), value}));
  }
  json graded = json::array();
  for (const auto& [key, value] : table.graded) graded.push_back(json::array({key.first, key.second, value}));
  return json{{"multigraded", std::move(multigraded)}, {"graded", std::move(graded)}};
}

json partial_betti_to_json(const PartialBettiTable& table, const std::vector<std::string>& labels) {
  BettiTable view;
  view.n = table.n;
  view.multigraded = table.multigraded;
  view.graded = table.graded;
  json out = betti_to_json(view, labels);
  out["unknown_total_degree"] = table.unknown_total_degree;
  return out;
}

std::string betti_to_text(const std::map<std::pair<std::size_t, std::size_t>, std::uint64_t>& graded) {
  std::size_t max_i = 0;
  std::size_t max_row = 0;
  for (const auto& [key, value] : graded) {
    max_i = std::max(max_i, key.first);
    if (key.second >= key.first) max_row = std::max(max_row, key.second - key.first);
  }
  std::vector<std::uint64_t> totals(max_i + 1, 0);
  for (const auto& [key, value] : graded) totals[key.first] += value;

  auto cell = [&](std::size_t row, std::size_t i) -> std::string {
    auto it = graded.find({i, row + i});
    return (it == graded.end() || it->second == 0) ? "." : std::to_string(it->second);
  };
  std::vector<std::size_t> width(max_i + 1);
  for (std::size_t i = 0; i <= max_i; ++i) {
    width[i] = std::max(std::to_string(i).size(), std::to_string(totals[i]).size());
    for (std::size_t row = 0; row <= max_row; ++row) width[i] = std::max(width[i], cell(row, i).size());
  }
  const std::size_t label_width = std::max<std::size_t>(6, std::to_string(max_row).size() + 1);
  auto pad_left = [](const std::string& s, std::size_t w) { return std::string(w > s.size() ? w - s.size() : 0, ' ') + s; };

  std::string out = std::string(label_width + 1, ' ');
  for (std::size_t i = 0; i <= max_i; ++i) out += (i ? " " : "") + pad_left(std::to_string(i), width[i]);
  out += "\n" + pad_left("total:", label_width) + " ";
  for (std::size_t i = 0; i <= max_i; ++i) out += (i ? " " : "") + pad_left(std::to_string(totals[i]), width[i]);
  out += "\n";
  for (std::size_t row = 0; row <= max_row; ++row) {
    out += pad_left(std::to_string(row) + ":", label_width) + " ";
    for (std::size_t i = 0; i <= max_i; ++i) out += (i ? " " : "") + pad_left(cell(row, i), width[i]);
    out += "\n";
  }
  return out;
}

json sr_invariants_to_json(const SRInvariants& inv) {
  return json{{"n", inv.n},
              {"f_vector", bigints_to_json(inv.f)},
              {"h_vector", bigints_to_json(inv.h)},
              {"krull_dim", inv.krull_dim},
              {"multiplicity", to_decimal(inv.multiplicity)},
              {"k_polynomial", inv.k_polynomial.to_string()},
              {"k_polynomial_coeffs", unipoly_to_json(inv.k_polynomial)},
              {"hilbert_series", "(" + inv.k_polynomial.to_string() + ") / (1 - t)^" + std::to_string(inv.n)},
              {"hilbert_series_reduced",
               "(" + inv.reduced_numerator.to_string() + ") / (1 - t)^" + std::to_string(inv.krull_dim)}};
}

json homological_to_json(const HomologicalInvariants& inv) {
  return json{{"projective_dimension", inv.projective_dimension},
              {"regularity_R", inv.regularity},
              {"regularity_I", inv.regularity + 1},
              {"depth", inv.depth}};
}

std::string_view to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::Passed: return "PASS";
    case CheckStatus::Failed: return "FAIL";
    case CheckStatus::Skipped: return "SKIP";
  }
  return "?";
}

const std::vector<std::string>& identity_ids() {
  static const std::vector<std::string> ids = {"2.1", "2.3", "3.2", "4.2", "4.3"};
  return ids;
}

namespace {

IdentityCheck run_one(const std::string& id, const std::string& name, const std::function<std::string()>& body) {
  IdentityCheck check{id, name, CheckStatus::Passed, {}};
  try {
    check.detail = body();
    if (!check.detail.empty()) check.status = CheckStatus::Failed;
  } catch (const Error& e) {
    const bool skip = e.code() == ErrorCode::LimitExceeded || e.code() == ErrorCode::TooFewVertices ||
                      e.code() == ErrorCode::NoEdges || e.code() == ErrorCode::SingleSpanningEdge;
    check.status = skip ? CheckStatus::Skipped : CheckStatus::Failed;
    check.detail = e.what();
  }
  return check;
}

}  // namespace

std::vector<IdentityCheck> run_identity_checks(const Hypergraph& h, const std::string& which, const Limits& limits,
                                               ExecPolicy exec) {
  const auto& ids = identity_ids();
  if (which != "all" && std::find(ids.begin(), ids.end(), which) == ids.end()) {
    throw Error(ErrorCode::ParseError, "unknown identity '" + which + "'");
  }
  auto wanted = [&](const char* id) { return which == "all" || which == id; };
  const std::size_t n = h.num_vertices();
  std::vector<IdentityCheck> out;

  if (wanted("2.1")) {
    out.push_back(run_one("2.1", "P/S transform", [&]() -> std::string {
      const BiPoly p = vertex_induced_poly(h, limits, exec);
      const BiPoly s = edge_induced_poly(h, limits, exec);
      if (p_to_s(p, n) != s) return "p_to_s(P) = " + p_to_s(p, n).to_string() + " but S = " + s.to_string();
      if (s_to_p(s, n) != p) return "s_to_p(S) = " + s_to_p(s, n).to_string() + " but P = " + p.to_string();
      return {};
    }));
  }
  if (wanted("2.3")) {
    out.push_back(run_one("2.3", "beta/theta binomial relation", [&]() -> std::string {
      const auto bad = find_coefficient_identity_violation(vertex_induced_poly(h, limits, exec),
                                                           edge_induced_poly(h, limits, exec), n);
      if (bad) return "fails at (i, j) = (" + std::to_string(bad->first) + ", " + std::to_string(bad->second) + ")";
      return {};
    }));
  }
  if (wanted("3.2")) {
    out.push_back(run_one("3.2", "Hilbert series from S(t, -1)", [&]() -> std::string {
      const UniPoly k = k_polynomial(h, limits, exec);
      const UniPoly via_f = face_numerator(f_vector(h, limits, exec), n);
      if (k != via_f) return "S(t, -1) = " + k.to_string() + " but the f-vector gives " + via_f.to_string();
      hilbert_function(h, 2 * n, limits, exec);  // throws InternalMismatch if the routes differ
      return {};
    }));
  }
  if (wanted("4.2")) {
    out.push_back(run_one("4.2", "deck derivative identity", [&]() -> std::string {
      if (!deck_derivative_identity_holds(h, PolyKind::EdgeInduced, limits, exec)) return "fails for S";
      if (!deck_derivative_identity_holds(h, PolyKind::VertexInduced, limits, exec)) return "fails for P";
      return {};
    }));
  }
  if (wanted("4.3")) {
    out.push_back(run_one("4.3", "alternating Betti sum", [&]() -> std::string {
      const UniPoly k = k_polynomial(h, limits, exec);
      const UniPoly alt = alternating_betti_poly(hochster_betti(h, limits, exec));
      if (k != alt) return "S(t, -1) = " + k.to_string() + " but the Betti table gives " + alt.to_string();
      return {};
    }));
  }
  return out;
}

namespace {

// Runs `section` and stores its JSON, or records why it was skipped.
json guarded(const std::function<json()>& section) {
  try {
    return section();
  } catch (const Error& e) {
    if (e.code() == ErrorCode::LimitExceeded || e.code() == ErrorCode::TooFewVertices ||
        e.code() == ErrorCode::NoEdges || e.code() == ErrorCode::SingleSpanningEdge) {
      return json{{"skipped", e.what()}};
    }
    throw;
  }
}

}  // namespace

json full_report(const Hypergraph& h, std::size_t k_max, const Limits& limits, ExecPolicy exec) {
  const std::size_t n = h.num_vertices();
  json doc;
  doc["hypergraph"] = hypergraph_to_json(h);
  doc["n"] = n;
  doc["m"] = h.num_edges();
  doc["components"] = connected_components(h).size();

  doc["polynomials"] = guarded([&] {
    const BiPoly s = edge_induced_poly(h, limits, exec);
    const BiPoly p = vertex_induced_poly(h, limits, exec);
    return json{{"S", s.to_string()},
                {"S_terms", bipoly_to_json(s)},
                {"P", p.to_string()},
                {"P_terms", bipoly_to_json(p)},
                {"independence", independence_poly(h, limits, exec).to_string()}};
  });

  doc["stanley_reisner"] = guarded([&] {
    json out = sr_invariants_to_json(sr_invariants(h, limits, exec));
    out["hilbert_function"] = bigints_to_json(hilbert_function(h, k_max, limits, exec));
    out["exterior_face_poly"] = exterior_face_poly(h, limits, exec).to_string();
    return out;
  });

  doc["betti"] = guarded([&] {
    const BettiTable table = hochster_betti(h, limits, exec);
    json out = betti_to_json(table, h.labels());
    out["table"] = betti_to_text(table.graded);
    out["invariants"] = homological_to_json(pd_reg_depth(table, n));
    const auto recovery = antidiagonal_recovery(table, k_polynomial(h, limits, exec));
    json rec{{"applicable", recovery.applicable}};
    if (recovery.violating_column) rec["violating_column"] = *recovery.violating_column;
    if (recovery.applicable) {
      json values = json::array();
      for (const auto& [j, c] : recovery.recovered) values.push_back(json::array({j, to_decimal(c)}));
      rec["recovered"] = std::move(values);
      rec["matches_table"] = recovery.matches_table;
    }
    out["antidiagonal_recovery"] = std::move(rec);
    const auto top = top_betti_report(h, limits, exec);
    out["top_degree"] = json{{"c_n", to_decimal(top.c_n)},
                             {"nonzero_degrees", top.nonzero_degrees},
                             {"determined", top.determined},
                             {"pd_reg_depth_reconstructible", top.homological_invariants_reconstructible}};
    return out;
  });

  doc["reconstruction"] = guarded([&] {
    check_reconstructible(h);
    const Deck d = deck(h);
    const auto s_cards = card_polys(d, PolyKind::EdgeInduced, limits, exec);
    const auto p_cards = card_polys(d, PolyKind::VertexInduced, limits, exec);
    json out;
    out["S_matches"] = reconstruct_S(s_cards, n) == edge_induced_poly(h, limits, exec);
    out["P_matches"] = reconstruct_P(p_cards, n) == vertex_induced_poly(h, limits, exec);
    out["f_vector_matches"] = reconstruct_f_vector(d, limits, exec) == f_vector(h, limits, exec);
    out["hilbert_matches"] = reconstruct_hilbert(d, k_max, limits, exec) == hilbert_function(h, k_max, limits, exec);
    out["betti"] = guarded([&] {
      const auto partial = reconstruct_multigraded_betti(d, limits, exec);
      const auto full = hochster_betti(h, limits, exec);
      bool matches = true;
      std::size_t below_top = 0;
      for (const auto& [key, value] : full.multigraded) {
        if (static_cast<std::size_t>(popcount(key.second)) < n) {
          ++below_top;
          auto it = partial.multigraded.find(key);
          matches = matches && it != partial.multigraded.end() && it->second == value;
        }
      }
      matches = matches && partial.multigraded.size() == below_top;
      return json{{"multigraded_matches", matches}, {"table", partial_betti_to_json(partial, h.labels())}};
    });
    return out;
  });

  json checks = json::array();
  for (const auto& c : run_identity_checks(h, "all", limits, exec)) {
    checks.push_back(json{{"id", c.id}, {"name", c.name}, {"status", to_string(c.status)}, {"detail", c.detail}});
  }
  doc["identities"] = std::move(checks);
  return doc;
}

}  // namespace hgpoly
