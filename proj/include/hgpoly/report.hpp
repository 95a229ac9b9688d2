#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hgpoly/betti.hpp"
#include "hgpoly/hypergraph_io.hpp"
#include "hgpoly/reconstruct.hpp"
#include "hgpoly/sr_algebra.hpp"

namespace hgpoly {

/// {"multigraded": [[i, [verts], b], ...], "graded": [[i, j, b], ...]}
json betti_to_json(const BettiTable& table, const std::vector<std::string>& labels);
json partial_betti_to_json(const PartialBettiTable& table, const std::vector<std::string>& labels);

/// Macaulay2-style layout: columns are homological degrees i, rows are j - i.
std::string betti_to_text(const std::map<std::pair<std::size_t, std::size_t>, std::uint64_t>& graded);

json sr_invariants_to_json(const SRInvariants& inv);
json homological_to_json(const HomologicalInvariants& inv);

enum class CheckStatus { Passed, Failed, Skipped };
std::string_view to_string(CheckStatus status);

struct IdentityCheck {
  std::string id;
  std::string name;
  CheckStatus status = CheckStatus::Skipped;
  std::string detail;
};

/// Identity ids understood by run_identity_checks:
///   "2.1"  S = (1 - x)^n P(x / (1 - x), 1 + y) and its inverse
///   "2.3"  the binomial coefficient relation between beta_ij and theta_ij
///   "3.2"  S(t, -1) = sum f_{i-1} t^i (1 - t)^(n - i), and both Hilbert routes agree
///   "4.2"  the deck derivative identity for S and P
///   "4.3"  S(t, -1) = sum (-1)^i b_ij t^j
/// "all" runs every one of them.
const std::vector<std::string>& identity_ids();
std::vector<IdentityCheck> run_identity_checks(const Hypergraph& h, const std::string& which, const Limits& limits,
                                               ExecPolicy exec);

/// Every invariant of one hypergraph in one JSON document. Sections whose
/// size limits are exceeded carry {"skipped": reason} instead.
json full_report(const Hypergraph& h, std::size_t k_max, const Limits& limits, ExecPolicy exec);

}  // namespace hgpoly
