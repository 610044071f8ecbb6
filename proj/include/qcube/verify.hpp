#pragma once

#include <cstdint>
#include <json.hpp>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qcube/cube_symmetry.hpp"

namespace qcube {

enum class ClaimStatus { Holds, Fails, Skipped };

std::string_view status_name(ClaimStatus s);

/// Outcome of one claim check. A FAILS report always carries a
/// "counterexample" entry among its witnesses.
struct ClaimReport {
  std::string claim_id;
  ClaimStatus status = ClaimStatus::Skipped;
  nlohmann::ordered_json parameters = nlohmann::ordered_json::object();
  nlohmann::ordered_json witnesses = nlohmann::ordered_json::object();
  std::optional<double> runtime_ms;
};

struct ClaimInfo {
  std::string id;
  std::string statement;
};

/// Every claim the suite can check, sorted by id.
const std::vector<ClaimInfo>& claim_registry();

struct VerifyOptions {
  std::uint64_t seed = 1;
  /// Random subgroups per dimension 6..10 in the default grid.
  int random_per_dimension = 20;
  bool timing = false;
};

/// The sampling grid: every order-2 subgroup of Aut(Q_n) for 2 <= n <= 5,
/// then `random_per_dimension` seeded subgroups of order 2, 4 or 8 (cycling)
/// for each n in 6..10.
std::vector<CubeGroup> default_grid(const VerifyOptions& options);

/// Seeded subgroup of exact order `order` (a power of two), generated by
/// elements (y, sigma) with sigma a product of disjoint transpositions.
CubeGroup random_two_group(std::mt19937_64& rng, int n, std::uint64_t order);

/// Seeded involution (x, sigma) with sigma a product of disjoint
/// transpositions and x constant on each transposition.
CubeAutomorphism random_involution(std::mt19937_64& rng, int n);

/// {"n", "order", "generators"} with generators in group-file syntax.
nlohmann::ordered_json describe_group(const CubeGroup& k);

/// (i) (Q_n)_K regular of valency n with a_{i-1} = 0, c_i = i for i <= l,
/// against (ii) d_K >= 2l+1. HOLDS iff they agree.
ClaimReport check_theorem_class_dist(const CubeGroup& k, int l);

/// Both halves of (Q_n)_K connected and locally T_n.
/// Throws PreconditionViolated unless K is even, d_K >= 7 and n >= 2.
ClaimReport check_main_even(const CubeGroup& k);

/// Bipartition iff even, with the weight-parity parts; for non-even K the
/// double is isomorphic to the even-part quotient, and for d_K >= 4 each
/// half of the double is isomorphic to the distance-2 graph.
/// Throws PreconditionViolated when d_K < 2.
ClaimReport check_even_lemma(const CubeGroup& k);

/// Records whether the halves are isomorphic, and asserts it when the
/// normalizer has a non-even element or n is odd. An unsupported normalizer
/// only drops the first assertion. Throws PreconditionViolated unless K is
/// even with d_K >= 2.
ClaimReport check_halved_iso(const CubeGroup& k);

/// Known names: exp-halved, K2, large, not-vt, lt-not-vt, valency-m,
/// small-n-halved. Throws UnknownExample.
ClaimReport run_example(std::string_view name, std::uint64_t seed);

/// Runs one registry claim over its grid. Throws UnknownClaim.
ClaimReport run_claim(std::string_view id, const VerifyOptions& options);

/// Runs claims in registry order ("all" expands to every claim); unknown
/// ids throw UnknownClaim before anything runs.
std::vector<ClaimReport> run_claims(std::span<const std::string> ids,
                                    const VerifyOptions& options);

nlohmann::ordered_json report_to_json(const ClaimReport& r);
/// Pretty-printed JSON array, newline terminated.
std::string reports_to_json(std::span<const ClaimReport> reports);

}  // namespace qcube
