#pragma once

// Shared helpers for the claim checks. Not installed.

#include <chrono>
#include <string>
#include <vector>

#include "qcube/covering.hpp"
#include "qcube/error.hpp"
#include "qcube/graph.hpp"
#include "qcube/iso_aut.hpp"
#include "qcube/quotient.hpp"
#include "qcube/verify.hpp"

namespace qcube::detail {

using json = nlohmann::ordered_json;

/// Counts grid cases and keeps the first few counterexamples.
class Tally {
 public:
  void pass() { ++checked_; }
  void skip() { ++skipped_; }
  void fail(json counterexample) {
    ++checked_;
    ++failed_;
    if (examples_.size() < 3) examples_.push_back(std::move(counterexample));
  }
  /// Records `ok` as a pass, otherwise `counterexample` as a failure.
  void expect(bool ok, const json& counterexample) {
    if (ok) {
      pass();
    } else {
      fail(counterexample);
    }
  }
  bool failed() const noexcept { return failed_ > 0; }

  /// Writes counts into `r.witnesses` and sets the status.
  void finish(ClaimReport& r) const {
    r.witnesses["cases_checked"] = checked_;
    r.witnesses["cases_skipped"] = skipped_;
    r.witnesses["cases_failed"] = failed_;
    if (failed_ > 0) {
      r.status = ClaimStatus::Fails;
      r.witnesses["counterexample"] = examples_.front();
      if (examples_.size() > 1) r.witnesses["more_counterexamples"] = examples_;
    } else {
      r.status = checked_ > 0 ? ClaimStatus::Holds : ClaimStatus::Skipped;
    }
  }

 private:
  int checked_ = 0;
  int skipped_ = 0;
  int failed_ = 0;
  std::vector<json> examples_;
};

inline CubeGroup single(const CubeAutomorphism& g) {
  const std::vector<CubeAutomorphism> gens = {g};
  return generate_group(g.dimension(), gens);
}

inline CubeGroup folded_group(int n) {
  return single(CubeAutomorphism::translation_by(BitVector::all_ones(n)));
}

/// {0, (x, (1 2))} with x = 1^n, or 1^{n-1}0 when `drop_last` is set.
inline CubeGroup transposition_group(int n, bool drop_last = false) {
  const std::uint32_t x = drop_last ? low_mask(n - 1) : low_mask(n);
  return single({BitVector(n, x), Permutation::from_cycles(n, {{0, 1}})});
}

inline json distance_json(const Distance& d) {
  if (d.is_infinite()) return "inf";
  return d.value();
}

/// Vertex v of Pi_2 adjacency check: every neighbourhood induces a copy of
/// `target`; returns the first vertex that fails, or -1.
inline int first_non_local_vertex(const SimpleGraph& g, const SimpleGraph& target) {
  for (int u = 0; u < g.vertex_count(); ++u) {
    const auto nbrs = g.neighbors(u);
    const SimpleGraph local = g.induced(std::vector<int>(nbrs.begin(), nbrs.end()));
    if (local.vertex_count() != target.vertex_count() ||
        local.edge_count() != target.edge_count() || !are_isomorphic(local, target)) {
      return u;
    }
  }
  return -1;
}

/// Groups with a large minimum distance that random sampling rarely hits.
std::vector<CubeGroup> featured_groups();

/// Uniformly random vertex permutation.
std::vector<int> random_relabeling(std::mt19937_64& rng, int n);

std::string to_string(const BigInt& v);

class Stopwatch {
 public:
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                     start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

}  // namespace qcube::detail
