#pragma once

#include <cstdint>
#include <vector>

#include "qcube/cube_symmetry.hpp"
#include "qcube/graph.hpp"

namespace qcube {

inline constexpr int kMaxQuotientDimension = 20;

/// The normal quotient (Q_n)_K: one vertex per K-orbit on F_2^n.
class QuotientGraph {
 public:
  int dimension() const noexcept { return group_.dimension(); }
  const CubeGroup& group() const noexcept { return group_; }
  /// Numerically smallest member of each orbit, ascending; orbit ids follow
  /// this order.
  const std::vector<std::uint32_t>& representatives() const noexcept {
    return reps_;
  }
  /// Orbit id of every cube vertex, indexed by the vertex bits.
  const std::vector<int>& orbit_index() const noexcept { return orbit_index_; }
  int orbit_of(std::uint32_t v) const { return orbit_index_.at(v); }
  int orbit_count() const noexcept { return static_cast<int>(reps_.size()); }
  /// Vertex labels are the representatives' bit strings.
  const SimpleGraph& graph() const noexcept { return graph_; }

 private:
  friend QuotientGraph build_quotient(const CubeGroup& k);

  CubeGroup group_;
  std::vector<std::uint32_t> reps_;
  std::vector<int> orbit_index_;
  SimpleGraph graph_;
};

/// Sweeps vertices in ascending order, marking whole K-orbits. K need not be
/// semiregular; loops from collapsed edges are dropped.
/// Throws DimensionTooLarge for n > 20.
QuotientGraph build_quotient(const CubeGroup& k);

/// x -> x^K. Throws DimensionMismatch.
int natural_map(const QuotientGraph& q, const BitVector& v);

/// Orbit ids at distance exactly l from `base`, ascending.
std::vector<int> sphere(const QuotientGraph& q, int base, int l);

/// {(x + e)^K : wt(e) = l}, ascending.
std::vector<int> weight_shell(const QuotientGraph& q, std::uint32_t x, int l);

}  // namespace qcube
