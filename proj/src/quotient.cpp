#include "qcube/quotient.hpp"

#include <algorithm>
#include <bit>

#include "qcube/error.hpp"

namespace qcube {

QuotientGraph build_quotient(const CubeGroup& k) {
  const int n = k.dimension();
  if (n > kMaxQuotientDimension) {
    throw Error(ErrorCode::DimensionTooLarge,
                "quotients are limited to n <= 20 (got " + std::to_string(n) + ")");
  }
  QuotientGraph q;
  q.group_ = k;
  const std::uint32_t size = std::uint32_t{1} << n;
  q.orbit_index_.assign(size, -1);
  const auto& elements = k.elements();
  for (std::uint32_t v = 0; v < size; ++v) {
    if (q.orbit_index_[v] >= 0) continue;
    const int id = static_cast<int>(q.reps_.size());
    q.reps_.push_back(v);
    for (const auto& g : elements) q.orbit_index_[g.act_bits(v)] = id;
  }

  // Elements of K are cube automorphisms, so the orbits adjacent to an orbit
  // are already visible from its representative.
  std::vector<std::vector<int>> adj(q.reps_.size());
  std::vector<std::string> labels;
  labels.reserve(q.reps_.size());
  for (std::size_t id = 0; id < q.reps_.size(); ++id) {
    const std::uint32_t r = q.reps_[id];
    for (int i = 0; i < n; ++i) {
      const int other = q.orbit_index_[r ^ (std::uint32_t{1} << i)];
      if (other != static_cast<int>(id)) adj[id].push_back(other);
    }
    labels.push_back(BitVector(n, r).to_string());
  }
  q.graph_ = SimpleGraph::from_adjacency(std::move(adj), std::move(labels));
  return q;
}

int natural_map(const QuotientGraph& q, const BitVector& v) {
  if (v.dimension() != q.dimension()) {
    throw Error(ErrorCode::DimensionMismatch, "vertex dimension differs from quotient");
  }
  return q.orbit_index()[v.bits()];
}

std::vector<int> sphere(const QuotientGraph& q, int base, int l) {
  if (l < 0) throw Error(ErrorCode::InvalidArgument, "negative radius");
  return sphere(q.graph(), base, l);
}

std::vector<int> weight_shell(const QuotientGraph& q, std::uint32_t x, int l) {
  const int n = q.dimension();
  std::vector<int> out;
  const std::uint32_t size = std::uint32_t{1} << n;
  for (std::uint32_t e = 0; e < size; ++e) {
    if (std::popcount(e) == l) out.push_back(q.orbit_index()[x ^ e]);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace qcube
