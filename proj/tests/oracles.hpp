#pragma once

// Slow, independent reference computations used to check the library.
// Nothing here calls into the library's algorithms beyond the data types.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "qcube/cube_symmetry.hpp"
#include "qcube/graph.hpp"

namespace oracle {

/// The vertex map x -> x^g computed bit by bit from the definition.
inline std::vector<std::uint32_t> vertex_map(const qcube::CubeAutomorphism& g) {
  const int n = g.dimension();
  std::vector<std::uint32_t> out(std::size_t{1} << n);
  for (std::uint32_t v = 0; v < out.size(); ++v) {
    std::uint32_t image = 0;
    for (int i = 0; i < n; ++i) {
      if ((v >> i) & 1u) image |= std::uint32_t{1} << g.perm()[i];
    }
    out[v] = image ^ g.translation().bits();
  }
  return out;
}

inline int element_min_distance(const qcube::CubeAutomorphism& g) {
  const auto map = vertex_map(g);
  int best = g.dimension() + 1;
  for (std::uint32_t v = 0; v < map.size(); ++v) {
    best = std::min(best, std::popcount(v ^ map[v]));
  }
  return best;
}

/// Closure by repeated products of vertex maps until nothing new appears.
inline std::set<std::vector<std::uint32_t>> closure(
    int n, const std::vector<qcube::CubeAutomorphism>& gens) {
  std::vector<std::uint32_t> id(std::size_t{1} << n);
  std::iota(id.begin(), id.end(), 0u);
  std::set<std::vector<std::uint32_t>> seen{id};
  std::vector<std::vector<std::uint32_t>> frontier{id};
  std::vector<std::vector<std::uint32_t>> gen_maps;
  for (const auto& g : gens) gen_maps.push_back(vertex_map(g));
  while (!frontier.empty()) {
    std::vector<std::vector<std::uint32_t>> next;
    for (const auto& a : frontier) {
      for (const auto& b : gen_maps) {
        std::vector<std::uint32_t> c(a.size());
        for (std::size_t v = 0; v < a.size(); ++v) c[v] = b[a[v]];
        if (seen.insert(c).second) next.push_back(std::move(c));
      }
    }
    frontier = std::move(next);
  }
  return seen;
}

/// Minimum over all non-identity vertex maps and vertices, or -1 for the
/// trivial group.
inline int min_distance(const std::set<std::vector<std::uint32_t>>& group) {
  int best = -1;
  for (const auto& m : group) {
    bool identity = true;
    int here = 64;
    for (std::uint32_t v = 0; v < m.size(); ++v) {
      if (m[v] != v) identity = false;
      here = std::min(here, std::popcount(v ^ m[v]));
    }
    if (!identity && (best < 0 || here < best)) best = here;
  }
  return best;
}

/// Every element of Aut(Q_n) as a vertex map, from explicit signed
/// coordinate permutations.
inline std::vector<std::vector<std::uint32_t>> all_cube_maps(int n) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<std::uint32_t>> out;
  do {
    for (std::uint32_t y = 0; y < (1u << n); ++y) {
      std::vector<std::uint32_t> m(std::size_t{1} << n);
      for (std::uint32_t v = 0; v < m.size(); ++v) {
        std::uint32_t image = 0;
        for (int i = 0; i < n; ++i) {
          if ((v >> i) & 1u) image |= 1u << perm[i];
        }
        m[v] = image ^ y;
      }
      out.push_back(std::move(m));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

/// |{g in ambient : g^{-1} K g = K}| by conjugating every element of K.
inline std::uint64_t normalizer_order(int n,
                                      const std::set<std::vector<std::uint32_t>>& k,
                                      bool even_only) {
  std::uint64_t count = 0;
  for (const auto& g : all_cube_maps(n)) {
    if (even_only && std::popcount(g[0]) % 2 != 0) continue;
    std::vector<std::uint32_t> inv(g.size());
    for (std::uint32_t v = 0; v < g.size(); ++v) inv[g[v]] = v;
    bool ok = true;
    for (const auto& h : k) {
      std::vector<std::uint32_t> c(h.size());
      for (std::uint32_t v = 0; v < h.size(); ++v) c[v] = g[h[inv[v]]];
      if (!k.count(c)) {
        ok = false;
        break;
      }
    }
    if (ok) ++count;
  }
  return count;
}

/// All-pairs distances by repeated BFS over an adjacency matrix.
inline std::vector<std::vector<int>> distance_matrix(const qcube::SimpleGraph& g) {
  const int n = g.vertex_count();
  std::vector<std::vector<int>> d(n, std::vector<int>(n, -1));
  for (int s = 0; s < n; ++s) {
    d[s][s] = 0;
    for (int step = 0; step < n; ++step) {
      for (int u = 0; u < n; ++u) {
        if (d[s][u] != step) continue;
        for (int w = 0; w < n; ++w) {
          if (d[s][w] < 0 && g.adjacent(u, w)) d[s][w] = step + 1;
        }
      }
    }
  }
  return d;
}

/// Number of automorphisms by exhaustive backtracking with adjacency checks.
inline std::uint64_t count_automorphisms(const qcube::SimpleGraph& g) {
  const int n = g.vertex_count();
  std::vector<int> map(n, -1);
  std::vector<char> used(n, 0);
  std::uint64_t count = 0;
  std::function<void(int)> rec = [&](int v) {
    if (v == n) {
      ++count;
      return;
    }
    for (int w = 0; w < n; ++w) {
      if (used[w] || g.degree(w) != g.degree(v)) continue;
      bool ok = true;
      for (int u = 0; u < v && ok; ++u) {
        ok = g.adjacent(u, v) == g.adjacent(map[u], w);
      }
      if (!ok) continue;
      map[v] = w;
      used[w] = 1;
      rec(v + 1);
      used[w] = 0;
    }
  };
  rec(0);
  return count;
}

/// Isomorphism by trying every bijection; for graphs of at most ~9 vertices.
inline bool isomorphic_by_permutations(const qcube::SimpleGraph& a,
                                       const qcube::SimpleGraph& b) {
  const int n = a.vertex_count();
  if (b.vertex_count() != n || a.edge_count() != b.edge_count()) return false;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (int u = 0; u < n && ok; ++u) {
      for (int v = u + 1; v < n && ok; ++v) ok = a.adjacent(u, v) == b.adjacent(p[u], p[v]);
    }
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

/// Seeded random element (y, sigma) of Aut(Q_n).
inline qcube::CubeAutomorphism random_element(std::mt19937_64& rng, int n) {
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 0);
  std::shuffle(images.begin(), images.end(), rng);
  const std::uint32_t y = static_cast<std::uint32_t>(rng()) & qcube::low_mask(n);
  return {qcube::BitVector(n, y), qcube::Permutation(images)};
}

/// Seeded random involution (x, sigma) with sigma a product of disjoint
/// transpositions and x fixed by sigma.
inline qcube::CubeAutomorphism random_involution(std::mt19937_64& rng, int n) {
  while (true) {
    std::vector<int> pts(n);
    std::iota(pts.begin(), pts.end(), 0);
    std::shuffle(pts.begin(), pts.end(), rng);
    const int swaps = static_cast<int>(rng() % (n / 2 + 1));
    std::vector<int> images(n);
    std::iota(images.begin(), images.end(), 0);
    for (int s = 0; s < swaps; ++s) {
      images[pts[2 * s]] = pts[2 * s + 1];
      images[pts[2 * s + 1]] = pts[2 * s];
    }
    std::uint32_t x = 0;
    for (int i = 0; i < n; ++i) {
      const int j = images[i];
      if (j < i) continue;
      if (rng() & 1u) x |= (1u << i) | (1u << j);
    }
    qcube::CubeAutomorphism g(qcube::BitVector(n, x), qcube::Permutation(images));
    if (!g.is_identity()) return g;
  }
}

}  // namespace oracle
