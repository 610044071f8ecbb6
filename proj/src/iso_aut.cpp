#include "qcube/iso_aut.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

#include "qcube/error.hpp"

namespace qcube {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
  return splitmix64(h ^ (v + 0x632be59bd9b4e019ull + (h << 6) + (h >> 2)));
}

/// Vertex colouring whose colour numbers depend only on the isomorphism type
/// of (graph, individualised vertices), so two colourings with equal traces
/// can be matched cell by cell.
struct Coloring {
  std::vector<int> color;
  int num_colors = 0;
  std::uint64_t trace = 0;
};

class Refiner {
 public:
  explicit Refiner(const SimpleGraph& g) : g_(g), sig_(g.vertex_count()) {}

  Coloring unit() const {
    Coloring c;
    c.color.assign(g_.vertex_count(), 0);
    c.num_colors = g_.vertex_count() > 0 ? 1 : 0;
    c.trace = mix(0, static_cast<std::uint64_t>(g_.vertex_count()));
    return c;
  }

  void individualize(Coloring& c, int v) const {
    c.trace = mix(c.trace, 0xabcdef00ull + static_cast<std::uint64_t>(c.color[v]));
    c.color[v] = c.num_colors++;
  }

  /// Iterates (colour, multiset of neighbour colours) to a fixed point.
  void refine(Coloring& c) {
    const int n = g_.vertex_count();
    while (true) {
      for (int v = 0; v < n; ++v) {
        std::uint64_t h = 0;
        for (int w : g_.neighbors(v)) {
          h += splitmix64(static_cast<std::uint64_t>(c.color[w]) * 0x100000001b3ull + 17);
        }
        sig_[v] = {{c.color[v], splitmix64(h)}, v};
      }
      std::sort(sig_.begin(), sig_.end());
      int next = -1;
      for (int k = 0; k < n; ++k) {
        if (k == 0 || sig_[k].first != sig_[k - 1].first) {
          ++next;
          c.trace = mix(c.trace, static_cast<std::uint64_t>(sig_[k].first.first));
          c.trace = mix(c.trace, sig_[k].first.second);
        }
        c.trace = mix(c.trace, static_cast<std::uint64_t>(next));
        c.color[sig_[k].second] = next;
      }
      const int count = next + 1;
      if (count == c.num_colors) break;
      c.num_colors = count;
    }
  }

 private:
  const SimpleGraph& g_;
  std::vector<std::pair<std::pair<int, std::uint64_t>, int>> sig_;
};

/// First largest non-singleton colour, or -1 when the colouring is discrete.
int target_cell(const Coloring& c) {
  std::vector<int> size(c.num_colors, 0);
  for (int col : c.color) ++size[col];
  int best = -1;
  for (int col = 0; col < c.num_colors; ++col) {
    if (size[col] > 1 && (best < 0 || size[col] > size[best])) best = col;
  }
  return best;
}

std::vector<int> cell_members(const Coloring& c, int col) {
  std::vector<int> out;
  for (int v = 0; v < static_cast<int>(c.color.size()); ++v) {
    if (c.color[v] == col) out.push_back(v);
  }
  return out;
}

class PairSearch {
 public:
  PairSearch(const SimpleGraph& g, const SimpleGraph& h)
      : g_(g), h_(h), left_(g), right_(h) {}

  Refiner& left_refiner() { return left_; }
  Refiner& right_refiner() { return right_; }

  /// Extends matching equitable colourings to an isomorphism.
  std::optional<std::vector<int>> extend(const Coloring& left,
                                         const Coloring& right) {
    const int cell = target_cell(left);
    if (cell < 0) {
      std::vector<int> map(left.color.size());
      std::vector<int> by_color(right.num_colors);
      for (int w = 0; w < static_cast<int>(right.color.size()); ++w) {
        by_color[right.color[w]] = w;
      }
      for (int v = 0; v < static_cast<int>(left.color.size()); ++v) {
        map[v] = by_color[left.color[v]];
      }
      if (is_isomorphism(g_, h_, map)) return map;
      return std::nullopt;
    }
    const int v = cell_members(left, cell).front();
    Coloring next_left = left;
    left_.individualize(next_left, v);
    left_.refine(next_left);
    for (int w : cell_members(right, cell)) {
      Coloring next_right = right;
      right_.individualize(next_right, w);
      right_.refine(next_right);
      if (next_right.trace != next_left.trace ||
          next_right.num_colors != next_left.num_colors) {
        continue;
      }
      if (auto map = extend(next_left, next_right)) return map;
    }
    return std::nullopt;
  }

 private:
  const SimpleGraph& g_;
  const SimpleGraph& h_;
  Refiner left_;
  Refiner right_;
};

struct OrbitTracker {
  explicit OrbitTracker(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void add(const PointPerm& p) {
    for (std::size_t v = 0; v < p.size(); ++v) {
      int a = find(static_cast<int>(v));
      int b = find(p[v]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::vector<int> parent;
};

}  // namespace

bool is_isomorphism(const SimpleGraph& g, const SimpleGraph& h,
                    const std::vector<int>& map) {
  const int n = g.vertex_count();
  if (h.vertex_count() != n || static_cast<int>(map.size()) != n) return false;
  if (g.edge_count() != h.edge_count()) return false;
  std::vector<char> hit(n, 0);
  for (int v : map) {
    if (v < 0 || v >= n || hit[v]) return false;
    hit[v] = 1;
  }
  for (int u = 0; u < n; ++u) {
    if (g.degree(u) != h.degree(map[u])) return false;
    for (int w : g.neighbors(u)) {
      if (!h.adjacent(map[u], map[w])) return false;
    }
  }
  return true;
}

std::optional<std::vector<int>> are_isomorphic(const SimpleGraph& g,
                                               const SimpleGraph& h) {
  if (g.vertex_count() > kMaxIsomorphismVertices ||
      h.vertex_count() > kMaxIsomorphismVertices) {
    throw Error(ErrorCode::TooLarge, "isomorphism test limited to 2000 vertices");
  }
  if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count()) {
    return std::nullopt;
  }
  PairSearch search(g, h);
  Coloring left = search.left_refiner().unit();
  Coloring right = search.right_refiner().unit();
  search.left_refiner().refine(left);
  search.right_refiner().refine(right);
  if (left.trace != right.trace || left.num_colors != right.num_colors) {
    return std::nullopt;
  }
  return search.extend(left, right);
}

PermGroupOnGraph automorphism_group(const SimpleGraph& g) {
  const int n = g.vertex_count();
  if (n > kMaxAutomorphismVertices) {
    throw Error(ErrorCode::TooLarge, "automorphism search limited to 512 vertices");
  }
  PermGroupOnGraph result;
  result.degree = n;
  if (n == 0) return result;

  // Left-most path of the search tree: colourings with b_0, ..., b_{d-1}
  // individualised.
  PairSearch search(g, g);
  Refiner& refiner = search.left_refiner();
  std::vector<Coloring> path;
  std::vector<int> base;
  std::vector<int> cells;
  Coloring current = refiner.unit();
  refiner.refine(current);
  while (true) {
    path.push_back(current);
    const int cell = target_cell(current);
    if (cell < 0) break;
    const int b = cell_members(current, cell).front();
    base.push_back(b);
    cells.push_back(cell);
    refiner.individualize(current, b);
    refiner.refine(current);
  }

  // Deepest level first, so orbit pruning at shallow levels sees every
  // generator of the pointwise stabiliser below it.
  for (int d = static_cast<int>(base.size()) - 1; d >= 0; --d) {
    const int b = base[d];
    const Coloring& next_left = path[d + 1];
    std::vector<int> failed;
    for (int w : cell_members(path[d], cells[d])) {
      if (w == b) continue;
      OrbitTracker orbits(n);
      for (const auto& gen : result.generators) orbits.add(gen);
      if (orbits.find(w) == orbits.find(b)) continue;
      if (std::any_of(failed.begin(), failed.end(),
                      [&](int f) { return orbits.find(f) == orbits.find(w); })) {
        continue;
      }
      Coloring right = path[d];
      search.right_refiner().individualize(right, w);
      search.right_refiner().refine(right);
      std::optional<std::vector<int>> map;
      if (right.trace == next_left.trace && right.num_colors == next_left.num_colors) {
        map = search.extend(next_left, right);
      }
      if (map) {
        result.generators.push_back(std::move(*map));
      } else {
        failed.push_back(w);
      }
    }
  }

  result.order = PermGroup(n, result.generators).order();
  return result;
}

std::vector<int> automorphism_orbits(const SimpleGraph& g) {
  const auto aut = automorphism_group(g);
  return PermGroup(aut.degree, aut.generators).orbit_ids();
}

bool is_vertex_transitive(const SimpleGraph& g) {
  const auto orbits = automorphism_orbits(g);
  return std::all_of(orbits.begin(), orbits.end(), [](int o) { return o == 0; });
}

}  // namespace qcube
