#include "qcube/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "qcube/error.hpp"
#include "qcube/iso_aut.hpp"

namespace qcube {

SimpleGraph::SimpleGraph(int vertex_count) {
  if (vertex_count < 0) {
    throw Error(ErrorCode::InvalidArgument, "negative vertex count");
  }
  adj_.resize(vertex_count);
}

SimpleGraph SimpleGraph::from_edges(int vertex_count,
                                    std::span<const std::pair<int, int>> edges,
                                    std::vector<std::string> labels) {
  std::vector<std::vector<int>> adj(vertex_count);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count) {
      throw Error(ErrorCode::InvalidArgument, "edge endpoint out of range");
    }
    if (u == v) throw Error(ErrorCode::InvalidArgument, "loops are not allowed");
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  return from_adjacency(std::move(adj), std::move(labels));
}

SimpleGraph SimpleGraph::from_adjacency(std::vector<std::vector<int>> adjacency,
                                        std::vector<std::string> labels) {
  SimpleGraph g;
  const int n = static_cast<int>(adjacency.size());
  if (!labels.empty() && static_cast<int>(labels.size()) != n) {
    throw Error(ErrorCode::InvalidArgument, "label count differs from vertex count");
  }
  for (int v = 0; v < n; ++v) {
    auto& list = adjacency[v];
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    for (int w : list) {
      if (w < 0 || w >= n) {
        throw Error(ErrorCode::InvalidArgument, "neighbour out of range");
      }
      if (w == v) throw Error(ErrorCode::InvalidArgument, "loops are not allowed");
    }
  }
  g.adj_ = std::move(adjacency);
  for (int v = 0; v < n; ++v) {
    for (int w : g.adj_[v]) {
      if (!g.adjacent(w, v)) {
        throw Error(ErrorCode::InvalidArgument, "adjacency is not symmetric");
      }
    }
  }
  g.labels_ = std::move(labels);
  return g;
}

std::size_t SimpleGraph::edge_count() const noexcept {
  std::size_t total = 0;
  for (const auto& list : adj_) total += list.size();
  return total / 2;
}

bool SimpleGraph::adjacent(int u, int v) const {
  const auto& list = adj_[u];
  return std::binary_search(list.begin(), list.end(), v);
}

std::vector<std::pair<int, int>> SimpleGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < vertex_count(); ++u) {
    for (int v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

SimpleGraph SimpleGraph::induced(std::span<const int> vertices) const {
  std::vector<int> position(vertex_count(), -1);
  for (std::size_t k = 0; k < vertices.size(); ++k) {
    position[vertices[k]] = static_cast<int>(k);
  }
  std::vector<std::vector<int>> adj(vertices.size());
  std::vector<std::string> labels;
  for (std::size_t k = 0; k < vertices.size(); ++k) {
    for (int w : adj_[vertices[k]]) {
      if (position[w] >= 0) adj[k].push_back(position[w]);
    }
    if (has_labels()) labels.push_back(labels_[vertices[k]]);
  }
  return from_adjacency(std::move(adj), std::move(labels));
}

SimpleGraph SimpleGraph::relabeled(std::span<const int> perm) const {
  const int n = vertex_count();
  std::vector<std::vector<int>> adj(n);
  std::vector<std::string> labels(has_labels() ? n : 0);
  for (int v = 0; v < n; ++v) {
    for (int w : adj_[v]) adj[perm[v]].push_back(perm[w]);
    if (has_labels()) labels[perm[v]] = labels_[v];
  }
  return from_adjacency(std::move(adj), std::move(labels));
}

// ---------------------------------------------------------------------------
// Families

SimpleGraph hypercube(int n) {
  if (n < 0 || n > 24) throw Error(ErrorCode::BadDimension, "cube dimension out of range");
  const int size = 1 << n;
  std::vector<std::vector<int>> adj(size);
  for (int v = 0; v < size; ++v) {
    for (int i = 0; i < n; ++i) adj[v].push_back(v ^ (1 << i));
  }
  return SimpleGraph::from_adjacency(std::move(adj));
}

SimpleGraph complete_graph(int n) {
  std::vector<std::vector<int>> adj(n);
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (u != v) adj[u].push_back(v);
    }
  }
  return SimpleGraph::from_adjacency(std::move(adj));
}

SimpleGraph cycle_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return SimpleGraph::from_edges(n, edges);
}

SimpleGraph path_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return SimpleGraph::from_edges(n, edges);
}

SimpleGraph complement(const SimpleGraph& g) {
  const int n = g.vertex_count();
  std::vector<std::vector<int>> adj(n);
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (u != v && !g.adjacent(u, v)) adj[u].push_back(v);
    }
  }
  return SimpleGraph::from_adjacency(std::move(adj), g.labels());
}

SimpleGraph triangular_graph(int n) {
  if (n < 2) throw Error(ErrorCode::BadDimension, "triangular graph needs n >= 2");
  std::vector<std::pair<int, int>> pairs;
  std::vector<std::string> labels;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      pairs.emplace_back(i, j);
      labels.push_back("{" + std::to_string(i) + "," + std::to_string(j) + "}");
    }
  }
  const int count = static_cast<int>(pairs.size());
  std::vector<std::vector<int>> adj(count);
  for (int a = 0; a < count; ++a) {
    for (int b = 0; b < count; ++b) {
      if (a == b) continue;
      const auto [i, j] = pairs[a];
      const auto [k, l] = pairs[b];
      const int common = (i == k) + (i == l) + (j == k) + (j == l);
      if (common == 1) adj[a].push_back(b);
    }
  }
  return SimpleGraph::from_adjacency(std::move(adj), std::move(labels));
}

// ---------------------------------------------------------------------------
// Distances

std::vector<int> bfs_distances(const SimpleGraph& g, int source) {
  std::vector<int> dist(g.vertex_count(), -1);
  std::vector<int> queue{source};
  dist[source] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int u = queue[head];
    for (int w : g.neighbors(u)) {
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

std::vector<int> connected_components(const SimpleGraph& g) {
  std::vector<int> comp(g.vertex_count(), -1);
  int next = 0;
  for (int s = 0; s < g.vertex_count(); ++s) {
    if (comp[s] >= 0) continue;
    const auto dist = bfs_distances(g, s);
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (dist[v] >= 0) comp[v] = next;
    }
    ++next;
  }
  return comp;
}

bool is_connected(const SimpleGraph& g) {
  if (g.vertex_count() == 0) return true;
  const auto dist = bfs_distances(g, 0);
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

std::optional<int> regular_valency(const SimpleGraph& g) {
  if (g.vertex_count() == 0) return std::nullopt;
  const int k = g.degree(0);
  for (int v = 1; v < g.vertex_count(); ++v) {
    if (g.degree(v) != k) return std::nullopt;
  }
  return k;
}

std::vector<int> sphere(const SimpleGraph& g, int base, int l) {
  const auto dist = bfs_distances(g, base);
  std::vector<int> out;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (dist[v] == l) out.push_back(v);
  }
  return out;
}

std::string ParamValue::to_string() const {
  switch (kind) {
    case Kind::Value:
      return std::to_string(value);
    case Kind::Undefined:
      return "undefined";
    case Kind::Vacuous:
      return "vacuous";
  }
  return "";
}

namespace {

void observe(ParamValue& p, int value) {
  if (p.kind == ParamValue::Kind::Vacuous) {
    p.kind = ParamValue::Kind::Value;
    p.value = value;
  } else if (p.kind == ParamValue::Kind::Value && p.value != value) {
    p.kind = ParamValue::Kind::Undefined;
  }
}

}  // namespace

std::vector<LocalParams> local_params(const SimpleGraph& g, int max_level) {
  if (g.vertex_count() == 0) {
    throw Error(ErrorCode::InvalidArgument, "local parameters of the empty graph");
  }
  const auto valency = regular_valency(g);
  std::vector<LocalParams> params(max_level + 1);
  for (int i = 0; i <= max_level; ++i) {
    params[i].level = i;
    params[i].is_regular = valency.has_value();
    params[i].valency = valency;
  }
  for (int u = 0; u < g.vertex_count(); ++u) {
    const auto dist = bfs_distances(g, u);
    for (int v = 0; v < g.vertex_count(); ++v) {
      const int i = dist[v];
      if (i < 0 || i > max_level) continue;
      int c = 0;
      int a = 0;
      for (int w : g.neighbors(v)) {
        if (dist[w] == i - 1) ++c;
        if (dist[w] == i) ++a;
      }
      observe(params[i].c, c);
      observe(params[i].a, a);
    }
  }
  return params;
}

bool is_rectagraph(const SimpleGraph& g) {
  if (g.vertex_count() == 0 || !is_connected(g)) return false;
  const auto p = local_params(g, 2);
  return p[1].a.equals(0) && p[2].c.equals(2);
}

bool has_cube_like_params(const SimpleGraph& g, int n, int l) {
  const auto valency = regular_valency(g);
  if (!valency || *valency != n) return false;
  const auto p = local_params(g, l);
  for (int i = 1; i <= l; ++i) {
    if (!p[i - 1].a.equals(0) || !p[i].c.equals(i)) return false;
  }
  return true;
}

SimpleGraph distance2_graph(const SimpleGraph& g) {
  const int n = g.vertex_count();
  std::vector<std::vector<int>> adj(n);
  std::vector<int> mark(n, -1);
  for (int u = 0; u < n; ++u) {
    mark[u] = u;
    for (int w : g.neighbors(u)) mark[w] = u;
    for (int w : g.neighbors(u)) {
      for (int x : g.neighbors(w)) {
        if (mark[x] != u) {
          mark[x] = u;
          adj[u].push_back(x);
        }
      }
    }
  }
  return SimpleGraph::from_adjacency(std::move(adj), g.labels());
}

std::variant<Bipartition, OddClosedWalk> bipartite_parts(const SimpleGraph& g) {
  if (!is_connected(g)) {
    throw Error(ErrorCode::NotConnected, "bipartition needs a connected graph");
  }
  const int n = g.vertex_count();
  std::vector<int> dist(n, -1);
  std::vector<int> parent(n, -1);
  std::vector<int> queue;
  if (n > 0) {
    queue.push_back(0);
    dist[0] = 0;
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int u = queue[head];
    for (int w : g.neighbors(u)) {
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        parent[w] = u;
        queue.push_back(w);
      } else if (dist[w] % 2 == dist[u] % 2) {
        // root -> u -> w -> root has odd length.
        OddClosedWalk odd;
        for (int x = u; x >= 0; x = parent[x]) odd.walk.push_back(x);
        std::reverse(odd.walk.begin(), odd.walk.end());
        for (int x = w; x >= 0; x = parent[x]) odd.walk.push_back(x);
        return odd;
      }
    }
  }
  Bipartition parts;
  for (int v = 0; v < n; ++v) {
    (dist[v] % 2 == 0 ? parts.part0 : parts.part1).push_back(v);
  }
  return parts;
}

HalvedGraphs halved_graphs(const SimpleGraph& g) {
  auto parts = bipartite_parts(g);
  if (std::holds_alternative<OddClosedWalk>(parts)) {
    throw Error(ErrorCode::NotBipartite, "graph is not bipartite");
  }
  auto& bip = std::get<Bipartition>(parts);
  const SimpleGraph d2 = distance2_graph(g);
  HalvedGraphs out;
  out.first = d2.induced(bip.part0);
  out.second = d2.induced(bip.part1);
  out.first_vertices = std::move(bip.part0);
  out.second_vertices = std::move(bip.part1);
  return out;
}

SimpleGraph bipartite_double(const SimpleGraph& g) {
  const int n = g.vertex_count();
  std::vector<std::vector<int>> adj(2 * n);
  std::vector<std::string> labels;
  for (int u = 0; u < n; ++u) {
    for (int w : g.neighbors(u)) {
      adj[u].push_back(w + n);
      adj[u + n].push_back(w);
    }
  }
  if (g.has_labels()) {
    for (int a = 0; a < 2; ++a) {
      for (int u = 0; u < n; ++u) {
        labels.push_back(g.labels()[u] + "." + std::to_string(a));
      }
    }
  }
  return SimpleGraph::from_adjacency(std::move(adj), std::move(labels));
}

bool is_locally(const SimpleGraph& g, const SimpleGraph& target) {
  for (int u = 0; u < g.vertex_count(); ++u) {
    if (g.degree(u) != target.vertex_count()) return false;
    const auto nbrs = g.neighbors(u);
    const SimpleGraph local = g.induced(std::vector<int>(nbrs.begin(), nbrs.end()));
    if (local.edge_count() != target.edge_count()) return false;
    if (!are_isomorphic(local, target)) return false;
  }
  return true;
}

}  // namespace qcube
