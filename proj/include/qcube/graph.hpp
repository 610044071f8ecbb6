#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace qcube {

/// Finite simple undirected graph with sorted adjacency lists.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  explicit SimpleGraph(int vertex_count);

  /// Loops are rejected; repeated edges collapse.
  static SimpleGraph from_edges(int vertex_count,
                                std::span<const std::pair<int, int>> edges,
                                std::vector<std::string> labels = {});
  /// Lists are sorted and deduplicated; asymmetric input is rejected.
  static SimpleGraph from_adjacency(std::vector<std::vector<int>> adjacency,
                                    std::vector<std::string> labels = {});

  int vertex_count() const noexcept { return static_cast<int>(adj_.size()); }
  std::size_t edge_count() const noexcept;
  std::span<const int> neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  bool adjacent(int u, int v) const;

  bool has_labels() const noexcept { return !labels_.empty(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  /// Edges {u, v} with u < v in lexicographic order.
  std::vector<std::pair<int, int>> edges() const;

  /// Subgraph induced on `vertices`; vertex k of the result is vertices[k].
  SimpleGraph induced(std::span<const int> vertices) const;
  /// Copy with vertex v renamed to perm[v].
  SimpleGraph relabeled(std::span<const int> perm) const;

  friend bool operator==(const SimpleGraph& a, const SimpleGraph& b) {
    return a.adj_ == b.adj_;
  }

 private:
  std::vector<std::vector<int>> adj_;
  std::vector<std::string> labels_;
};

SimpleGraph hypercube(int n);
SimpleGraph complete_graph(int n);
SimpleGraph cycle_graph(int n);
SimpleGraph path_graph(int n);
SimpleGraph complement(const SimpleGraph& g);
/// T_n on the 2-subsets of {1..n}, labelled "{i,j}", in lexicographic order.
SimpleGraph triangular_graph(int n);

/// Breadth-first distances from `source`; -1 marks unreachable vertices.
std::vector<int> bfs_distances(const SimpleGraph& g, int source);
/// Component id per vertex, numbered by smallest member.
std::vector<int> connected_components(const SimpleGraph& g);
bool is_connected(const SimpleGraph& g);
/// The common valency, or nullopt for irregular graphs.
std::optional<int> regular_valency(const SimpleGraph& g);
/// Sorted vertex set at distance exactly `l` from `base`.
std::vector<int> sphere(const SimpleGraph& g, int base, int l);

/// A parameter that may vary over pairs, or have no pairs at all.
struct ParamValue {
  enum class Kind { Value, Undefined, Vacuous };
  Kind kind = Kind::Vacuous;
  int value = 0;

  /// Vacuous values satisfy every equation.
  bool equals(int v) const noexcept {
    return kind == Kind::Vacuous || (kind == Kind::Value && value == v);
  }
  /// "undefined", "vacuous" or the number.
  std::string to_string() const;
};

/// c_i and a_i over all pairs at distance i.
struct LocalParams {
  int level = 0;
  ParamValue c;
  ParamValue a;
  bool is_regular = false;
  std::optional<int> valency;
};

/// Levels 0..max_level.
std::vector<LocalParams> local_params(const SimpleGraph& g, int max_level);

/// Connected, a_1 = 0 and c_2 = 2.
bool is_rectagraph(const SimpleGraph& g);

/// Regular of valency n with a_{i-1} = 0 and c_i = i for 1 <= i <= l.
bool has_cube_like_params(const SimpleGraph& g, int n, int l);

SimpleGraph distance2_graph(const SimpleGraph& g);

struct Bipartition {
  std::vector<int> part0;  // contains vertex 0
  std::vector<int> part1;
};
/// Closed walk of odd length, first vertex repeated at the end.
struct OddClosedWalk {
  std::vector<int> walk;
};

/// Two-colouring of a connected graph, or an odd closed walk.
/// Throws NotConnected.
std::variant<Bipartition, OddClosedWalk> bipartite_parts(const SimpleGraph& g);

struct HalvedGraphs {
  SimpleGraph first;   // the half through vertex 0
  SimpleGraph second;
  std::vector<int> first_vertices;
  std::vector<int> second_vertices;
};

/// Components of the distance-2 graph of a connected bipartite graph.
/// Throws NotBipartite or NotConnected.
HalvedGraphs halved_graphs(const SimpleGraph& g);

/// Vertex (u, a) is numbered u + a * |V|.
SimpleGraph bipartite_double(const SimpleGraph& g);

/// True iff every neighbourhood induces a graph isomorphic to `target`.
bool is_locally(const SimpleGraph& g, const SimpleGraph& target);

}  // namespace qcube
