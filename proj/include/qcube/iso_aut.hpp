#pragma once

#include <optional>
#include <vector>

#include "qcube/graph.hpp"
#include "qcube/perm_group.hpp"

namespace qcube {

inline constexpr int kMaxIsomorphismVertices = 2000;
inline constexpr int kMaxAutomorphismVertices = 512;

/// Aut(G) as generators on the vertex set plus its exact order.
struct PermGroupOnGraph {
  int degree = 0;
  std::vector<PointPerm> generators;
  BigInt order = 1;
};

/// True iff `map` is a bijection V(g) -> V(h) preserving adjacency and
/// non-adjacency.
bool is_isomorphism(const SimpleGraph& g, const SimpleGraph& h,
                    const std::vector<int>& map);

/// A vertex bijection g -> h preserving adjacency, or nullopt.
/// Colour refinement by neighbour-colour multisets, then backtracking on the
/// first largest non-singleton cell. Throws TooLarge above 2000 vertices.
std::optional<std::vector<int>> are_isomorphic(const SimpleGraph& g,
                                               const SimpleGraph& h);

/// Generators of Aut(G) from the individualisation-refinement search, with
/// the order taken from a Schreier-Sims stabiliser chain on them.
/// Throws TooLarge above 512 vertices.
PermGroupOnGraph automorphism_group(const SimpleGraph& g);

/// Orbit id per vertex under the automorphism group.
std::vector<int> automorphism_orbits(const SimpleGraph& g);

bool is_vertex_transitive(const SimpleGraph& g);

}  // namespace qcube
