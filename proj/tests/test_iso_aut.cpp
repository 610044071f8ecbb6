#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "qcube/error.hpp"
#include "qcube/iso_aut.hpp"
#include "qcube/quotient.hpp"

using namespace qcube;

namespace {

std::vector<int> random_perm(std::mt19937_64& rng, int n) {
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

SimpleGraph folded(int n) {
  const std::vector<CubeAutomorphism> ones = {CubeAutomorphism::translation_by(BitVector::all_ones(n))};
  return build_quotient(generate_group(n, ones)).graph();
}

SimpleGraph random_graph(std::mt19937_64& rng, int n, int one_in) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (rng() % one_in == 0) edges.emplace_back(u, v);
    }
  }
  return SimpleGraph::from_edges(n, edges);
}

}  // namespace

TEST_CASE("isomorphism witnesses") {
  const auto q = hypercube(4);
  const auto self = are_isomorphic(q, q);
  REQUIRE(self.has_value());
  CHECK(is_isomorphism(q, q, *self));
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 20; ++trial) {
    const auto g = random_graph(rng, 8 + static_cast<int>(rng() % 12), 3);
    const auto h = g.relabeled(random_perm(rng, g.vertex_count()));
    const auto map = are_isomorphic(g, h);
    REQUIRE(map.has_value());
    CHECK(is_isomorphism(g, h, *map));
  }
  CHECK(!are_isomorphic(cycle_graph(6), SimpleGraph::from_edges(
                                            6, std::vector<std::pair<int, int>>{
                                                   {0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}})));
}

TEST_CASE("isomorphism agrees with exhaustive search on small graphs") {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 4 + static_cast<int>(rng() % 4);
    const auto g = random_graph(rng, n, 2);
    const auto h = random_graph(rng, n, 2);
    CHECK(are_isomorphic(g, h).has_value() == oracle::isomorphic_by_permutations(g, h));
    CHECK(are_isomorphic(g, h).has_value() == are_isomorphic(h, g).has_value());
  }
}

TEST_CASE("regular graphs that refinement cannot split") {
  // The 4x4 rook graph and the Shrikhande graph share all refinement data.
  std::vector<std::pair<int, int>> rook;
  std::vector<std::pair<int, int>> shrikhande;
  for (int a = 0; a < 16; ++a) {
    for (int b = a + 1; b < 16; ++b) {
      const int ra = a / 4, ca = a % 4, rb = b / 4, cb = b % 4;
      if (ra == rb || ca == cb) rook.emplace_back(a, b);
      const int dr = (rb - ra + 4) % 4, dc = (cb - ca + 4) % 4;
      if ((dr == 0 && (dc == 1 || dc == 3)) || (dc == 0 && (dr == 1 || dr == 3)) ||
          (dr == 1 && dc == 1) || (dr == 3 && dc == 3)) {
        shrikhande.emplace_back(a, b);
      }
    }
  }
  const auto r = SimpleGraph::from_edges(16, rook);
  const auto s = SimpleGraph::from_edges(16, shrikhande);
  CHECK(regular_valency(r) == 6);
  CHECK(regular_valency(s) == 6);
  CHECK(!are_isomorphic(r, s).has_value());
  CHECK(automorphism_group(r).order == 1152);
  CHECK(automorphism_group(s).order == 192);
}

TEST_CASE("automorphism group orders") {
  CHECK(automorphism_group(complete_graph(4)).order == 24);
  CHECK(automorphism_group(cycle_graph(7)).order == 14);
  CHECK(automorphism_group(hypercube(4)).order == 384);
  CHECK(automorphism_group(path_graph(1)).order == 1);
  CHECK(automorphism_group(SimpleGraph(5)).order == 120);
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 25; ++trial) {
    const auto g = random_graph(rng, 6 + static_cast<int>(rng() % 6), 2 + static_cast<int>(rng() % 3));
    const auto aut = automorphism_group(g);
    for (const auto& p : aut.generators) CHECK(is_isomorphism(g, g, p));
    CHECK(aut.order == oracle::count_automorphisms(g));
  }
}

TEST_CASE("folded 6-cube has 23040 automorphisms") {
  const auto g = folded(6);
  const auto aut = automorphism_group(g);
  CHECK(aut.order == 23040);
  CHECK(oracle::count_automorphisms(g) == 23040);
  CHECK(is_vertex_transitive(g));
}

TEST_CASE("orbits") {
  const auto star = SimpleGraph::from_edges(4, std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {0, 3}});
  const auto orbits = automorphism_orbits(star);
  CHECK(orbits[0] != orbits[1]);
  CHECK(orbits[1] == orbits[3]);
  CHECK(!is_vertex_transitive(star));
  CHECK(is_vertex_transitive(hypercube(5)));
}

TEST_CASE("size limits") {
  CHECK_THROWS_AS(automorphism_group(SimpleGraph(513)), Error);
  CHECK_THROWS_AS(are_isomorphic(SimpleGraph(2001), SimpleGraph(2001)), Error);
}
