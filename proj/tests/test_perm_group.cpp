#include <doctest.h>

#include <random>
#include <set>

#include "qcube/perm_group.hpp"

using namespace qcube;

namespace {

PointPerm cycle_perm(int degree, const std::vector<int>& cycle) {
  PointPerm p = identity_perm(degree);
  for (std::size_t i = 0; i < cycle.size(); ++i) p[cycle[i]] = cycle[(i + 1) % cycle.size()];
  return p;
}

std::set<PointPerm> enumerate(int degree, const std::vector<PointPerm>& gens) {
  std::set<PointPerm> seen{identity_perm(degree)};
  std::vector<PointPerm> frontier(seen.begin(), seen.end());
  while (!frontier.empty()) {
    std::vector<PointPerm> next;
    for (const auto& a : frontier) {
      for (const auto& g : gens) {
        auto c = compose(a, g);
        if (seen.insert(c).second) next.push_back(std::move(c));
      }
    }
    frontier = std::move(next);
  }
  return seen;
}

}  // namespace

TEST_CASE("composition applies the left factor first") {
  const auto a = cycle_perm(3, {0, 1});
  const auto b = cycle_perm(3, {1, 2});
  const auto ab = compose(a, b);
  CHECK(ab[0] == 2);
  CHECK(is_identity(compose(ab, inverse(ab))));
}

TEST_CASE("symmetric and alternating groups") {
  for (int n = 1; n <= 9; ++n) {
    std::vector<PointPerm> gens;
    if (n > 1) {
      std::vector<int> all(n);
      for (int i = 0; i < n; ++i) all[i] = i;
      gens = {cycle_perm(n, {0, 1}), cycle_perm(n, all)};
    }
    BigInt fact = 1;
    for (int i = 2; i <= n; ++i) fact *= i;
    CHECK(PermGroup(n, gens).order() == fact);
  }
  std::vector<PointPerm> alt;
  for (int i = 0; i + 2 < 7; ++i) alt.push_back(cycle_perm(7, {i, i + 1, i + 2}));
  CHECK(PermGroup(7, alt).order() == 2520);
}

TEST_CASE("large order stays exact") {
  std::vector<int> all(30);
  for (int i = 0; i < 30; ++i) all[i] = i;
  const PermGroup s30(30, {cycle_perm(30, {0, 1}), cycle_perm(30, all)});
  BigInt fact = 1;
  for (int i = 2; i <= 30; ++i) fact *= i;
  CHECK(s30.order() == fact);
  CHECK(s30.contains(cycle_perm(30, {3, 17, 29})));
}

TEST_CASE("orders agree with enumeration for random generators") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    const int degree = 4 + static_cast<int>(rng() % 5);
    std::vector<PointPerm> gens;
    const int count = 1 + static_cast<int>(rng() % 3);
    for (int g = 0; g < count; ++g) {
      PointPerm p = identity_perm(degree);
      const int len = 2 + static_cast<int>(rng() % 3);
      std::vector<int> pts(degree);
      for (int i = 0; i < degree; ++i) pts[i] = i;
      std::shuffle(pts.begin(), pts.end(), rng);
      pts.resize(len);
      p = cycle_perm(degree, pts);
      gens.push_back(p);
    }
    const auto elements = enumerate(degree, gens);
    const PermGroup group(degree, gens);
    CHECK(group.order() == elements.size());
    for (const auto& e : elements) CHECK(group.contains(e));
    std::vector<int> img(degree);
    for (int i = 0; i < degree; ++i) img[i] = i;
    for (int k = 0; k < 50; ++k) {
      std::shuffle(img.begin(), img.end(), rng);
      CHECK(group.contains(img) == (elements.count(img) > 0));
    }
  }
}

TEST_CASE("orbits and incremental generators") {
  PermGroup g(6);
  CHECK(g.order() == 1);
  CHECK(g.add_generator(cycle_perm(6, {0, 1, 2})));
  CHECK(!g.add_generator(cycle_perm(6, {0, 2, 1})));
  CHECK(g.add_generator(cycle_perm(6, {4, 5})));
  CHECK(g.order() == 6);
  CHECK(g.orbit_count() == 3);
  const auto ids = g.orbit_ids();
  CHECK(ids[0] == ids[2]);
  CHECK(ids[3] != ids[4]);
  CHECK(ids[4] == ids[5]);
}
