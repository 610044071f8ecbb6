#include "qcube/perm_group.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

#include "qcube/error.hpp"

namespace qcube {

PointPerm identity_perm(int degree) {
  PointPerm p(degree);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

PointPerm compose(const PointPerm& first, const PointPerm& second) {
  PointPerm out(first.size());
  for (std::size_t i = 0; i < first.size(); ++i) out[i] = second[first[i]];
  return out;
}

PointPerm inverse(const PointPerm& p) {
  PointPerm out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out[p[i]] = static_cast<int>(i);
  return out;
}

bool is_identity(const PointPerm& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] != static_cast<int>(i)) return false;
  }
  return true;
}

namespace {

struct UnionFind {
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a < b) std::swap(a, b);
    parent[a] = b;
  }
  std::vector<int> parent;
};

}  // namespace

PermGroup::PermGroup(int degree) : degree_(degree), orbit_size_hint_(degree, 1) {
  if (degree < 0) throw Error(ErrorCode::InvalidArgument, "negative degree");
}

PermGroup::PermGroup(int degree, const std::vector<PointPerm>& generators)
    : PermGroup(degree) {
  for (const auto& g : generators) {
    if (static_cast<int>(g.size()) != degree) {
      throw Error(ErrorCode::DimensionMismatch, "generator degree mismatch");
    }
    generators_.push_back(g);
  }
  // Orbit sizes of the whole group steer the base choice.
  const auto ids = orbit_ids();
  std::vector<int> counts(degree, 0);
  for (int id : ids) ++counts[id];
  for (int p = 0; p < degree; ++p) orbit_size_hint_[p] = counts[ids[p]];

  for (const auto& g : generators_) {
    if (is_identity(g)) continue;
    if (levels_.empty()) {
      levels_.emplace_back();
      levels_[0].base_point = choose_base_point(g);
      levels_[0].position.assign(degree_, -1);
      levels_[0].orbit.push_back(levels_[0].base_point);
      levels_[0].position[levels_[0].base_point] = 0;
      levels_[0].transversal.push_back(identity_perm(degree_));
      levels_[0].transversal_inv.push_back(identity_perm(degree_));
      levels_[0].tested.push_back(0);
    }
    levels_[0].gens.push_back(g);
  }
  if (!levels_.empty()) {
    extend_orbit(levels_[0]);
    complete_from(0);
  }
}

std::vector<int> PermGroup::base() const {
  std::vector<int> b;
  for (const auto& level : levels_) b.push_back(level.base_point);
  return b;
}

std::vector<std::size_t> PermGroup::basic_orbit_lengths() const {
  std::vector<std::size_t> lengths;
  for (const auto& level : levels_) lengths.push_back(level.orbit.size());
  return lengths;
}

BigInt PermGroup::order() const {
  BigInt order = 1;
  for (const auto& level : levels_) order *= level.orbit.size();
  return order;
}

std::pair<PointPerm, std::size_t> PermGroup::sift(PointPerm g,
                                                  std::size_t from) const {
  for (std::size_t l = from; l < levels_.size(); ++l) {
    const auto& level = levels_[l];
    const int pos = level.position[g[level.base_point]];
    if (pos < 0) return {std::move(g), l};
    g = compose(g, level.transversal_inv[pos]);
  }
  return {std::move(g), levels_.size()};
}

bool PermGroup::contains(const PointPerm& g) const {
  if (static_cast<int>(g.size()) != degree_) return false;
  auto [residue, stop] = sift(g, 0);
  return stop == levels_.size() && is_identity(residue);
}

int PermGroup::choose_base_point(const PointPerm& g) const {
  int best = -1;
  for (int p = 0; p < degree_; ++p) {
    if (g[p] == p) continue;
    if (best < 0 || orbit_size_hint_[p] > orbit_size_hint_[best]) best = p;
  }
  return best;
}

void PermGroup::extend_orbit(Level& level) {
  for (std::size_t idx = 0; idx < level.orbit.size(); ++idx) {
    const int beta = level.orbit[idx];
    for (const auto& s : level.gens) {
      const int img = s[beta];
      if (level.position[img] >= 0) continue;
      level.position[img] = static_cast<int>(level.orbit.size());
      level.orbit.push_back(img);
      PointPerm u = compose(level.transversal[idx], s);
      level.transversal_inv.push_back(inverse(u));
      level.transversal.push_back(std::move(u));
      level.tested.push_back(0);
    }
  }
}

void PermGroup::add_to_level(std::size_t l, const PointPerm& g) {
  if (l == levels_.size()) {
    Level level;
    level.base_point = choose_base_point(g);
    level.position.assign(degree_, -1);
    level.orbit.push_back(level.base_point);
    level.position[level.base_point] = 0;
    level.transversal.push_back(identity_perm(degree_));
    level.transversal_inv.push_back(identity_perm(degree_));
    level.tested.push_back(0);
    levels_.push_back(std::move(level));
  }
  levels_[l].gens.push_back(g);
  extend_orbit(levels_[l]);
}

// Levels deeper than `start` hold complete stabilizer chains on entry.
void PermGroup::complete_from(std::size_t start) {
  std::optional<std::size_t> i = start;
  while (i) {
    auto& level = levels_[*i];
    std::optional<std::pair<PointPerm, std::size_t>> failure;
    for (std::size_t idx = 0; idx < level.orbit.size() && !failure; ++idx) {
      while (level.tested[idx] < level.gens.size()) {
        const auto& s = level.gens[level.tested[idx]++];
        const int img = s[level.orbit[idx]];
        PointPerm schreier = compose(compose(level.transversal[idx], s),
                                     level.transversal_inv[level.position[img]]);
        auto result = sift(std::move(schreier), *i + 1);
        if (result.second < levels_.size() || !is_identity(result.first)) {
          failure = std::move(result);
          break;
        }
      }
    }
    if (failure) {
      const std::size_t drop = failure->second;
      for (std::size_t l = *i + 1; l <= drop; ++l) {
        add_to_level(l, failure->first);
      }
      i = drop;
    } else if (*i == 0) {
      i.reset();
    } else {
      i = *i - 1;
    }
  }
}

bool PermGroup::add_generator(const PointPerm& g) {
  if (static_cast<int>(g.size()) != degree_) {
    throw Error(ErrorCode::DimensionMismatch, "generator degree mismatch");
  }
  if (contains(g)) return false;
  generators_.push_back(g);
  const auto ids = orbit_ids();
  std::vector<int> counts(degree_, 0);
  for (int id : ids) ++counts[id];
  for (int p = 0; p < degree_; ++p) orbit_size_hint_[p] = counts[ids[p]];
  add_to_level(0, g);
  complete_from(0);
  return true;
}

std::vector<int> PermGroup::orbit_ids() const {
  UnionFind uf(degree_);
  for (const auto& g : generators_) {
    for (int p = 0; p < degree_; ++p) uf.unite(p, g[p]);
  }
  std::vector<int> ids(degree_, -1);
  std::vector<int> root_id(degree_, -1);
  int next = 0;
  for (int p = 0; p < degree_; ++p) {
    const int r = uf.find(p);
    if (root_id[r] < 0) root_id[r] = next++;
    ids[p] = root_id[r];
  }
  return ids;
}

std::size_t PermGroup::orbit_count() const {
  const auto ids = orbit_ids();
  int count = 0;
  for (int id : ids) count = std::max(count, id + 1);
  return static_cast<std::size_t>(count);
}

}  // namespace qcube
