#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <utility>
#include <vector>

namespace qcube {

using BigInt = boost::multiprecision::cpp_int;

/// A permutation of {0, ..., degree-1} as an image array. Products apply the
/// left factor first, matching the right-action convention of the library.
using PointPerm = std::vector<int>;

PointPerm identity_perm(int degree);
PointPerm compose(const PointPerm& first, const PointPerm& second);
PointPerm inverse(const PointPerm& p);
bool is_identity(const PointPerm& p);

/// Permutation group with a base and strong generating set, built by the
/// deterministic Schreier-Sims algorithm. New base points are chosen greedily
/// from the largest orbit of the whole group among the points a residue moves.
class PermGroup {
 public:
  explicit PermGroup(int degree);
  PermGroup(int degree, const std::vector<PointPerm>& generators);

  int degree() const noexcept { return degree_; }
  const std::vector<PointPerm>& generators() const noexcept {
    return generators_;
  }
  std::vector<int> base() const;
  /// Lengths of the basic orbits, one per base point.
  std::vector<std::size_t> basic_orbit_lengths() const;
  BigInt order() const;

  bool contains(const PointPerm& g) const;
  /// Adds g as a generator when it is not already a member; returns whether
  /// the group grew.
  bool add_generator(const PointPerm& g);

  /// Orbit id of each point under the generators; ids follow smallest point.
  std::vector<int> orbit_ids() const;
  std::size_t orbit_count() const;

 private:
  struct Level {
    int base_point = -1;
    std::vector<PointPerm> gens;
    std::vector<int> orbit;
    std::vector<int> position;
    std::vector<PointPerm> transversal;
    std::vector<PointPerm> transversal_inv;
    std::vector<std::size_t> tested;
  };

  /// Residue of g after stripping through levels [from, end) and the level
  /// where stripping stopped.
  std::pair<PointPerm, std::size_t> sift(PointPerm g, std::size_t from) const;
  void add_to_level(std::size_t level, const PointPerm& g);
  void extend_orbit(Level& level);
  int choose_base_point(const PointPerm& g) const;
  void complete_from(std::size_t level);

  int degree_;
  std::vector<PointPerm> generators_;
  std::vector<Level> levels_;
  std::vector<int> orbit_size_hint_;
};

}  // namespace qcube
