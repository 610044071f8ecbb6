#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qcube/cube_symmetry.hpp"
#include "qcube/graph.hpp"
#include "qcube/quotient.hpp"

namespace qcube {

/// A map from the vertices of Q_n (indexed by their bits) onto a target graph.
struct CoveringMap {
  int n = 0;
  SimpleGraph target;
  std::vector<int> image;
};

/// Surjective, and a bijection from the n cube-neighbours of every x onto the
/// target-neighbours of image[x].
bool verify_covering(const CoveringMap& c);

/// x -> x^K onto (Q_n)_K.
CoveringMap natural_covering(const QuotientGraph& q);

/// Builds pi : Q_n -> target with pi(0) = base and pi(e_i) = neighbor_order[i]
/// (ascending neighbours when omitted), filling vertices in weight order by
/// quadrangle completion and checking every other bit pair for agreement.
/// Throws NotRectagraph, QuadrangleAmbiguous or InconsistentLift.
CoveringMap lift_covering(const SimpleGraph& target, int base,
                          std::optional<std::vector<int>> neighbor_order = std::nullopt);

/// K^pi: one candidate (y, sigma) per y in the fibre over pi(0), read off the
/// neighbour fibres, kept after a global check. Throws NotCovering, or
/// ReconstructionFailed when a candidate is not a cube automorphism
/// commuting with pi.
CubeGroup deck_group(const CoveringMap& c);

/// JSON array of the 2^n target indices.
std::string covering_to_json(const CoveringMap& c);
std::vector<int> covering_image_from_json(const std::string& text);

}  // namespace qcube
