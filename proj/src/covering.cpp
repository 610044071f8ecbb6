#include "qcube/covering.hpp"

#include <algorithm>
#include <bit>
#include <json.hpp>

#include "qcube/error.hpp"

namespace qcube {

bool verify_covering(const CoveringMap& c) {
  const SimpleGraph& t = c.target;
  const std::size_t size = std::size_t{1} << c.n;
  if (c.image.size() != size) return false;
  std::vector<char> hit(t.vertex_count(), 0);
  for (int v : c.image) {
    if (v < 0 || v >= t.vertex_count()) return false;
    hit[v] = 1;
  }
  if (std::find(hit.begin(), hit.end(), 0) != hit.end()) return false;

  std::vector<int> images;
  for (std::size_t x = 0; x < size; ++x) {
    const int px = c.image[x];
    if (t.degree(px) != c.n) return false;
    images.clear();
    for (int i = 0; i < c.n; ++i) images.push_back(c.image[x ^ (std::size_t{1} << i)]);
    std::sort(images.begin(), images.end());
    const auto nbrs = t.neighbors(px);
    if (!std::equal(images.begin(), images.end(), nbrs.begin(), nbrs.end())) {
      return false;
    }
  }
  return true;
}

CoveringMap natural_covering(const QuotientGraph& q) {
  return {q.dimension(), q.graph(), q.orbit_index()};
}

namespace {

/// The unique vertex other than `middle` adjacent to both `a` and `b`.
int complete_quadrangle(const SimpleGraph& t, int a, int middle, int b) {
  int found = -1;
  int count = 0;
  const auto na = t.neighbors(a);
  const auto nb = t.neighbors(b);
  auto ia = na.begin();
  auto ib = nb.begin();
  while (ia != na.end() && ib != nb.end()) {
    if (*ia < *ib) {
      ++ia;
    } else if (*ib < *ia) {
      ++ib;
    } else {
      if (*ia != middle) {
        found = *ia;
        ++count;
      }
      ++ia;
      ++ib;
    }
  }
  if (a == b || count != 1) {
    throw Error(ErrorCode::QuadrangleAmbiguous,
                "2-path " + std::to_string(a) + "-" + std::to_string(middle) + "-" +
                    std::to_string(b) + " lies in " + std::to_string(count) +
                    " quadrangles");
  }
  return found;
}

}  // namespace

CoveringMap lift_covering(const SimpleGraph& target, int base,
                          std::optional<std::vector<int>> neighbor_order) {
  if (base < 0 || base >= target.vertex_count()) {
    throw Error(ErrorCode::InvalidArgument, "base vertex out of range");
  }
  if (!is_rectagraph(target) || !regular_valency(target)) {
    throw Error(ErrorCode::NotRectagraph, "target is not a rectagraph");
  }
  const int n = target.degree(base);
  if (n > kMaxQuotientDimension) {
    throw Error(ErrorCode::DimensionTooLarge, "valency too large to lift");
  }
  std::vector<int> order;
  if (neighbor_order) {
    order = *neighbor_order;
    auto sorted = order;
    std::sort(sorted.begin(), sorted.end());
    const auto nbrs = target.neighbors(base);
    if (!std::equal(sorted.begin(), sorted.end(), nbrs.begin(), nbrs.end())) {
      throw Error(ErrorCode::InvalidArgument,
                  "neighbor_order is not an ordering of the base's neighbours");
    }
  } else {
    const auto nbrs = target.neighbors(base);
    order.assign(nbrs.begin(), nbrs.end());
  }

  const std::uint32_t size = std::uint32_t{1} << n;
  std::vector<std::uint32_t> by_weight(size);
  for (std::uint32_t v = 0; v < size; ++v) by_weight[v] = v;
  std::stable_sort(by_weight.begin(), by_weight.end(), [](std::uint32_t a, std::uint32_t b) {
    return std::popcount(a) < std::popcount(b);
  });

  CoveringMap c;
  c.n = n;
  c.target = target;
  c.image.assign(size, -1);
  c.image[0] = base;
  for (int i = 0; i < n; ++i) c.image[std::uint32_t{1} << i] = order[i];

  for (std::uint32_t y : by_weight) {
    if (std::popcount(y) < 2) continue;
    const int i = std::countr_zero(y);
    const int j = std::countr_zero(y & (y - 1));
    const std::uint32_t ei = std::uint32_t{1} << i;
    const std::uint32_t ej = std::uint32_t{1} << j;
    const std::uint32_t x = y ^ ei ^ ej;
    c.image[y] = complete_quadrangle(target, c.image[x ^ ei], c.image[x], c.image[x ^ ej]);

    for (std::uint32_t rest = y; rest != 0; rest &= rest - 1) {
      const int a = std::countr_zero(rest);
      for (std::uint32_t more = rest & (rest - 1); more != 0; more &= more - 1) {
        const int b = std::countr_zero(more);
        const std::uint32_t ea = std::uint32_t{1} << a;
        const std::uint32_t eb = std::uint32_t{1} << b;
        const std::uint32_t z = y ^ ea ^ eb;
        const int other =
            complete_quadrangle(target, c.image[z ^ ea], c.image[z], c.image[z ^ eb]);
        if (other != c.image[y]) {
          throw Error(ErrorCode::InconsistentLift,
                      "quadrangle completions disagree at vertex " +
                          BitVector(n, y).to_string());
        }
      }
    }
  }
  if (!verify_covering(c)) {
    throw Error(ErrorCode::InconsistentLift, "lifted map is not a covering");
  }
  return c;
}

CubeGroup deck_group(const CoveringMap& c) {
  if (!verify_covering(c)) throw Error(ErrorCode::NotCovering, "map is not a covering");
  const int n = c.n;
  const std::uint32_t size = std::uint32_t{1} << n;

  std::vector<CubeAutomorphism> deck;
  for (std::uint32_t y = 0; y < size; ++y) {
    if (c.image[y] != c.image[0]) continue;
    std::vector<int> images(n, -1);
    for (int i = 0; i < n; ++i) {
      const int wanted = c.image[std::uint32_t{1} << i];
      for (int b = 0; b < n; ++b) {
        if (c.image[y ^ (std::uint32_t{1} << b)] != wanted) continue;
        if (images[i] >= 0) {
          throw Error(ErrorCode::ReconstructionFailed,
                      "two neighbours of a fibre vertex share an image");
        }
        images[i] = b;
      }
    }
    std::optional<Permutation> sigma;
    try {
      sigma = Permutation(images);
    } catch (const Error&) {
      throw Error(ErrorCode::ReconstructionFailed,
                  "neighbour fibres do not define a coordinate permutation");
    }
    const CubeAutomorphism g(BitVector(n, y), *sigma);
    for (std::uint32_t v = 0; v < size; ++v) {
      if (c.image[g.act_bits(v)] != c.image[v]) {
        throw Error(ErrorCode::ReconstructionFailed,
                    "candidate " + g.to_string() + " does not commute with the covering");
      }
    }
    deck.push_back(g);
  }

  std::vector<CubeAutomorphism> gens;
  CubeGroup group = CubeGroup::trivial(n);
  for (const auto& g : deck) {
    if (group.contains(g)) continue;
    gens.push_back(g);
    group = generate_group(n, gens);
  }
  if (group.order() != deck.size()) {
    throw Error(ErrorCode::ReconstructionFailed,
                "fibre elements do not form a group");
  }
  return group;
}

std::string covering_to_json(const CoveringMap& c) {
  return nlohmann::json(c.image).dump();
}

std::vector<int> covering_image_from_json(const std::string& text) {
  try {
    return nlohmann::json::parse(text).get<std::vector<int>>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

}  // namespace qcube
