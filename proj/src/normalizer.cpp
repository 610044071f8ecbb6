// Normalizers and conjugacy in Aut(Q_n).

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>

#include "qcube/cube_symmetry.hpp"
#include "qcube/error.hpp"
#include "qcube/perm_group.hpp"

namespace qcube {

namespace {

constexpr std::uint64_t kBruteForceLimit = 100'000'000;
constexpr std::uint64_t kCentralizerLimit = 10'000'000;

/// Aut(Q_n) acting on the 2n facets (i, b) of the cube, point 2i + b.
PointPerm facet_action(const CubeAutomorphism& g) {
  const int n = g.dimension();
  PointPerm p(2 * n);
  const std::uint32_t y = g.translation().bits();
  for (int i = 0; i < n; ++i) {
    const int j = g.perm()[i];
    const int flip = static_cast<int>((y >> j) & 1u);
    p[2 * i] = 2 * j + flip;
    p[2 * i + 1] = 2 * j + (1 - flip);
  }
  return p;
}

/// Row-reduced basis of a subspace of F_2^n.
class Span {
 public:
  /// Returns false when v already lies in the span.
  bool add(std::uint32_t v) {
    for (std::uint32_t b : basis_) v = std::min(v, v ^ b);
    if (v == 0) return false;
    basis_.push_back(v);
    std::sort(basis_.rbegin(), basis_.rend());
    return true;
  }

 private:
  std::vector<std::uint32_t> basis_;
};

/// Generators are collected as the translation subgroup plus one element per
/// admissible coordinate permutation, kept only when it enlarges the group.
class GeneratorCollector {
 public:
  explicit GeneratorCollector(int n) : n_(n), group_(2 * n) {}

  void add_translation(std::uint32_t y) {
    if (span_.add(y)) {
      CubeAutomorphism t = CubeAutomorphism::translation_by(BitVector(n_, y));
      group_.add_generator(facet_action(t));
      gens_.push_back(t);
    }
  }

  void add_element(const CubeAutomorphism& g) {
    if (group_.add_generator(facet_action(g))) gens_.push_back(g);
  }

  std::vector<CubeAutomorphism> take() { return std::move(gens_); }
  BigInt order() const { return group_.order(); }

 private:
  int n_;
  Span span_;
  PermGroup group_;
  std::vector<CubeAutomorphism> gens_;
};

CubeGroup finish(int n, GeneratorCollector& collector, std::uint64_t order,
                 std::uint64_t cap) {
  if (collector.order() != order) {
    throw Error(ErrorCode::ReconstructionFailed,
                "normalizer generators do not account for every element");
  }
  auto gens = collector.take();
  if (order <= cap) {
    CubeGroup g = generate_group(n, gens, cap);
    if (g.order() != order) {
      throw Error(ErrorCode::ReconstructionFailed,
                  "normalizer closure disagrees with element count");
    }
    return g;
  }
  return make_unmaterialized_group(n, std::move(gens), order);
}

/// Translations of K grouped by permutation part.
std::map<Permutation, std::vector<std::uint32_t>> translations_by_perm(
    const CubeGroup& k) {
  std::map<Permutation, std::vector<std::uint32_t>> table;
  for (const auto& g : k.elements()) {
    table[g.perm()].push_back(g.translation().bits());
  }
  for (auto& [perm, ys] : table) std::sort(ys.begin(), ys.end());
  return table;
}

/// Visits every (y, tau) in Aut(Q_n) (restricted by `ambient`) such that
/// conjugating each generator of `source` lands in `target`.
/// The translation of (y,tau)^{-1} (x,sigma) (y,tau) is y + y^pi + x^tau with
/// pi = tau^{-1} sigma tau, so tau is filtered on pi before any y is tried.
template <typename Visit>
void scan_conjugators(const CubeGroup& source, const CubeGroup& target,
                      Ambient ambient, Visit&& visit) {
  const int n = source.dimension();
  const auto table = translations_by_perm(target);
  const auto& gens = source.generators();
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 0);
  const std::uint32_t limit = low_mask(n);
  std::vector<const std::vector<std::uint32_t>*> allowed(gens.size());
  std::vector<Permutation> pis(gens.size());
  std::vector<std::uint32_t> x_tau(gens.size());
  do {
    const Permutation tau(images);
    const Permutation tau_inv = tau.inverse();
    bool admissible = true;
    for (std::size_t j = 0; j < gens.size() && admissible; ++j) {
      pis[j] = tau_inv * gens[j].perm() * tau;
      auto it = table.find(pis[j]);
      if (it == table.end()) {
        admissible = false;
      } else {
        allowed[j] = &it->second;
        x_tau[j] = tau.apply(gens[j].translation().bits());
      }
    }
    if (!admissible) continue;
    for (std::uint64_t yy = 0; yy <= limit; ++yy) {
      const auto y = static_cast<std::uint32_t>(yy);
      if (ambient == Ambient::Even && std::popcount(y) % 2 != 0) continue;
      bool ok = true;
      for (std::size_t j = 0; j < gens.size() && ok; ++j) {
        const std::uint32_t t = y ^ pis[j].apply(y) ^ x_tau[j];
        ok = std::binary_search(allowed[j]->begin(), allowed[j]->end(), t);
      }
      if (ok && !visit(y, tau)) return;
    }
  } while (std::next_permutation(images.begin(), images.end()));
}

void require_brute_force(int n) {
  const auto total = hyperoctahedral_order(n);
  if (!total || *total > kBruteForceLimit) {
    throw Error(ErrorCode::Unsupported,
                "Aut(Q_" + std::to_string(n) + ") is too large to scan");
  }
}

CubeGroup brute_force_normalizer(const CubeGroup& k, Ambient ambient,
                                 std::uint64_t cap) {
  const int n = k.dimension();
  require_brute_force(n);
  GeneratorCollector collector(n);
  std::uint64_t order = 0;
  std::optional<Permutation> current;
  const Permutation id(n);
  std::vector<std::uint32_t> translations;
  scan_conjugators(k, k, ambient, [&](std::uint32_t y, const Permutation& tau) {
    ++order;
    if (tau == id) {
      translations.push_back(y);
    } else if (!current || *current != tau) {
      current = tau;
      // One representative per tau; the translation subgroup supplies the rest.
      if (translations.size() > 0) {
        for (std::uint32_t t : translations) collector.add_translation(t);
        translations.clear();
      }
      collector.add_element(CubeAutomorphism(BitVector(n, y), tau));
    }
    return true;
  });
  for (std::uint32_t t : translations) collector.add_translation(t);
  return finish(n, collector, order, cap);
}

/// Centralizer of an involution k = (x, sigma): (y, tau) commutes with k iff
/// tau commutes with sigma and y + y^sigma = x + x^tau.
CubeGroup involution_normalizer(const CubeGroup& k, Ambient ambient,
                                std::uint64_t cap) {
  const int n = k.dimension();
  if (k.order() != 2) {
    throw Error(ErrorCode::Unsupported,
                "involution tier needs a group of order 2");
  }
  const CubeAutomorphism& inv = k.elements()[1];
  const Permutation& sigma = inv.perm();
  const std::uint32_t x = inv.translation().bits();

  // Every cycle of sigma, fixed points included, listed from its smallest point.
  std::vector<std::vector<int>> cycles;
  {
    std::uint32_t seen = 0;
    for (int i = 0; i < n; ++i) {
      if ((seen >> i) & 1u) continue;
      std::vector<int> cycle;
      for (int j = i; !((seen >> j) & 1u); j = sigma[j]) {
        seen |= std::uint32_t{1} << j;
        cycle.push_back(j);
      }
      cycles.push_back(std::move(cycle));
    }
  }

  // |C_{S_n}(sigma)| = prod over lengths L of L^{m_L} m_L!.
  std::map<std::size_t, int> multiplicity;
  for (const auto& c : cycles) ++multiplicity[c.size()];
  unsigned __int128 centralizer = 1;
  for (const auto& [len, m] : multiplicity) {
    for (int r = 1; r <= m; ++r) {
      centralizer *= len * static_cast<unsigned>(r);
      if (centralizer > kCentralizerLimit) {
        throw Error(ErrorCode::Unsupported,
                    "centralizer of the involution is too large to enumerate");
      }
    }
  }

  std::vector<std::uint32_t> indicator;
  bool has_odd_cycle = false;
  for (const auto& c : cycles) {
    std::uint32_t mask = 0;
    for (int p : c) mask |= std::uint32_t{1} << p;
    indicator.push_back(mask);
    if (c.size() % 2 == 1) has_odd_cycle = true;
  }
  std::uint32_t odd_cycle_mask = 0;
  for (std::size_t c = 0; c < cycles.size(); ++c) {
    if (cycles[c].size() % 2 == 1) {
      odd_cycle_mask = indicator[c];
      break;
    }
  }

  GeneratorCollector collector(n);
  // Translations fixed by sigma: the span of the cycle indicators.
  if (ambient == Ambient::Full) {
    for (auto mask : indicator) collector.add_translation(mask);
  } else {
    for (auto mask : indicator) {
      if (std::popcount(mask) % 2 == 0) {
        collector.add_translation(mask);
      } else if (mask != odd_cycle_mask) {
        collector.add_translation(mask ^ odd_cycle_mask);
      }
    }
  }

  const int c_count = static_cast<int>(cycles.size());
  std::uint64_t order = 0;
  std::vector<int> tau_images(n, -1);
  std::vector<char> used(cycles.size(), 0);

  auto visit_tau = [&]() {
    const Permutation tau(tau_images);
    const std::uint32_t c = x ^ tau.apply(x);
    std::uint32_t y = 0;
    for (const auto& cycle : cycles) {
      // c_{i_{m+1}} = y_{i_{m+1}} + y_{i_m}; solvable iff c has even parity here.
      std::uint32_t prev = 0;
      std::uint32_t parity = 0;
      for (std::size_t m = 0; m < cycle.size(); ++m) {
        parity ^= (c >> cycle[m]) & 1u;
      }
      if (parity != 0) return;
      for (std::size_t m = 1; m < cycle.size(); ++m) {
        prev ^= (c >> cycle[m]) & 1u;
        y |= prev << cycle[m];
      }
    }
    std::uint64_t solutions = std::uint64_t{1} << c_count;
    if (ambient == Ambient::Even) {
      if (has_odd_cycle) {
        solutions >>= 1;
        if (std::popcount(y) % 2 != 0) y ^= odd_cycle_mask;
      } else if (std::popcount(y) % 2 != 0) {
        return;
      }
    }
    order += solutions;
    if (!tau.is_identity()) {
      collector.add_element(CubeAutomorphism(BitVector(n, y), tau));
    }
  };

  // tau maps cycle c onto an unused cycle of the same length with some rotation.
  auto assign = [&](auto&& self, std::size_t c) -> void {
    if (c == cycles.size()) {
      visit_tau();
      return;
    }
    const auto& src = cycles[c];
    for (std::size_t t = 0; t < cycles.size(); ++t) {
      if (used[t] || cycles[t].size() != src.size()) continue;
      used[t] = 1;
      const auto& dst = cycles[t];
      for (std::size_t r = 0; r < dst.size(); ++r) {
        for (std::size_t m = 0; m < src.size(); ++m) {
          tau_images[src[m]] = dst[(m + r) % dst.size()];
        }
        self(self, c + 1);
      }
      used[t] = 0;
    }
  };
  assign(assign, 0);
  return finish(n, collector, order, cap);
}

CubeGroup ambient_group(int n, Ambient ambient, std::uint64_t cap) {
  const auto full = hyperoctahedral_order(n);
  if (!full) {
    throw Error(ErrorCode::Unsupported, "ambient group order overflows");
  }
  std::vector<CubeAutomorphism> gens;
  if (ambient == Ambient::Full) {
    gens.push_back(CubeAutomorphism::translation_by(BitVector::unit(n, {0})));
  } else if (n >= 2) {
    gens.push_back(CubeAutomorphism::translation_by(BitVector::unit(n, {0, 1})));
  }
  if (n >= 2) {
    gens.push_back(CubeAutomorphism(BitVector::zero(n),
                                    Permutation::from_cycles(n, {{0, 1}})));
    std::vector<int> cycle(n);
    std::iota(cycle.begin(), cycle.end(), 0);
    if (n >= 3) {
      gens.push_back(CubeAutomorphism(BitVector::zero(n),
                                      Permutation::from_cycles(n, {cycle})));
    }
  }
  const std::uint64_t order = ambient == Ambient::Full ? *full : *full / 2;
  if (order <= cap) return generate_group(n, gens, cap);
  return make_unmaterialized_group(n, std::move(gens), order);
}

}  // namespace

CubeGroup normalizer(const CubeGroup& k, Ambient ambient, NormalizerTier tier,
                     std::uint64_t cap) {
  const int n = k.dimension();
  if (k.is_trivial() && tier == NormalizerTier::Auto) {
    return ambient_group(n, ambient, cap);
  }
  switch (tier) {
    case NormalizerTier::BruteForce:
      return brute_force_normalizer(k, ambient, cap);
    case NormalizerTier::Involution:
      return involution_normalizer(k, ambient, cap);
    case NormalizerTier::Auto:
      break;
  }
  const auto total = hyperoctahedral_order(n);
  if (total && *total <= kBruteForceLimit) {
    return brute_force_normalizer(k, ambient, cap);
  }
  if (k.order() == 2) return involution_normalizer(k, ambient, cap);
  throw Error(ErrorCode::Unsupported,
              "normalizer needs n <= 8 or a group of order 2");
}

std::optional<CubeAutomorphism> find_conjugator(const CubeGroup& k,
                                                const CubeGroup& l) {
  if (k.dimension() != l.dimension()) {
    throw Error(ErrorCode::DimensionMismatch, "groups act on different cubes");
  }
  require_brute_force(k.dimension());
  if (k.order() != l.order()) return std::nullopt;
  std::optional<CubeAutomorphism> found;
  const int n = k.dimension();
  scan_conjugators(k, l, Ambient::Full,
                   [&](std::uint32_t y, const Permutation& tau) {
                     found = CubeAutomorphism(BitVector(n, y), tau);
                     return false;
                   });
  return found;
}

}  // namespace qcube
