#include <algorithm>
#include <bit>
#include <numeric>

#include "verify_support.hpp"

namespace qcube {

using detail::json;

std::string_view status_name(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::Holds: return "HOLDS";
    case ClaimStatus::Fails: return "FAILS";
    case ClaimStatus::Skipped: return "SKIPPED";
  }
  return "SKIPPED";
}

json describe_group(const CubeGroup& k) {
  json j;
  j["n"] = k.dimension();
  j["order"] = k.order();
  json gens = json::array();
  for (const auto& g : k.generators()) gens.push_back(g.to_string());
  j["generators"] = std::move(gens);
  return j;
}

namespace {

/// (y, sigma): sigma a product of a random number of disjoint transpositions,
/// y of uniformly random weight.
CubeAutomorphism random_generator(std::mt19937_64& rng, int n) {
  std::vector<int> pts(n);
  std::iota(pts.begin(), pts.end(), 0);
  std::shuffle(pts.begin(), pts.end(), rng);
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 0);
  const int swaps = static_cast<int>(rng() % (n / 2 + 1));
  for (int s = 0; s < swaps; ++s) {
    images[pts[2 * s]] = pts[2 * s + 1];
    images[pts[2 * s + 1]] = pts[2 * s];
  }
  std::shuffle(pts.begin(), pts.end(), rng);
  const int weight = static_cast<int>(rng() % (n + 1));
  std::uint32_t y = 0;
  for (int i = 0; i < weight; ++i) y |= std::uint32_t{1} << pts[i];
  return {BitVector(n, y), Permutation(images)};
}

}  // namespace

CubeAutomorphism random_involution(std::mt19937_64& rng, int n) {
  while (true) {
    const auto g = random_generator(rng, n);
    std::uint32_t x = 0;
    for (int i = 0; i < n; ++i) {
      const int j = g.perm()[i];
      if (j < i) continue;
      if (rng() & 1u) x |= (std::uint32_t{1} << i) | (std::uint32_t{1} << j);
    }
    CubeAutomorphism inv(BitVector(n, x), g.perm());
    if (!inv.is_identity()) return inv;
  }
}

CubeGroup random_two_group(std::mt19937_64& rng, int n, std::uint64_t order) {
  if (order == 0 || (order & (order - 1)) != 0) {
    throw Error(ErrorCode::InvalidArgument, "order must be a power of two");
  }
  while (true) {
    std::vector<CubeAutomorphism> gens;
    std::uint64_t current = 1;
    for (int attempt = 0; attempt < 200 && current < order; ++attempt) {
      auto h = order == 2 ? random_involution(rng, n) : random_generator(rng, n);
      if (h.is_identity()) continue;
      gens.push_back(h);
      try {
        const auto k = generate_group(n, gens, order);
        if (k.order() > current && order % k.order() == 0) {
          current = k.order();
          continue;
        }
      } catch (const Error&) {
      }
      gens.pop_back();
    }
    if (current == order) return generate_group(n, gens);
  }
}

std::vector<CubeGroup> default_grid(const VerifyOptions& options) {
  std::vector<CubeGroup> grid;
  for (int n = 2; n <= 5; ++n) {
    for_each_cube_automorphism(n, [&](const CubeAutomorphism& g) {
      if (!g.is_identity() && (g * g).is_identity()) grid.push_back(detail::single(g));
      return true;
    });
  }
  std::mt19937_64 rng(options.seed);
  const std::uint64_t orders[] = {2, 4, 8};
  for (int n = 6; n <= 10; ++n) {
    for (int i = 0; i < options.random_per_dimension; ++i) {
      grid.push_back(random_two_group(rng, n, orders[i % 3]));
    }
  }
  return grid;
}

namespace detail {

std::vector<CubeGroup> featured_groups() {
  std::vector<CubeGroup> out;
  for (int n = 5; n <= 10; ++n) out.push_back(folded_group(n));
  out.push_back(transposition_group(8));
  out.push_back(transposition_group(9));
  out.push_back(transposition_group(10));
  out.push_back(transposition_group(10, true));
  // Extended Hamming [8,4,4] and the even quaternion example.
  const std::vector<CubeAutomorphism> hamming = {
      CubeAutomorphism::translation_by(BitVector::parse("11110000")),
      CubeAutomorphism::translation_by(BitVector::parse("00111100")),
      CubeAutomorphism::translation_by(BitVector::parse("00001111")),
      CubeAutomorphism::translation_by(BitVector::parse("01010101")),
  };
  out.push_back(generate_group(8, hamming));
  const std::vector<CubeAutomorphism> quaternion = {
      {BitVector::parse("11110000"), Permutation::parse(8, "(1 5)(2 6)(3 7)(4 8)")},
      {BitVector::parse("10100101"), Permutation::parse(8, "(1 2)(3 4)(5 6)(7 8)")},
  };
  out.push_back(generate_group(8, quaternion));
  // Repetition-style code of distance 7 inside F_2^10 with a non-translation.
  out.push_back(single({BitVector::parse("1111111000"), Permutation::parse(10, "(8 9)")}));
  return out;
}

std::vector<int> random_relabeling(std::mt19937_64& rng, int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  for (int i = n - 1; i > 0; --i) {
    std::swap(p[i], p[rng() % static_cast<std::uint64_t>(i + 1)]);
  }
  return p;
}

std::string to_string(const BigInt& v) { return v.str(); }

}  // namespace detail

ClaimReport check_theorem_class_dist(const CubeGroup& k, int l) {
  ClaimReport r;
  r.claim_id = "thm-class-dist";
  r.parameters["group"] = describe_group(k);
  r.parameters["l"] = l;
  const auto q = build_quotient(k);
  const Distance d = min_distance(k);
  const bool cond_i = has_cube_like_params(q.graph(), k.dimension(), l);
  const bool cond_ii = d.at_least(2 * l + 1);
  r.witnesses["d_K"] = detail::distance_json(d);
  r.witnesses["cube_like_params"] = cond_i;
  r.witnesses["distance_at_least_2l_plus_1"] = cond_ii;
  if (cond_i == cond_ii) {
    r.status = ClaimStatus::Holds;
  } else {
    r.status = ClaimStatus::Fails;
    json params = json::array();
    for (const auto& p : local_params(q.graph(), l)) {
      params.push_back({{"level", p.level}, {"c", p.c.to_string()}, {"a", p.a.to_string()}});
    }
    r.witnesses["counterexample"] = {{"group", describe_group(k)}, {"params", params}};
  }
  return r;
}

ClaimReport check_main_even(const CubeGroup& k) {
  const int n = k.dimension();
  const Distance d = min_distance(k);
  if (!is_even(k) || !d.at_least(7) || n < 2) {
    throw Error(ErrorCode::PreconditionViolated,
                "needs an even group with d_K >= 7 and n >= 2");
  }
  ClaimReport r;
  r.claim_id = "thm-main-even";
  r.parameters["group"] = describe_group(k);
  r.witnesses["d_K"] = detail::distance_json(d);
  const auto q = build_quotient(k);
  const auto halves = halved_graphs(q.graph());
  const SimpleGraph tn = triangular_graph(n);
  json halves_json = json::array();
  json counterexample;
  for (const auto* half : {&halves.first, &halves.second}) {
    const bool connected = is_connected(*half);
    const int bad = detail::first_non_local_vertex(*half, tn);
    halves_json.push_back({{"vertices", half->vertex_count()},
                           {"connected", connected},
                           {"locally_T_n", bad < 0}});
    if ((!connected || bad >= 0) && counterexample.is_null()) {
      counterexample = {{"group", describe_group(k)},
                        {"connected", connected},
                        {"bad_vertex_label", bad >= 0 ? half->labels()[bad] : ""}};
    }
  }
  r.witnesses["halves"] = halves_json;
  r.witnesses["T_n_vertices"] = tn.vertex_count();
  if (counterexample.is_null()) {
    r.status = ClaimStatus::Holds;
  } else {
    r.status = ClaimStatus::Fails;
    r.witnesses["counterexample"] = counterexample;
  }
  return r;
}

ClaimReport check_even_lemma(const CubeGroup& k) {
  const int n = k.dimension();
  const Distance d = min_distance(k);
  if (!d.at_least(2)) throw Error(ErrorCode::PreconditionViolated, "needs d_K >= 2");
  ClaimReport r;
  r.claim_id = "lem-even";
  r.parameters["group"] = describe_group(k);
  r.witnesses["d_K"] = detail::distance_json(d);
  const auto q = build_quotient(k);
  const SimpleGraph& pi = q.graph();
  const bool even = is_even(k);
  json failures = json::array();

  // (i) Parity is constant on every orbit and adjacent orbits differ.
  std::vector<int> parity(q.orbit_count(), -1);
  bool parity_parts = true;
  for (std::uint32_t v = 0; v < (std::uint32_t{1} << n); ++v) {
    int& p = parity[q.orbit_of(v)];
    const int w = std::popcount(v) % 2;
    if (p < 0) p = w;
    if (p != w) parity_parts = false;
  }
  for (const auto& [a, b] : pi.edges()) {
    if (parity[a] == parity[b]) parity_parts = false;
  }
  const auto parts = bipartite_parts(pi);
  const bool bipartite = std::holds_alternative<Bipartition>(parts);
  r.witnesses["even"] = even;
  r.witnesses["bipartite"] = bipartite;
  r.witnesses["parity_parts"] = parity_parts;
  if (!bipartite) {
    r.witnesses["odd_walk_length"] = std::get<OddClosedWalk>(parts).walk.size() - 1;
  }
  if (parity_parts != even) failures.push_back("part (i): parity bipartition iff even");
  if (parity_parts && !bipartite) failures.push_back("part (i): parity parts but not bipartite");

  if (!even) {
    // (ii) x^L -> (x^K, wt(x) mod 2).
    const auto l = intersect_even(k);
    const auto ql = build_quotient(l);
    const SimpleGraph dbl = bipartite_double(pi);
    std::vector<int> map(ql.orbit_count(), -1);
    bool well_defined = true;
    for (std::uint32_t v = 0; v < (std::uint32_t{1} << n); ++v) {
      const int image = q.orbit_of(v) + (std::popcount(v) % 2) * pi.vertex_count();
      int& slot = map[ql.orbit_of(v)];
      if (slot >= 0 && slot != image) well_defined = false;
      slot = image;
    }
    const bool explicit_iso = well_defined && is_isomorphism(ql.graph(), dbl, map);
    const bool iso = explicit_iso || are_isomorphic(ql.graph(), dbl).has_value();
    r.witnesses["double_vertices"] = dbl.vertex_count();
    r.witnesses["double_iso_even_quotient"] = iso;
    r.witnesses["double_iso_by_parity_map"] = explicit_iso;
    if (!iso) failures.push_back("part (ii): double not isomorphic to the even-part quotient");

    if (d.at_least(4)) {
      // (iii) (x^K, i) -> x^K on each half of the double.
      const auto halves = halved_graphs(dbl);
      const SimpleGraph pi2 = distance2_graph(pi);
      json verdicts = json::array();
      for (const auto* vertices : {&halves.first_vertices, &halves.second_vertices}) {
        const SimpleGraph half = distance2_graph(dbl).induced(*vertices);
        std::vector<int> proj(vertices->size());
        for (std::size_t i = 0; i < vertices->size(); ++i) {
          proj[i] = (*vertices)[i] % pi.vertex_count();
        }
        const bool ok = is_isomorphism(half, pi2, proj) || are_isomorphic(half, pi2).has_value();
        verdicts.push_back(ok);
        if (!ok) failures.push_back("part (iii): half of the double not isomorphic to Pi_2");
      }
      r.witnesses["double_halves_iso_distance2"] = verdicts;
    }
  }

  if (failures.empty()) {
    r.status = ClaimStatus::Holds;
  } else {
    r.status = ClaimStatus::Fails;
    r.witnesses["counterexample"] = {{"group", describe_group(k)}, {"failures", failures}};
  }
  return r;
}

ClaimReport check_halved_iso(const CubeGroup& k) {
  const int n = k.dimension();
  const Distance d = min_distance(k);
  if (!is_even(k) || !d.at_least(2)) {
    throw Error(ErrorCode::PreconditionViolated, "needs an even group with d_K >= 2");
  }
  ClaimReport r;
  r.claim_id = "prop-halved";
  r.parameters["group"] = describe_group(k);
  r.witnesses["d_K"] = detail::distance_json(d);
  const auto q = build_quotient(k);
  const auto halves = halved_graphs(q.graph());
  const bool iso = are_isomorphic(halves.first, halves.second).has_value();
  r.witnesses["halves_isomorphic"] = iso;

  json failures = json::array();
  try {
    const auto nz = normalizer(k, Ambient::Full);
    const bool has_odd = std::any_of(nz.generators().begin(), nz.generators().end(),
                                     [](const CubeAutomorphism& g) { return !g.is_even(); });
    r.witnesses["normalizer_order"] = nz.order();
    r.witnesses["normalizer_has_odd_element"] = has_odd;
    if (has_odd && !iso) failures.push_back("normalizer has an odd element but halves differ");
  } catch (const Error& e) {
    if (e.code() != ErrorCode::Unsupported) throw;
    r.witnesses["normalizer_order"] = "unsupported";
  }
  if (n % 2 == 1 && !iso) failures.push_back("n is odd but halves differ");

  if (failures.empty()) {
    r.status = ClaimStatus::Holds;
  } else {
    r.status = ClaimStatus::Fails;
    r.witnesses["counterexample"] = {{"group", describe_group(k)}, {"failures", failures}};
  }
  return r;
}

json report_to_json(const ClaimReport& r) {
  json j;
  j["claim_id"] = r.claim_id;
  j["status"] = status_name(r.status);
  j["parameters"] = r.parameters;
  j["witnesses"] = r.witnesses;
  if (r.runtime_ms) j["runtime_ms"] = *r.runtime_ms;
  return j;
}

std::string reports_to_json(std::span<const ClaimReport> reports) {
  json arr = json::array();
  for (const auto& r : reports) arr.push_back(report_to_json(r));
  return arr.dump(2) + "\n";
}

}  // namespace qcube
