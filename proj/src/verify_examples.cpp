#include <algorithm>
#include <bit>
#include <map>
#include <numeric>

#include "verify_support.hpp"

namespace qcube {

using detail::json;

namespace {

ClaimReport finish(ClaimReport r, const json& failures, const json& context) {
  if (failures.empty()) {
    r.status = ClaimStatus::Holds;
  } else {
    r.status = ClaimStatus::Fails;
    r.witnesses["counterexample"] = {{"context", context}, {"failures", failures}};
  }
  return r;
}

/// Orbit ids of (Q_n)_K reached from `start` under x^K -> (x^g)^K for the
/// generators of a group normalizing K.
std::vector<int> normalizer_orbit(const QuotientGraph& q, const CubeGroup& nz, int start) {
  std::vector<char> seen(q.orbit_count(), 0);
  std::vector<int> queue = {start};
  seen[start] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::uint32_t rep = q.representatives()[queue[head]];
    for (const auto& g : nz.generators()) {
      const int next = q.orbit_of(g.act_bits(rep));
      if (!seen[next]) {
        seen[next] = 1;
        queue.push_back(next);
      }
    }
  }
  std::sort(queue.begin(), queue.end());
  return queue;
}

int orbit_count(const std::vector<int>& ids) {
  return ids.empty() ? 0 : *std::max_element(ids.begin(), ids.end()) + 1;
}

ClaimReport example_exp_halved() {
  ClaimReport r;
  r.claim_id = "ex-exp-halved";
  const std::vector<CubeAutomorphism> gens = {
      {BitVector::unit(8, {0, 1, 2, 3}), Permutation::parse(8, "(1 5)(2 6)(3 7)(4 8)")},
      {BitVector::unit(8, {0, 2, 5, 7}), Permutation::parse(8, "(1 2)(3 4)(5 6)(7 8)")},
  };
  const auto k = generate_group(8, gens);
  r.parameters["group"] = describe_group(k);
  json failures = json::array();

  int involutions = 0;
  for (const auto& g : k.elements()) {
    if (!g.is_identity() && (g * g).is_identity()) ++involutions;
  }
  // Q_8 is the only group of order 8 with a unique involution.
  const bool quaternion = k.order() == 8 && involutions == 1;
  const Distance d = min_distance(k);
  const auto q = build_quotient(k);
  const bool bipartite = std::holds_alternative<Bipartition>(bipartite_parts(q.graph()));
  const auto s0 = sphere(q, natural_map(q, BitVector::zero(8)), 2).size();
  const auto s1 = sphere(q, natural_map(q, BitVector::unit(8, {0})), 2).size();
  const auto halves = halved_graphs(q.graph());
  const bool iso = are_isomorphic(halves.first, halves.second).has_value();
  auto degrees = [](const SimpleGraph& g) {
    std::map<int, int> hist;
    for (int v = 0; v < g.vertex_count(); ++v) ++hist[g.degree(v)];
    json j = json::object();
    for (const auto& [deg, count] : hist) j[std::to_string(deg)] = count;
    return j;
  };

  r.witnesses["order"] = k.order();
  r.witnesses["involutions"] = involutions;
  r.witnesses["even"] = is_even(k);
  r.witnesses["d_K"] = detail::distance_json(d);
  r.witnesses["quotient_vertices"] = q.graph().vertex_count();
  r.witnesses["bipartite"] = bipartite;
  r.witnesses["sphere2_of_0"] = s0;
  r.witnesses["sphere2_of_e1"] = s1;
  r.witnesses["half_degrees"] = json::array({degrees(halves.first), degrees(halves.second)});
  r.witnesses["halves_isomorphic"] = iso;

  if (!quaternion) failures.push_back("not the quaternion group of order 8");
  if (!is_even(k)) failures.push_back("not even");
  if (d != Distance(4)) failures.push_back("d_K != 4");
  if (q.graph().vertex_count() != 32) failures.push_back("quotient order != 32");
  if (!bipartite) failures.push_back("quotient not bipartite");
  if (s0 != 13) failures.push_back("|Pi_2(0^K)| != 13");
  if (s1 != 14) failures.push_back("|Pi_2(e_1^K)| != 14");
  if (iso) failures.push_back("halves are isomorphic");
  return finish(std::move(r), failures, describe_group(k));
}

ClaimReport example_k2(std::uint64_t seed) {
  ClaimReport r;
  r.claim_id = "ex-k2";
  r.parameters["seed"] = seed;
  r.parameters["per_dimension"] = 200;
  r.parameters["dimensions"] = json::array({4, 5, 6, 7, 8, 9, 10});
  std::mt19937_64 rng(seed);
  detail::Tally tally;
  for (int n = 4; n <= 10; ++n) {
    for (int i = 0; i < 200; ++i) {
      const auto g = random_involution(rng, n);
      int formula = 0;
      for (int f : g.perm().fixed_points()) formula += g.translation().test(f) ? 1 : 0;
      int brute = n + 1;
      for (std::uint32_t v = 0; v < (std::uint32_t{1} << n); ++v) {
        brute = std::min(brute, std::popcount(v ^ g.act_bits(v)));
      }
      const Distance d = min_distance(detail::single(g));
      tally.expect(d == Distance(formula) && brute == formula,
                   {{"element", g.to_string()},
                    {"formula", formula},
                    {"brute_force", brute},
                    {"d_K", detail::distance_json(d)}});
    }
  }
  tally.finish(r);
  return r;
}

ClaimReport example_large() {
  ClaimReport r;
  r.claim_id = "ex-large";
  r.parameters["dimensions"] = json::array({4, 5, 6, 7, 8});
  json per_n = json::array();
  json failures = json::array();
  for (int n = 4; n <= 8; ++n) {
    std::uint64_t scanned = 0;
    std::vector<CubeAutomorphism> translations;
    std::vector<CubeAutomorphism> others;
    for_each_cube_automorphism(n, [&](const CubeAutomorphism& g) {
      ++scanned;
      if (g.is_identity() || element_min_distance(g) < n - 1) return true;
      (g.perm().is_identity() ? translations : others).push_back(g);
      return true;
    });
    // Any K with d_K >= n-1 consists of such elements, and each cyclic
    // subgroup must itself reach n-1.
    int cyclic_large = 0;
    for (const auto& g : others) {
      if (min_distance(detail::single(g)).at_least(n - 1)) {
        ++cyclic_large;
        failures.push_back("non-translation with large cyclic distance: " + g.to_string());
      }
    }
    for (const auto& t : translations) {
      if (t.translation().weight() < n - 1) failures.push_back("short translation " + t.to_string());
      if (min_distance(detail::single(t)) != Distance(t.translation().weight())) {
        failures.push_back("d({0,x}) != wt(x) for " + t.to_string());
      }
    }
    int large_pairs = 0;
    for (std::size_t a = 0; a < translations.size(); ++a) {
      for (std::size_t b = a + 1; b < translations.size(); ++b) {
        const std::vector<CubeAutomorphism> pair = {translations[a], translations[b]};
        if (min_distance(generate_group(n, pair)).at_least(n - 1)) ++large_pairs;
      }
    }
    if (large_pairs > 0) failures.push_back("two translations generate a group with d >= n-1");
    if (translations.size() != static_cast<std::size_t>(n + 1)) {
      failures.push_back("expected n+1 translations of weight >= n-1");
    }
    per_n.push_back({{"n", n},
                     {"elements_scanned", scanned},
                     {"translations_weight_at_least_n_minus_1", translations.size()},
                     {"order4_elements_with_element_distance_n_minus_1", others.size()},
                     {"non_translations_with_cyclic_distance_n_minus_1", cyclic_large},
                     {"translation_pairs_with_distance_n_minus_1", large_pairs}});
  }
  r.witnesses["per_dimension"] = per_n;
  return finish(std::move(r), failures, "exhaustive scan");
}

/// |{tau : x^tau = x, tau commutes with sigma}| by enumerating S_n.
std::uint64_t count_described_perms(const CubeAutomorphism& k) {
  const int n = k.dimension();
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 0);
  std::uint64_t count = 0;
  do {
    const Permutation tau(images);
    if (tau.apply(k.translation().bits()) == k.translation().bits() &&
        tau * k.perm() == k.perm() * tau) {
      ++count;
    }
  } while (std::next_permutation(images.begin(), images.end()));
  return count;
}

bool in_described_normalizer(const CubeAutomorphism& k, const CubeAutomorphism& g) {
  return k.perm().apply(g.translation().bits()) == g.translation().bits() &&
         g.perm().apply(k.translation().bits()) == k.translation().bits() &&
         g.perm() * k.perm() == k.perm() * g.perm();
}

ClaimReport example_not_vt() {
  ClaimReport r;
  r.claim_id = "ex-not-vt";
  json cases = json::array();
  json failures = json::array();
  for (int n : {8, 9}) {
    for (bool drop : {false, true}) {
      const auto k = detail::transposition_group(n, drop);
      const auto& inv = k.generators().front();
      const int expected_d = drop ? n - 3 : n - 2;
      const Distance d = min_distance(k);
      const auto nz = normalizer(k, Ambient::Full);
      const std::uint64_t fixed_translations = std::uint64_t{1} << (n - 1);
      const std::uint64_t described = fixed_translations * count_described_perms(inv);
      const bool gens_described =
          std::all_of(nz.generators().begin(), nz.generators().end(),
                      [&](const CubeAutomorphism& g) { return in_described_normalizer(inv, g); });
      const auto q = build_quotient(k);
      const auto orbit = normalizer_orbit(q, nz, q.orbit_of(0));
      const int e_i = q.orbit_of(1u);
      const bool e_i_outside = !std::binary_search(orbit.begin(), orbit.end(), e_i);
      const auto aut = automorphism_group(q.graph());
      const auto orbits = PermGroup(aut.degree, aut.generators).orbit_ids();
      const int count = orbit_count(orbits);
      const BigInt expected_aut = BigInt(nz.order()) / k.order();
      cases.push_back({{"group", describe_group(k)},
                       {"d_K", detail::distance_json(d)},
                       {"normalizer_order", nz.order()},
                       {"described_order", described},
                       {"orbit_of_0_under_N", orbit.size()},
                       {"e_i_outside_orbit", e_i_outside},
                       {"aut_order", detail::to_string(aut.order)},
                       {"aut_vertex_orbits", count}});
      const std::string tag = "n=" + std::to_string(n) + (drop ? " wt n-1" : " wt n") + ": ";
      if (d != Distance(expected_d)) failures.push_back(tag + "unexpected d_K");
      if (nz.order() != described || !gens_described) {
        failures.push_back(tag + "normalizer differs from its description");
      }
      if (!e_i_outside) failures.push_back(tag + "e_i^K lies in the N-orbit of 0^K");
      if (count < 2) failures.push_back(tag + "quotient is vertex-transitive");
      if (aut.order != expected_aut) failures.push_back(tag + "|Aut| != |N|/|K|");
    }
  }
  r.witnesses["cases"] = cases;
  return finish(std::move(r), failures, "transposition groups");
}

ClaimReport example_lt_not_vt() {
  ClaimReport r;
  r.claim_id = "ex-lt-not-vt";
  const int n = 10;
  const auto k = detail::transposition_group(n);
  r.parameters["group"] = describe_group(k);
  json failures = json::array();
  const Distance d = min_distance(k);
  const auto q = build_quotient(k);
  const auto halves = halved_graphs(q.graph());
  // The half through 0^K is the even-weight one.
  const SimpleGraph& gamma = halves.first;
  const auto nz = normalizer(k, Ambient::Full);
  const auto ne = normalizer(k, Ambient::Even);
  const auto orbit = normalizer_orbit(q, nz, q.orbit_of(0));
  json outside = json::array();
  for (int l = 2; l < n; ++l) {
    const int target = q.orbit_of((1u << 0) | (1u << l));
    if (!std::binary_search(orbit.begin(), orbit.end(), target)) outside.push_back(l + 1);
  }
  const auto aut = automorphism_group(gamma);
  const int count = orbit_count(PermGroup(aut.degree, aut.generators).orbit_ids());
  const BigInt expected = BigInt(ne.order()) / k.order();
  const bool local = detail::first_non_local_vertex(gamma, triangular_graph(n)) < 0;

  r.witnesses["even"] = is_even(k);
  r.witnesses["d_K"] = detail::distance_json(d);
  r.witnesses["half_vertices"] = gamma.vertex_count();
  r.witnesses["locally_T_n"] = local;
  r.witnesses["even_normalizer_order"] = ne.order();
  r.witnesses["normalizer_order"] = nz.order();
  r.witnesses["orbit_of_0_under_N"] = orbit.size();
  r.witnesses["l_with_e_il_outside_orbit"] = outside;
  r.witnesses["aut_order"] = detail::to_string(aut.order);
  r.witnesses["aut_vertex_orbits"] = count;

  if (!is_even(k)) failures.push_back("not even");
  if (d != Distance(8)) failures.push_back("d_K != 8");
  if (!local) failures.push_back("half not locally T_10");
  if (outside.size() != static_cast<std::size_t>(n - 2)) {
    failures.push_back("some e_{i,l}^K lies in the orbit of 0^K");
  }
  if (count < 2) failures.push_back("half is vertex-transitive");
  if (aut.order != expected) failures.push_back("|Aut| != |N_even|/|K|");
  return finish(std::move(r), failures, describe_group(k));
}

ClaimReport example_valency_m() {
  ClaimReport r;
  r.claim_id = "ex-valency-m";
  json cases = json::array();
  json failures = json::array();
  for (int n = 2; n <= 7; ++n) {
    for (int m = 1; m < n; ++m) {
      std::vector<CubeAutomorphism> gens;
      for (int i = m; i < n; ++i) {
        gens.push_back(CubeAutomorphism::translation_by(BitVector::unit(n, {m - 1, i})));
      }
      const auto k = generate_group(n, gens);
      const auto q = build_quotient(k);
      const Distance d = min_distance(k);
      std::vector<int> restriction(std::size_t{1} << m);
      for (std::uint32_t v = 0; v < restriction.size(); ++v) restriction[v] = q.orbit_of(v);
      const bool bijective = q.orbit_count() == static_cast<int>(restriction.size());
      const bool isomorphism = bijective && is_isomorphism(hypercube(m), q.graph(), restriction);
      const bool params = has_cube_like_params(q.graph(), m, m + 1);
      cases.push_back({{"m", m},
                       {"n", n},
                       {"d_K", detail::distance_json(d)},
                       {"restriction_is_isomorphism", isomorphism},
                       {"cube_like_params", params}});
      const std::string tag = "(m,n)=(" + std::to_string(m) + "," + std::to_string(n) + "): ";
      if (d != Distance(2)) failures.push_back(tag + "d_K != 2");
      if (!isomorphism) failures.push_back(tag + "restriction is not an isomorphism");
      if (!params) failures.push_back(tag + "parameters differ from Q_m");
    }
  }
  r.witnesses["cases"] = cases;
  return finish(std::move(r), failures, "valency-m family");
}

ClaimReport example_small_n_halved() {
  ClaimReport r;
  r.claim_id = "small-n-halved";
  json cases = json::array();
  json failures = json::array();
  const std::vector<std::pair<int, int>> matching = {{0, 1}, {2, 3}, {4, 5}, {6, 7}};
  const SimpleGraph expected_graph[] = {complete_graph(2), complete_graph(4),
                                        complement(SimpleGraph::from_edges(8, matching))};
  const std::uint64_t expected_aut[] = {2, 24, 384};
  for (int n = 2; n <= 4; ++n) {
    const auto half = halved_graphs(hypercube(n)).first;
    const bool local = is_connected(half) &&
                       detail::first_non_local_vertex(half, triangular_graph(n)) < 0;
    const bool shape = are_isomorphic(half, expected_graph[n - 2]).has_value();
    const BigInt aut = automorphism_group(half).order;
    const std::uint64_t normalizer_quotient =
        normalizer(CubeGroup::trivial(n), Ambient::Even).order();
    cases.push_back({{"n", n},
                     {"locally_T_n", local},
                     {"is_halved_cube_shape", shape},
                     {"aut_order", detail::to_string(aut)},
                     {"even_normalizer_over_K", normalizer_quotient},
                     {"orders_agree", aut == normalizer_quotient}});
    const std::string tag = "n=" + std::to_string(n) + ": ";
    if (!local) failures.push_back(tag + "not connected and locally T_n");
    if (!shape) failures.push_back(tag + "unexpected halved cube");
    if (aut != expected_aut[n - 2]) failures.push_back(tag + "unexpected automorphism order");
    if ((aut == normalizer_quotient) != (n == 3)) {
      failures.push_back(tag + "orders should agree exactly when n = 3");
    }
  }
  r.witnesses["cases"] = cases;
  return finish(std::move(r), failures, "halved n-cubes");
}

}  // namespace

ClaimReport run_example(std::string_view name, std::uint64_t seed) {
  if (name == "exp-halved") return example_exp_halved();
  if (name == "K2") return example_k2(seed);
  if (name == "large") return example_large();
  if (name == "not-vt") return example_not_vt();
  if (name == "lt-not-vt") return example_lt_not_vt();
  if (name == "valency-m") return example_valency_m();
  if (name == "small-n-halved") return example_small_n_halved();
  throw Error(ErrorCode::UnknownExample, "unknown example '" + std::string(name) + "'");
}

}  // namespace qcube
