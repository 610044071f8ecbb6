#include <doctest.h>

#include <functional>
#include <random>
#include <set>

#include "oracles.hpp"
#include "qcube/error.hpp"
#include "qcube/verify.hpp"

using namespace qcube;

namespace {

CubeGroup group_of(int n, const std::vector<CubeAutomorphism>& gens) {
  return generate_group(n, gens);
}

CubeGroup quaternion_group() {
  return group_of(8, {{BitVector::parse("11110000"), Permutation::parse(8, "(1 5)(2 6)(3 7)(4 8)")},
                      {BitVector::parse("10100101"), Permutation::parse(8, "(1 2)(3 4)(5 6)(7 8)")}});
}

CubeGroup folded(int n) { return group_of(n, {CubeAutomorphism::translation_by(BitVector::all_ones(n))}); }

CubeGroup transposition(int n) {
  return group_of(n, {{BitVector::all_ones(n), Permutation::parse(n, "(1 2)")}});
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("class-distance check agrees on known groups") {
  const auto q = quaternion_group();
  for (int l = 1; l <= 3; ++l) {
    const auto r = check_theorem_class_dist(q, l);
    CHECK(r.status == ClaimStatus::Holds);
    CHECK(r.witnesses["distance_at_least_2l_plus_1"].get<bool>() == (l == 1));
    CHECK(r.witnesses["cube_like_params"].get<bool>() == (l == 1));
  }
  const auto f8 = check_theorem_class_dist(folded(8), 3);
  CHECK(f8.status == ClaimStatus::Holds);
  CHECK(f8.witnesses["cube_like_params"].get<bool>());
  const auto triv = check_theorem_class_dist(CubeGroup::trivial(5), 3);
  CHECK(triv.status == ClaimStatus::Holds);
  CHECK(triv.witnesses["d_K"] == "inf");
}

TEST_CASE("locally triangular halves") {
  for (const auto& k : {CubeGroup::trivial(5), folded(8), transposition(10)}) {
    const auto r = check_main_even(k);
    CHECK(r.status == ClaimStatus::Holds);
    for (const auto& h : r.witnesses["halves"]) {
      CHECK(h["connected"].get<bool>());
      CHECK(h["locally_T_n"].get<bool>());
    }
  }
  CHECK(check_main_even(folded(8)).witnesses["halves"][0]["vertices"] == 64);
}

TEST_CASE("main-even preconditions") {
  CHECK(code_of([] { check_main_even(folded(6)); }) == ErrorCode::PreconditionViolated);
  CHECK(code_of([] { check_main_even(folded(7)); }) == ErrorCode::PreconditionViolated);
  CHECK(code_of([] { check_main_even(transposition(9)); }) == ErrorCode::PreconditionViolated);
}

TEST_CASE("bipartition and double checks on odd and even groups") {
  const auto odd = check_even_lemma(folded(7));
  CHECK(odd.status == ClaimStatus::Holds);
  CHECK_FALSE(odd.witnesses["even"].get<bool>());
  CHECK_FALSE(odd.witnesses["bipartite"].get<bool>());
  CHECK(odd.witnesses["double_iso_even_quotient"].get<bool>());
  CHECK(odd.witnesses["double_vertices"] == 128);

  const auto even = check_even_lemma(folded(6));
  CHECK(even.status == ClaimStatus::Holds);
  CHECK(even.witnesses["bipartite"].get<bool>());
  CHECK(even.witnesses["parity_parts"].get<bool>());

  const auto weight_one = group_of(5, {CubeAutomorphism::translation_by(BitVector::parse("10000"))});
  CHECK(code_of([&] { check_even_lemma(weight_one); }) == ErrorCode::PreconditionViolated);
}

TEST_CASE("halved isomorphism verdicts") {
  const auto q = check_halved_iso(quaternion_group());
  CHECK(q.status == ClaimStatus::Holds);
  CHECK_FALSE(q.witnesses["halves_isomorphic"].get<bool>());

  const auto f = check_halved_iso(folded(8));
  CHECK(f.status == ClaimStatus::Holds);
  CHECK(f.witnesses["halves_isomorphic"].get<bool>());
  CHECK(f.witnesses["normalizer_has_odd_element"].get<bool>());

  CHECK(code_of([] { check_halved_iso(folded(7)); }) == ErrorCode::PreconditionViolated);
}

TEST_CASE("random groups have the requested order") {
  std::mt19937_64 rng(11);
  for (int n = 6; n <= 9; ++n) {
    for (std::uint64_t order : {2u, 4u, 8u}) {
      const auto k = random_two_group(rng, n, order);
      CHECK(k.order() == order);
      CHECK(k.dimension() == n);
    }
  }
  CHECK(code_of([&] { random_two_group(rng, 6, 6); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("random involutions are involutions") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    const auto g = random_involution(rng, 4 + i % 7);
    CHECK_FALSE(g.is_identity());
    CHECK((g * g).is_identity());
  }
}

TEST_CASE("default grid covers every order-2 subgroup for small n") {
  VerifyOptions o;
  o.random_per_dimension = 3;
  const auto grid = default_grid(o);
  std::set<std::pair<int, std::vector<std::uint32_t>>> seen;
  int small = 0;
  for (const auto& k : grid) {
    if (k.dimension() > 5) {
      CHECK(k.order() >= 2);
      continue;
    }
    CHECK(k.order() == 2);
    ++small;
    for (const auto& g : k.elements()) {
      if (!g.is_identity()) seen.insert({k.dimension(), oracle::vertex_map(g)});
    }
  }
  for (int n = 2; n <= 5; ++n) {
    std::size_t involutions = 0;
    for (const auto& g : oracle::all_cube_maps(n)) {
      bool identity = true, involution = true;
      for (std::uint32_t v = 0; v < g.size(); ++v) {
        identity = identity && g[v] == v;
        involution = involution && g[g[v]] == v;
      }
      if (!identity && involution) ++involutions;
    }
    std::size_t found = 0;
    for (const auto& [dim, map] : seen) found += dim == n ? 1 : 0;
    CHECK(found == involutions);
  }
  CHECK(static_cast<std::size_t>(small) == seen.size());
  CHECK(grid.size() == seen.size() + 15);
}

TEST_CASE("grid and reports are deterministic for a seed") {
  VerifyOptions o;
  o.seed = 7;
  o.random_per_dimension = 4;
  const std::vector<std::string> ids = {"thm-class-dist", "lem-covering"};
  const auto a = reports_to_json(run_claims(ids, o));
  const auto b = reports_to_json(run_claims(ids, o));
  CHECK(a == b);
  o.seed = 8;
  std::vector<std::string> gens_a, gens_b;
  for (const auto& k : default_grid(o)) gens_a.push_back(describe_group(k).dump());
  o.seed = 7;
  for (const auto& k : default_grid(o)) gens_b.push_back(describe_group(k).dump());
  CHECK(gens_a != gens_b);
}

TEST_CASE("unknown names are rejected") {
  CHECK(code_of([] { run_claim("nonsense", {}); }) == ErrorCode::UnknownClaim);
  CHECK(code_of([] { run_example("nonsense", 1); }) == ErrorCode::UnknownExample);
  const std::vector<std::string> ids = {"lem-nbd", "nonsense"};
  CHECK(code_of([&] { run_claims(ids, {}); }) == ErrorCode::UnknownClaim);
}

TEST_CASE("registry is sorted and unique") {
  const auto& reg = claim_registry();
  REQUIRE(reg.size() == 27);
  for (std::size_t i = 1; i < reg.size(); ++i) CHECK(reg[i - 1].id < reg[i].id);
  for (const auto& c : reg) CHECK_FALSE(c.statement.empty());
}

TEST_CASE("quaternion example witnesses") {
  const auto r = run_example("exp-halved", 1);
  CHECK(r.status == ClaimStatus::Holds);
  CHECK(r.witnesses["order"] == 8);
  CHECK(r.witnesses["d_K"] == 4);
  CHECK(r.witnesses["quotient_vertices"] == 32);
  CHECK(r.witnesses["sphere2_of_0"] == 13);
  CHECK(r.witnesses["sphere2_of_e1"] == 14);
  CHECK_FALSE(r.witnesses["halves_isomorphic"].get<bool>());
}

TEST_CASE("every registry claim holds") {
  VerifyOptions o;
  o.random_per_dimension = 4;
  o.timing = true;
  const std::vector<std::string> all = {"all"};
  const auto reports = run_claims(all, o);
  REQUIRE(reports.size() == claim_registry().size());
  for (std::size_t i = 0; i < reports.size(); ++i) {
    INFO(reports[i].claim_id);
    CHECK(reports[i].claim_id == claim_registry()[i].id);
    CHECK(reports[i].status == ClaimStatus::Holds);
    CHECK(reports[i].runtime_ms.has_value());
    CHECK_FALSE(reports[i].witnesses.contains("counterexample"));
  }
}

TEST_CASE("report serialization") {
  ClaimReport r;
  r.claim_id = "x";
  r.status = ClaimStatus::Fails;
  r.witnesses["counterexample"] = 1;
  const auto j = report_to_json(r);
  CHECK(j["claim_id"] == "x");
  CHECK(j["status"] == "FAILS");
  CHECK_FALSE(j.contains("runtime_ms"));
  r.runtime_ms = 2.5;
  CHECK(report_to_json(r)["runtime_ms"] == 2.5);
  const std::vector<ClaimReport> rs = {r};
  const auto text = reports_to_json(rs);
  CHECK(text.back() == '\n');
  CHECK(nlohmann::json::parse(text).size() == 1);
}
