#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "qcube/cube_symmetry.hpp"
#include "qcube/error.hpp"

using namespace qcube;

namespace {

CubeGroup quaternion_group() {
  const std::vector<CubeAutomorphism> gens = {
      {BitVector::parse("11110000"), Permutation::parse(8, "(1 5)(2 6)(3 7)(4 8)")},
      {BitVector::parse("10100101"), Permutation::parse(8, "(1 2)(3 4)(5 6)(7 8)")},
  };
  return generate_group(8, gens);
}

}  // namespace

TEST_CASE("bit vectors") {
  const auto v = BitVector::parse("1100");
  CHECK(v.dimension() == 4);
  CHECK(v.bits() == 0b0011);
  CHECK(v.weight() == 2);
  CHECK(v.to_string() == "1100");
  CHECK((v ^ v) == BitVector::zero(4));
  CHECK(BitVector::unit(5, {0, 4}).to_string() == "10001");
  CHECK_THROWS_AS(BitVector(3, 0b1000), Error);
  CHECK_THROWS_AS(BitVector::parse("10a1"), Error);
  CHECK_THROWS_AS(BitVector::parse(""), Error);
  CHECK_THROWS_AS(v ^ BitVector::zero(5), Error);
}

TEST_CASE("permutations parse, print and compose") {
  const auto p = Permutation::parse(8, "(1 5)(2 6)(3 7)(4 8)");
  CHECK(p.to_string() == "(1 5)(2 6)(3 7)(4 8)");
  CHECK(p[0] == 4);
  CHECK((p * p).is_identity());
  CHECK(Permutation::parse(3, "id").is_identity());
  CHECK(Permutation(3).to_string() == "id");
  const auto c = Permutation::parse(4, "(1 2 3)");
  CHECK((c * c.inverse()).is_identity());
  CHECK(c.fixed_points() == std::vector<int>{3});
  CHECK(c.cycle_type() == std::vector<int>{3, 3, 3, 1});
  // Left factor first: 1 -> 2 under c, then 2 -> 3 under c again.
  CHECK((c * c)[0] == 2);
  CHECK_THROWS_AS(Permutation::parse(4, "(1 5)"), Error);
  CHECK_THROWS_AS(Permutation::parse(4, "(1 2"), Error);
  CHECK_THROWS_AS(Permutation::parse(4, "(1 2)(2 3)"), Error);
  CHECK_THROWS_AS(Permutation(std::vector<int>{0, 0}), Error);
}

TEST_CASE("action follows the coordinate convention") {
  // (y, sigma) sends x + e_i to x + e_{i^sigma} when it fixes x.
  const CubeAutomorphism g(BitVector::parse("0000"), Permutation::parse(4, "(1 3)"));
  CHECK(act(g, BitVector::parse("1000")) == BitVector::parse("0010"));
  const CubeAutomorphism t = CubeAutomorphism::translation_by(BitVector::parse("0110"));
  CHECK(act(t, BitVector::parse("1100")) == BitVector::parse("1010"));
  const auto q = CubeAutomorphism(BitVector::parse("11110000"),
                                  Permutation::parse(8, "(1 5)(2 6)(3 7)(4 8)"));
  CHECK(act(q, BitVector::zero(8)) == BitVector::parse("11110000"));
  CHECK_THROWS_AS(act(q, BitVector::zero(7)), Error);
  CHECK(q.to_string() == "x=11110000 perm=(1 5)(2 6)(3 7)(4 8)");
}

TEST_CASE("right action law and inverses on random triples") {
  std::mt19937_64 rng(11);
  for (int n = 3; n <= 10; ++n) {
    for (int trial = 0; trial < 40; ++trial) {
      const auto g = oracle::random_element(rng, n);
      const auto h = oracle::random_element(rng, n);
      const BitVector v(n, static_cast<std::uint32_t>(rng()) & low_mask(n));
      CHECK(act(g * h, v) == act(h, act(g, v)));
      CHECK((g * g.inverse()).is_identity());
      CHECK((g.inverse() * g).is_identity());
      const auto map = oracle::vertex_map(g);
      CHECK(act(g, v).bits() == map[v.bits()]);
    }
  }
}

TEST_CASE("closed-form element distance matches the vertex minimum") {
  std::mt19937_64 rng(5);
  for (int n = 1; n <= 12; ++n) {
    for (int trial = 0; trial < (n <= 8 ? 60 : 15); ++trial) {
      const auto g = oracle::random_element(rng, n);
      if (g.is_identity()) continue;
      CHECK(element_min_distance(g) == oracle::element_min_distance(g));
    }
  }
  CHECK_THROWS_AS(element_min_distance(CubeAutomorphism::identity(4)), Error);
}

TEST_CASE("every element of Aut(Q_4) has the vertex-minimum distance") {
  int checked = 0;
  for_each_cube_automorphism(4, [&](const CubeAutomorphism& g) {
    if (!g.is_identity()) {
      CHECK(element_min_distance(g) == oracle::element_min_distance(g));
    }
    ++checked;
    return true;
  });
  CHECK(checked == 384);
}

TEST_CASE("quaternion group") {
  const auto k = quaternion_group();
  CHECK(k.order() == 8);
  CHECK(is_even(k));
  CHECK(is_semiregular(k));
  CHECK(min_distance(k) == Distance(4));
  CHECK(k.elements().front().is_identity());
  const auto ref = oracle::closure(8, k.generators());
  CHECK(ref.size() == 8);
  CHECK(oracle::min_distance(ref) == 4);
  for (const auto& g : k.elements()) {
    for (const auto& h : k.elements()) CHECK(k.contains(g * h));
  }
}

TEST_CASE("small groups and distances") {
  CHECK(generate_group(5, {}).order() == 1);
  CHECK(min_distance(CubeGroup::trivial(5)).is_infinite());
  CHECK(min_distance(CubeGroup::trivial(5)).to_string() == "inf");
  const std::vector<CubeAutomorphism> ones = {CubeAutomorphism::translation_by(BitVector::all_ones(8))};
  const auto folded = generate_group(8, ones);
  CHECK(folded.order() == 2);
  CHECK(min_distance(folded) == Distance(8));
  const std::vector<CubeAutomorphism> swap = {{BitVector::zero(4), Permutation::parse(4, "(1 2)")}};
  CHECK(!is_semiregular(generate_group(4, swap)));
  const std::vector<CubeAutomorphism> odd = {CubeAutomorphism::translation_by(BitVector::parse("1000"))};
  CHECK(!is_even(generate_group(4, odd)));
  CHECK(intersect_even(generate_group(4, odd)).order() == 1);
  const std::vector<CubeAutomorphism> big = {
      {BitVector::zero(8), Permutation::parse(8, "(1 2 3 4 5 6 7 8)")},
      {BitVector::zero(8), Permutation::parse(8, "(1 2)")}};
  CHECK_THROWS_AS(generate_group(8, big, 1000), Error);
  const std::vector<CubeAutomorphism> mixed = {CubeAutomorphism::identity(3),
                                               CubeAutomorphism::identity(4)};
  CHECK_THROWS_AS(generate_group(4, mixed), Error);
}

TEST_CASE("random groups agree with the closure oracle") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 4);
    std::vector<CubeAutomorphism> gens;
    const int count = 1 + static_cast<int>(rng() % 2);
    for (int i = 0; i < count; ++i) gens.push_back(oracle::random_involution(rng, n));
    const auto k = generate_group(n, gens);
    const auto ref = oracle::closure(n, gens);
    CHECK(k.order() == ref.size());
    const int d = oracle::min_distance(ref);
    if (d < 0) {
      CHECK(min_distance(k).is_infinite());
    } else {
      CHECK(min_distance(k) == Distance(d));
    }
    const auto g = oracle::random_element(rng, n);
    const auto c = conjugate_group(k, g);
    CHECK(c.order() == k.order());
    CHECK(min_distance(c) == min_distance(k));
    for (const auto& h : k.elements()) CHECK(c.contains(g.inverse() * h * g));

    const auto l = intersect_even(k);
    CHECK((k.order() == l.order() || k.order() == 2 * l.order()));
    for (const auto& h : k.elements()) CHECK(l.contains(h) == h.is_even());
  }
}

TEST_CASE("translation groups behave like linear codes") {
  // [7,4] Hamming code from its generator matrix rows.
  const std::vector<CubeAutomorphism> rows = {
      CubeAutomorphism::translation_by(BitVector::parse("1000110")),
      CubeAutomorphism::translation_by(BitVector::parse("0100101")),
      CubeAutomorphism::translation_by(BitVector::parse("0010011")),
      CubeAutomorphism::translation_by(BitVector::parse("0001111")),
  };
  const auto code = generate_group(7, rows);
  CHECK(code.order() == 16);
  int min_weight = 8;
  for (const auto& c : code.elements()) {
    if (!c.is_identity()) min_weight = std::min(min_weight, c.translation().weight());
  }
  CHECK(min_weight == 3);
  CHECK(min_distance(code) == Distance(3));

  std::mt19937_64 rng(3);
  const auto g = oracle::random_element(rng, 7);
  const auto conjugate = conjugate_group(code, g);
  for (const auto& c : conjugate.elements()) CHECK(c.perm().is_identity());

  for (std::uint32_t x = 1; x < 64; ++x) {
    const std::vector<CubeAutomorphism> gen = {CubeAutomorphism::translation_by(BitVector(6, x))};
    CHECK(min_distance(generate_group(6, gen)) == Distance(std::popcount(x)));
  }
}

TEST_CASE("cyclic groups with distance n-1 or more are long translations") {
  for (int n = 4; n <= 6; ++n) {
    int translations = 0;
    int others = 0;
    for_each_cube_automorphism(n, [&](const CubeAutomorphism& g) {
      if (g.is_identity() || element_min_distance(g) < n - 1) return true;
      const std::vector<CubeAutomorphism> gen = {g};
      const auto d = min_distance(generate_group(n, gen));
      if (g.perm().is_identity()) {
        CHECK(g.translation().weight() >= n - 1);
        CHECK(d.at_least(n - 1));
        ++translations;
      } else {
        // (y, (i j)) with y odd on {i, j} and 1 elsewhere: its square is e_{i,j}.
        CHECK(g.perm().cycles().size() == 1);
        CHECK(g.perm().fixed_points().size() == static_cast<std::size_t>(n - 2));
        CHECK(d == Distance(2));
        ++others;
      }
      return true;
    });
    CHECK(translations == n + 1);
    CHECK(others == n * (n - 1));
  }
}

TEST_CASE("hyperoctahedral order") {
  CHECK(hyperoctahedral_order(3) == 48u);
  CHECK(hyperoctahedral_order(8) == 10321920u);
  CHECK(!hyperoctahedral_order(32).has_value());
}
