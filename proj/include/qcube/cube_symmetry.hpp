#pragma once

// Exact arithmetic in Aut(Q_n) = F_2^n : S_n.
//
// Conventions used throughout the library:
//   - coordinate i (0-based in the C++ API, i+1 in every text format) is bit i
//     of the machine word holding a vertex;
//   - permutations act on the right; for sigma, v^sigma sends e_i to e_{i^sigma};
//   - (y, sigma) acts by v -> v^sigma + y, and (y,sigma)(z,tau) = (y^tau + z, sigma tau),
//     so v^{gh} = (v^g)^h.

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace qcube {

inline constexpr int kMaxDimension = 32;
inline constexpr std::uint64_t kDefaultGroupCap = std::uint64_t{1} << 20;

/// Mask with the low `n` bits set.
constexpr std::uint32_t low_mask(int n) noexcept {
  return n >= 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1;
}

/// An element of F_2^n.
class BitVector {
 public:
  BitVector() = default;
  BitVector(int n, std::uint32_t bits);

  static BitVector zero(int n) { return BitVector(n, 0); }
  static BitVector all_ones(int n) { return BitVector(n, low_mask(n)); }
  /// e_{i_1,...,i_m} with 0-based coordinates.
  static BitVector unit(int n, std::initializer_list<int> coords);
  /// Parses "0110..." with coordinate 1 leftmost.
  static BitVector parse(std::string_view text);

  int dimension() const noexcept { return n_; }
  std::uint32_t bits() const noexcept { return bits_; }
  int weight() const noexcept;
  bool test(int i) const noexcept { return (bits_ >> i) & 1u; }

  BitVector operator^(const BitVector& other) const;
  BitVector& operator^=(const BitVector& other) { return *this = *this ^ other; }

  /// Coordinate 1 leftmost.
  std::string to_string() const;

  friend bool operator==(const BitVector&, const BitVector&) = default;
  friend auto operator<=>(const BitVector&, const BitVector&) = default;

 private:
  int n_ = 0;
  std::uint32_t bits_ = 0;
};

/// A permutation of the coordinates {0, ..., degree-1}.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(int degree);
  /// images[i] = i^sigma; must be a bijection.
  explicit Permutation(const std::vector<int>& images);
  /// Disjoint or not, cycles are multiplied left to right; entries are 0-based.
  static Permutation from_cycles(int degree,
                                 const std::vector<std::vector<int>>& cycles);
  /// Parses "id" or "(1 5)(2 6)" (1-based).
  static Permutation parse(int degree, std::string_view text);

  int degree() const noexcept { return degree_; }
  int operator[](int i) const noexcept { return images_[i]; }

  /// Product applying *this first.
  Permutation operator*(const Permutation& other) const;
  Permutation inverse() const;
  bool is_identity() const noexcept;
  std::vector<int> fixed_points() const;
  /// Cycles of length >= 2, each starting at its smallest point, sorted.
  std::vector<std::vector<int>> cycles() const;
  /// Cycle lengths of every point's cycle, fixed points included.
  std::vector<int> cycle_type() const;

  /// The coordinate permutation of a vertex: bit i moves to bit i^sigma.
  std::uint32_t apply(std::uint32_t bits) const noexcept;

  /// "id" or 1-based cycle notation.
  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::uint8_t degree_ = 0;
  std::array<std::uint8_t, kMaxDimension> images_{};
};

/// One element (translation, perm) of Aut(Q_n).
class CubeAutomorphism {
 public:
  CubeAutomorphism() = default;
  CubeAutomorphism(BitVector translation, Permutation perm);

  static CubeAutomorphism identity(int n) {
    return {BitVector::zero(n), Permutation(n)};
  }
  static CubeAutomorphism translation_by(BitVector x) {
    return {x, Permutation(x.dimension())};
  }

  int dimension() const noexcept { return translation_.dimension(); }
  const BitVector& translation() const noexcept { return translation_; }
  const Permutation& perm() const noexcept { return perm_; }

  BitVector act(const BitVector& v) const;
  std::uint32_t act_bits(std::uint32_t v) const noexcept {
    return perm_.apply(v) ^ translation_.bits();
  }

  CubeAutomorphism operator*(const CubeAutomorphism& other) const;
  CubeAutomorphism inverse() const;
  bool is_identity() const noexcept {
    return translation_.bits() == 0 && perm_.is_identity();
  }
  bool is_even() const noexcept { return translation_.weight() % 2 == 0; }

  /// "x=<bits> perm=<cycles>", the group-file generator syntax.
  std::string to_string() const;

  friend bool operator==(const CubeAutomorphism&,
                         const CubeAutomorphism&) = default;
  friend auto operator<=>(const CubeAutomorphism&,
                          const CubeAutomorphism&) = default;

 private:
  BitVector translation_;
  Permutation perm_;
};

struct CubeAutomorphismHash {
  std::size_t operator()(const CubeAutomorphism& g) const noexcept;
};

/// v^g for g = (y, sigma).
BitVector act(const CubeAutomorphism& g, const BitVector& v);

/// Minimum distance value; infinity for the trivial group.
class Distance {
 public:
  static Distance infinite() { return Distance(); }
  explicit Distance(int value) : value_(value) {}

  bool is_infinite() const noexcept { return !value_.has_value(); }
  /// Throws if infinite.
  int value() const;
  bool at_least(int k) const noexcept { return !value_ || *value_ >= k; }
  /// "inf" or the decimal value.
  std::string to_string() const;

  friend bool operator==(const Distance&, const Distance&) = default;

 private:
  Distance() = default;
  std::optional<int> value_;
};

/// A finite subgroup K of Aut(Q_n). Groups produced by closure always carry
/// their element list; normalizers larger than the cap carry only generators
/// and the order.
class CubeGroup {
 public:
  static CubeGroup trivial(int n);

  int dimension() const noexcept { return n_; }
  const std::vector<CubeAutomorphism>& generators() const noexcept {
    return generators_;
  }
  bool is_materialized() const noexcept { return !elements_.empty(); }
  /// Breadth-first closure order, identity first. Throws GroupTooLarge when
  /// the group was not materialized.
  const std::vector<CubeAutomorphism>& elements() const;
  std::uint64_t order() const noexcept { return order_; }
  bool is_trivial() const noexcept { return order_ == 1; }
  bool contains(const CubeAutomorphism& g) const;

 private:
  friend CubeGroup generate_group(int, std::span<const CubeAutomorphism>,
                                  std::uint64_t);
  friend CubeGroup make_unmaterialized_group(int,
                                             std::vector<CubeAutomorphism>,
                                             std::uint64_t);

  int n_ = 0;
  std::vector<CubeAutomorphism> generators_;
  std::vector<CubeAutomorphism> elements_;
  std::unordered_map<CubeAutomorphism, std::size_t, CubeAutomorphismHash>
      index_;
  std::uint64_t order_ = 1;
};

/// Closure of `gens` by breadth-first search from the identity, generators
/// applied in input order. Throws GroupTooLarge past `cap` elements.
CubeGroup generate_group(int n, std::span<const CubeAutomorphism> gens,
                         std::uint64_t cap = kDefaultGroupCap);

/// A group known only by generators and order (used for large normalizers).
CubeGroup make_unmaterialized_group(int n, std::vector<CubeAutomorphism> gens,
                                    std::uint64_t order);

/// min over v of wt(v + v^g), from the cycle decomposition of the
/// permutation part: a fixed point i contributes y_i and every longer cycle
/// contributes the parity of y on that cycle. Throws IdentityElement.
int element_min_distance(const CubeAutomorphism& g);

/// d_K.
Distance min_distance(const CubeGroup& k);

/// True iff every translation part has even weight (K <= E_n : S_n).
bool is_even(const CubeGroup& k);

/// True iff d_K >= 1.
bool is_semiregular(const CubeGroup& k);

/// g^{-1} K g, generators conjugated in order.
CubeGroup conjugate_group(const CubeGroup& k, const CubeAutomorphism& g,
                          std::uint64_t cap = kDefaultGroupCap);

/// K intersected with E_n : S_n.
CubeGroup intersect_even(const CubeGroup& k);

/// Calls `fn` on every element of Aut(Q_n): permutations in lexicographic
/// order, translations ascending within each. Stops early if fn returns false.
void for_each_cube_automorphism(
    int n, const std::function<bool(const CubeAutomorphism&)>& fn);

/// |Aut(Q_n)| = 2^n n!, or nullopt when it overflows 64 bits.
std::optional<std::uint64_t> hyperoctahedral_order(int n);

enum class Ambient { Full, Even };

enum class NormalizerTier {
  Auto,
  BruteForce,   // scan of Aut(Q_n), needs 2^n n! <= 1e8
  Involution,   // |K| = 2, centralizer by cycle-structure backtracking
};

/// N_{ambient}(K). The element list is materialized when the order is at
/// most `cap`. Throws Unsupported when no tier applies.
CubeGroup normalizer(const CubeGroup& k, Ambient ambient,
                     NormalizerTier tier = NormalizerTier::Auto,
                     std::uint64_t cap = kDefaultGroupCap);

/// Some g in Aut(Q_n) with g^{-1} K g = L, by a scan of Aut(Q_n).
/// Throws Unsupported when 2^n n! > 1e8.
std::optional<CubeAutomorphism> find_conjugator(const CubeGroup& k,
                                                const CubeGroup& l);

}  // namespace qcube
