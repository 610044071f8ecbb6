#include "qcube/cube_symmetry.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <numeric>
#include <sstream>

#include "qcube/error.hpp"

namespace qcube {

namespace {

void require_dimension(int n) {
  if (n < 1 || n > kMaxDimension) {
    throw Error(ErrorCode::BadDimension,
                "dimension " + std::to_string(n) + " outside [1, 32]");
  }
}

void require_same_dimension(int a, int b) {
  if (a != b) {
    throw Error(ErrorCode::DimensionMismatch,
                "dimension mismatch: " + std::to_string(a) + " vs " +
                    std::to_string(b));
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// BitVector

BitVector::BitVector(int n, std::uint32_t bits) : n_(n), bits_(bits) {
  require_dimension(n);
  if ((bits & ~low_mask(n)) != 0) {
    throw Error(ErrorCode::InvalidArgument,
                "bit vector has set positions beyond dimension " +
                    std::to_string(n));
  }
}

BitVector BitVector::unit(int n, std::initializer_list<int> coords) {
  std::uint32_t bits = 0;
  for (int i : coords) {
    if (i < 0 || i >= n) {
      throw Error(ErrorCode::InvalidArgument,
                  "coordinate " + std::to_string(i) + " out of range");
    }
    bits |= std::uint32_t{1} << i;
  }
  return {n, bits};
}

BitVector BitVector::parse(std::string_view text) {
  const int n = static_cast<int>(text.size());
  if (n < 1 || n > kMaxDimension) {
    throw Error(ErrorCode::ParseError,
                "bit string length " + std::to_string(n) + " outside [1, 32]");
  }
  std::uint32_t bits = 0;
  for (int i = 0; i < n; ++i) {
    if (text[i] == '1') {
      bits |= std::uint32_t{1} << i;
    } else if (text[i] != '0') {
      throw Error(ErrorCode::ParseError,
                  std::string("invalid bit character '") + text[i] + "'");
    }
  }
  return {n, bits};
}

int BitVector::weight() const noexcept { return std::popcount(bits_); }

BitVector BitVector::operator^(const BitVector& other) const {
  require_same_dimension(n_, other.n_);
  BitVector out;
  out.n_ = n_;
  out.bits_ = bits_ ^ other.bits_;
  return out;
}

std::string BitVector::to_string() const {
  std::string s(n_, '0');
  for (int i = 0; i < n_; ++i) {
    if (test(i)) s[i] = '1';
  }
  return s;
}

// ---------------------------------------------------------------------------
// Permutation

Permutation::Permutation(int degree) {
  require_dimension(degree);
  degree_ = static_cast<std::uint8_t>(degree);
  for (int i = 0; i < degree; ++i) images_[i] = static_cast<std::uint8_t>(i);
}

Permutation::Permutation(const std::vector<int>& images) {
  const int n = static_cast<int>(images.size());
  require_dimension(n);
  std::uint32_t seen = 0;
  for (int i = 0; i < n; ++i) {
    const int img = images[i];
    if (img < 0 || img >= n || ((seen >> img) & 1u)) {
      throw Error(ErrorCode::InvalidArgument, "images do not form a bijection");
    }
    seen |= std::uint32_t{1} << img;
    images_[i] = static_cast<std::uint8_t>(img);
  }
  degree_ = static_cast<std::uint8_t>(n);
}

Permutation Permutation::from_cycles(
    int degree, const std::vector<std::vector<int>>& cycles) {
  Permutation result(degree);
  for (const auto& cycle : cycles) {
    std::vector<int> images(degree);
    std::iota(images.begin(), images.end(), 0);
    std::uint32_t seen = 0;
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      const int a = cycle[k];
      if (a < 0 || a >= degree) {
        throw Error(ErrorCode::InvalidArgument,
                    "cycle entry " + std::to_string(a + 1) + " out of range");
      }
      if ((seen >> a) & 1u) {
        throw Error(ErrorCode::InvalidArgument,
                    "cycle repeats point " + std::to_string(a + 1));
      }
      seen |= std::uint32_t{1} << a;
      images[a] = cycle[(k + 1) % cycle.size()];
    }
    result = result * Permutation(images);
  }
  return result;
}

Permutation Permutation::parse(int degree, std::string_view text) {
  require_dimension(degree);
  auto trimmed = text;
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.front()))) {
    trimmed.remove_prefix(1);
  }
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back()))) {
    trimmed.remove_suffix(1);
  }
  if (trimmed == "id") return Permutation(degree);
  if (trimmed.empty()) {
    throw Error(ErrorCode::ParseError, "empty permutation");
  }

  std::vector<std::vector<int>> cycles;
  std::vector<bool> seen(degree, false);
  std::size_t pos = 0;
  while (pos < trimmed.size()) {
    const char c = trimmed[pos];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++pos;
      continue;
    }
    if (c != '(') {
      throw Error(ErrorCode::ParseError,
                  std::string("expected '(' in cycle notation, found '") + c +
                      "'");
    }
    const auto close = trimmed.find(')', pos);
    if (close == std::string_view::npos) {
      throw Error(ErrorCode::ParseError, "unterminated cycle");
    }
    std::vector<int> cycle;
    std::string body(trimmed.substr(pos + 1, close - pos - 1));
    for (char& ch : body) {
      if (ch == ',') ch = ' ';
    }
    std::istringstream in(body);
    std::string token;
    while (in >> token) {
      if (!std::all_of(token.begin(), token.end(),
                       [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }) ||
          token.size() > 3) {
        throw Error(ErrorCode::ParseError, "invalid cycle entry '" + token + "'");
      }
      const int point = std::stoi(token);
      if (point < 1 || point > degree) {
        throw Error(ErrorCode::ParseError,
                    "cycle entry " + token + " outside [1, " +
                        std::to_string(degree) + "]");
      }
      cycle.push_back(point - 1);
    }
    if (cycle.empty()) throw Error(ErrorCode::ParseError, "empty cycle");
    for (int point : cycle) {
      if (seen[point]) {
        throw Error(ErrorCode::ParseError,
                    "point " + std::to_string(point + 1) + " appears twice");
      }
      seen[point] = true;
    }
    cycles.push_back(std::move(cycle));
    pos = close + 1;
  }
  try {
    return from_cycles(degree, cycles);
  } catch (const Error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

Permutation Permutation::operator*(const Permutation& other) const {
  require_same_dimension(degree_, other.degree_);
  Permutation out;
  out.degree_ = degree_;
  for (int i = 0; i < degree_; ++i) out.images_[i] = other.images_[images_[i]];
  return out;
}

Permutation Permutation::inverse() const {
  Permutation out;
  out.degree_ = degree_;
  for (int i = 0; i < degree_; ++i) {
    out.images_[images_[i]] = static_cast<std::uint8_t>(i);
  }
  return out;
}

bool Permutation::is_identity() const noexcept {
  for (int i = 0; i < degree_; ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

std::vector<int> Permutation::fixed_points() const {
  std::vector<int> fixed;
  for (int i = 0; i < degree_; ++i) {
    if (images_[i] == i) fixed.push_back(i);
  }
  return fixed;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::uint32_t seen = 0;
  for (int i = 0; i < degree_; ++i) {
    if (((seen >> i) & 1u) || images_[i] == i) continue;
    std::vector<int> cycle;
    for (int j = i; !((seen >> j) & 1u); j = images_[j]) {
      seen |= std::uint32_t{1} << j;
      cycle.push_back(j);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

std::vector<int> Permutation::cycle_type() const {
  std::vector<int> lengths(degree_, 1);
  for (const auto& cycle : cycles()) {
    for (int p : cycle) lengths[p] = static_cast<int>(cycle.size());
  }
  return lengths;
}

std::uint32_t Permutation::apply(std::uint32_t bits) const noexcept {
  std::uint32_t out = 0;
  while (bits != 0) {
    const int i = std::countr_zero(bits);
    bits &= bits - 1;
    out |= std::uint32_t{1} << images_[i];
  }
  return out;
}

std::string Permutation::to_string() const {
  const auto cs = cycles();
  if (cs.empty()) return "id";
  std::string s;
  for (const auto& cycle : cs) {
    s += '(';
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      if (k > 0) s += ' ';
      s += std::to_string(cycle[k] + 1);
    }
    s += ')';
  }
  return s;
}

// ---------------------------------------------------------------------------
// CubeAutomorphism

CubeAutomorphism::CubeAutomorphism(BitVector translation, Permutation perm)
    : translation_(translation), perm_(perm) {
  require_same_dimension(translation.dimension(), perm.degree());
}

BitVector CubeAutomorphism::act(const BitVector& v) const {
  require_same_dimension(dimension(), v.dimension());
  return {dimension(), act_bits(v.bits())};
}

CubeAutomorphism CubeAutomorphism::operator*(const CubeAutomorphism& other) const {
  require_same_dimension(dimension(), other.dimension());
  CubeAutomorphism out;
  out.translation_ = BitVector(
      dimension(), other.perm_.apply(translation_.bits()) ^ other.translation_.bits());
  out.perm_ = perm_ * other.perm_;
  return out;
}

CubeAutomorphism CubeAutomorphism::inverse() const {
  const Permutation inv = perm_.inverse();
  return {BitVector(dimension(), inv.apply(translation_.bits())), inv};
}

std::string CubeAutomorphism::to_string() const {
  return "x=" + translation_.to_string() + " perm=" + perm_.to_string();
}

std::size_t CubeAutomorphismHash::operator()(
    const CubeAutomorphism& g) const noexcept {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](std::uint64_t v) {
    h ^= v;
    h *= 1099511628211ull;
  };
  mix(g.translation().bits());
  const auto& p = g.perm();
  for (int i = 0; i < p.degree(); ++i) mix(static_cast<std::uint64_t>(p[i]));
  return static_cast<std::size_t>(h ^ (h >> 29));
}

BitVector act(const CubeAutomorphism& g, const BitVector& v) { return g.act(v); }

// ---------------------------------------------------------------------------
// Distance

int Distance::value() const {
  if (!value_) {
    throw Error(ErrorCode::InvalidArgument, "distance is infinite");
  }
  return *value_;
}

std::string Distance::to_string() const {
  return value_ ? std::to_string(*value_) : "inf";
}

// ---------------------------------------------------------------------------
// CubeGroup

CubeGroup CubeGroup::trivial(int n) { return generate_group(n, {}); }

const std::vector<CubeAutomorphism>& CubeGroup::elements() const {
  if (elements_.empty()) {
    throw Error(ErrorCode::GroupTooLarge,
                "group of order " + std::to_string(order_) +
                    " was not materialized");
  }
  return elements_;
}

bool CubeGroup::contains(const CubeAutomorphism& g) const {
  if (!is_materialized()) {
    throw Error(ErrorCode::GroupTooLarge,
                "membership test on an unmaterialized group");
  }
  if (g.dimension() != n_) return false;
  return index_.contains(g);
}

CubeGroup generate_group(int n, std::span<const CubeAutomorphism> gens,
                         std::uint64_t cap) {
  require_dimension(n);
  CubeGroup group;
  group.n_ = n;
  for (const auto& g : gens) {
    require_same_dimension(n, g.dimension());
    group.generators_.push_back(g);
  }
  group.elements_.push_back(CubeAutomorphism::identity(n));
  group.index_.emplace(group.elements_.front(), 0);
  for (std::size_t i = 0; i < group.elements_.size(); ++i) {
    for (const auto& gen : group.generators_) {
      CubeAutomorphism product = group.elements_[i] * gen;
      if (group.index_.contains(product)) continue;
      if (group.elements_.size() >= cap) {
        throw Error(ErrorCode::GroupTooLarge,
                    "group closure exceeds cap of " + std::to_string(cap) +
                        " elements");
      }
      group.index_.emplace(product, group.elements_.size());
      group.elements_.push_back(std::move(product));
    }
  }
  group.order_ = group.elements_.size();
  return group;
}

CubeGroup make_unmaterialized_group(int n, std::vector<CubeAutomorphism> gens,
                                    std::uint64_t order) {
  CubeGroup group;
  group.n_ = n;
  group.generators_ = std::move(gens);
  group.order_ = order;
  return group;
}

// ---------------------------------------------------------------------------
// Minimum distance and friends

int element_min_distance(const CubeAutomorphism& g) {
  if (g.is_identity()) {
    throw Error(ErrorCode::IdentityElement,
                "element distance is undefined for the identity");
  }
  const int n = g.dimension();
  const std::uint32_t y = g.translation().bits();
  const auto& perm = g.perm();
  std::uint32_t seen = 0;
  int total = 0;
  for (int i = 0; i < n; ++i) {
    if ((seen >> i) & 1u) continue;
    std::uint32_t parity = 0;
    int j = i;
    do {
      seen |= std::uint32_t{1} << j;
      parity ^= (y >> j) & 1u;
      j = perm[j];
    } while (j != i);
    total += static_cast<int>(parity);
  }
  return total;
}

Distance min_distance(const CubeGroup& k) {
  if (k.is_trivial()) return Distance::infinite();
  int best = k.dimension();
  for (const auto& g : k.elements()) {
    if (g.is_identity()) continue;
    best = std::min(best, element_min_distance(g));
    if (best == 0) break;
  }
  return Distance(best);
}

bool is_even(const CubeGroup& k) {
  // Translation parity is a homomorphism, so generators decide it.
  return std::all_of(k.generators().begin(), k.generators().end(),
                     [](const CubeAutomorphism& g) { return g.is_even(); });
}

bool is_semiregular(const CubeGroup& k) { return min_distance(k).at_least(1); }

CubeGroup conjugate_group(const CubeGroup& k, const CubeAutomorphism& g,
                          std::uint64_t cap) {
  require_same_dimension(k.dimension(), g.dimension());
  const CubeAutomorphism g_inv = g.inverse();
  std::vector<CubeAutomorphism> gens;
  gens.reserve(k.generators().size());
  for (const auto& h : k.generators()) gens.push_back(g_inv * h * g);
  return generate_group(k.dimension(), gens, cap);
}

CubeGroup intersect_even(const CubeGroup& k) {
  if (is_even(k)) return k;
  std::vector<CubeAutomorphism> gens;
  CubeGroup current = CubeGroup::trivial(k.dimension());
  for (const auto& g : k.elements()) {
    if (!g.is_even() || current.contains(g)) continue;
    gens.push_back(g);
    current = generate_group(k.dimension(), gens);
    if (2 * current.order() == k.order()) break;
  }
  return current;
}

void for_each_cube_automorphism(
    int n, const std::function<bool(const CubeAutomorphism&)>& fn) {
  require_dimension(n);
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 0);
  const std::uint64_t translations = std::uint64_t{1} << n;
  do {
    const Permutation perm(images);
    for (std::uint64_t y = 0; y < translations; ++y) {
      if (!fn(CubeAutomorphism(BitVector(n, static_cast<std::uint32_t>(y)), perm))) {
        return;
      }
    }
  } while (std::next_permutation(images.begin(), images.end()));
}

std::optional<std::uint64_t> hyperoctahedral_order(int n) {
  if (n < 1 || n > 20) return std::nullopt;
  unsigned __int128 order = std::uint64_t{1} << n;
  for (int i = 2; i <= n; ++i) {
    order *= static_cast<unsigned>(i);
    if (order > ~std::uint64_t{0}) return std::nullopt;
  }
  return static_cast<std::uint64_t>(order);
}

}  // namespace qcube
