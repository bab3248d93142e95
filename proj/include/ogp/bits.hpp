#pragma once

#include <bit>
#include <cmath>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "ogp/rng.hpp"

namespace ogp {

// Fixed-dimension packed bit vector, the shared storage behind the two
// solution types. Bits beyond the dimension are kept zero at all times so
// equality, ordering and hashing can work word-wise.
template <class Tag>
class PackedVec {
 public:
  PackedVec() = default;

  explicit PackedVec(int n) : n_(checked_dim(n)), w_(word_count(n_), 0) {}

  // All bits set: the all-(+1) sign vector / the full node set.
  static PackedVec ones(int n) {
    PackedVec v(n);
    for (auto& w : v.w_) w = ~0ull;
    v.mask_tail();
    return v;
  }

  static PackedVec zeros(int n) { return PackedVec(n); }

  int size() const noexcept { return n_; }

  bool test(int i) const {
    check_index(i);
    return ((w_[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1u) != 0;
  }

  void set(int i, bool value) {
    check_index(i);
    const std::uint64_t bit = 1ull << (i & 63);
    if (value)
      w_[static_cast<std::size_t>(i) >> 6] |= bit;
    else
      w_[static_cast<std::size_t>(i) >> 6] &= ~bit;
  }

  void flip(int i) {
    check_index(i);
    w_[static_cast<std::size_t>(i) >> 6] ^= 1ull << (i & 63);
  }

  // Flip every coordinate (global sign flip / set complement). Tail bits stay zero.
  void flip_all() {
    for (auto& w : w_) w = ~w;
    mask_tail();
  }

  int count() const noexcept {
    int c = 0;
    for (auto w : w_) c += std::popcount(w);
    return c;
  }

  std::uint64_t word(std::size_t k) const { return w_.at(k); }
  const std::vector<std::uint64_t>& words() const noexcept { return w_; }

  PackedVec& operator&=(const PackedVec& o) {
    require_same_dim(o);
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] &= o.w_[k];
    return *this;
  }

  friend PackedVec operator&(PackedVec a, const PackedVec& b) { return a &= b; }

  friend bool operator==(const PackedVec&, const PackedVec&) = default;

  // Orders by dimension, then by bit pattern read as an n-bit integer
  // (most significant word first). Used for canonical solution ordering.
  friend std::strong_ordering operator<=>(const PackedVec& a, const PackedVec& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    for (std::size_t k = a.w_.size(); k-- > 0;) {
      if (auto c = a.w_[k] <=> b.w_[k]; c != 0) return c;
    }
    return std::strong_ordering::equal;
  }

  std::uint64_t hash() const noexcept {
    std::uint64_t h = RngStream::mix(static_cast<std::uint64_t>(n_));
    for (auto w : w_) h = RngStream::mix(h ^ w);
    return h;
  }

  // Hex encoding of the bit pattern as an n-bit integer, most significant
  // nibble first, exactly ceil(n/4) digits. Round-trips with from_hex.
  std::string to_hex() const {
    static const char* digits = "0123456789abcdef";
    const int nibbles = (n_ + 3) / 4;
    std::string out(static_cast<std::size_t>(nibbles), '0');
    for (int q = 0; q < nibbles; ++q) {
      const int nib = static_cast<int>((w_[static_cast<std::size_t>(q) >> 4] >> ((q & 15) * 4)) & 0xF);
      out[static_cast<std::size_t>(nibbles - 1 - q)] = digits[nib];
    }
    return out;
  }

  static PackedVec from_hex(int n, const std::string& hex) {
    PackedVec v(n);
    const int nibbles = (n + 3) / 4;
    if (static_cast<int>(hex.size()) != nibbles)
      throw std::invalid_argument("PackedVec::from_hex: expected " + std::to_string(nibbles) +
                                  " hex digits, got " + std::to_string(hex.size()));
    for (int q = 0; q < nibbles; ++q) {
      const char c = hex[static_cast<std::size_t>(nibbles - 1 - q)];
      int nib;
      if (c >= '0' && c <= '9')
        nib = c - '0';
      else if (c >= 'a' && c <= 'f')
        nib = c - 'a' + 10;
      else if (c >= 'A' && c <= 'F')
        nib = c - 'A' + 10;
      else
        throw std::invalid_argument("PackedVec::from_hex: invalid hex digit");
      v.w_[static_cast<std::size_t>(q) >> 4] |= static_cast<std::uint64_t>(nib) << ((q & 15) * 4);
    }
    // Bits at positions >= n must be zero or the encoding is malformed.
    PackedVec check = v;
    check.mask_tail();
    if (check.w_ != v.w_)
      throw std::invalid_argument("PackedVec::from_hex: bits set beyond dimension " + std::to_string(n));
    return v;
  }

  void require_same_dim(const PackedVec& o) const {
    if (n_ != o.n_)
      throw std::invalid_argument("dimension mismatch: " + std::to_string(n_) + " vs " +
                                  std::to_string(o.n_));
  }

 private:
  static int checked_dim(int n) {
    if (n < 0) throw std::invalid_argument("PackedVec: dimension must be >= 0");
    return n;
  }

  static std::size_t word_count(int n) { return (static_cast<std::size_t>(n) + 63) / 64; }

  void check_index(int i) const {
    if (i < 0 || i >= n_)
      throw std::out_of_range("PackedVec: index " + std::to_string(i) + " out of [0, " +
                              std::to_string(n_) + ")");
  }

  void mask_tail() {
    if (n_ % 64 != 0 && !w_.empty()) w_.back() &= (~0ull) >> (64 - n_ % 64);
  }

  int n_ = 0;
  std::vector<std::uint64_t> w_;
};

struct sign_tag {};
struct node_tag {};

// A point of {-1,+1}^n; a set bit means +1.
using SignVector = PackedVec<sign_tag>;
// A subset of n nodes; a set bit means the node is in the subset.
using NodeSubset = PackedVec<node_tag>;

inline int spin(const SignVector& s, int i) { return s.test(i) ? +1 : -1; }

template <class Tag>
int hamming(const PackedVec<Tag>& a, const PackedVec<Tag>& b) {
  a.require_same_dim(b);
  int d = 0;
  for (std::size_t k = 0; k < a.words().size(); ++k)
    d += std::popcount(a.words()[k] ^ b.words()[k]);
  return d;
}

inline int intersection_count(const NodeSubset& a, const NodeSubset& b) {
  a.require_same_dim(b);
  int c = 0;
  for (std::size_t k = 0; k < a.words().size(); ++k)
    c += std::popcount(a.words()[k] & b.words()[k]);
  return c;
}

// Scaled inner product in [-1, 1].
struct OverlapValue {
  double value = 0.0;
};

// overlap(sigma, tau) = <sigma, tau> / n = (n - 2 * hamming) / n.
inline OverlapValue overlap(const SignVector& a, const SignVector& b) {
  if (a.size() == 0) throw std::invalid_argument("overlap: dimension must be >= 1");
  const int h = hamming(a, b);
  return OverlapValue{static_cast<double>(a.size() - 2 * h) / static_cast<double>(a.size())};
}

// Intersection size normalized by the geometric mean of the two set sizes:
// in [0, 1], and equal to |a cap b| / k for two size-k cliques. Pairs with an
// empty side contribute 0.
inline double normalized_intersection(const NodeSubset& a, const NodeSubset& b) {
  a.require_same_dim(b);
  const int ca = a.count();
  const int cb = b.count();
  if (ca == 0 || cb == 0) return 0.0;
  return static_cast<double>(intersection_count(a, b)) /
         std::sqrt(static_cast<double>(ca) * static_cast<double>(cb));
}

}  // namespace ogp

template <class Tag>
struct std::hash<ogp::PackedVec<Tag>> {
  std::size_t operator()(const ogp::PackedVec<Tag>& v) const noexcept {
    return static_cast<std::size_t>(v.hash());
  }
};
