#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "doctest.h"
#include "ogp/bits.hpp"
#include "ogp/rng.hpp"

using namespace ogp;

namespace {

SignVector make_sign(int n, std::initializer_list<int> plus_positions) {
  SignVector s(n);
  for (int i : plus_positions) s.set(i, true);
  return s;
}

int hamming_brute(const SignVector& a, const SignVector& b) {
  int d = 0;
  for (int i = 0; i < a.size(); ++i)
    if (a.test(i) != b.test(i)) ++d;
  return d;
}

}  // namespace

TEST_CASE("hex round-trip, most significant nibble first") {
  // n = 5 with bits {1, 3, 4} set packs to 0b11010 = 0x1a over two nibbles.
  const SignVector s = make_sign(5, {1, 3, 4});
  CHECK(s.to_hex() == "1a");
  CHECK(SignVector::from_hex(5, "1a") == s);

  // ceil(n/4) digits exactly, zero-padded.
  CHECK(SignVector(4).to_hex() == "0");
  CHECK(SignVector(9).to_hex() == "000");
  CHECK(SignVector::ones(9).to_hex() == "1ff");

  RngStream r(31);
  for (int n : {1, 3, 4, 7, 8, 63, 64, 65, 130}) {
    SignVector v(n);
    for (int i = 0; i < n; ++i) v.set(i, r.next_bool());
    CHECK(SignVector::from_hex(n, v.to_hex()) == v);
    CHECK(static_cast<int>(v.to_hex().size()) == (n + 3) / 4);
  }
}

TEST_CASE("from_hex rejects malformed input") {
  CHECK_THROWS_AS(SignVector::from_hex(5, "1"), std::invalid_argument);     // too short
  CHECK_THROWS_AS(SignVector::from_hex(5, "01a"), std::invalid_argument);   // too long
  CHECK_THROWS_AS(SignVector::from_hex(5, "1g"), std::invalid_argument);    // bad digit
  CHECK_THROWS_AS(SignVector::from_hex(5, "ff"), std::invalid_argument);    // bits above n
  CHECK_NOTHROW(SignVector::from_hex(5, "1f"));
}

TEST_CASE("hamming distance matches a coordinate loop") {
  RngStream r(8);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + static_cast<int>(r.next_below(120));
    SignVector a(n), b(n);
    for (int i = 0; i < n; ++i) {
      a.set(i, r.next_bool());
      b.set(i, r.next_bool());
    }
    CHECK(hamming(a, b) == hamming_brute(a, b));
    CHECK(hamming(a, a) == 0);
  }
}

TEST_CASE("overlap identity rho = (n - 2h) / n") {
  RngStream r(9);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + static_cast<int>(r.next_below(100));
    SignVector a(n), b(n);
    for (int i = 0; i < n; ++i) {
      a.set(i, r.next_bool());
      b.set(i, r.next_bool());
    }
    const int h = hamming(a, b);
    const auto o = overlap(a, b);
    CHECK(o.value == doctest::Approx((n - 2.0 * h) / n).epsilon(1e-15));

    // Direct inner product of +-1 spins.
    int dot = 0;
    for (int i = 0; i < n; ++i) dot += spin(a, i) * spin(b, i);
    CHECK(o.value == doctest::Approx(static_cast<double>(dot) / n).epsilon(1e-15));
  }
  const SignVector x = make_sign(4, {0, 1});
  SignVector mx(4);
  for (int i = 0; i < 4; ++i) mx.set(i, !x.test(i));
  CHECK(overlap(x, x).value == 1.0);
  CHECK(overlap(x, mx).value == -1.0);
}

TEST_CASE("normalized intersection of node subsets") {
  NodeSubset a(6), b(6);
  a.set(0, true); a.set(1, true); a.set(2, true); a.set(3, true);  // |a| = 4
  b.set(2, true); b.set(3, true); b.set(4, true);                  // |b| = 3, |a&b| = 2
  CHECK(normalized_intersection(a, b) == doctest::Approx(2.0 / std::sqrt(12.0)).epsilon(1e-15));
  CHECK(normalized_intersection(a, a) == 1.0);
  CHECK(normalized_intersection(a, NodeSubset(6)) == 0.0);  // empty set convention
  CHECK((a & b).count() == 2);
}

TEST_CASE("spin maps bit 1 to +1 and bit 0 to -1") {
  const SignVector s = make_sign(3, {1});
  CHECK(spin(s, 0) == -1);
  CHECK(spin(s, 1) == +1);
  CHECK(spin(s, 2) == -1);
}

TEST_CASE("ordering is by bit pattern and supports canonical sorts") {
  SignVector a(8), b(8);
  a.set(0, true);        // 0x01
  b.set(7, true);        // 0x80
  CHECK(a < b);
  CHECK(a == a);
  std::vector<SignVector> v{b, a};
  std::sort(v.begin(), v.end());
  CHECK(v[0] == a);

  // Multi-word comparison: highest word decides.
  SignVector lo(130), hi(130);
  lo.set(0, true);
  hi.set(129, true);
  CHECK(lo < hi);
}

TEST_CASE("out-of-range access throws, count is popcount") {
  SignVector s(10);
  CHECK_THROWS_AS(s.set(10, true), std::out_of_range);
  CHECK_THROWS_AS((void)s.test(-1), std::out_of_range);
  s.set(0, true);
  s.set(9, true);
  CHECK(s.count() == 2);
  CHECK(SignVector::ones(70).count() == 70);
}

TEST_CASE("hash-compatible containers accept packed vectors") {
  std::unordered_set<SignVector> seen;
  RngStream r(3);
  std::vector<SignVector> inserted;
  for (int i = 0; i < 100; ++i) {
    SignVector v(16);
    for (int j = 0; j < 16; ++j) v.set(j, r.next_bool());
    seen.insert(v);
    inserted.push_back(v);
  }
  for (const auto& v : inserted) CHECK(seen.count(v) == 1);
  CHECK(seen.size() > 90);  // collisions over 2^16 patterns are unlikely
}
