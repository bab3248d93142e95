#pragma once

#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>

namespace ogp {

// Counter-based splitmix64 stream.
//
// Word i (0-based) of the stream with seed s is mix(s + (i+1) * GAMMA), which
// is exactly the classic stateful splitmix64 sequence started from state s.
// Keeping (seed, counter) instead of a mutated state gives random access
// (word_at) for free, which the interpolation paths rely on, and makes every
// instance reproducible from its manifest alone.
//
// Derived draws are pinned so instances are reproducible bit-for-bit:
//   next_double():   (w >> 11) * 2^-53, in [0, 1)
//   next_bool():     low bit of the next word
//   next_below(m):   next word mod m (bias < 2^-53 at the sizes used here)
//   next_gaussian(): Box-Muller, cosine branch, two words per draw:
//                    u1 = ((a >> 11) + 1) * 2^-53 in (0, 1]   (never log(0))
//                    u2 = (b >> 11) * 2^-53      in [0, 1)
//                    z  = sqrt(-2 ln u1) * cos(2 pi u2)
// No state beyond the counter is kept (no cached second gaussian).
class RngStream {
 public:
  static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ull;

  explicit RngStream(std::uint64_t seed) noexcept : seed_(seed) {}

  // splitmix64 finalizer; also used as the general-purpose bit mixer.
  static constexpr std::uint64_t mix(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t counter() const noexcept { return counter_; }

  // Random access to word i without disturbing the stream position.
  std::uint64_t word_at(std::uint64_t i) const noexcept {
    return mix(seed_ + (i + 1) * kGamma);
  }

  std::uint64_t next_u64() noexcept { return word_at(counter_++); }

  double next_double() noexcept {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  bool next_bool() noexcept { return (next_u64() & 1u) != 0; }

  std::uint64_t next_below(std::uint64_t m) {
    if (m == 0) throw std::invalid_argument("RngStream::next_below: m must be >= 1");
    return next_u64() % m;
  }

  double next_gaussian() noexcept {
    const std::uint64_t a = next_u64();
    const std::uint64_t b = next_u64();
    const double u1 = (static_cast<double>(a >> 11) + 1.0) * 0x1.0p-53;
    const double u2 = static_cast<double>(b >> 11) * 0x1.0p-53;
    constexpr double two_pi = 6.283185307179586476925286766559;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(two_pi * u2);
  }

 private:
  std::uint64_t seed_;
  std::uint64_t counter_ = 0;
};

// Independent stream keyed by (seed, k1, k2). Used for per-coordinate
// resampling: the draw that replaces coordinate c in epoch e comes from
// substream(seed, c, e) and is therefore independent of the base sequence and
// of every other coordinate's draw, while staying reproducible without
// replaying any chain.
inline RngStream substream(std::uint64_t seed, std::uint64_t k1, std::uint64_t k2 = 0) {
  std::uint64_t s = RngStream::mix(seed + RngStream::kGamma);
  s = RngStream::mix(s ^ (k1 + 0xD1B54A32D192ED03ull));
  s = RngStream::mix(s ^ (k2 + 0x94D049BB133111EBull));
  return RngStream(s);
}

}  // namespace ogp
