#pragma once

// Deterministic 64-bit-state generator (splitmix64) used everywhere a seed
// appears. The seed fully determines every draw, independent of platform or
// standard library, so fixtures and benchmark suites are bit-reproducible.
// Not cryptographically secure; this is a study tool, not a key vault.

#include <cstdint>
#include <string_view>

namespace ecdlp {

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

// Uniform draw from [lo, hi] by rejection over the minimal bit width of hi.
// No modulo bias; expected < 2 draws per value.
inline std::uint64_t uniform_in(SplitMix64& gen, std::uint64_t lo,
                                std::uint64_t hi) {
  unsigned bits = 0;
  for (std::uint64_t v = hi; v != 0; v >>= 1) ++bits;
  if (bits == 0) return 0;
  std::uint64_t mask = bits >= 64 ? ~0ull : ((1ull << bits) - 1);
  for (;;) {
    std::uint64_t draw = gen.next() & mask;
    if (draw >= lo && draw <= hi) return draw;
  }
}

inline std::uint64_t fnv1a64(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

// Per-trial seed derivation: mixes the suite seed, a curve identifier and a
// trial index through splitmix64 so trials are independent of each other and
// of execution order.
inline std::uint64_t mix_trial_seed(std::uint64_t seed, std::string_view curve_id,
                                    std::uint64_t trial) {
  SplitMix64 g(seed ^ fnv1a64(curve_id));
  std::uint64_t s = g.next();
  SplitMix64 g2(s ^ trial);
  return g2.next();
}

}  // namespace ecdlp
