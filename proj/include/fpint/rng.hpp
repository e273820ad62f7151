// Deterministic pseudo-random machinery: xoshiro256** seeded through
// splitmix64, and a 53-bit uniform.  std::mt19937 + distributions are
// avoided on purpose: distribution implementations vary across standard
// libraries and this project promises byte-identical output for a given
// seed everywhere.

#ifndef FPINT_RNG_HPP
#define FPINT_RNG_HPP

#include <array>
#include <cstdint>
#include <string_view>

namespace fpint {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) {
    // splitmix64 expansion of the seed into the xoshiro state
    std::uint64_t x = seed;
    for (auto& s : state_) {
      x += 0x9e3779b97f4a7c15ULL;
      std::uint64_t z = x;
      z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
      z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
      s = z ^ (z >> 31);
    }
  }

  // xoshiro256** step
  std::uint64_t next_u64() {
    auto rotl = [](std::uint64_t v, int k) {
      return (v << k) | (v >> (64 - k));
    };
    const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  // uniform in [0, 1) with 53 random bits
  double uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // integer in [0, n)
  std::uint64_t below(std::uint64_t n) { return next_u64() % n; }

 private:
  std::array<std::uint64_t, 4> state_{};
};

// FNV-1a, used to derive independent substreams from (seed, tag).
inline std::uint64_t hash_tag(std::string_view tag) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : tag) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

inline Rng tagged_rng(std::uint64_t seed, std::string_view tag) {
  return Rng(seed ^ hash_tag(tag));
}

}  // namespace fpint

#endif  // FPINT_RNG_HPP
