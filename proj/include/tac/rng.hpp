#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

namespace tac {

// Deterministic, portable PRNG (splitmix64 core). The standard <random>
// distributions are implementation-defined, so every draw the simulation
// makes goes through this type to keep transcripts byte-identical across
// compilers.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform integer in [lo, hi], inclusive. Requires lo <= hi.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);

  // Uniform double in [0, 1).
  double uniform01();

  // Fisher-Yates over indices [0, n).
  std::vector<std::size_t> permutation(std::size_t n);

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(uniform_int(0, static_cast<std::int64_t>(i) - 1));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::uint64_t state_;
};

// Stable seed derivation for named substreams: the per-game seed fans out
// into independent streams ("clients/3", "flight/in2", ...), so changing
// how one stream is consumed never perturbs the others.
std::uint64_t substream_seed(std::uint64_t base, std::string_view label);

inline Rng substream(std::uint64_t base, std::string_view label) {
  return Rng(substream_seed(base, label));
}

}  // namespace tac
