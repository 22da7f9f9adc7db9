#include "tac/rng.hpp"

#include <stdexcept>

namespace tac {

std::int64_t Rng::uniform_int(std::int64_t lo, std::int64_t hi) {
  if (lo > hi) throw std::invalid_argument("uniform_int: lo > hi");
  std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(next_u64());  // full range
  // Rejection sampling to avoid modulo bias: reject the low 2^64 mod span
  // values so the remaining count is an exact multiple of span.
  std::uint64_t reject_below = (-span) % span;
  std::uint64_t r;
  do {
    r = next_u64();
  } while (r < reject_below);
  return lo + static_cast<std::int64_t>(r % span);
}

double Rng::uniform01() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

std::vector<std::size_t> Rng::permutation(std::size_t n) {
  std::vector<std::size_t> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = i;
  shuffle(p);
  return p;
}

std::uint64_t substream_seed(std::uint64_t base, std::string_view label) {
  // FNV-1a over the label, then mix with the base seed through splitmix.
  std::uint64_t h = 1469598103934665603ULL;
  for (char c : label) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ULL;
  }
  Rng mixer(base ^ h);
  mixer.next_u64();
  return mixer.next_u64();
}

}  // namespace tac
