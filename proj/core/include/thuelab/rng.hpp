#pragma once

#include <cstdint>
#include <random>

namespace thuelab {

/// Generator identity recorded in manifests; bump when the draw algorithm changes.
inline constexpr const char* kRngVersion = "mt19937_64/rejection-1";

/// SplitMix64 step, used to derive independent per-trial seeds from one master seed.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

/// Seeded generator with rejection-sampled bounded draws.
/// std::uniform_int_distribution is implementation-defined, so bounded draws are
/// done by hand to keep transcripts bit-identical across standard libraries.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  /// Uniform draw from [0, n); n ≥ 1.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = n * ((~std::uint64_t{0}) / n);
    std::uint64_t v;
    do {
      v = gen_();
    } while (v >= limit);
    return v % n;
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double unit() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

private:
  std::mt19937_64 gen_;
};

}  // namespace thuelab
