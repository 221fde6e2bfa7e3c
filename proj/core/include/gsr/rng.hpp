#pragma once

#include <cstdint>
#include <random>

namespace gsr {

/// SplitMix64 finalizer. Used to derive independent substream seeds.
std::uint64_t mix64(std::uint64_t x) noexcept;

/// Seed for substream `index` of `seed`: mix64(mix64(seed) ^ mix64(index + 1)).
std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index) noexcept;

/// Portable random stream.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the C++
/// standard. The distributions below are implemented here rather than taken
/// from <random> because the standard leaves those algorithms unspecified:
///   uniform01  : (next() >> 11) * 2^-53, in [0, 1)
///   normal     : Box-Muller, cosine branch, two uniforms per draw
///   index(n)   : rejection sampling on next() to remove modulo bias
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(mix64(seed)) {}

  std::uint64_t next() { return engine_(); }
  double uniform01();
  double normal();
  std::uint64_t index(std::uint64_t n);

 private:
  std::mt19937_64 engine_;
};

}  // namespace gsr
