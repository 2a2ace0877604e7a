#pragma once

#include <cstdint>

namespace rydcav {

// Counter-based generator built on the SplitMix64 finalizer.
//
//   key      = mix(seed ^ mix(stream + 0x632BE59BD9B4E019))
//   draw(i)  = mix(key + (i + 1) * 0x9E3779B97F4A7C15)
//   mix(z)   = SplitMix64 output function (Steele, Lea, Flood 2014)
//
// Draw i of stream s depends only on (seed, s, i), so independent work units
// (Monte-Carlo realizations) get reproducible, non-overlapping streams.
class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::uint64_t stream);

  std::uint64_t next_u64();
  // Uniform in [0, 1) with 53 random bits.
  double next_unit();

  std::uint64_t counter() const { return counter_; }

  static std::uint64_t mix(std::uint64_t z);

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace rydcav
