#include "rydcav/rng.hpp"

namespace rydcav {

std::uint64_t CounterRng::mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

CounterRng::CounterRng(std::uint64_t seed, std::uint64_t stream)
    : key_(mix(seed ^ mix(stream + 0x632BE59BD9B4E019ULL))) {}

std::uint64_t CounterRng::next_u64() {
  ++counter_;
  return mix(key_ + counter_ * 0x9E3779B97F4A7C15ULL);
}

double CounterRng::next_unit() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

}  // namespace rydcav
