#pragma once

#include <cstdint>
#include <random>

namespace netflippa {

// Deterministic draw stream keyed by (seed, stream_id). Equal keys replay the
// exact same sequence: seeding goes through std::seed_seq and uniforms are
// built from raw 53-bit chunks instead of std::uniform_real_distribution,
// whose output is implementation-defined.
class RngStream {
 public:
  RngStream(std::uint64_t seed, std::uint64_t stream_id)
      : seed_(seed), stream_id_(stream_id) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed),
                      static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream_id),
                      static_cast<std::uint32_t>(stream_id >> 32)};
    engine_.seed(seq);
  }

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream_id() const { return stream_id_; }

  /// Uniform draw on [0, 1) with 53 random bits.
  double next_uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  bool next_bernoulli(double p) { return next_uniform() < p; }

  /// +1 or -1 with equal probability.
  double next_rademacher() { return (engine_() & 1ULL) ? 1.0 : -1.0; }

 private:
  std::uint64_t seed_;
  std::uint64_t stream_id_;
  std::mt19937_64 engine_;
};

}  // namespace netflippa
