#pragma once

#include <cstdint>

namespace caydis {

/**
 * Deterministic 64-bit random stream (splitmix64).
 *
 * Every consumer derives an independent substream from a master seed and a
 * stream index via RandomStream(master, index); the state is
 * mix(master, index), where mix is the splitmix64 finalizer applied to
 * master xor (index advanced by one splitmix step). Replaying a (master,
 * index) pair replays the exact draw sequence, which is what makes trial
 * results byte-reproducible regardless of scheduling.
 *
 * Reference: Steele, Lea, Flood, "Fast splittable pseudorandom number
 * generators" (the SplitMix64 update/finalizer constants).
 */
class RandomStream {
 public:
  RandomStream(std::uint64_t master_seed, std::uint64_t stream_index)
      : state_(mix(master_seed, stream_index)) {}

  std::uint64_t next_u64() {
    state_ += 0x9E3779B97F4A7C15ULL;
    return finalize(state_);
  }

  /** Uniform double in [0, 1); 53 random mantissa bits. */
  double next_unit() { return (next_u64() >> 11) * 0x1.0p-53; }

  /** True with probability p. p = 0 never fires, p = 1 always fires. */
  bool bernoulli(double p) { return next_unit() < p; }

  /** Uniform integer in [0, bound), bound >= 1. Single draw. */
  int next_below(int bound) {
    return static_cast<int>((static_cast<unsigned __int128>(next_u64()) *
                             static_cast<unsigned __int128>(bound)) >>
                            64);
  }

  static std::uint64_t mix(std::uint64_t master, std::uint64_t index) {
    return finalize(master ^ finalize(index + 0x9E3779B97F4A7C15ULL));
  }

 private:
  static std::uint64_t finalize(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  std::uint64_t state_;
};

}  // namespace caydis
