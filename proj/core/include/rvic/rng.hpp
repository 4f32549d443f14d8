#pragma once

#include <cstdint>
#include <istream>
#include <ostream>
#include <random>

namespace rvic {

// Seeded pseudo-random stream. Wraps std::mt19937_64 but owns the sampling
// primitives so that draws are identical across standard library
// implementations and the full state round-trips through text streams.
class Rng {
 public:
  explicit Rng(std::uint64_t seed = 0) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform integer in [0, n). n must be >= 1.
  std::uint64_t uniform_int(std::uint64_t n) {
    // Multiply-shift mapping; bias is O(2^-64).
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next_u64()) * n) >> 64);
  }

  // Uniform double in [0, 1) with 53 random bits.
  double uniform_real() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  bool bernoulli(double p) { return uniform_real() < p; }

  bool operator==(const Rng& other) const { return engine_ == other.engine_; }

  friend std::ostream& operator<<(std::ostream& os, const Rng& rng) {
    return os << rng.engine_;
  }
  friend std::istream& operator>>(std::istream& is, Rng& rng) {
    return is >> rng.engine_;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace rvic
