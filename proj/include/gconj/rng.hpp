#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>

namespace gconj {

/// Deterministic random source. Built on mt19937_64 (whose output stream is
/// fixed by the standard) with hand-rolled uniform draws, so identical seeds
/// give identical graphs on every platform and standard library.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next() { return gen_(); }

  /// Uniform in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Uniform integer in [lo, hi], inclusive, by rejection.
  int uniform_int(int lo, int hi) {
    if (lo > hi) throw std::invalid_argument("empty integer range");
    std::uint64_t span = static_cast<std::uint64_t>(hi) - lo + 1;
    std::uint64_t limit = ~0ULL - ~0ULL % span;
    std::uint64_t draw;
    do {
      draw = next();
    } while (draw >= limit);
    return lo + static_cast<int>(draw % span);
  }

private:
  std::mt19937_64 gen_;
};

}  // namespace gconj
