#pragma once

#include <cstdint>
#include <random>

#include "glat/errors.hpp"

namespace glat {

/// Deterministic seeded RNG. Only the raw mt19937_64 stream is used
/// (std::uniform_int_distribution is implementation-defined and would break
/// byte-identical output across toolchains).
class Rng {
public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  std::uint64_t below(std::uint64_t n) {
    GLAT_CHECK(n > 0, "Rng::below(0)");
    return next() % n;
  }

  long int_in(long lo, long hi) {
    GLAT_CHECK(lo <= hi, "Rng::int_in empty range");
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  /// splitmix64 of (a, b); used to derive independent per-trial seeds.
  static std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
    std::uint64_t z = a + 0x9e3779b97f4a7c15ULL * (b + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

private:
  std::mt19937_64 eng_;
};

}  // namespace glat
