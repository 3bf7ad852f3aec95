#pragma once

// Seeded RNG wrapper. Draws are made through explicit helpers only, so runs
// are reproducible from the seed alone.

#include <cstdint>
#include <random>
#include <vector>

#include "railknot/rational.hpp"

namespace railknot {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  // uniform in [0, n)
  std::uint64_t below(std::uint64_t n) {
    if (n == 0) return 0;
    std::uint64_t lim = std::numeric_limits<std::uint64_t>::max() - (std::numeric_limits<std::uint64_t>::max() % n);
    std::uint64_t v;
    do { v = eng_(); } while (v >= lim);
    return v % n;
  }

  int int_in(int lo, int hi) {  // inclusive
    return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  bool coin() { return (next() & 1u) != 0; }

  // uniform rational in [lo, hi] with denominator den
  Rat rat_in(const Rat& lo, const Rat& hi, long den) {
    Rat scaled = Rat((hi - lo) * den);
    BigInt steps = numerator(scaled) / denominator(scaled);
    if (steps <= 0) return lo;
    std::uint64_t k = below(static_cast<std::uint64_t>(steps) + 1);
    return lo + Rat(BigInt(k), BigInt(den));
  }

  template <typename T>
  const T& pick(const std::vector<T>& v) {
    return v[below(v.size())];
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace railknot
