#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace eqmt {

// Deterministic RNG wrapper. All draws go through explicit integer
// conversions so a given seed produces identical streams on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next() { return gen_(); }

  // [0, 1)
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // [0, n), n > 0
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(next() % n); }

  // Fisher-Yates; avoids std::shuffle, whose draw sequence is
  // implementation-defined.
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::swap(v[i - 1], v[below(i)]);
    }
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace eqmt
