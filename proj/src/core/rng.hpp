#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace pcc {

// Seeded generator used for every randomized check. mt19937_64 has a fully
// specified output sequence, and the reductions below avoid std::*_distribution,
// whose streams differ across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  // Uniform in [0, n); unbiased via rejection. n must be positive.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t rem = std::uint64_t(-n) % n;  // 2^64 mod n
    for (;;) {
      const std::uint64_t v = next();
      if (v >= rem) return v % n;
    }
  }

  std::size_t index(std::size_t n) { return static_cast<std::size_t>(below(n)); }

  bool chance(double p) {
    return static_cast<double>(next() >> 11) * (1.0 / 9007199254740992.0) < p;
  }

  // k distinct values from [0, n), ascending.
  std::vector<std::size_t> sample(std::size_t n, std::size_t k);

 private:
  std::mt19937_64 eng_;
};

}  // namespace pcc
