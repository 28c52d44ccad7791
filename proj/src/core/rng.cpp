#include "core/rng.hpp"

#include <algorithm>
#include <numeric>

#include "core/errors.hpp"

namespace pcc {

std::vector<std::size_t> Rng::sample(std::size_t n, std::size_t k) {
  if (k > n) throw InvalidArgument("sample: k exceeds population size");
  std::vector<std::size_t> pool(n);
  std::iota(pool.begin(), pool.end(), std::size_t{0});
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t j = i + index(n - i);
    std::swap(pool[i], pool[j]);
  }
  pool.resize(k);
  std::sort(pool.begin(), pool.end());
  return pool;
}

}  // namespace pcc
