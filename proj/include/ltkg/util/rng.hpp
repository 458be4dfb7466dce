#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

#include "ltkg/util/hash.hpp"

namespace ltkg::util {

// Seeded RNG with hand-rolled bounded sampling. std::mt19937_64 output is
// fixed by the standard, but the std:: distributions are not, so replay
// artifacts would drift across standard libraries if we used them.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next() { return gen_(); }

  // Uniform in [0, n). Rejection sampling keeps the result unbiased.
  std::uint64_t below(std::uint64_t n) {
    if (n == 0) return 0;
    const std::uint64_t threshold = (0 - n) % n;
    while (true) {
      std::uint64_t r = gen_();
      if (r >= threshold) return r % n;
    }
  }

  // Uniform in [0, 1) with 53 bits of precision.
  double unit() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

  // k distinct elements drawn uniformly without replacement, in draw order.
  template <typename T>
  std::vector<T> sample_without_replacement(std::vector<T> pool, std::size_t k) {
    if (k > pool.size()) k = pool.size();
    std::vector<T> out;
    out.reserve(k);
    std::size_t n = pool.size();
    for (std::size_t i = 0; i < k; ++i) {
      std::size_t j = i + static_cast<std::size_t>(below(n - i));
      std::swap(pool[i], pool[j]);
      out.push_back(pool[i]);
    }
    return out;
  }

 private:
  std::mt19937_64 gen_;
};

// Mixes string keys into a base seed; used to give each (entity, relation)
// pair its own deterministic stream.
inline std::uint64_t derive_seed(std::uint64_t base, std::string_view a,
                                 std::string_view b = {}) {
  std::uint64_t h = fnv1a64(a, base ^ 0x9e3779b97f4a7c15ull);
  if (!b.empty()) h = fnv1a64(b, h);
  return h;
}

}  // namespace ltkg::util
