#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace arcs {

inline constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Counter-keyed generator: the stream for (seed, stream, trial) depends on
/// nothing else, so work can be split across threads without changing
/// results.
class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::uint64_t stream, std::uint64_t trial) noexcept
      : key_(splitmix64(splitmix64(seed) ^ splitmix64(stream + 0x632be59bd9b4e019ULL) ^
                        splitmix64(~trial))) {}

  std::uint64_t next() noexcept { return splitmix64(key_ + 0x9e3779b97f4a7c15ULL * ++counter_); }

  /// Uniform integer in [0, bound) by Lemire's rejection method.
  std::uint64_t below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("CounterRng::below: zero bound");
    unsigned __int128 m = static_cast<unsigned __int128>(next()) * bound;
    auto low = static_cast<std::uint64_t>(m);
    if (low < bound) {
      const std::uint64_t threshold = (0 - bound) % bound;
      while (low < threshold) {
        m = static_cast<unsigned __int128>(next()) * bound;
        low = static_cast<std::uint64_t>(m);
      }
    }
    return static_cast<std::uint64_t>(m >> 64);
  }

  /// Uniform k-subset of [0, n) (Floyd's algorithm), returned sorted.
  std::vector<std::uint32_t> subset(std::uint32_t n, std::uint32_t k) {
    if (k > n) throw std::invalid_argument("CounterRng::subset: k > n");
    std::vector<bool> taken(n, false);
    for (std::uint32_t j = n - k; j < n; ++j) {
      auto t = static_cast<std::uint32_t>(below(std::uint64_t{j} + 1));
      taken[taken[t] ? j : t] = true;
    }
    std::vector<std::uint32_t> out;
    out.reserve(k);
    for (std::uint32_t i = 0; i < n; ++i)
      if (taken[i]) out.push_back(i);
    return out;
  }

  /// Uniformly shuffled copy of [0, n).
  std::vector<std::uint32_t> permutation(std::uint32_t n) {
    std::vector<std::uint32_t> v(n);
    std::iota(v.begin(), v.end(), 0U);
    for (std::uint32_t i = n; i > 1; --i) {
      auto j = static_cast<std::uint32_t>(below(i));
      std::swap(v[i - 1], v[j]);
    }
    return v;
  }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace arcs
