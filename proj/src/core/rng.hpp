#ifndef CONTRAGRAPH_CORE_RNG_HPP
#define CONTRAGRAPH_CORE_RNG_HPP

#include <bit>
#include <cstdint>
#include <random>
#include <vector>

namespace cg {

// mt19937_64 plus hand-rolled bounded sampling. std::uniform_int_distribution
// is not pinned by the standard, so results would differ across toolchains;
// masked rejection keeps every seeded stream platform-independent.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // uniform in [0, bound), bound >= 1
  std::uint64_t below(std::uint64_t bound) {
    if (bound <= 1) return 0;
    std::uint64_t mask = ~std::uint64_t{0} >> std::countl_zero(bound - 1);
    std::uint64_t v;
    do {
      v = engine_() & mask;
    } while (v >= bound);
    return v;
  }

  template <typename T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(below(i));
      std::swap(items[i - 1], items[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

}  // namespace cg

#endif
