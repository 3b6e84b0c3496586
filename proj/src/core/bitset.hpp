#ifndef CONTRAGRAPH_CORE_BITSET_HPP
#define CONTRAGRAPH_CORE_BITSET_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace cg {

// Dynamic bitset backed by 64-bit words; bit i lives in word i/64.
// Tail bits past size() are kept zero by every operation.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::size_t bits) : size_(bits), words_((bits + 63) / 64, 0) {}

  std::size_t size() const { return size_; }

  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

  void clear() {
    for (auto& w : words_) w = 0;
  }

  void set_all() {
    for (auto& w : words_) w = ~std::uint64_t{0};
    trim();
  }

  bool any() const {
    for (auto w : words_)
      if (w) return true;
    return false;
  }
  bool none() const { return !any(); }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  Bitset& operator&=(const Bitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  Bitset& operator|=(const Bitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  Bitset& and_not(const Bitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }

  // this = a & b, sizes must agree
  void assign_and(const Bitset& a, const Bitset& b) {
    size_ = a.size_;
    words_.resize(a.words_.size());
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] = a.words_[i] & b.words_[i];
  }

  bool intersects(const Bitset& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }

  std::size_t count_and(const Bitset& o) const {
    std::size_t c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i)
      c += static_cast<std::size_t>(std::popcount(words_[i] & o.words_[i]));
    return c;
  }

  bool operator==(const Bitset& o) const { return size_ == o.size_ && words_ == o.words_; }
  bool operator!=(const Bitset& o) const { return !(*this == o); }

  // index of first set bit, or -1
  std::ptrdiff_t find_first() const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i]) return static_cast<std::ptrdiff_t>(i * 64 + std::countr_zero(words_[i]));
    return -1;
  }

  // first set bit strictly after i, or -1
  std::ptrdiff_t find_next(std::size_t i) const {
    std::size_t w = (i + 1) >> 6;
    if (w >= words_.size()) return -1;
    std::uint64_t cur = words_[w] & (~std::uint64_t{0} << ((i + 1) & 63));
    while (true) {
      if (cur) return static_cast<std::ptrdiff_t>(w * 64 + std::countr_zero(cur));
      if (++w >= words_.size()) return -1;
      cur = words_[w];
    }
  }

  template <typename F>
  void for_each_set(F&& f) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t w = words_[i];
      while (w) {
        f(i * 64 + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  std::uint64_t hash() const {
    std::uint64_t h = 1469598103934665603ull;
    for (auto w : words_) {
      h ^= w;
      h *= 1099511628211ull;
    }
    return h;
  }

  const std::vector<std::uint64_t>& words() const { return words_; }

 private:
  void trim() {
    if (size_ & 63) words_.back() &= (~std::uint64_t{0}) >> (64 - (size_ & 63));
  }

  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

// Orders bit-vectors as 0/1 strings read from bit 0 upward (bit 0 first).
inline bool bit_lex_less(const Bitset& a, const Bitset& b) {
  const auto& wa = a.words();
  const auto& wb = b.words();
  for (std::size_t i = 0; i < wa.size(); ++i) {
    if (wa[i] != wb[i]) {
      int bit = std::countr_zero(wa[i] ^ wb[i]);
      return ((wa[i] >> bit) & 1) == 0;
    }
  }
  return false;
}

}  // namespace cg

#endif
