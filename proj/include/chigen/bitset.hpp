#pragma once

#include <bit>
#include <cstdint>
#include <cstddef>
#include <functional>
#include <vector>

namespace chigen {

// Fixed-width bit vector indexed by group element (0..width-1).
// Width is set once at construction; all binary operations require
// equal widths.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(int width) : width_(width), words_((width + 63) / 64, 0) {}

  int width() const { return width_; }

  bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
  void set(int i) { words_[i >> 6] |= uint64_t{1} << (i & 63); }
  void reset(int i) { words_[i >> 6] &= ~(uint64_t{1} << (i & 63)); }

  int count() const {
    int c = 0;
    for (uint64_t w : words_) c += std::popcount(w);
    return c;
  }

  bool none() const {
    for (uint64_t w : words_) if (w) return false;
    return true;
  }

  bool all() const { return count() == width_; }

  void clear() { for (uint64_t& w : words_) w = 0; }

  void fill() {
    for (int i = 0; i < width_; ++i) set(i);
  }

  Bitset& operator|=(const Bitset& o) {
    for (size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }

  Bitset& operator&=(const Bitset& o) {
    for (size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }

  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }

  bool subset_of(const Bitset& o) const {
    for (size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  // Number of members not present in `covered`.
  int count_outside(const Bitset& covered) const {
    int c = 0;
    for (size_t i = 0; i < words_.size(); ++i)
      c += std::popcount(words_[i] & ~covered.words_[i]);
    return c;
  }

  bool operator==(const Bitset& o) const { return words_ == o.words_; }
  bool operator!=(const Bitset& o) const { return words_ != o.words_; }

  // Canonical order: compare as ascending member lists, so the set whose
  // first differing element index is PRESENT sorts first.  {0,1} < {0,2}.
  bool canonical_less(const Bitset& o) const {
    for (size_t i = 0; i < words_.size(); ++i) {
      uint64_t diff = words_[i] ^ o.words_[i];
      if (diff) {
        uint64_t low = diff & (~diff + 1);
        return words_[i] & low;
      }
    }
    return false;
  }

  std::vector<int> members() const {
    std::vector<int> out;
    out.reserve(count());
    for (size_t i = 0; i < words_.size(); ++i) {
      uint64_t w = words_[i];
      while (w) {
        int b = std::countr_zero(w);
        out.push_back(static_cast<int>(i * 64 + b));
        w &= w - 1;
      }
    }
    return out;
  }

  size_t hash() const {
    uint64_t h = 0x9e3779b97f4a7c15ull ^ (uint64_t)width_;
    for (uint64_t w : words_) {
      h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return static_cast<size_t>(h);
  }

 private:
  int width_ = 0;
  std::vector<uint64_t> words_;
};

struct BitsetHash {
  size_t operator()(const Bitset& b) const { return b.hash(); }
};

}  // namespace chigen
