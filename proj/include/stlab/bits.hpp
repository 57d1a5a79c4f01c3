#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace stlab {

/// Fixed-width bitset sized at runtime. Used for subsets of an indexed
/// tuple universe and for rows of relation matrices.
class Bits {
 public:
  Bits() = default;
  explicit Bits(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

  std::size_t size() const noexcept { return n_; }

  bool test(std::size_t i) const noexcept { return (w_[i >> 6] >> (i & 63)) & 1U; }
  void set(std::size_t i) noexcept { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) noexcept { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (auto w : w_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool none() const noexcept {
    for (auto w : w_)
      if (w) return false;
    return true;
  }
  bool any() const noexcept { return !none(); }

  bool intersects(const Bits& o) const noexcept {
    for (std::size_t k = 0; k < w_.size(); ++k)
      if (w_[k] & o.w_[k]) return true;
    return false;
  }
  bool is_subset_of(const Bits& o) const noexcept {
    for (std::size_t k = 0; k < w_.size(); ++k)
      if (w_[k] & ~o.w_[k]) return false;
    return true;
  }

  Bits& operator|=(const Bits& o) noexcept {
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] |= o.w_[k];
    return *this;
  }
  Bits& operator&=(const Bits& o) noexcept {
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] &= o.w_[k];
    return *this;
  }
  // set difference
  Bits& operator-=(const Bits& o) noexcept {
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] &= ~o.w_[k];
    return *this;
  }
  friend Bits operator|(Bits a, const Bits& b) { return a |= b; }
  friend Bits operator&(Bits a, const Bits& b) { return a &= b; }
  friend Bits operator-(Bits a, const Bits& b) { return a -= b; }

  friend bool operator==(const Bits& a, const Bits& b) = default;

  /// Lowest set index, or size() when empty.
  std::size_t first() const noexcept { return next(0); }

  /// Lowest set index >= from, or size() when there is none.
  std::size_t next(std::size_t from) const noexcept {
    if (from >= n_) return n_;
    std::size_t k = from >> 6;
    std::uint64_t w = w_[k] & (~std::uint64_t{0} << (from & 63));
    while (true) {
      if (w) return std::min(n_, (k << 6) + static_cast<std::size_t>(std::countr_zero(w)));
      if (++k == w_.size()) return n_;
      w = w_[k];
    }
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t k = 0; k < w_.size(); ++k) {
      std::uint64_t w = w_[k];
      while (w) {
        f((k << 6) + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  std::vector<std::size_t> indices() const {
    std::vector<std::size_t> out;
    for_each([&](std::size_t i) { out.push_back(i); });
    return out;
  }

  std::size_t hash() const noexcept {
    std::size_t h = n_ * 0x9e3779b97f4a7c15ULL;
    for (auto w : w_) h = (h ^ w) * 0x100000001b3ULL + (h >> 29);
    return h;
  }

  /// Lexicographic comparison of the sorted index lists the two sets denote.
  friend bool lex_less(const Bits& a, const Bits& b) noexcept {
    for (std::size_t k = 0; k < a.w_.size(); ++k) {
      std::uint64_t diff = a.w_[k] ^ b.w_[k];
      if (!diff) continue;
      std::uint64_t low = diff & (~diff + 1);
      const Bits& owner = (a.w_[k] & low) ? a : b;
      const Bits& other = (a.w_[k] & low) ? b : a;
      // The list holding the lowest differing index is smaller unless the
      // other list stops before it.
      bool other_continues = (other.w_[k] & ~((low << 1) - 1)) != 0;
      for (std::size_t j = k + 1; !other_continues && j < other.w_.size(); ++j)
        other_continues = other.w_[j] != 0;
      bool owner_smaller = other_continues;
      return (&owner == &a) ? owner_smaller : !owner_smaller;
    }
    return false;
  }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> w_;
};

struct BitsHash {
  std::size_t operator()(const Bits& b) const noexcept { return b.hash(); }
};

}  // namespace stlab
