#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace pcc {

// Fixed-size bit set over [0, size). Backing words beyond `size` stay zero.
class BitSet {
 public:
  BitSet() = default;
  explicit BitSet(std::size_t size) : size_(size), w_((size + 63) / 64, 0) {}

  std::size_t size() const { return size_; }

  void set(std::size_t i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void clear(std::size_t i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

  bool any() const {
    for (auto w : w_)
      if (w) return true;
    return false;
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : w_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  // Index of the lowest set bit; size() when empty.
  std::size_t first() const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i]) return i * 64 + static_cast<std::size_t>(std::countr_zero(w_[i]));
    return size_;
  }

  BitSet and_with(const BitSet& o) const {
    BitSet r(size_);
    for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] = w_[i] & o.w_[i];
    return r;
  }

  void intersect(const BitSet& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
  }

  void unite(const BitSet& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
  }

  void subtract(const BitSet& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
  }

  bool intersects(const BitSet& o) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & o.w_[i]) return true;
    return false;
  }

  bool contains(const BitSet& o) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (o.w_[i] & ~w_[i]) return false;
    return true;
  }

  bool operator==(const BitSet& o) const { return size_ == o.size_ && w_ == o.w_; }

  template <typename Fn>
  void for_each(Fn fn) const {
    for (std::size_t i = 0; i < w_.size(); ++i) {
      std::uint64_t w = w_[i];
      while (w) {
        fn(i * 64 + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  std::vector<std::size_t> to_indices() const {
    std::vector<std::size_t> out;
    for_each([&](std::size_t i) { out.push_back(i); });
    return out;
  }

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> w_;
};

}  // namespace pcc
