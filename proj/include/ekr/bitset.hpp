#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "ekr/simd/bitkernels.hpp"

namespace ekr {

// Fixed-size bit vector. Bulk operations go through the active SIMD kernels;
// operands of binary operations must have the same size.
class BitSet {
 public:
  BitSet() = default;
  explicit BitSet(std::size_t nbits) : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

  std::size_t size() const { return nbits_; }
  std::size_t word_count() const { return words_.size(); }
  const std::uint64_t* data() const { return words_.data(); }
  std::uint64_t* data() { return words_.data(); }

  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void clear() { std::fill(words_.begin(), words_.end(), 0); }

  std::size_t count() const { return kernels().popcount(words_.data(), words_.size()); }
  bool any() const {
    for (std::uint64_t w : words_) {
      if (w) return true;
    }
    return false;
  }
  bool none() const { return !any(); }

  BitSet& operator&=(const BitSet& o) {
    kernels().and_into(words_.data(), words_.data(), o.words_.data(), words_.size());
    return *this;
  }
  BitSet& operator|=(const BitSet& o) {
    kernels().or_into(words_.data(), words_.data(), o.words_.data(), words_.size());
    return *this;
  }
  // this &= ~o
  BitSet& subtract(const BitSet& o) {
    kernels().andnot_into(words_.data(), words_.data(), o.words_.data(), words_.size());
    return *this;
  }

  bool intersects(const BitSet& o) const {
    return kernels().intersects(words_.data(), o.words_.data(), words_.size());
  }
  bool is_subset_of(const BitSet& o) const {
    return kernels().is_subset(words_.data(), o.words_.data(), words_.size());
  }
  std::size_t and_count(const BitSet& o) const {
    return kernels().and_popcount(words_.data(), o.words_.data(), words_.size());
  }

  // dst = a & b without reallocating dst.
  static void assign_and(BitSet& dst, const BitSet& a, const BitSet& b) {
    dst.nbits_ = a.nbits_;
    dst.words_.resize(a.words_.size());
    kernels().and_into(dst.words_.data(), a.words_.data(), b.words_.data(), a.words_.size());
  }

  // Lowest set index >= from, or -1.
  int next(std::size_t from) const {
    std::size_t w = from >> 6;
    if (w >= words_.size()) return -1;
    std::uint64_t bits = words_[w] & (~std::uint64_t{0} << (from & 63));
    while (true) {
      if (bits) return static_cast<int>(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
      if (++w >= words_.size()) return -1;
      bits = words_[w];
    }
  }
  int first() const { return next(0); }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        f(static_cast<int>(w * 64 + static_cast<std::size_t>(std::countr_zero(bits))));
        bits &= bits - 1;
      }
    }
  }

  std::vector<int> indices() const {
    std::vector<int> out;
    for_each([&](int i) { out.push_back(i); });
    return out;
  }

  friend bool operator==(const BitSet& a, const BitSet& b) {
    return a.nbits_ == b.nbits_ && a.words_ == b.words_;
  }

 private:
  static const simd::BitKernels& kernels() { return simd::active_kernels(); }

  std::size_t nbits_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace ekr
