#pragma once

#include <cassert>
#include <cstdint>
#include <vector>

namespace copsweep {

// Fixed-capacity bitset sized at runtime. Used on the hot paths (territory
// evolution, neighborhood unions) where sorted vectors are too slow.
class Bits {
public:
  Bits() = default;
  explicit Bits(int n) : n_(n), w_((n + 63) / 64, 0) {}

  int capacity() const { return n_; }

  void set(int i) {
    assert(i >= 0 && i < n_);
    w_[i >> 6] |= uint64_t(1) << (i & 63);
  }
  void reset(int i) {
    assert(i >= 0 && i < n_);
    w_[i >> 6] &= ~(uint64_t(1) << (i & 63));
  }
  bool test(int i) const {
    assert(i >= 0 && i < n_);
    return (w_[i >> 6] >> (i & 63)) & 1;
  }

  void clear() { std::fill(w_.begin(), w_.end(), uint64_t(0)); }

  Bits& operator|=(const Bits& o) {
    assert(n_ == o.n_);
    for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }
  // this \ o
  Bits& subtract(const Bits& o) {
    assert(n_ == o.n_);
    for (size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
    return *this;
  }

  int count() const {
    int c = 0;
    for (uint64_t w : w_) c += __builtin_popcountll(w);
    return c;
  }
  bool any() const {
    for (uint64_t w : w_)
      if (w) return true;
    return false;
  }
  bool operator==(const Bits& o) const { return n_ == o.n_ && w_ == o.w_; }

  template <class F>
  void for_each(F&& f) const {
    for (size_t wi = 0; wi < w_.size(); ++wi) {
      uint64_t w = w_[wi];
      while (w) {
        int b = __builtin_ctzll(w);
        f(int(wi * 64 + b));
        w &= w - 1;
      }
    }
  }

  const std::vector<uint64_t>& words() const { return w_; }

private:
  int n_ = 0;
  std::vector<uint64_t> w_;
};

}  // namespace copsweep
