#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

namespace fdom {

// Fixed-capacity bitset over vertex ids 0..255.
class VertexSet {
 public:
  static constexpr int kCapacity = 256;
  static constexpr int kWords = kCapacity / 64;

  VertexSet() = default;
  VertexSet(std::initializer_list<int> vs) {
    for (int v : vs) insert(v);
  }
  template <typename Range>
  static VertexSet of(const Range& vs) {
    VertexSet s;
    for (int v : vs) s.insert(v);
    return s;
  }
  static VertexSet range(int n) {
    VertexSet s;
    for (int w = 0; w < kWords && n > 0; ++w, n -= 64)
      s.w_[w] = n >= 64 ? ~0ULL : ((1ULL << n) - 1);
    return s;
  }

  void insert(int v) { w_[v >> 6] |= 1ULL << (v & 63); }
  void erase(int v) { w_[v >> 6] &= ~(1ULL << (v & 63)); }
  bool contains(int v) const { return (w_[v >> 6] >> (v & 63)) & 1ULL; }

  int size() const {
    int c = 0;
    for (auto x : w_) c += std::popcount(x);
    return c;
  }
  bool empty() const {
    for (auto x : w_)
      if (x) return false;
    return true;
  }
  bool intersects(const VertexSet& o) const {
    for (int i = 0; i < kWords; ++i)
      if (w_[i] & o.w_[i]) return true;
    return false;
  }
  bool subset_of(const VertexSet& o) const {
    for (int i = 0; i < kWords; ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }
  // Smallest element, or -1 when empty.
  int first() const {
    for (int i = 0; i < kWords; ++i)
      if (w_[i]) return i * 64 + std::countr_zero(w_[i]);
    return -1;
  }
  // Smallest element greater than v, or -1.
  int next(int v) const {
    ++v;
    if (v >= kCapacity) return -1;
    int i = v >> 6;
    std::uint64_t x = w_[i] & (~0ULL << (v & 63));
    while (true) {
      if (x) return i * 64 + std::countr_zero(x);
      if (++i == kWords) return -1;
      x = w_[i];
    }
  }

  VertexSet& operator|=(const VertexSet& o) {
    for (int i = 0; i < kWords; ++i) w_[i] |= o.w_[i];
    return *this;
  }
  VertexSet& operator&=(const VertexSet& o) {
    for (int i = 0; i < kWords; ++i) w_[i] &= o.w_[i];
    return *this;
  }
  VertexSet& operator-=(const VertexSet& o) {
    for (int i = 0; i < kWords; ++i) w_[i] &= ~o.w_[i];
    return *this;
  }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
  friend bool operator==(const VertexSet&, const VertexSet&) = default;

  // Orders sets as binary numbers with vertex 0 the least significant bit.
  friend bool operator<(const VertexSet& a, const VertexSet& b) {
    for (int i = kWords - 1; i >= 0; --i)
      if (a.w_[i] != b.w_[i]) return a.w_[i] < b.w_[i];
    return false;
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    for (int v : *this) out.push_back(v);
    return out;
  }
  std::uint64_t word(int i) const { return w_[i]; }
  std::size_t hash() const {
    std::size_t h = 0;
    for (auto x : w_) h = h * 0x9E3779B97F4A7C15ULL ^ (x + (h >> 7));
    return h;
  }

  class iterator {
   public:
    iterator(const VertexSet* s, int v) : s_(s), v_(v) {}
    int operator*() const { return v_; }
    iterator& operator++() {
      v_ = s_->next(v_);
      return *this;
    }
    bool operator!=(const iterator& o) const { return v_ != o.v_; }

   private:
    const VertexSet* s_;
    int v_;
  };
  iterator begin() const { return {this, first()}; }
  iterator end() const { return {this, -1}; }

 private:
  std::array<std::uint64_t, kWords> w_{};
};

}  // namespace fdom

template <>
struct std::hash<fdom::VertexSet> {
  std::size_t operator()(const fdom::VertexSet& s) const { return s.hash(); }
};
