#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

namespace spreadlab {

// Subset of a fixed universe {0,...,n-1}, stored as packed 64-bit words.
// Binary operations require both operands to share the same universe size.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(int n) : n_(n), w_(words_for(n), 0) {
    if (n < 0) throw std::invalid_argument("Bitset: negative universe");
  }

  int universe() const { return n_; }

  bool test(int e) const { return (w_[e >> 6] >> (e & 63)) & 1u; }
  void set(int e) { check_index(e); w_[e >> 6] |= uint64_t{1} << (e & 63); }
  void reset(int e) { check_index(e); w_[e >> 6] &= ~(uint64_t{1} << (e & 63)); }

  int count() const {
    int c = 0;
    for (uint64_t w : w_) c += __builtin_popcountll(w);
    return c;
  }
  bool any() const {
    for (uint64_t w : w_) if (w) return true;
    return false;
  }
  bool empty() const { return !any(); }

  bool operator==(const Bitset& o) const { return n_ == o.n_ && w_ == o.w_; }
  bool operator!=(const Bitset& o) const { return !(*this == o); }

  Bitset operator&(const Bitset& o) const { return zip(o, [](uint64_t a, uint64_t b) { return a & b; }); }
  Bitset operator|(const Bitset& o) const { return zip(o, [](uint64_t a, uint64_t b) { return a | b; }); }
  Bitset operator^(const Bitset& o) const { return zip(o, [](uint64_t a, uint64_t b) { return a ^ b; }); }
  // set difference
  Bitset operator-(const Bitset& o) const { return zip(o, [](uint64_t a, uint64_t b) { return a & ~b; }); }

  Bitset& operator&=(const Bitset& o) { return zip_inplace(o, [](uint64_t& a, uint64_t b) { a &= b; }); }
  Bitset& operator|=(const Bitset& o) { return zip_inplace(o, [](uint64_t& a, uint64_t b) { a |= b; }); }

  Bitset complement() const {
    Bitset r(n_);
    for (size_t i = 0; i < w_.size(); ++i) r.w_[i] = ~w_[i];
    r.trim();
    return r;
  }

  bool subset_of(const Bitset& o) const {
    check_same(o);
    for (size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }
  bool intersects(const Bitset& o) const {
    check_same(o);
    for (size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & o.w_[i]) return true;
    return false;
  }
  int intersect_count(const Bitset& o) const {
    check_same(o);
    int c = 0;
    for (size_t i = 0; i < w_.size(); ++i) c += __builtin_popcountll(w_[i] & o.w_[i]);
    return c;
  }
  bool disjoint_from(const Bitset& o) const { return !intersects(o); }

  Bitset with_bit(int e) const { Bitset r = *this; r.set(e); return r; }
  Bitset without_bit(int e) const { Bitset r = *this; r.reset(e); return r; }

  std::vector<int> elements() const {
    std::vector<int> out;
    out.reserve(count());
    for_each_bit([&](int e) { out.push_back(e); });
    return out;
  }

  template <class F>
  void for_each_bit(F&& f) const {
    for (size_t i = 0; i < w_.size(); ++i) {
      uint64_t w = w_[i];
      while (w) {
        int b = __builtin_ctzll(w);
        f(int(i * 64 + b));
        w &= w - 1;
      }
    }
  }

  // Numeric order on the packed value; used to canonicalize family member lists.
  static bool value_less(const Bitset& a, const Bitset& b) {
    for (size_t i = a.w_.size(); i-- > 0;)
      if (a.w_[i] != b.w_[i]) return a.w_[i] < b.w_[i];
    return false;
  }

  bool has_bit_above(int d) const {
    size_t wi = size_t(d >> 6);
    if (w_[wi] >> (d & 63) >> 1) return true;
    for (size_t j = wi + 1; j < w_.size(); ++j)
      if (w_[j]) return true;
    return false;
  }

  // Order of sorted element tuples ({1} < {1,2} < {1,3} < {2}); used wherever
  // a "lexicographically least" witness or selection is required. At the
  // lowest differing bit d, the side containing d wins unless the other side
  // is exhausted there (a proper prefix, which comes first).
  static bool lex_less(const Bitset& a, const Bitset& b) {
    for (size_t i = 0; i < a.w_.size(); ++i) {
      uint64_t diff = a.w_[i] ^ b.w_[i];
      if (!diff) continue;
      int d = int(i * 64) + __builtin_ctzll(diff);
      if (a.test(d)) return b.has_bit_above(d);
      return !a.has_bit_above(d);
    }
    return false;
  }

  size_t hash() const {
    uint64_t h = 0x9e3779b97f4a7c15ull ^ uint64_t(n_);
    for (uint64_t w : w_) {
      h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
      h *= 0xbf58476d1ce4e5b9ull;
    }
    return size_t(h);
  }

 private:
  static size_t words_for(int n) { return size_t((n + 63) / 64); }
  void check_index(int e) const {
    if (e < 0 || e >= n_) throw std::out_of_range("Bitset: element out of universe");
  }
  void check_same(const Bitset& o) const {
    if (n_ != o.n_) throw std::invalid_argument("Bitset: universe mismatch");
  }
  void trim() {
    int rem = n_ & 63;
    if (rem && !w_.empty()) w_.back() &= (~uint64_t{0}) >> (64 - rem);
  }
  template <class Op>
  Bitset zip(const Bitset& o, Op op) const {
    check_same(o);
    Bitset r(n_);
    for (size_t i = 0; i < w_.size(); ++i) r.w_[i] = op(w_[i], o.w_[i]);
    return r;
  }
  template <class Op>
  Bitset& zip_inplace(const Bitset& o, Op op) {
    check_same(o);
    for (size_t i = 0; i < w_.size(); ++i) op(w_[i], o.w_[i]);
    return *this;
  }

  int n_ = 0;
  std::vector<uint64_t> w_;
};

struct BitsetHash {
  size_t operator()(const Bitset& b) const { return b.hash(); }
};

}  // namespace spreadlab
