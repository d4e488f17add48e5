#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include "chowlab/caps.hpp"

namespace chowlab {

// A subset of the ground set [n] = {1,...,n}, stored as a bitmask.
// Element i corresponds to bit i-1. Iteration is in increasing order.
class Subset {
 public:
  Subset() = default;
  Subset(std::uint32_t mask, int n) : mask_(mask), n_(n) {
    if (n < 0 || n > kMaxGroundSet)
      throw std::invalid_argument("Subset: ground-set size out of range");
    if (n < 32 && (mask >> n) != 0)
      throw std::invalid_argument("Subset: mask has bits above the ground set");
  }

  static Subset empty(int n) { return Subset(0, n); }
  static Subset full(int n) { return Subset(n == 0 ? 0u : ((1u << n) - 1u), n); }
  static Subset single(int i, int n) { return Subset(1u << (i - 1), n); }
  static Subset of(std::initializer_list<int> elems, int n) {
    std::uint32_t m = 0;
    for (int e : elems) m |= 1u << (e - 1);
    return Subset(m, n);
  }
  static Subset of(const std::vector<int>& elems, int n) {
    std::uint32_t m = 0;
    for (int e : elems) m |= 1u << (e - 1);
    return Subset(m, n);
  }

  std::uint32_t mask() const { return mask_; }
  int n() const { return n_; }
  int size() const { return std::popcount(mask_); }
  bool is_empty() const { return mask_ == 0; }
  bool contains(int i) const { return (mask_ >> (i - 1)) & 1u; }
  bool subset_of(const Subset& o) const { return (mask_ & ~o.mask_) == 0; }

  Subset union_with(const Subset& o) const { return Subset(mask_ | o.mask_, n_); }
  Subset intersect(const Subset& o) const { return Subset(mask_ & o.mask_, n_); }
  Subset minus(const Subset& o) const { return Subset(mask_ & ~o.mask_, n_); }
  Subset complement() const { return Subset(full(n_).mask() & ~mask_, n_); }
  Subset with(int i) const { return Subset(mask_ | (1u << (i - 1)), n_); }
  Subset without(int i) const { return Subset(mask_ & ~(1u << (i - 1)), n_); }

  std::vector<int> elements() const {
    std::vector<int> out;
    out.reserve(size());
    for (std::uint32_t m = mask_; m; m &= m - 1) out.push_back(std::countr_zero(m) + 1);
    return out;
  }

  bool operator==(const Subset& o) const { return mask_ == o.mask_ && n_ == o.n_; }
  bool operator!=(const Subset& o) const { return !(*this == o); }
  // Canonical order: by cardinality, then by mask value.
  bool operator<(const Subset& o) const {
    int a = size(), b = o.size();
    if (a != b) return a < b;
    return mask_ < o.mask_;
  }

  std::string to_string() const {
    if (mask_ == 0) return "{}";
    std::string s = "{";
    bool first = true;
    for (int e : elements()) {
      if (!first) s += ",";
      s += std::to_string(e);
      first = false;
    }
    return s + "}";
  }

 private:
  std::uint32_t mask_ = 0;
  int n_ = 0;
};

// Visits all subsets of [n].
template <class F>
void for_each_subset(int n, F&& fn) {
  std::uint32_t top = n == 0 ? 0u : (1u << n) - 1u;
  for (std::uint32_t m = 0;; ++m) {
    fn(Subset(m, n));
    if (m == top) break;
  }
}

// Visits all subsets of the given set (as masks within the same ground set).
template <class F>
void for_each_submask(const Subset& s, F&& fn) {
  std::uint32_t m = s.mask();
  std::uint32_t sub = m;
  for (;;) {
    fn(Subset(sub, s.n()));
    if (sub == 0) break;
    sub = (sub - 1) & m;
  }
}

}  // namespace chowlab
