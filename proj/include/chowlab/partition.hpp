#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "chowlab/ints.hpp"

namespace chowlab {

// An integer partition: weakly decreasing positive parts.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    std::sort(parts_.begin(), parts_.end(), std::greater<int>());
    for (int p : parts_)
      if (p < 1) throw std::invalid_argument("Partition: parts must be >= 1");
  }

  // Builds a partition from a weak composition, dropping zeros.
  static Partition from_weak(const std::vector<int>& comp) {
    std::vector<int> p;
    for (int c : comp)
      if (c > 0) p.push_back(c);
    return Partition(std::move(p));
  }

  const std::vector<int>& parts() const { return parts_; }
  int weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
  int length() const { return static_cast<int>(parts_.size()); }
  bool operator==(const Partition& o) const { return parts_ == o.parts_; }
  bool operator!=(const Partition& o) const { return parts_ != o.parts_; }
  bool operator<(const Partition& o) const { return parts_ < o.parts_; }

  // z_lambda = prod over part sizes j of j^{m_j} * m_j!.
  Int z() const {
    Int r = 1;
    size_t i = 0;
    while (i < parts_.size()) {
      size_t j = i;
      while (j < parts_.size() && parts_[j] == parts_[i]) ++j;
      int m = static_cast<int>(j - i);
      for (int k = 0; k < m; ++k) r *= parts_[i];
      r *= factorial(m);
      i = j;
    }
    return r;
  }

  std::string to_string() const {
    if (parts_.empty()) return "0";
    std::string s;
    for (size_t i = 0; i < parts_.size(); ++i) {
      if (i) s += "+";
      s += std::to_string(parts_[i]);
    }
    return s;
  }

  static Partition parse(const std::string& s) {
    std::vector<int> parts;
    size_t pos = 0;
    while (pos < s.size()) {
      size_t next = s.find('+', pos);
      if (next == std::string::npos) next = s.size();
      parts.push_back(std::stoi(s.substr(pos, next - pos)));
      pos = next + 1;
    }
    return Partition(parts);
  }

 private:
  std::vector<int> parts_;
};

// All partitions of n, in a deterministic order.
inline std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rem, int maxp) {
    if (rem == 0) {
      out.push_back(Partition(cur));
      return;
    }
    for (int p = std::min(rem, maxp); p >= 1; --p) {
      cur.push_back(p);
      rec(rem - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

}  // namespace chowlab
