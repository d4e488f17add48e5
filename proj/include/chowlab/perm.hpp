#pragma once

#include <vector>

#include "chowlab/caps.hpp"
#include "chowlab/partition.hpp"
#include "chowlab/subset.hpp"
#include "chowlab/word.hpp"

namespace chowlab {

// A permutation of [n] in one-line notation: images[i-1] = sigma(i).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);
  static Permutation transposition(int n, int i, int j);
  // The long cycle (1,2,...,n): 1 -> 2 -> ... -> n -> 1.
  static Permutation long_cycle(int n);

  int n() const { return static_cast<int>(img_.size()); }
  int operator()(int i) const { return img_[i - 1]; }
  const std::vector<int>& one_line() const { return img_; }

  Permutation inverse() const;
  // (a.compose(b))(i) = a(b(i)).
  Permutation compose(const Permutation& b) const;
  Permutation power(int k) const;
  bool operator==(const Permutation& o) const { return img_ == o.img_; }

  Partition cycle_type() const;

 private:
  std::vector<int> img_;
};

// A permutation on a subset of [n]: positions off the support carry 0, and
// the nonzero values form exactly the support set. The all-zero sequence is
// theta.
class DecoratedPermutation {
 public:
  DecoratedPermutation() = default;
  explicit DecoratedPermutation(std::vector<int> images);

  static DecoratedPermutation theta(int n);

  int n() const { return static_cast<int>(img_.size()); }
  int operator()(int i) const { return img_[i - 1]; }
  const std::vector<int>& one_line() const { return img_; }
  Subset support() const;
  bool is_theta() const;
  bool operator==(const DecoratedPermutation& o) const { return img_ == o.img_; }

 private:
  std::vector<int> img_;
};

// Statistics. For decorated permutations maj(theta) = exc(theta) = -1.
Subset exc_set(const Permutation& p);
int exc(const Permutation& p);
long maj(const Permutation& p);
int des(const Permutation& p);

Subset exc_set(const DecoratedPermutation& p);
int exc(const DecoratedPermutation& p);
long maj(const DecoratedPermutation& p);
int des(const DecoratedPermutation& p);

// DEX = descent set of the barred word (excedance positions barred), over
// the order 1' < ... < n' < 1 < ... < n, resp. 1' < ... < n' < 0 < 1 < ... < n.
Subset dex(const Permutation& p);
Subset dex(const DecoratedPermutation& p);

Word barred_word(const Permutation& p);
Word barred_word(const DecoratedPermutation& p);

// Exhaustive enumeration (guarded by the size caps).
void for_each_permutation(int n, const std::function<void(const Permutation&)>& fn);
void for_each_decorated(int n, const std::function<void(const DecoratedPermutation&)>& fn);
long count_decorated(int n);  // sum_k C(n,k) k!

}  // namespace chowlab
