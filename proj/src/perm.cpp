#include "chowlab/perm.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace chowlab {

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
  int n = static_cast<int>(img_.size());
  if (n > kMaxGroundSet) throw std::invalid_argument("Permutation: n too large");
  std::vector<char> seen(n + 1, 0);
  for (int v : img_) {
    if (v < 1 || v > n || seen[v]) throw std::invalid_argument("Permutation: not a bijection");
    seen[v] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

Permutation Permutation::transposition(int n, int i, int j) {
  auto p = identity(n);
  std::swap(p.img_[i - 1], p.img_[j - 1]);
  return p;
}

Permutation Permutation::long_cycle(int n) {
  std::vector<int> v(n);
  for (int i = 1; i <= n; ++i) v[i - 1] = i % n + 1;
  return Permutation(std::move(v));
}

Permutation Permutation::inverse() const {
  std::vector<int> v(img_.size());
  for (int i = 1; i <= n(); ++i) v[img_[i - 1] - 1] = i;
  return Permutation(std::move(v));
}

Permutation Permutation::compose(const Permutation& b) const {
  std::vector<int> v(img_.size());
  for (int i = 1; i <= n(); ++i) v[i - 1] = img_[b(i) - 1];
  return Permutation(std::move(v));
}

Permutation Permutation::power(int k) const {
  Permutation r = identity(n());
  Permutation base = *this;
  if (k < 0) { base = inverse(); k = -k; }
  for (int i = 0; i < k; ++i) r = base.compose(r);
  return r;
}

Partition Permutation::cycle_type() const {
  std::vector<char> seen(n() + 1, 0);
  std::vector<int> lens;
  for (int i = 1; i <= n(); ++i) {
    if (seen[i]) continue;
    int len = 0, j = i;
    while (!seen[j]) { seen[j] = 1; j = img_[j - 1]; ++len; }
    lens.push_back(len);
  }
  return Partition(lens);
}

DecoratedPermutation::DecoratedPermutation(std::vector<int> images) : img_(std::move(images)) {
  int n = static_cast<int>(img_.size());
  if (n > kMaxGroundSet) throw std::invalid_argument("DecoratedPermutation: n too large");
  std::uint32_t positions = 0, values = 0;
  for (int i = 1; i <= n; ++i) {
    int v = img_[i - 1];
    if (v < 0 || v > n) throw std::invalid_argument("DecoratedPermutation: value out of range");
    if (v == 0) continue;
    if (values & (1u << (v - 1)))
      throw std::invalid_argument("DecoratedPermutation: repeated value");
    values |= 1u << (v - 1);
    positions |= 1u << (i - 1);
  }
  if (values != positions)
    throw std::invalid_argument("DecoratedPermutation: values must permute the support");
}

DecoratedPermutation DecoratedPermutation::theta(int n) {
  return DecoratedPermutation(std::vector<int>(n, 0));
}

Subset DecoratedPermutation::support() const {
  Subset s = Subset::empty(n());
  for (int i = 1; i <= n(); ++i)
    if (img_[i - 1] != 0) s = s.with(i);
  return s;
}

bool DecoratedPermutation::is_theta() const { return support().is_empty(); }

Subset exc_set(const Permutation& p) {
  Subset s = Subset::empty(p.n());
  for (int i = 1; i <= p.n(); ++i)
    if (p(i) > i) s = s.with(i);
  return s;
}

int exc(const Permutation& p) { return exc_set(p).size(); }

long maj(const Permutation& p) {
  Word w(p.one_line().begin(), p.one_line().end());
  return maj(w);
}

int des(const Permutation& p) {
  Word w(p.one_line().begin(), p.one_line().end());
  return des(w);
}

Subset exc_set(const DecoratedPermutation& p) {
  Subset s = Subset::empty(p.n());
  for (int i = 1; i <= p.n(); ++i)
    if (p(i) > i) s = s.with(i);  // zeros never exceed i
  return s;
}

int exc(const DecoratedPermutation& p) {
  if (p.is_theta()) return -1;
  return exc_set(p).size();
}

long maj(const DecoratedPermutation& p) {
  if (p.is_theta()) return -1;
  Word w(p.one_line().begin(), p.one_line().end());
  return maj(w);
}

int des(const DecoratedPermutation& p) {
  Word w(p.one_line().begin(), p.one_line().end());
  return des(w);
}

Word barred_word(const Permutation& p) {
  Word w(p.n());
  Subset e = exc_set(p);
  for (int i = 1; i <= p.n(); ++i) w[i - 1] = e.contains(i) ? barred(p(i)) : p(i);
  return w;
}

Word barred_word(const DecoratedPermutation& p) {
  Word w(p.n());
  Subset e = exc_set(p);
  for (int i = 1; i <= p.n(); ++i) w[i - 1] = e.contains(i) ? barred(p(i)) : p(i);
  return w;
}

Subset dex(const Permutation& p) {
  return descent_set(barred_word(p));
}

Subset dex(const DecoratedPermutation& p) {
  if (p.is_theta()) return Subset::empty(std::max(0, p.n() - 1));
  return descent_set(barred_word(p));
}

void for_each_permutation(int n, const std::function<void(const Permutation&)>& fn) {
  require_exhaustive_ok(n, "for_each_permutation");
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  do {
    fn(Permutation(v));
  } while (std::next_permutation(v.begin(), v.end()));
}

void for_each_decorated(int n, const std::function<void(const DecoratedPermutation&)>& fn) {
  require_exhaustive_ok(n, "for_each_decorated");
  for_each_subset(n, [&](const Subset& s) {
    std::vector<int> vals = s.elements();
    std::sort(vals.begin(), vals.end());
    do {
      std::vector<int> img(n, 0);
      size_t k = 0;
      for (int pos : s.elements()) img[pos - 1] = vals[k++];
      fn(DecoratedPermutation(std::move(img)));
    } while (std::next_permutation(vals.begin(), vals.end()));
  });
}

long count_decorated(int n) {
  Int total = 0;
  for (int k = 0; k <= n; ++k) total += binomial(n, k) * factorial(k);
  return total.get_si();
}

}  // namespace chowlab
