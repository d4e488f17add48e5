#include "chowlab/word.hpp"

namespace chowlab {

long inv(const Word& w) {
  long count = 0;
  for (size_t i = 0; i < w.size(); ++i)
    for (size_t j = i + 1; j < w.size(); ++j)
      if (w[i] > w[j]) ++count;
  return count;
}

std::vector<int> descent_positions(const Word& w) {
  std::vector<int> out;
  for (size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] > w[i + 1]) out.push_back(static_cast<int>(i) + 1);
  return out;
}

long maj(const Word& w) {
  long sum = 0;
  for (int p : descent_positions(w)) sum += p;
  return sum;
}

int des(const Word& w) { return static_cast<int>(descent_positions(w).size()); }

Subset descent_set(const Word& w) {
  int len = static_cast<int>(w.size());
  Subset s = Subset::empty(len > 0 ? len - 1 : 0);
  for (int p : descent_positions(w)) s = s.with(p);
  return s;
}

std::string word_to_string(const Word& w) {
  bool wide = false;
  for (int k : w)
    if (!is_inf(k) && !is_barred(k) && k > 9) wide = true;
  std::string s;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i && wide) s += " ";
    int k = w[i];
    if (is_inf(k))
      s += "∞";
    else if (is_barred(k))
      s += std::to_string(k + kBarOffset) + "̄";
    else
      s += std::to_string(k);
  }
  return s;
}

}  // namespace chowlab
