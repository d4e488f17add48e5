#pragma once

#include <functional>
#include <vector>

#include "chowlab/word.hpp"

namespace chowlab {

// Visits every interleaving of the given words (each word stays a
// subsequence). Interleavings are enumerated by choice sequence, so the
// count is always the multinomial of the lengths, even when letters repeat.
inline void for_each_shuffle(const std::vector<Word>& words,
                             const std::function<void(const Word&)>& fn) {
  size_t total = 0;
  for (auto& w : words) total += w.size();
  Word cur;
  cur.reserve(total);
  std::vector<size_t> pos(words.size(), 0);
  std::function<void()> rec = [&]() {
    if (cur.size() == total) {
      fn(cur);
      return;
    }
    for (size_t i = 0; i < words.size(); ++i) {
      if (pos[i] < words[i].size()) {
        cur.push_back(words[i][pos[i]]);
        ++pos[i];
        rec();
        --pos[i];
        cur.pop_back();
      }
    }
  };
  rec();
}

inline std::vector<Word> shuffles(const std::vector<Word>& words) {
  std::vector<Word> out;
  for_each_shuffle(words, [&](const Word& w) { out.push_back(w); });
  return out;
}

}  // namespace chowlab
