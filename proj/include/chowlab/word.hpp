#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "chowlab/subset.hpp"

namespace chowlab {

// Words are sequences of integer order keys; statistics compare keys with
// the ordinary integer order. Three alphabets occur, each realized by its
// own key range so they can never be conflated:
//
//   plain letters 0,1,2,...      -> key = letter
//   the infinity letter          -> key = kInfLetter  (greater than all finite)
//   barred letters 1',...,n'     -> key = letter - kBarOffset (less than all plain)
//
// This realizes the orders 0 < 1 < ... < inf, 1' < ... < n' < 1 < ... < n,
// and 1' < ... < n' < 0 < 1 < ... < n by plain integer comparison.
using Word = std::vector<int>;

inline constexpr int kInfLetter = 1 << 20;
inline constexpr int kBarOffset = 1 << 20;

inline int barred(int v) { return v - kBarOffset; }
inline bool is_barred(int key) { return key < -(kBarOffset / 2); }
inline bool is_inf(int key) { return key >= kInfLetter; }

long inv(const Word& w);
long maj(const Word& w);
std::vector<int> descent_positions(const Word& w);  // 1-based
int des(const Word& w);

// Descent set as a Subset of [len-1].
Subset descent_set(const Word& w);

std::string word_to_string(const Word& w);

}  // namespace chowlab
