#pragma once

#include <cstdlib>
#include <string>

#include "chowlab/ints.hpp"

namespace chowlab {

// Hard cap on ground-set sizes (bitmask carrier is 32 bits, enumeration is
// exponential well before that).
inline constexpr int kMaxGroundSet = 20;

// Soft cap on exhaustive S_n-scale loops (n! and friends). Overridable via
// the CHOWLAB_MAX_N environment variable or set_max_exhaustive_n().
inline int& max_exhaustive_n_ref() {
  static int limit = [] {
    if (const char* env = std::getenv("CHOWLAB_MAX_N")) {
      int v = std::atoi(env);
      if (v > 0) return v;
    }
    return 9;
  }();
  return limit;
}

inline int max_exhaustive_n() { return max_exhaustive_n_ref(); }
inline void set_max_exhaustive_n(int n) { max_exhaustive_n_ref() = n; }

inline void require_exhaustive_ok(int n, const char* what) {
  if (n > max_exhaustive_n()) {
    throw resource_limit_error(std::string(what) + ": n = " + std::to_string(n) +
                               " exceeds the exhaustive-enumeration cap " +
                               std::to_string(max_exhaustive_n()) +
                               " (set CHOWLAB_MAX_N to override)");
  }
}

}  // namespace chowlab
