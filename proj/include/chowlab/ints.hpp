#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace chowlab {

// Exact coefficient types. All polynomial and matrix arithmetic in this
// library is over Int; Rat appears only in the power-sum transition and
// in the exact linear solves.
using Int = mpz_class;
using Rat = mpq_class;

inline std::string to_string(const Int& v) { return v.get_str(); }
inline std::string to_string(const Rat& v) { return v.get_str(); }

inline Int factorial(int n) {
  Int r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

inline Int binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Int r = 1;
  for (int i = 0; i < k; ++i) { r *= n - i; r /= i + 1; }
  return r;
}

// Thrown when an enumeration would exceed the configured size caps.
class resource_limit_error : public std::runtime_error {
 public:
  explicit resource_limit_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace chowlab
