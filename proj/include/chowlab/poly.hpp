#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "chowlab/ints.hpp"

namespace chowlab {

// Sparse univariate polynomial with exact coefficients; no zero terms are
// stored. The variable tag ('q' or 't') is carried along and checked so the
// distinct variables of the pipeline cannot be mixed silently.
template <class C>
class UPoly {
 public:
  explicit UPoly(char var = 'q') : var_(var) {}

  static UPoly zero(char var = 'q') { return UPoly(var); }
  static UPoly constant(const C& c, char var = 'q') {
    UPoly p(var);
    p.add_term(0, c);
    return p;
  }
  static UPoly one(char var = 'q') { return constant(C(1), var); }
  static UPoly monomial(int exp, const C& c, char var = 'q') {
    UPoly p(var);
    p.add_term(exp, c);
    return p;
  }
  static UPoly variable(char var = 'q') { return monomial(1, C(1), var); }

  char var() const { return var_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return c_.empty() ? -1 : c_.rbegin()->first; }
  C coeff(int exp) const {
    auto it = c_.find(exp);
    return it == c_.end() ? C(0) : it->second;
  }
  const std::map<int, C>& terms() const { return c_; }
  C leading() const { return c_.empty() ? C(0) : c_.rbegin()->second; }

  void add_term(int exp, const C& c) {
    if (c == 0) return;
    if (exp < 0) throw std::invalid_argument("UPoly: negative exponent");
    auto [it, inserted] = c_.emplace(exp, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) c_.erase(it);
    }
  }

  UPoly& operator+=(const UPoly& o) {
    check_var(o);
    for (auto& [e, c] : o.c_) add_term(e, c);
    return *this;
  }
  UPoly& operator-=(const UPoly& o) {
    check_var(o);
    for (auto& [e, c] : o.c_) add_term(e, C(-c));
    return *this;
  }
  friend UPoly operator+(UPoly a, const UPoly& b) { a += b; return a; }
  friend UPoly operator-(UPoly a, const UPoly& b) { a -= b; return a; }
  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    a.check_var(b);
    UPoly r(a.var_);
    for (auto& [ea, ca] : a.c_)
      for (auto& [eb, cb] : b.c_) r.add_term(ea + eb, ca * cb);
    return r;
  }
  UPoly& operator*=(const UPoly& o) { return *this = *this * o; }
  UPoly& operator*=(const C& s) {
    if (s == 0) { c_.clear(); return *this; }
    for (auto& [e, c] : c_) c *= s;
    return *this;
  }
  friend UPoly operator*(UPoly a, const C& s) { a *= s; return a; }

  bool operator==(const UPoly& o) const { return var_ == o.var_ && c_ == o.c_; }
  bool operator!=(const UPoly& o) const { return !(*this == o); }

  C eval_at_one() const {
    C s(0);
    for (auto& [e, c] : c_) s += c;
    return s;
  }

  UPoly pow(int k) const {
    UPoly r = one(var_);
    for (int i = 0; i < k; ++i) r *= *this;
    return r;
  }

  // Dense coefficient vector [c_0, ..., c_deg].
  std::vector<C> dense() const {
    std::vector<C> v(degree() + 1, C(0));
    for (auto& [e, c] : c_) v[e] = c;
    return v;
  }

  std::string to_string() const {
    if (c_.empty()) return "0";
    std::string s;
    for (auto& [e, c] : c_) {
      std::string cs = chowlab::to_string(c);
      bool neg = !cs.empty() && cs[0] == '-';
      if (neg) cs = cs.substr(1);
      if (s.empty())
        s += neg ? "-" : "";
      else
        s += neg ? " - " : " + ";
      bool unit = cs == "1";
      if (e == 0)
        s += cs;
      else {
        if (!unit) s += cs;
        s += var_;
        if (e > 1) s += "^" + std::to_string(e);
      }
    }
    return s;
  }

 private:
  void check_var(const UPoly& o) const {
    if (var_ != o.var_) throw std::invalid_argument("UPoly: variable mismatch");
  }

  std::map<int, C> c_;
  char var_;
};

using UniPoly = UPoly<Int>;
using RatUniPoly = UPoly<Rat>;

// Exact bivariate polynomial in (q, t) with integer coefficients.
class BiPoly {
 public:
  BiPoly() = default;

  static BiPoly zero() { return BiPoly(); }
  static BiPoly one() { return monomial(0, 0, 1); }
  static BiPoly monomial(int qe, int te, Int c) {
    BiPoly p;
    p.add_term(qe, te, c);
    return p;
  }
  // q-polynomial times t^te.
  static BiPoly from_q(const UniPoly& p, int te = 0);

  bool is_zero() const { return c_.empty(); }
  const std::map<std::pair<int, int>, Int>& terms() const { return c_; }
  Int coeff(int qe, int te) const;
  int degree_t() const;
  int degree_q() const;

  void add_term(int qe, int te, const Int& c);

  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator-=(const BiPoly& o);
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { a += b; return a; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { a -= b; return a; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  BiPoly& operator*=(const BiPoly& o) { return *this = *this * o; }
  bool operator==(const BiPoly& o) const { return c_ == o.c_; }
  bool operator!=(const BiPoly& o) const { return !(*this == o); }

  UniPoly coeff_of_t(int te) const;   // q-polynomial
  UniPoly eval_q_one() const;         // t-polynomial
  UniPoly eval_t_one() const;         // q-polynomial

  std::string to_string() const;  // grouped by t-degree

 private:
  std::map<std::pair<int, int>, Int> c_;
};

// q-analogs. [n]_q, [n]_q!, binomials via the Pascal recurrence, and the
// multinomial by exact division of factorials (remainder checked).
UniPoly q_int(int n);
UniPoly q_factorial(int n);
UniPoly q_binomial(int n, int k);
UniPoly q_multinomial(const std::vector<int>& parts);

// Exact division; throws std::logic_error if the division is not exact or a
// leading-coefficient division fails.
UniPoly exact_div(const UniPoly& num, const UniPoly& den);
// Remainder of p modulo a monic divisor.
UniPoly mod_monic(const UniPoly& p, const UniPoly& divisor);

int euler_phi(int d);
// The d-th cyclotomic polynomial, by exact division of q^d - 1.
UniPoly cyclotomic(int d);

// A residue modulo the d-th cyclotomic polynomial: the exact value of a
// polynomial at a primitive d-th root of unity.
struct CyclotomicResidue {
  int d = 1;
  std::vector<Int> coeffs;  // degree < phi(d), trailing zeros trimmed

  bool is_integer_constant() const { return coeffs.size() <= 1; }
  Int constant_value() const {
    if (!is_integer_constant()) throw std::logic_error("CyclotomicResidue: not constant");
    return coeffs.empty() ? Int(0) : coeffs[0];
  }
  std::string to_string() const;
  bool operator==(const CyclotomicResidue& o) const { return d == o.d && coeffs == o.coeffs; }
};

CyclotomicResidue eval_at_root_of_unity(const UniPoly& p, int d);

}  // namespace chowlab
