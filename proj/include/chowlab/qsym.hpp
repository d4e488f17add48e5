#pragma once

#include <map>
#include <optional>
#include <string>

#include "chowlab/partition.hpp"
#include "chowlab/poly.hpp"
#include "chowlab/subset.hpp"

namespace chowlab {

// Homogeneous quasisymmetric function of degree n in the fundamental basis:
// coefficients (polynomials in t) keyed by the descent subset of [n-1],
// stored as masks.
class QSymF {
 public:
  QSymF() = default;
  explicit QSymF(int n) : n_(n) {}
  static QSymF fundamental(const Subset& s, int n);

  int n() const { return n_; }
  const std::map<std::uint32_t, UniPoly>& terms() const { return c_; }
  void add(std::uint32_t mask, const UniPoly& c);
  UniPoly coeff(std::uint32_t mask) const;

  QSymF& operator+=(const QSymF& o);
  friend QSymF operator+(QSymF a, const QSymF& b) { a += b; return a; }
  QSymF& scale(const UniPoly& c);
  bool operator==(const QSymF& o) const { return n_ == o.n_ && c_ == o.c_; }
  bool operator!=(const QSymF& o) const { return !(*this == o); }
  bool is_zero() const { return c_.empty(); }
  std::string to_string() const;

 private:
  int n_ = 0;
  std::map<std::uint32_t, UniPoly> c_;  // descent mask -> t-polynomial
};

// Homogeneous symmetric function of degree n in the complete homogeneous
// basis, coefficients polynomials in t.
class SymH {
 public:
  SymH() = default;
  explicit SymH(int n) : n_(n) {}
  static SymH h(const Partition& lambda);  // single h_lambda

  int n() const { return n_; }
  const std::map<Partition, UniPoly>& terms() const { return c_; }
  void add(const Partition& p, const UniPoly& c);
  UniPoly coeff(const Partition& p) const;

  SymH& operator+=(const SymH& o);
  friend SymH operator+(SymH a, const SymH& b) { a += b; return a; }
  SymH& scale(const UniPoly& c);
  // multiply by h_k (degree rises by k)
  SymH times_h(int k) const;
  bool operator==(const SymH& o) const { return n_ == o.n_ && c_ == o.c_; }
  bool operator!=(const SymH& o) const { return !(*this == o); }
  // the coefficient polynomials restricted to one t-power, as integers
  SymH t_slice(int j) const;
  std::string to_string() const;

 private:
  int n_ = 0;
  std::map<Partition, UniPoly> c_;
};

// Power-sum expansion with rational coefficients (polynomials in t).
class SymP {
 public:
  SymP() = default;
  explicit SymP(int n) : n_(n) {}
  int n() const { return n_; }
  const std::map<Partition, RatUniPoly>& terms() const { return c_; }
  void add(const Partition& p, const RatUniPoly& c);
  RatUniPoly coeff(const Partition& p) const;
  SymP& operator+=(const SymP& o);
  bool operator==(const SymP& o) const { return n_ == o.n_ && c_ == o.c_; }

 private:
  int n_ = 0;
  std::map<Partition, RatUniPoly> c_;
};

// F-basis product via shuffles of canonical descent-class words.
QSymF f_product(const QSymF& a, const QSymF& b);
QSymF h_to_f(const Partition& lambda);
QSymF h_to_f(const SymH& h);
// h_n = sum over partitions of p_nu / z_nu, extended multiplicatively.
SymP h_to_p(const SymH& h);

// Frobenius characteristic of the span of (extended) codes: sum over orbit
// representatives of h_content * t^index (index+1 when extended).
SymH frobenius_codes(int n, bool extended);

// sum over S_n of F_{DEX, n} t^exc.
QSymF q_nj_from_perms(int n);
// sum over decorated permutations of F_{DEX, n} t^(exc+1).
QSymF q_tilde_from_dperms(int n);
// h_n + t sum_k h_{n-k} Q_k with Q_k from frobenius_codes.
SymH q_tilde_from_def(int n);

struct RecurrenceReport {
  bool pass = true;
  int first_failure = -1;
};
// Verifies Q_n = h_n + t * sum_{k>=2} [k-1]_t h_k Q_{n-k} for n <= N, the
// cleared-denominator form of the generating identity
// sum Q_n z^n = (1-t)H(z) / (H(tz) - tH(z)).
RecurrenceReport gf_recurrence_check(int N);

// Normalized principal specialization: F_{S,n} -> q^(sum S),
// h_lambda -> q-multinomial(lambda); t-coefficients carried along.
BiPoly nps(const QSymF& f);
BiPoly nps(const SymH& h);

// sum over codes of F_{DES(alpha), n} t^index.
QSymF codes_des_expansion(int n);

// Exact h-expansion of a symmetric quasisymmetric function; nullopt when
// the input is not an integer combination of the h_lambda.
std::optional<SymH> qsym_to_h(const QSymF& f);

}  // namespace chowlab
