#pragma once

#include <string>
#include <vector>

#include "chowlab/lattice.hpp"
#include "chowlab/matroid.hpp"
#include "chowlab/perm.hpp"
#include "chowlab/poly.hpp"

namespace chowlab {

enum class ChowMode { Chow, Augmented };

// A basis monomial: a flag of flats with exponents bounded by rank gaps.
// Chow mode bounds: 1 <= a_i <= rk(F_i) - rk(F_{i-1}) - 1 (rk(F_0) = 0);
// augmented mode relaxes the first bound to 1 <= a_1 <= rk(F_1).
struct FYMonomial {
  std::vector<Subset> flag;  // strictly increasing chain of nonempty flats
  std::vector<int> exponents;
  ChowMode mode = ChowMode::Chow;

  int degree() const {
    int d = 0;
    for (int e : exponents) d += e;
    return d;
  }
  bool operator==(const FYMonomial& o) const {
    return flag == o.flag && exponents == o.exponents && mode == o.mode;
  }
  // Canonical order: flag length, then masks lexicographically, then exponents.
  bool operator<(const FYMonomial& o) const;
  std::string to_string() const;  // e.g. "x_{13} x_{1235} x_{1234568}^2", "1"
};

FYMonomial make_fy_monomial(const Matroid& m, ChowMode mode, std::vector<Subset> flag,
                            std::vector<int> exponents);

struct GradedBasis {
  ChowMode mode = ChowMode::Chow;
  int n = 0;
  std::vector<std::vector<FYMonomial>> by_degree;  // canonically sorted

  std::vector<long> counts() const;
  long total() const;
};

GradedBasis fy_basis_matroid(const Matroid& m);
GradedBasis fy_basis_augmented(const Matroid& m);

// Feichtner-Yuzvinsky basis of D(L, G) for a geometric lattice L: monomials
// supported on nested sets with exponents below the rank gaps.
struct LatticeMonomial {
  std::vector<int> elems;  // lattice element ids, increasing
  std::vector<int> exps;
  int degree() const {
    int d = 0;
    for (int e : exps) d += e;
    return d;
  }
  bool operator==(const LatticeMonomial& o) const { return elems == o.elems && exps == o.exps; }
  bool operator<(const LatticeMonomial& o) const {
    if (elems.size() != o.elems.size()) return elems.size() < o.elems.size();
    if (elems != o.elems) return elems < o.elems;
    return exps < o.exps;
  }
};
std::vector<std::vector<LatticeMonomial>> fy_basis_general(const AtomicLattice& L,
                                                           const std::vector<int>& G);

UniPoly hilbert_series(const GradedBasis& b);  // in t

// Relabels every flat through p. Only Boolean matroids carry the action.
FYMonomial sn_act_monomial(const Matroid& m, const Permutation& p, const FYMonomial& mono);

// Exact dimension of the degree-k piece of the presented quotient ring
// (Chow presentation with variables for all nonempty flats; augmented
// presentation with variables for proper flats and y_1..y_n), computed by
// fraction-free elimination over the integers.
long sr_quotient_dim(const Matroid& m, ChowMode mode, int k);

struct GradedDimReport {
  ChowMode mode;
  int degree = 0;
  long fy_count = 0;
  long quotient_dim = 0;
  bool independent = false;
  bool ok() const { return fy_count == quotient_dim && independent; }
};

// Checks that the degree-k FY monomials are linearly independent in the
// presented quotient and that they count its dimension.
GradedDimReport fy_independence_report(const Matroid& m, ChowMode mode, int k);
bool fy_independence_check(const Matroid& m, ChowMode mode, int k);

}  // namespace chowlab
