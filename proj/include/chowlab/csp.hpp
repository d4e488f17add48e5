#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "chowlab/partition.hpp"
#include "chowlab/perm.hpp"
#include "chowlab/poly.hpp"
#include "chowlab/qsym.hpp"

namespace chowlab {

// Number of codes in Code_{n,j} (extended: index j) fixed by the r-th power
// of the long cycle acting on positions.
long cyclic_fixed_codes(int n, int j, int r, bool extended);

enum class CspFamily { Codes, ExtCodes, PermsExc, PermsCycleType, DPermsConjecture };

std::string to_string(CspFamily f);

struct CyclicActionReport {
  CspFamily family{};
  int n = 0;
  int j = 0;  // t-exponent of the sieving polynomial
  std::optional<Partition> lambda;
  UniPoly sieve_poly{'q'};
  struct Row {
    int r = 0;
    long fixed = 0;
    bool residue_constant = false;
    Int value = 0;           // meaningful when residue_constant
    std::string residue;     // exact residue rendering
    bool match = false;
  };
  std::vector<Row> rows;
  bool pass = false;
  bool experimental = false;  // set for the conjecture family
};

// For decorated permutations the cyclic action is conjugation through
// relabeling ((c.s)(c(i)) = c(s(i)), zeros fixed); a different action can
// be plugged in for experimentation.
using DPermAction =
    std::function<DecoratedPermutation(const Permutation&, const DecoratedPermutation&)>;
DecoratedPermutation relabel_action(const Permutation& c, const DecoratedPermutation& s);

// Fixed counts versus exact root-of-unity values of the sieving polynomial.
// Conventions for j: Codes/PermsExc/PermsCycleType count objects with
// index/excedance j and sieve with the t^j coefficient; ExtCodes and
// DPermsConjecture use the t^j coefficient against index/excedance j-1.
CyclicActionReport csp_verify(CspFamily family, int n, int j,
                              const Partition* lambda = nullptr,
                              const DPermAction& action = relabel_action);

// z-normalized power-sum coefficient of a t-free symmetric function at the
// cycle type (d^{n/d}), cross-checked against the cyclotomic residue of its
// normalized principal specialization. Throws std::logic_error if the two
// routes disagree.
Int character_via_p(const SymH& F, int d);

struct CnCompareReport {
  int n = 0;
  int j = 0;
  std::vector<std::pair<long, long>> per_r;  // (fixed codes, centralizing perms)
  bool pass = false;
};

// Restriction isomorphism at the level of C_n-characters: fixed codes in
// Code_{n,j} under rotation match permutations with excedance j commuting
// with the corresponding power of the long cycle.
CnCompareReport cn_character_compare(int n, int j);

}  // namespace chowlab
