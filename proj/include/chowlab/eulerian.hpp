#pragma once

#include "chowlab/poly.hpp"

namespace chowlab {

// Distribution of excedances over S_n (checked against descents).
UniPoly eulerian(int n);  // in t
// 1 + t * sum_k C(n,k) A_k(t).
UniPoly binomial_eulerian(int n);  // in t

// sum over S_n of q^(maj-exc) t^exc.
BiPoly q_eulerian(int n);
// 1 + t * sum_k qbinom(n,k) A_k(q,t).
BiPoly q_binomial_eulerian(int n);

enum class WordStat { Inv, Maj };

// sum over codes of q^stat(alpha) t^index.
BiPoly q_eulerian_from_codes(int n, WordStat stat);
// sum over extended codes of q^stat(alpha) t^(index+1), infinity greatest.
BiPoly q_binom_from_extcodes(int n, WordStat stat);
// sum over decorated permutations of q^(maj-exc) t^(exc+1).
BiPoly q_binom_from_dperms(int n);

// Memoizing cache for the four families.
class PolyFamilyCache {
 public:
  const UniPoly& eulerian(int n);
  const UniPoly& binomial_eulerian(int n);
  const BiPoly& q_eulerian(int n);
  const BiPoly& q_binomial_eulerian(int n);

 private:
  std::map<int, UniPoly> a_, at_;
  std::map<int, BiPoly> qa_, qat_;
};

}  // namespace chowlab
