#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "chowlab/eulerian.hpp"

using namespace chowlab;

namespace {

UniPoly tpoly(std::vector<long> coeffs) {
  UniPoly p('t');
  for (size_t i = 0; i < coeffs.size(); ++i) p.add_term(static_cast<int>(i), coeffs[i]);
  return p;
}

}  // namespace

TEST_CASE("eulerian polynomials") {
  CHECK(eulerian(1) == tpoly({1}));
  CHECK(eulerian(3) == tpoly({1, 4, 1}));
  CHECK(eulerian(4) == tpoly({1, 11, 11, 1}));
}

TEST_CASE("binomial eulerian polynomials") {
  CHECK(binomial_eulerian(0) == tpoly({1}));
  CHECK(binomial_eulerian(2) == tpoly({1, 3, 1}));
  CHECK(binomial_eulerian(3) == tpoly({1, 7, 7, 1}));
}

TEST_CASE("q eulerian") {
  BiPoly a2;
  a2.add_term(0, 0, 1);
  a2.add_term(0, 1, 1);
  CHECK(q_eulerian(2) == a2);

  // A_3(q,t) = 1 + (2 + q + q^2) t + t^2
  BiPoly a3;
  a3.add_term(0, 0, 1);
  a3.add_term(0, 1, 2);
  a3.add_term(1, 1, 1);
  a3.add_term(2, 1, 1);
  a3.add_term(0, 2, 1);
  CHECK(q_eulerian(3) == a3);

  for (int n = 1; n <= 7; ++n) CHECK(q_eulerian(n).eval_q_one() == eulerian(n));
}

TEST_CASE("q binomial eulerian") {
  CHECK(q_binomial_eulerian(0) == BiPoly::one());
  BiPoly at2;
  at2.add_term(0, 0, 1);
  at2.add_term(0, 1, 2);
  at2.add_term(1, 1, 1);
  at2.add_term(0, 2, 1);
  CHECK(q_binomial_eulerian(2) == at2);
  for (int n = 0; n <= 7; ++n)
    CHECK(q_binomial_eulerian(n).eval_q_one() == binomial_eulerian(n));
}

TEST_CASE("codes give the q eulerian polynomial") {
  BiPoly a3 = q_eulerian(3);
  CHECK(q_eulerian_from_codes(3, WordStat::Inv) == a3);
  CHECK(q_eulerian_from_codes(1, WordStat::Inv) == BiPoly::one());
  for (int n = 1; n <= 7; ++n) {
    BiPoly inv_side = q_eulerian_from_codes(n, WordStat::Inv);
    CHECK(inv_side == q_eulerian_from_codes(n, WordStat::Maj));
    CHECK(inv_side == q_eulerian(n));
  }
}

TEST_CASE("extended codes and decorated permutations give the q binomial eulerian") {
  BiPoly at2 = q_binomial_eulerian(2);
  CHECK(q_binom_from_extcodes(2, WordStat::Inv) == at2);
  CHECK(q_binom_from_extcodes(0, WordStat::Inv) == BiPoly::one());
  CHECK(q_binom_from_dperms(0) == BiPoly::one());
  CHECK(q_binom_from_dperms(2) == at2);
  for (int n = 0; n <= 6; ++n) {
    BiPoly expect = q_binomial_eulerian(n);
    CHECK(q_binom_from_extcodes(n, WordStat::Inv) == expect);
    CHECK(q_binom_from_extcodes(n, WordStat::Maj) == expect);
    CHECK(q_binom_from_dperms(n) == expect);
  }
}

TEST_CASE("degree structure") {
  for (int n = 2; n <= 6; ++n) {
    auto A = q_eulerian(n);
    CHECK(A.degree_t() == n - 1);
    CHECK(A.coeff_of_t(0) == UniPoly::one('q'));
    CHECK(A.coeff_of_t(n - 1) == UniPoly::one('q'));
    auto At = q_binomial_eulerian(n);
    CHECK(At.degree_t() == n);
    CHECK(At.coeff_of_t(0) == UniPoly::one('q'));
    CHECK(At.coeff_of_t(n) == UniPoly::one('q'));
  }
}

TEST_CASE("t-palindromicity of the q-analogs") {
  // the graded pieces pair up under duality, so the t-coefficients mirror
  for (int n = 2; n <= 7; ++n) {
    BiPoly A = q_eulerian(n);
    for (int j = 0; j <= n - 1; ++j) REQUIRE(A.coeff_of_t(j) == A.coeff_of_t(n - 1 - j));
  }
  for (int n = 2; n <= 6; ++n) {
    BiPoly At = q_binomial_eulerian(n);
    for (int j = 0; j <= n; ++j) REQUIRE(At.coeff_of_t(j) == At.coeff_of_t(n - j));
  }
}

TEST_CASE("cache returns identical values") {
  PolyFamilyCache cache;
  CHECK(cache.eulerian(5) == eulerian(5));
  CHECK(cache.eulerian(5) == cache.eulerian(5));
  CHECK(cache.q_binomial_eulerian(4) == q_binomial_eulerian(4));
}
