#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "chowlab/codes.hpp"
#include "chowlab/csp.hpp"
#include "chowlab/eulerian.hpp"

using namespace chowlab;

TEST_CASE("fixed codes under rotation") {
  // identity fixes everything
  for (int j = 0; j <= 2; ++j)
    CHECK(cyclic_fixed_codes(3, j, 0, false) == static_cast<long>(codes(3, j).size()));
  // only 11'1 survives the 3-cycle among the index-1 codes
  CHECK(cyclic_fixed_codes(3, 1, 1, 1 == 0) == 1);
  // r and n-r give equal counts
  for (int n = 3; n <= 6; ++n)
    for (int j = 0; j < n; ++j)
      for (int r = 1; r < n; ++r)
        CHECK(cyclic_fixed_codes(n, j, r, false) == cyclic_fixed_codes(n, j, n - r, false));
}

TEST_CASE("csp for codes") {
  auto rep = csp_verify(CspFamily::Codes, 3, 1);
  REQUIRE(rep.rows.size() == 3);
  CHECK(rep.rows[0].fixed == 4);
  CHECK(rep.rows[0].value == 4);
  CHECK(rep.rows[1].fixed == 1);
  CHECK(rep.rows[1].value == 1);  // 2 + q + q^2 = 1 mod Phi_3
  CHECK(rep.pass);
  for (int n = 1; n <= 6; ++n)
    for (int j = 0; j < n; ++j) {
      auto r = csp_verify(CspFamily::Codes, n, j);
      INFO("codes n=", n, " j=", j);
      REQUIRE(r.pass);
    }
}

TEST_CASE("csp for extended codes") {
  for (int n = 1; n <= 5; ++n)
    for (int j = 0; j <= n; ++j) {
      auto r = csp_verify(CspFamily::ExtCodes, n, j);
      INFO("extcodes n=", n, " j=", j);
      REQUIRE(r.pass);
    }
}

TEST_CASE("csp for permutations by excedance") {
  for (int n = 1; n <= 6; ++n)
    for (int j = 0; j < n; ++j) {
      auto r = csp_verify(CspFamily::PermsExc, n, j);
      INFO("perms n=", n, " j=", j);
      REQUIRE(r.pass);
    }
}

TEST_CASE("csp for permutations by cycle type") {
  Partition three({3});
  auto rep = csp_verify(CspFamily::PermsCycleType, 3, 1, &three);
  CHECK(rep.pass);
  for (int n = 1; n <= 5; ++n)
    for (auto& lam : partitions_of(n))
      for (int j = 0; j < n; ++j) {
        auto r = csp_verify(CspFamily::PermsCycleType, n, j, &lam);
        INFO("cycletype n=", n, " lambda=", lam.to_string(), " j=", j);
        REQUIRE(r.pass);
      }
}

TEST_CASE("decorated permutation conjecture under the relabeling action") {
  for (int n = 1; n <= 5; ++n)
    for (int j = 0; j <= n; ++j) {
      auto r = csp_verify(CspFamily::DPermsConjecture, n, j);
      CHECK(r.experimental);
      INFO("dperms n=", n, " j=", j);
      REQUIRE(r.pass);
    }
  // the relabeling action is a genuine C_n-action: applying c n times fixes all
  int n = 5;
  Permutation c = Permutation::long_cycle(n);
  for_each_decorated(n, [&](const DecoratedPermutation& s) {
    DecoratedPermutation cur = s;
    for (int i = 0; i < n; ++i) cur = relabel_action(c, cur);
    REQUIRE(cur == s);
    // excedance invariant under the action
    REQUIRE(exc(relabel_action(c, s)) == exc(s));
  });
}

TEST_CASE("fixed counts constant on divisor classes") {
  int n = 6;
  for (int j = 0; j < n; ++j)
    for (int r1 = 1; r1 < n; ++r1)
      for (int r2 = r1 + 1; r2 < n; ++r2) {
        if (std::gcd(r1, n) != std::gcd(r2, n)) continue;
        CHECK(cyclic_fixed_codes(n, j, r1, false) == cyclic_fixed_codes(n, j, r2, false));
        CHECK(cyclic_fixed_codes(n, j, r1, true) == cyclic_fixed_codes(n, j, r2, true));
      }
}

TEST_CASE("character via power sums and residues") {
  // trivial module: h_n at an n-cycle
  for (int n = 2; n <= 6; ++n) CHECK(character_via_p(SymH::h(Partition({n})), n) == 1);
  // dimension of the permutation module M_(2,1)
  CHECK(character_via_p(SymH::h(Partition({2, 1})), 1) == 3);
  // both routes agree on the code modules
  for (int n = 2; n <= 6; ++n) {
    auto fc = frobenius_codes(n, false);
    for (int d = 1; d <= n; ++d) {
      if (n % d != 0) continue;
      for (int j = 0; j < n; ++j) {
        SymH slice = fc.t_slice(j);
        if (slice.terms().empty()) continue;
        CHECK_NOTHROW(character_via_p(slice, d));
      }
    }
  }
}

TEST_CASE("restriction character comparison") {
  auto rep = cn_character_compare(3, 1);
  CHECK(rep.pass);
  CHECK(rep.per_r == std::vector<std::pair<long, long>>{{4, 4}, {1, 1}, {1, 1}});
  auto rep42 = cn_character_compare(4, 2);
  CHECK(rep42.pass);
  for (int n = 1; n <= 6; ++n)
    for (int j = 0; j < n; ++j) {
      auto r = cn_character_compare(n, j);
      INFO("compare n=", n, " j=", j);
      REQUIRE(r.pass);
      // r = 0 row: |Code_{n,j}| = Eulerian number
      REQUIRE(r.per_r[0].first == eulerian(n).coeff(j).get_si());
    }
}
