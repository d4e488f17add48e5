#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "chowlab/augmented.hpp"
#include "chowlab/chow.hpp"

using namespace chowlab;

namespace {

std::set<std::string> names(const std::vector<FYMonomial>& v) {
  std::set<std::string> out;
  for (auto& m : v) out.insert(m.to_string());
  return out;
}

}  // namespace

TEST_CASE("FY basis of B4 matches the known degree lists") {
  auto b = fy_basis_matroid(Matroid::boolean(4));
  CHECK(b.counts() == std::vector<long>{1, 11, 11, 1});
  CHECK(names(b.by_degree[0]) == std::set<std::string>{"1"});
  CHECK(names(b.by_degree[1]) ==
        std::set<std::string>{"x_{12}", "x_{13}", "x_{14}", "x_{23}", "x_{24}", "x_{34}",
                              "x_{123}", "x_{124}", "x_{134}", "x_{234}", "x_{1234}"});
  CHECK(names(b.by_degree[2]) ==
        std::set<std::string>{"x_{12} x_{1234}", "x_{13} x_{1234}", "x_{14} x_{1234}",
                              "x_{23} x_{1234}", "x_{24} x_{1234}", "x_{34} x_{1234}",
                              "x_{123}^2", "x_{124}^2", "x_{134}^2", "x_{234}^2",
                              "x_{1234}^2"});
  CHECK(names(b.by_degree[3]) == std::set<std::string>{"x_{1234}^3"});
}

TEST_CASE("augmented FY basis of B3 matches the known degree lists") {
  auto b = fy_basis_augmented(Matroid::boolean(3));
  CHECK(b.counts() == std::vector<long>{1, 7, 7, 1});
  CHECK(names(b.by_degree[1]) == std::set<std::string>{"x_{1}", "x_{2}", "x_{3}", "x_{12}",
                                                       "x_{13}", "x_{23}", "x_{123}"});
  CHECK(names(b.by_degree[2]) ==
        std::set<std::string>{"x_{1} x_{123}", "x_{2} x_{123}", "x_{3} x_{123}", "x_{12}^2",
                              "x_{13}^2", "x_{23}^2", "x_{123}^2"});
  CHECK(names(b.by_degree[3]) == std::set<std::string>{"x_{123}^3"});
}

TEST_CASE("small bases") {
  CHECK(fy_basis_matroid(Matroid::boolean(2)).counts() == std::vector<long>{1, 1});
  CHECK(fy_basis_matroid(Matroid::uniform(2, 4)).counts() == std::vector<long>{1, 1});
  CHECK(fy_basis_augmented(Matroid::boolean(1)).counts() == std::vector<long>{1, 1});
  CHECK(fy_basis_augmented(Matroid::uniform(2, 3)).counts() == std::vector<long>{1, 4, 1});
  CHECK(fy_basis_matroid(Matroid::boolean(1)).counts() == std::vector<long>{1});
}

TEST_CASE("hilbert series") {
  UniPoly a4('t');
  a4.add_term(0, 1);
  a4.add_term(1, 11);
  a4.add_term(2, 11);
  a4.add_term(3, 1);
  CHECK(hilbert_series(fy_basis_matroid(Matroid::boolean(4))) == a4);
  UniPoly at3('t');
  at3.add_term(0, 1);
  at3.add_term(1, 7);
  at3.add_term(2, 7);
  at3.add_term(3, 1);
  CHECK(hilbert_series(fy_basis_augmented(Matroid::boolean(3))) == at3);
  CHECK(hilbert_series(fy_basis_matroid(Matroid::boolean(1))) == UniPoly::one('t'));

  // palindromic coefficients for the Chow bases
  for (auto& m : {Matroid::boolean(5), Matroid::uniform(2, 5), Matroid::uniform(3, 5),
                  Matroid::uniform(3, 6)}) {
    auto counts = fy_basis_matroid(m).counts();
    auto rev = counts;
    std::reverse(rev.begin(), rev.end());
    CHECK(counts == rev);
  }
}

TEST_CASE("monomial validation") {
  auto m = Matroid::boolean(4);
  CHECK_NOTHROW(make_fy_monomial(m, ChowMode::Chow, {Subset::of({1, 2}, 4)}, {1}));
  // rank gap too small
  CHECK_THROWS_AS(make_fy_monomial(m, ChowMode::Chow, {Subset::of({1}, 4)}, {1}),
                  std::invalid_argument);
  // exponent above the bound
  CHECK_THROWS_AS(make_fy_monomial(m, ChowMode::Chow, {Subset::of({1, 2}, 4)}, {2}),
                  std::invalid_argument);
  // augmented first bound allows rank many
  CHECK_NOTHROW(make_fy_monomial(m, ChowMode::Augmented, {Subset::of({1, 2}, 4)}, {2}));
  // flag must be a chain
  CHECK_THROWS_AS(make_fy_monomial(m, ChowMode::Chow,
                                   {Subset::of({1, 2}, 4), Subset::of({3, 4}, 4)}, {1, 1}),
                  std::invalid_argument);
  // non-flat rejected
  auto u = Matroid::uniform(2, 3);
  CHECK_THROWS_AS(make_fy_monomial(u, ChowMode::Chow, {Subset::of({1, 2}, 3)}, {1}),
                  std::invalid_argument);
}

TEST_CASE("S_n action on monomials") {
  auto m = Matroid::boolean(4);
  auto mono = make_fy_monomial(m, ChowMode::Chow,
                               {Subset::of({1, 3}, 4), Subset::full(4)}, {1, 1});
  auto swapped = sn_act_monomial(m, Permutation::transposition(4, 1, 2), mono);
  CHECK(swapped.flag[0] == Subset::of({2, 3}, 4));
  CHECK(swapped.flag[1] == Subset::full(4));
  CHECK(swapped.exponents == std::vector<int>{1, 1});

  // orbit of x_{123}^2 in degree 2 has size 4
  auto seed = make_fy_monomial(m, ChowMode::Chow, {Subset::of({1, 2, 3}, 4)}, {2});
  std::set<std::string> orbit;
  for_each_permutation(4, [&](const Permutation& p) {
    orbit.insert(sn_act_monomial(m, p, seed).to_string());
  });
  CHECK(orbit.size() == 4);

  // identity acts trivially; composition law on generators
  for (int n = 2; n <= 5; ++n) {
    auto bn = Matroid::boolean(n);
    auto basis = fy_basis_matroid(bn);
    CHECK(sn_act_monomial(bn, Permutation::identity(n), basis.by_degree[1][0]) ==
          basis.by_degree[1][0]);
    for (int i = 1; i < n; ++i)
      for (int j = 1; j < n; ++j) {
        auto s = Permutation::transposition(n, i, i + 1);
        auto t = Permutation::transposition(n, j, j + 1);
        for (auto& deg : basis.by_degree)
          for (auto& mono2 : deg) {
            auto lhs = sn_act_monomial(bn, s.compose(t), mono2);
            auto rhs = sn_act_monomial(bn, s, sn_act_monomial(bn, t, mono2));
            REQUIRE(lhs == rhs);
            REQUIRE(lhs.degree() == mono2.degree());
          }
      }
  }

  CHECK_THROWS_AS(sn_act_monomial(Matroid::uniform(2, 3), Permutation::identity(3),
                                  make_fy_monomial(Matroid::uniform(2, 3), ChowMode::Chow,
                                                   {Subset::full(3)}, {1})),
                  std::invalid_argument);
}

TEST_CASE("general FY basis over a lattice") {
  // maximal building set of the Boolean lattice B3: the Chow basis of B3
  auto B3 = AtomicLattice::boolean(3);
  std::vector<int> maximal;
  for (int x = 1; x < 8; ++x) maximal.push_back(x);
  auto basis = fy_basis_general(B3, maximal);
  std::vector<long> counts;
  for (auto& v : basis) counts.push_back(static_cast<long>(v.size()));
  CHECK(counts == std::vector<long>{1, 4, 1});

  // minimal building set (atoms plus top) of B3: one variable survives
  auto minimal = fy_basis_general(B3, {1, 2, 4, 7});
  std::vector<long> mcounts;
  for (auto& v : minimal) mcounts.push_back(static_cast<long>(v.size()));
  CHECK(mcounts == std::vector<long>{1, 1, 1});

  // non-geometric lattices are rejected
  std::vector<std::pair<int, int>> covers;
  for (int v = 1; v <= 4; ++v) covers.push_back({0, v});
  for (int e = 0; e < 4; ++e) {
    covers.push_back({1 + e, 5 + e});
    covers.push_back({1 + (e + 1) % 4, 5 + e});
    covers.push_back({5 + e, 9});
  }
  auto square = AtomicLattice::from_covers(10, covers);
  CHECK_THROWS_AS(fy_basis_general(square, {1, 2, 3, 4, 9}), std::invalid_argument);
}

TEST_CASE("augmented basis equals the general basis of the augmented lattice") {
  for (auto& m : {Matroid::boolean(2), Matroid::boolean(3), Matroid::uniform(2, 3),
                  Matroid::uniform(2, 4)}) {
    AugmentedLattice L(m);
    auto G = augmented_building_set(L);
    auto general = fy_basis_general(L.order(), G);
    auto direct = fy_basis_augmented(m);
    REQUIRE(general.size() == direct.by_degree.size());
    for (size_t k = 0; k < general.size(); ++k) {
      REQUIRE(general[k].size() == direct.by_degree[k].size());
      // monomial-level comparison under the starred-flat renaming
      std::set<FYMonomial> renamed;
      for (auto& lm : general[k]) {
        std::vector<Subset> flag;
        for (int id : lm.elems) {
          REQUIRE(L.is_flat_node(id));  // singleton supports carry no monomials
          flag.push_back(L.set_of(id));
        }
        renamed.insert(FYMonomial{flag, lm.exps, ChowMode::Augmented});
      }
      std::set<FYMonomial> expect(direct.by_degree[k].begin(), direct.by_degree[k].end());
      REQUIRE(renamed == expect);
    }
  }
}

TEST_CASE("quotient dimensions via exact elimination") {
  CHECK(sr_quotient_dim(Matroid::boolean(3), ChowMode::Chow, 0) == 1);
  CHECK(sr_quotient_dim(Matroid::boolean(3), ChowMode::Chow, 1) == 4);
  CHECK(sr_quotient_dim(Matroid::boolean(3), ChowMode::Chow, 2) == 1);
  CHECK(sr_quotient_dim(Matroid::boolean(3), ChowMode::Chow, 3) == 0);
  for (int k = 0; k <= 3; ++k)
    CHECK(sr_quotient_dim(Matroid::boolean(3), ChowMode::Augmented, k) ==
          std::vector<long>{1, 7, 7, 1}[k]);
  CHECK(sr_quotient_dim(Matroid::uniform(2, 3), ChowMode::Augmented, 1) == 4);
  CHECK(sr_quotient_dim(Matroid::uniform(2, 4), ChowMode::Chow, 1) == 1);
}

TEST_CASE("FY independence in the presented quotients") {
  for (int k = 0; k <= 3; ++k) {
    CHECK(fy_independence_check(Matroid::boolean(3), ChowMode::Chow, k));
    CHECK(fy_independence_check(Matroid::boolean(3), ChowMode::Augmented, k));
  }
  auto rep = fy_independence_report(Matroid::boolean(4), ChowMode::Chow, 2);
  CHECK(rep.fy_count == 11);
  CHECK(rep.quotient_dim == 11);
  CHECK(rep.independent);
  CHECK(fy_independence_check(Matroid::uniform(2, 4), ChowMode::Augmented, 1));
  CHECK(fy_independence_check(Matroid::uniform(2, 3), ChowMode::Augmented, 2));
}
