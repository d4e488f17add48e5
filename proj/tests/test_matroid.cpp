#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nlohmann/json.hpp>

#include "chowlab/lattice.hpp"
#include "chowlab/matroid.hpp"

using namespace chowlab;

static Matroid explicit_uniform(int k, int n) {
  std::vector<Subset> bases;
  for_each_subset(n, [&](const Subset& s) {
    if (s.size() == k) bases.push_back(s);
  });
  return Matroid::from_bases(n, bases);
}

TEST_CASE("rank") {
  CHECK(Matroid::boolean(4).rank(Subset::of({1, 3}, 4)) == 2);
  CHECK(Matroid::uniform(2, 3).rank(Subset::full(3)) == 2);
  CHECK(explicit_uniform(2, 3).rank(Subset::of({1, 2}, 3)) == 2);
}

TEST_CASE("closure") {
  auto b4 = Matroid::boolean(4);
  for_each_subset(4, [&](const Subset& s) { CHECK(b4.closure(s) == s); });
  CHECK(Matroid::uniform(2, 3).closure(Subset::of({1, 2}, 3)) == Subset::full(3));
  CHECK(Matroid::uniform(2, 3).closure(Subset::empty(3)).is_empty());
}

TEST_CASE("flats") {
  auto u23 = Matroid::uniform(2, 3);
  auto f = u23.flats();
  std::vector<Subset> expect{Subset::empty(3), Subset::of({1}, 3), Subset::of({2}, 3),
                             Subset::of({3}, 3), Subset::full(3)};
  CHECK(f == expect);
  CHECK(Matroid::boolean(3).flats().size() == 8);
  CHECK(Matroid::uniform(2, 4).flats().size() == 6);
}

TEST_CASE("independent sets") {
  auto u23 = Matroid::uniform(2, 3);
  CHECK(u23.independent_sets().size() == 7);
  CHECK(Matroid::boolean(2).independent_sets().size() == 4);
  size_t count = Matroid::uniform(3, 5).independent_sets().size();
  CHECK(count == 1 + 5 + 10 + 10);
}

TEST_CASE("lattice of flats") {
  auto L = FlatLattice::of(Matroid::uniform(2, 3));
  CHECK(L.size() == 5);
  CHECK(L.rank(L.top()) == 2);
  int a = L.index_of(Subset::of({1}, 3)), b = L.index_of(Subset::of({2}, 3));
  CHECK(L.join(a, b) == L.top());
  CHECK(L.meet(a, b) == L.bottom());
  CHECK(L.covers().size() == 3 + 3);

  auto B3 = FlatLattice::of(Matroid::boolean(3));
  CHECK(B3.size() == 8);
  for (int x = 0; x < B3.size(); ++x)
    for (int y = 0; y < B3.size(); ++y) {
      CHECK(B3.flat(B3.join(x, y)) == B3.flat(x).union_with(B3.flat(y)));
      CHECK(B3.flat(B3.meet(x, y)) == B3.flat(x).intersect(B3.flat(y)));
    }
}

TEST_CASE("rank axioms for small matroids") {
  std::vector<Matroid> ms{Matroid::boolean(5), Matroid::uniform(2, 5), Matroid::uniform(3, 6),
                          explicit_uniform(2, 4)};
  for (auto& m : ms) {
    for_each_subset(m.n(), [&](const Subset& a) {
      // closure axioms
      CHECK(a.subset_of(m.closure(a)));
      CHECK(m.closure(m.closure(a)) == m.closure(a));
      CHECK(m.rank(m.closure(a)) == m.rank(a));
      for_each_subset(m.n(), [&](const Subset& b) {
        if (a.subset_of(b)) CHECK(m.closure(a).subset_of(m.closure(b)));
        // submodularity
        CHECK(m.rank(a) + m.rank(b) >=
              m.rank(a.union_with(b)) + m.rank(a.intersect(b)));
      });
    });
  }
}

TEST_CASE("flat lattices are geometric") {
  std::vector<Matroid> ms{Matroid::boolean(4), Matroid::boolean(5), Matroid::uniform(2, 5),
                          Matroid::uniform(3, 6), Matroid::uniform(4, 6)};
  for (auto& m : ms) {
    auto F = FlatLattice::of(m);
    auto L = AtomicLattice::from_leq(
        F.size(), [&](int a, int b) { return F.leq(a, b); });
    REQUIRE(check_geometric(L));
    for (int id = 0; id < F.size(); ++id) REQUIRE(L.rank(id) == F.rank(id));
  }
}

TEST_CASE("explicit matroids agree with closed forms") {
  for (auto [k, n] : std::vector<std::pair<int, int>>{{2, 3}, {2, 4}, {3, 4}}) {
    auto e = explicit_uniform(k, n);
    auto u = Matroid::uniform(k, n);
    for_each_subset(n, [&](const Subset& s) {
      CHECK(e.rank(s) == u.rank(s));
      CHECK(e.closure(s) == u.closure(s));
    });
    CHECK(e.flats() == u.flats());
  }
}

TEST_CASE("json parsing and validation") {
  auto j = nlohmann::json::parse(R"({"kind":"uniform","k":2,"n":4})");
  CHECK(Matroid::from_json(j).describe() == "uniform:2:4");
  auto jb = nlohmann::json::parse(R"({"kind":"bases","n":3,"bases":[[1,2],[1,3],[2,3]]})");
  auto m = Matroid::from_json(jb);
  CHECK(m.rank() == 2);
  CHECK(m.flats().size() == 5);

  // loops rejected
  auto loopy = nlohmann::json::parse(R"({"kind":"bases","n":3,"bases":[[1,2]]})");
  CHECK_THROWS_AS(Matroid::from_json(loopy), std::invalid_argument);
  // non-equicardinal bases rejected
  auto bad = nlohmann::json::parse(R"({"kind":"bases","n":3,"bases":[[1,2],[3]]})");
  CHECK_THROWS_AS(Matroid::from_json(bad), std::invalid_argument);
  // exchange violation rejected: {1,2} and {3,4} alone cannot both be bases
  auto exch = nlohmann::json::parse(R"({"kind":"bases","n":4,"bases":[[1,2],[3,4]]})");
  CHECK_THROWS_AS(Matroid::from_json(exch), std::invalid_argument);

  CHECK(Matroid::from_spec("boolean:3").describe() == "boolean:3");
  CHECK_THROWS_AS(Matroid::from_spec("nonsense"), std::invalid_argument);
}
