#include "chowlab/augmented.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace chowlab {

AugmentedLattice::AugmentedLattice(const Matroid& m)
    : m_(m), independents_(m.independent_sets()), flats_(m.flats()) {
  int ni = independent_count(), nf = flat_count();
  std::map<std::uint32_t, int> ind_id, flat_id;
  for (int i = 0; i < ni; ++i) ind_id[independents_[i].mask()] = i;
  for (int i = 0; i < nf; ++i) flat_id[flats_[i].mask()] = ni + i;

  std::vector<std::pair<int, int>> covers;
  // inside the independence complex: add one element
  for (int i = 0; i < ni; ++i) {
    const Subset& I = independents_[i];
    for (int e = 1; e <= m.n(); ++e) {
      if (I.contains(e)) continue;
      auto it = ind_id.find(I.with(e).mask());
      if (it != ind_id.end()) covers.push_back({i, it->second});
    }
  }
  // inside the starred flats: rank-one containments
  for (int a = 0; a < nf; ++a)
    for (int b = 0; b < nf; ++b)
      if (a != b && flats_[a].subset_of(flats_[b]) &&
          m.rank(flats_[b]) == m.rank(flats_[a]) + 1)
        covers.push_back({ni + a, ni + b});
  // gluing: I is covered by cl(I)*
  for (int i = 0; i < ni; ++i)
    covers.push_back({i, flat_id.at(m.closure(independents_[i]).mask())});

  std::vector<std::string> labels;
  for (auto& s : independents_) labels.push_back(s.to_string());
  for (auto& s : flats_) labels.push_back(s.to_string() + "*");
  order_ = AtomicLattice::from_covers(ni + nf, covers, std::move(labels));

  if (!order_.is_graded()) throw std::logic_error("AugmentedLattice: not graded");
  for (int i = 0; i < ni; ++i)
    if (order_.rank(i) != independents_[i].size())
      throw std::logic_error("AugmentedLattice: rank mismatch on independent part");
  for (int a = 0; a < nf; ++a)
    if (order_.rank(ni + a) != m.rank(flats_[a]) + 1)
      throw std::logic_error("AugmentedLattice: rank mismatch on flat part");
}

const Subset& AugmentedLattice::set_of(int id) const {
  return id < independent_count() ? independents_[id] : flats_[id - independent_count()];
}

int AugmentedLattice::id_of_independent(const Subset& s) const {
  auto it = std::lower_bound(independents_.begin(), independents_.end(), s);
  if (it == independents_.end() || !(*it == s))
    throw std::invalid_argument("AugmentedLattice: not an independent set");
  return static_cast<int>(it - independents_.begin());
}

int AugmentedLattice::id_of_flat(const Subset& f) const {
  auto it = std::lower_bound(flats_.begin(), flats_.end(), f);
  if (it == flats_.end() || !(*it == f))
    throw std::invalid_argument("AugmentedLattice: not a flat");
  return independent_count() + static_cast<int>(it - flats_.begin());
}

AugmentedLattice augmented_lattice(const Matroid& m) { return AugmentedLattice(m); }

std::vector<int> augmented_building_set(const AugmentedLattice& L) {
  std::vector<int> G;
  for (int i = 1; i <= L.matroid().n(); ++i)
    G.push_back(L.id_of_independent(Subset::single(i, L.matroid().n())));
  for (auto& f : L.matroid().flats()) G.push_back(L.id_of_flat(f));
  std::sort(G.begin(), G.end());
  return G;
}

std::string CompatiblePair::to_string() const {
  std::string s = independent.to_string() + " <= (";
  for (size_t i = 0; i < flag.size(); ++i) {
    if (i) s += ",";
    s += flag[i].to_string();
  }
  return s + ")";
}

CompatiblePair make_compatible_pair(const Matroid& m, Subset independent,
                                    std::vector<Subset> flag) {
  if (!m.independent(independent))
    throw std::invalid_argument("CompatiblePair: set is not independent");
  for (size_t i = 0; i + 1 < flag.size(); ++i)
    if (!(flag[i].subset_of(flag[i + 1]) && !(flag[i] == flag[i + 1])))
      throw std::invalid_argument("CompatiblePair: flag not strictly increasing");
  if (!flag.empty() && !independent.subset_of(flag.front()))
    throw std::invalid_argument("CompatiblePair: independent set not inside the smallest flat");
  return CompatiblePair{independent, std::move(flag)};
}

CompatiblePair nested_to_compatible_pair(const AugmentedLattice& L, const std::vector<int>& N) {
  if (!is_nested(L.order(), augmented_building_set(L), N))
    throw std::invalid_argument("nested_to_compatible_pair: set is not nested");
  Subset I = Subset::empty(L.matroid().n());
  std::vector<Subset> flag;
  for (int id : N) {
    if (L.is_flat_node(id))
      flag.push_back(L.set_of(id));
    else
      I = I.union_with(L.set_of(id));
  }
  std::sort(flag.begin(), flag.end());
  return make_compatible_pair(L.matroid(), I, std::move(flag));
}

std::vector<int> compatible_pair_to_nested(const AugmentedLattice& L, const CompatiblePair& p) {
  std::vector<int> N;
  for (int e : p.independent.elements())
    N.push_back(L.id_of_independent(Subset::single(e, L.matroid().n())));
  for (auto& f : p.flag) N.push_back(L.id_of_flat(f));
  std::sort(N.begin(), N.end());
  return N;
}

std::vector<CompatiblePair> compatible_pairs(const Matroid& m, bool proper_only) {
  std::vector<Subset> flats = m.flats();
  if (proper_only) flats.pop_back();  // canonical order puts the top last
  std::vector<CompatiblePair> out;
  std::vector<Subset> flag;
  auto emit_with_independents = [&]() {
    // every independent subset of the smallest flag member (or any
    // independent set when the flag is empty)
    Subset bound = flag.empty() ? Subset::full(m.n()) : flag.front();
    for_each_submask(bound, [&](const Subset& I) {
      if (m.independent(I)) out.push_back(CompatiblePair{I, flag});
    });
  };
  std::function<void(size_t)> rec = [&](size_t start) {
    emit_with_independents();
    for (size_t i = start; i < flats.size(); ++i) {
      if (!flag.empty()) {
        const Subset& prev = flag.back();
        if (!(prev.subset_of(flats[i]) && !(prev == flats[i]))) continue;
      }
      flag.push_back(flats[i]);
      rec(i + 1);
      flag.pop_back();
    }
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Containment order on pairs: I1 ⊆ I2 and flag1 ⊆ flag2 (as sets).
bool pair_contained(const CompatiblePair& a, const CompatiblePair& b) {
  if (!a.independent.subset_of(b.independent)) return false;
  for (auto& f : a.flag)
    if (std::find(b.flag.begin(), b.flag.end(), f) == b.flag.end()) return false;
  return true;
}

}  // namespace

FaceIsoReport face_iso_check(const Matroid& m) {
  FaceIsoReport rep;
  AugmentedLattice L(m);
  auto G = augmented_building_set(L);

  std::vector<std::vector<int>> nested = nested_sets(L.order(), G, /*reduced=*/true);
  std::vector<CompatiblePair> pairs = compatible_pairs(m, /*proper_only=*/true);

  if (nested.size() != pairs.size()) {
    rep.detail = "face counts differ: " + std::to_string(nested.size()) + " nested sets vs " +
                 std::to_string(pairs.size()) + " compatible pairs";
    return rep;
  }
  rep.face_count = static_cast<long>(nested.size());

  std::vector<CompatiblePair> images;
  std::set<CompatiblePair> image_set;
  for (auto& N : nested) {
    CompatiblePair p = nested_to_compatible_pair(L, N);
    if (!image_set.insert(p).second) {
      rep.detail = "decomposition is not injective at " + p.to_string();
      return rep;
    }
    if (compatible_pair_to_nested(L, p) != N) {
      rep.detail = "round-trip failed at " + p.to_string();
      return rep;
    }
    images.push_back(std::move(p));
  }
  for (auto& p : pairs)
    if (!image_set.count(p)) {
      rep.detail = "pair not reached: " + p.to_string();
      return rep;
    }
  // containment preserved in both directions
  for (size_t a = 0; a < nested.size(); ++a)
    for (size_t b = 0; b < nested.size(); ++b) {
      bool sub = std::includes(nested[b].begin(), nested[b].end(), nested[a].begin(),
                               nested[a].end());
      if (sub != pair_contained(images[a], images[b])) {
        rep.detail = "containment not preserved between " + images[a].to_string() + " and " +
                     images[b].to_string();
        return rep;
      }
    }

  // For Boolean matroids, compare with the star-graph description: nested
  // sets of the graphical building set of K_{1,n} (star encoded as n+1)
  // correspond to the same compatible pairs.
  if (m.kind() == Matroid::Kind::Boolean) {
    int n = m.n();
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= n; ++i) edges.push_back({i, n + 1});
    GraphBuildingSet star = graphical_building_set(n + 1, edges);
    auto star_nested = nested_sets(star.lattice, star.members, /*reduced=*/true);
    if (star_nested.size() != pairs.size()) {
      rep.detail = "star-graph face count differs: " + std::to_string(star_nested.size());
      return rep;
    }
    std::set<CompatiblePair> star_pairs;
    for (auto& N : star_nested) {
      Subset I = Subset::empty(n);
      std::vector<Subset> flag;
      for (int id : N) {
        Subset s(static_cast<std::uint32_t>(id), n + 1);
        if (s.contains(n + 1)) {
          Subset f = Subset(s.without(n + 1).mask(), n);
          flag.push_back(f);
        } else {
          if (s.size() != 1) {
            rep.detail = "unexpected star nested member " + s.to_string();
            return rep;
          }
          I = I.union_with(Subset(s.mask(), n));
        }
      }
      std::sort(flag.begin(), flag.end());
      CompatiblePair p;
      try {
        p = make_compatible_pair(m, I, std::move(flag));
      } catch (const std::invalid_argument& e) {
        rep.detail = std::string("star nested set is not a compatible pair: ") + e.what();
        return rep;
      }
      if (!star_pairs.insert(p).second) {
        rep.detail = "star decomposition not injective at " + p.to_string();
        return rep;
      }
      if (!image_set.count(p)) {
        rep.detail = "star pair missing from augmented side: " + p.to_string();
        return rep;
      }
    }
  }

  rep.pass = true;
  rep.detail = "ok";
  return rep;
}

}  // namespace chowlab
