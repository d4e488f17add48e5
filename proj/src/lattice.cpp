#include "chowlab/lattice.hpp"

#include <algorithm>
#include <stdexcept>

#include "chowlab/ints.hpp"

namespace chowlab {

namespace {
int words_for(int m) { return (m + 63) / 64; }
}  // namespace

AtomicLattice AtomicLattice::from_leq(int size, const std::function<bool(int, int)>& leq,
                                      std::vector<std::string> labels) {
  if (size > 1024)
    throw resource_limit_error("AtomicLattice: table construction is cubic; 1024-element cap");
  AtomicLattice L;
  L.m_ = size;
  L.labels_ = std::move(labels);
  if (L.labels_.empty()) {
    for (int i = 0; i < size; ++i) L.labels_.push_back(std::to_string(i));
  }
  L.up_.assign(size, std::vector<std::uint64_t>(words_for(size), 0));
  L.down_.assign(size, std::vector<std::uint64_t>(words_for(size), 0));
  for (int a = 0; a < size; ++a)
    for (int b = 0; b < size; ++b)
      if (leq(a, b)) {
        L.up_[a][word(b)] |= 1ull << bit(b);
        L.down_[b][word(a)] |= 1ull << bit(a);
      }
  L.finish();
  return L;
}

AtomicLattice AtomicLattice::from_covers(int size,
                                         const std::vector<std::pair<int, int>>& covers,
                                         std::vector<std::string> labels) {
  // Transitive closure of the cover relation, computed upward in any order
  // that follows the DAG.
  std::vector<std::vector<int>> above(size);
  for (auto& [a, b] : covers) above[a].push_back(b);
  std::vector<std::vector<std::uint64_t>> up(size,
                                             std::vector<std::uint64_t>(words_for(size), 0));
  std::vector<char> done(size, 0);
  std::vector<int> topo;
  std::function<void(int)> visit = [&](int v) {
    if (done[v]) return;
    done[v] = 1;
    for (int w : above[v]) visit(w);
    topo.push_back(v);  // elements above first
  };
  for (int v = 0; v < size; ++v) visit(v);
  for (int v : topo) {
    up[v][word(v)] |= 1ull << bit(v);
    for (int w : above[v])
      for (int k = 0; k < words_for(size); ++k) up[v][k] |= up[w][k];
  }
  return from_leq(size, [&](int a, int b) { return (up[a][word(b)] >> bit(b)) & 1u; },
                  std::move(labels));
}

AtomicLattice AtomicLattice::boolean(int n) {
  if (n > 10) throw std::invalid_argument("AtomicLattice::boolean: too large");
  int size = 1 << n;
  std::vector<std::string> labels(size);
  for (int m = 0; m < size; ++m) labels[m] = Subset(m, n).to_string();
  return from_leq(size, [](int a, int b) { return (a & ~b) == 0; }, std::move(labels));
}

void AtomicLattice::finish() {
  // bottom and top must be unique
  bottom_ = top_ = -1;
  for (int a = 0; a < m_; ++a) {
    bool amin = true, amax = true;
    for (int b = 0; b < m_; ++b) {
      if (b == a) continue;
      if (!leq(a, b)) amin = false;
      if (!leq(b, a)) amax = false;
      // also reject non-antisymmetric relations
      if (leq(a, b) && leq(b, a)) throw std::logic_error("AtomicLattice: order not antisymmetric");
    }
    if (amin) bottom_ = a;
    if (amax) top_ = a;
  }
  for (int a = 0; a < m_; ++a) {
    if (bottom_ < 0 || !leq(bottom_, a)) throw std::logic_error("AtomicLattice: no bottom");
    if (top_ < 0 || !leq(a, top_)) throw std::logic_error("AtomicLattice: no top");
  }

  // join = unique least upper bound; meet dually
  join_.assign(m_, std::vector<int>(m_, -1));
  meet_.assign(m_, std::vector<int>(m_, -1));
  int W = words_for(m_);
  std::vector<std::uint64_t> common(W);
  for (int a = 0; a < m_; ++a)
    for (int b = a; b < m_; ++b) {
      for (int k = 0; k < W; ++k) common[k] = up_[a][k] & up_[b][k];
      int j = -1;
      for (int k = 0; k < W && j < 0; ++k)
        for (std::uint64_t bits = common[k]; bits; bits &= bits - 1) {
          int u = k * 64 + std::countr_zero(bits);
          bool least = true;
          for (int kk = 0; kk < W; ++kk)
            if ((common[kk] & ~up_[u][kk]) != 0) {
              least = false;
              break;
            }
          if (least) {
            j = u;
            break;
          }
        }
      if (j < 0) throw std::logic_error("AtomicLattice: pair without a join");
      join_[a][b] = join_[b][a] = j;

      for (int k = 0; k < W; ++k) common[k] = down_[a][k] & down_[b][k];
      int mt = -1;
      for (int k = 0; k < W && mt < 0; ++k)
        for (std::uint64_t bits = common[k]; bits; bits &= bits - 1) {
          int u = k * 64 + std::countr_zero(bits);
          bool greatest = true;
          for (int kk = 0; kk < W; ++kk)
            if ((common[kk] & ~down_[u][kk]) != 0) {
              greatest = false;
              break;
            }
          if (greatest) {
            mt = u;
            break;
          }
        }
      if (mt < 0) throw std::logic_error("AtomicLattice: pair without a meet");
      meet_[a][b] = meet_[b][a] = mt;
    }

  // rank = longest chain from bottom; graded iff every cover steps by one
  auto covers = cover_pairs();
  rank_.assign(m_, 0);
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto& [a, b] : covers)
      if (rank_[b] < rank_[a] + 1) {
        rank_[b] = rank_[a] + 1;
        changed = true;
      }
  }
  graded_ = true;
  for (auto& [a, b] : covers)
    if (rank_[b] != rank_[a] + 1) graded_ = false;

  atoms_.clear();
  for (auto& [a, b] : covers)
    if (a == bottom_) atoms_.push_back(b);
  std::sort(atoms_.begin(), atoms_.end());
}

std::vector<std::pair<int, int>> AtomicLattice::cover_pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < m_; ++a)
    for (int b = 0; b < m_; ++b) {
      if (a == b || !leq(a, b)) continue;
      bool cover = true;
      for (int c = 0; c < m_ && cover; ++c)
        if (c != a && c != b && leq(a, c) && leq(c, b)) cover = false;
      if (cover) out.push_back({a, b});
    }
  return out;
}

bool AtomicLattice::is_atomic() const {
  // every element is a join of atoms
  for (int x = 0; x < m_; ++x) {
    if (x == bottom_) continue;
    int j = bottom_;
    for (int a : atoms_)
      if (leq(a, x)) j = join(j, a);
    if (j != x) return false;
  }
  return true;
}

std::vector<int> AtomicLattice::interval(int a, int b) const {
  std::vector<int> out;
  for (int x = 0; x < m_; ++x)
    if (leq(a, x) && leq(x, b)) out.push_back(x);
  return out;
}

int AtomicLattice::join_all(const std::vector<int>& xs) const {
  int j = bottom_;
  for (int x : xs) j = join(j, x);
  return j;
}

bool check_geometric(const AtomicLattice& L) {
  if (!L.is_graded()) return false;
  if (!L.is_atomic()) return false;
  for (int a = 0; a < L.size(); ++a)
    for (int b = a + 1; b < L.size(); ++b)
      if (L.rank(a) + L.rank(b) < L.rank(L.join(a, b)) + L.rank(L.meet(a, b))) return false;
  return true;
}

bool is_building_set(const AtomicLattice& L, const std::vector<int>& G, int size_cap,
                     bool override_cap) {
  if (L.size() > size_cap && !override_cap)
    throw resource_limit_error("is_building_set: lattice exceeds the verification cap");
  std::vector<char> inG(L.size(), 0);
  for (int g : G) {
    if (g == L.bottom()) return false;  // members must exclude the bottom
    inG[g] = 1;
  }
  for (int x = 0; x < L.size(); ++x) {
    if (x == L.bottom()) continue;
    // maximal members of G below or equal to x
    std::vector<int> maxg;
    for (int g : G) {
      if (!L.leq(g, x)) continue;
      bool maximal = true;
      for (int h : G)
        if (h != g && L.leq(h, x) && L.leq(g, h) && g != h) {
          maximal = false;
          break;
        }
      if (maximal) maxg.push_back(g);
    }
    if (maxg.empty()) return false;
    std::vector<std::vector<int>> intervals;
    long prod = 1;
    for (int g : maxg) {
      intervals.push_back(L.interval(L.bottom(), g));
      prod *= static_cast<long>(intervals.back().size());
      if (prod > 1'000'000) throw resource_limit_error("is_building_set: product too large");
    }
    std::vector<int> ivx = L.interval(L.bottom(), x);
    if (prod != static_cast<long>(ivx.size())) return false;

    // enumerate tuples, record joins, check bijection and order preservation
    std::vector<std::vector<int>> tuples;
    std::vector<int> joins;
    std::vector<int> idx(maxg.size(), 0);
    for (;;) {
      std::vector<int> tuple(maxg.size());
      int j = L.bottom();
      for (size_t i = 0; i < maxg.size(); ++i) {
        tuple[i] = intervals[i][idx[i]];
        j = L.join(j, tuple[i]);
      }
      tuples.push_back(std::move(tuple));
      joins.push_back(j);
      size_t carry = 0;
      while (carry < idx.size()) {
        if (++idx[carry] < static_cast<int>(intervals[carry].size())) break;
        idx[carry++] = 0;
      }
      if (carry == idx.size()) break;
    }
    std::vector<int> sorted = joins;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    for (int j : joins)
      if (!L.leq(j, x)) return false;
    // order-isomorphism in both directions
    for (size_t s = 0; s < tuples.size(); ++s)
      for (size_t t = 0; t < tuples.size(); ++t) {
        bool comp_le = true;
        for (size_t i = 0; i < maxg.size(); ++i)
          if (!L.leq(tuples[s][i], tuples[t][i])) {
            comp_le = false;
            break;
          }
        if (comp_le != L.leq(joins[s], joins[t])) return false;
      }
  }
  return true;
}

bool is_nested(const AtomicLattice& L, const std::vector<int>& G, const std::vector<int>& N) {
  std::vector<char> inG(L.size(), 0);
  for (int g : G) inG[g] = 1;
  for (int x : N)
    if (!inG[x]) throw std::invalid_argument("is_nested: N must be a subset of G");
  int k = static_cast<int>(N.size());
  if (k > 30) throw resource_limit_error("is_nested: set too large");
  for (std::uint32_t sub = 1; sub < (1u << k); ++sub) {
    if (std::popcount(sub) < 2) continue;
    std::vector<int> elems;
    for (int i = 0; i < k; ++i)
      if ((sub >> i) & 1) elems.push_back(N[i]);
    bool antichain = true;
    for (size_t i = 0; i < elems.size() && antichain; ++i)
      for (size_t j = i + 1; j < elems.size(); ++j)
        if (!L.incomparable(elems[i], elems[j])) {
          antichain = false;
          break;
        }
    if (!antichain) continue;
    if (inG[L.join_all(elems)]) return false;
  }
  return true;
}

void for_each_nested_set(const AtomicLattice& L, const std::vector<int>& G, bool reduced,
                         const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<char> inG(L.size(), 0);
  for (int g : G) inG[g] = 1;
  if (reduced && !inG[L.top()])
    throw std::invalid_argument("nested_sets: reduced mode requires the top element in G");
  std::vector<int> members = G;
  std::sort(members.begin(), members.end());
  if (reduced) members.erase(std::remove(members.begin(), members.end(), L.top()), members.end());

  std::vector<int> cur;
  // Extending a nested set N by g stays nested iff every antichain
  // {g} + S with S a nonempty antichain of N incomparable to g has its
  // join outside G.
  std::function<bool(int)> can_add = [&](int g) {
    std::vector<int> inc;
    for (int x : cur)
      if (L.incomparable(x, g)) inc.push_back(x);
    int k = static_cast<int>(inc.size());
    for (std::uint32_t sub = 1; sub < (1u << k); ++sub) {
      std::vector<int> elems{g};
      for (int i = 0; i < k; ++i)
        if ((sub >> i) & 1) elems.push_back(inc[i]);
      bool antichain = true;
      for (size_t i = 1; i < elems.size() && antichain; ++i)
        for (size_t j = i + 1; j < elems.size(); ++j)
          if (!L.incomparable(elems[i], elems[j])) {
            antichain = false;
            break;
          }
      if (!antichain) continue;
      if (inG[L.join_all(elems)]) return false;
    }
    return true;
  };
  std::function<void(size_t)> rec = [&](size_t start) {
    fn(cur);
    for (size_t i = start; i < members.size(); ++i) {
      if (!can_add(members[i])) continue;
      cur.push_back(members[i]);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
}

std::vector<std::vector<int>> nested_sets(const AtomicLattice& L, const std::vector<int>& G,
                                          bool reduced) {
  std::vector<std::vector<int>> out;
  for_each_nested_set(L, G, reduced, [&](const std::vector<int>& N) { out.push_back(N); });
  std::sort(out.begin(), out.end());
  return out;
}

GraphBuildingSet graphical_building_set(int vertices,
                                        const std::vector<std::pair<int, int>>& edges) {
  if (vertices < 1 || vertices > 10)
    throw std::invalid_argument("graphical_building_set: vertex count out of range");
  std::vector<std::uint32_t> adj(vertices + 1, 0);
  for (auto& [u, v] : edges) {
    if (u < 1 || u > vertices || v < 1 || v > vertices || u == v)
      throw std::invalid_argument("graphical_building_set: bad edge");
    adj[u] |= 1u << (v - 1);
    adj[v] |= 1u << (u - 1);
  }
  GraphBuildingSet out;
  out.lattice = AtomicLattice::boolean(vertices);
  for (std::uint32_t m = 1; m < (1u << vertices); ++m) {
    // connectivity of the induced subgraph by BFS within the mask
    std::uint32_t start = m & (~m + 1);
    std::uint32_t seen = start, frontier = start;
    while (frontier) {
      std::uint32_t next = 0;
      for (std::uint32_t f = frontier; f; f &= f - 1) {
        int v = std::countr_zero(f) + 1;
        next |= adj[v] & m & ~seen;
      }
      seen |= next;
      frontier = next;
    }
    if (seen == m) {
      out.members.push_back(static_cast<int>(m));
      out.member_sets.push_back(Subset(m, vertices));
    }
  }
  return out;
}

}  // namespace chowlab
