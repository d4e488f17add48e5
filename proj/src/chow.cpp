#include "chowlab/chow.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace chowlab {

bool FYMonomial::operator<(const FYMonomial& o) const {
  if (flag.size() != o.flag.size()) return flag.size() < o.flag.size();
  for (size_t i = 0; i < flag.size(); ++i)
    if (!(flag[i] == o.flag[i])) return flag[i].mask() < o.flag[i].mask();
  return exponents < o.exponents;
}

std::string FYMonomial::to_string() const {
  if (flag.empty()) return "1";
  std::string s;
  for (size_t i = 0; i < flag.size(); ++i) {
    if (i) s += " ";
    s += "x_{";
    for (int e : flag[i].elements()) s += std::to_string(e);
    s += "}";
    if (exponents[i] > 1) s += "^" + std::to_string(exponents[i]);
  }
  return s;
}

FYMonomial make_fy_monomial(const Matroid& m, ChowMode mode, std::vector<Subset> flag,
                            std::vector<int> exponents) {
  if (flag.size() != exponents.size())
    throw std::invalid_argument("FYMonomial: flag/exponent length mismatch");
  int prev_rank = 0;
  for (size_t i = 0; i < flag.size(); ++i) {
    if (flag[i].is_empty()) throw std::invalid_argument("FYMonomial: empty flat in flag");
    if (i > 0 && !(flag[i - 1].subset_of(flag[i]) && !(flag[i - 1] == flag[i])))
      throw std::invalid_argument("FYMonomial: flag not strictly increasing");
    if (!(m.closure(flag[i]) == flag[i])) throw std::invalid_argument("FYMonomial: not a flat");
    int r = m.rank(flag[i]);
    int low = 1;
    int high = (mode == ChowMode::Augmented && i == 0) ? r : r - prev_rank - 1;
    if (exponents[i] < low || exponents[i] > high)
      throw std::invalid_argument("FYMonomial: exponent out of range");
    prev_rank = r;
  }
  return FYMonomial{std::move(flag), std::move(exponents), mode};
}

std::vector<long> GradedBasis::counts() const {
  std::vector<long> out;
  for (auto& v : by_degree) out.push_back(static_cast<long>(v.size()));
  return out;
}

long GradedBasis::total() const {
  long t = 0;
  for (auto& v : by_degree) t += static_cast<long>(v.size());
  return t;
}

namespace {

GradedBasis enumerate_basis(const Matroid& m, ChowMode mode) {
  GradedBasis out;
  out.mode = mode;
  out.n = m.n();
  int maxdeg = mode == ChowMode::Augmented ? m.rank() : std::max(0, m.rank() - 1);
  out.by_degree.assign(maxdeg + 1, {});

  std::vector<Subset> flats = m.flats();  // canonical: by (cardinality, mask)
  std::vector<int> ranks;
  for (auto& f : flats) ranks.push_back(m.rank(f));

  std::vector<Subset> flag;
  std::vector<int> exps;
  // DFS over flags; at each flat choose an exponent within its bound.
  std::function<void(size_t, int, int)> rec = [&](size_t start, int prev_rank, int degree) {
    out.by_degree[degree].push_back(FYMonomial{flag, exps, mode});
    for (size_t i = start; i < flats.size(); ++i) {
      if (flats[i].is_empty()) continue;
      if (!flag.empty()) {
        const Subset& prev = flag.back();
        if (!(prev.subset_of(flats[i]) && !(prev == flats[i]))) continue;
      }
      int bound = (mode == ChowMode::Augmented && flag.empty()) ? ranks[i]
                                                                : ranks[i] - prev_rank - 1;
      if (bound < 1) continue;
      flag.push_back(flats[i]);
      for (int a = 1; a <= bound; ++a) {
        exps.push_back(a);
        rec(i + 1, ranks[i], degree + a);
        exps.pop_back();
      }
      flag.pop_back();
    }
  };
  rec(0, 0, 0);
  for (auto& v : out.by_degree) std::sort(v.begin(), v.end());
  return out;
}

}  // namespace

GradedBasis fy_basis_matroid(const Matroid& m) { return enumerate_basis(m, ChowMode::Chow); }

GradedBasis fy_basis_augmented(const Matroid& m) {
  return enumerate_basis(m, ChowMode::Augmented);
}

std::vector<std::vector<LatticeMonomial>> fy_basis_general(const AtomicLattice& L,
                                                           const std::vector<int>& G) {
  if (!check_geometric(L))
    throw std::invalid_argument("fy_basis_general: lattice is not geometric");
  std::vector<std::vector<LatticeMonomial>> out(L.height() + 1);
  for_each_nested_set(L, G, false, [&](const std::vector<int>& N) {
    // exponent bound for g: rank gap to the join of the members below g
    std::vector<int> bounds;
    for (int g : N) {
      std::vector<int> below;
      for (int h : N)
        if (h != g && L.leq(h, g)) below.push_back(h);
      int gprime = L.join_all(below);
      bounds.push_back(L.rank(g) - L.rank(gprime) - 1);
      if (bounds.back() < 1) return;  // no valid monomial supported on N
    }
    std::vector<int> exps(N.size(), 1);
    for (;;) {
      int deg = 0;
      for (int e : exps) deg += e;
      if (deg < static_cast<int>(out.size()))
        out[deg].push_back(LatticeMonomial{N, exps});
      size_t carry = 0;
      while (carry < exps.size()) {
        if (++exps[carry] <= bounds[carry]) break;
        exps[carry++] = 1;
      }
      if (carry == exps.size()) break;
    }
  });
  for (auto& v : out) std::sort(v.begin(), v.end());
  while (!out.empty() && out.back().empty()) out.pop_back();
  return out;
}

UniPoly hilbert_series(const GradedBasis& b) {
  UniPoly h('t');
  for (size_t k = 0; k < b.by_degree.size(); ++k)
    h.add_term(static_cast<int>(k), static_cast<long>(b.by_degree[k].size()));
  return h;
}

FYMonomial sn_act_monomial(const Matroid& m, const Permutation& p, const FYMonomial& mono) {
  bool is_boolean = m.kind() == Matroid::Kind::Boolean ||
                    (m.kind() == Matroid::Kind::Uniform && m.rank() == m.n());
  if (!is_boolean)
    throw std::invalid_argument("sn_act_monomial: only Boolean matroids carry the action");
  if (p.n() != m.n()) throw std::invalid_argument("sn_act_monomial: size mismatch");
  std::vector<Subset> flag;
  for (auto& f : mono.flag) {
    Subset g = Subset::empty(m.n());
    for (int e : f.elements()) g = g.with(p(e));
    flag.push_back(g);
  }
  return FYMonomial{std::move(flag), mono.exponents, mono.mode};
}

}  // namespace chowlab
