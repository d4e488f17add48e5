#include "chowlab/matroid.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace chowlab {

Matroid::Matroid(Kind kind, int n, int k, std::vector<Subset> bases)
    : kind_(kind), n_(n), uniform_k_(k), bases_(std::move(bases)) {
  if (n < 1 || n > kMaxGroundSet) throw std::invalid_argument("Matroid: n out of range");
  switch (kind_) {
    case Kind::Boolean:
      rank_ = n_;
      break;
    case Kind::Uniform:
      if (uniform_k_ < 1 || uniform_k_ > n_)
        throw std::invalid_argument("Matroid: uniform rank out of range (loops disallowed)");
      rank_ = uniform_k_;
      break;
    case Kind::Explicit: {
      if (bases_.empty()) throw std::invalid_argument("Matroid: empty basis list");
      std::sort(bases_.begin(), bases_.end());
      bases_.erase(std::unique(bases_.begin(), bases_.end()), bases_.end());
      rank_ = bases_[0].size();
      for (auto& b : bases_) {
        if (b.n() != n_) throw std::invalid_argument("Matroid: basis over wrong ground set");
        if (b.size() != rank_) throw std::invalid_argument("Matroid: bases not equicardinal");
      }
      // Basis exchange: for B1, B2 and x in B1 \ B2 there is y in B2 \ B1
      // with B1 - x + y a basis.
      std::set<std::uint32_t> basis_masks;
      for (auto& b : bases_) basis_masks.insert(b.mask());
      for (auto& b1 : bases_)
        for (auto& b2 : bases_)
          for (int x : b1.minus(b2).elements()) {
            bool found = false;
            for (int y : b2.minus(b1).elements())
              if (basis_masks.count(b1.without(x).with(y).mask())) {
                found = true;
                break;
              }
            if (!found && b1.mask() != b2.mask())
              throw std::invalid_argument("Matroid: bases violate the exchange axiom");
          }
      // Looplessness: every singleton independent.
      for (int i = 1; i <= n_; ++i) {
        bool covered = false;
        for (auto& b : bases_)
          if (b.contains(i)) {
            covered = true;
            break;
          }
        if (!covered)
          throw std::invalid_argument("Matroid: element " + std::to_string(i) + " is a loop");
      }
      break;
    }
  }
}

Matroid Matroid::boolean(int n) { return Matroid(Kind::Boolean, n, n, {}); }

Matroid Matroid::uniform(int k, int n) { return Matroid(Kind::Uniform, n, k, {}); }

Matroid Matroid::from_bases(int n, std::vector<Subset> bases) {
  return Matroid(Kind::Explicit, n, 0, std::move(bases));
}

Matroid Matroid::from_json(const nlohmann::json& j) {
  std::string kind = j.at("kind").get<std::string>();
  int n = j.at("n").get<int>();
  if (kind == "boolean") return boolean(n);
  if (kind == "uniform") return uniform(j.at("k").get<int>(), n);
  if (kind == "bases") {
    std::vector<Subset> bases;
    for (auto& b : j.at("bases")) bases.push_back(Subset::of(b.get<std::vector<int>>(), n));
    return from_bases(n, std::move(bases));
  }
  throw std::invalid_argument("Matroid: unknown kind '" + kind + "'");
}

Matroid Matroid::from_spec(const std::string& spec) {
  auto split = [](const std::string& s) {
    std::vector<std::string> out;
    size_t pos = 0;
    while (pos <= s.size()) {
      size_t next = s.find(':', pos);
      if (next == std::string::npos) next = s.size();
      out.push_back(s.substr(pos, next - pos));
      pos = next + 1;
    }
    return out;
  };
  auto parts = split(spec);
  if (parts.size() == 2 && parts[0] == "boolean") return boolean(std::stoi(parts[1]));
  if (parts.size() == 3 && parts[0] == "uniform")
    return uniform(std::stoi(parts[1]), std::stoi(parts[2]));
  std::ifstream in(spec);
  if (!in) throw std::invalid_argument("Matroid: cannot parse spec or open file '" + spec + "'");
  nlohmann::json j;
  in >> j;
  return from_json(j);
}

int Matroid::rank(const Subset& s) const {
  switch (kind_) {
    case Kind::Boolean:
      return s.size();
    case Kind::Uniform:
      return std::min(s.size(), uniform_k_);
    case Kind::Explicit: {
      int best = 0;
      for (auto& b : bases_) best = std::max(best, s.intersect(b).size());
      return best;
    }
  }
  return 0;
}

bool Matroid::independent(const Subset& s) const { return rank(s) == s.size(); }

Subset Matroid::closure(const Subset& s) const {
  int r = rank(s);
  Subset c = s;
  for (int i = 1; i <= n_; ++i)
    if (!s.contains(i) && rank(s.with(i)) == r) c = c.with(i);
  return c;
}

std::vector<Subset> Matroid::flats() const {
  std::set<Subset> seen;
  std::vector<Subset> queue{closure(Subset::empty(n_))};
  seen.insert(queue[0]);
  // BFS: covers of a flat F are among cl(F + i).
  for (size_t head = 0; head < queue.size(); ++head) {
    Subset f = queue[head];
    for (int i = 1; i <= n_; ++i) {
      if (f.contains(i)) continue;
      Subset g = closure(f.with(i));
      if (seen.insert(g).second) queue.push_back(g);
    }
  }
  std::vector<Subset> out(seen.begin(), seen.end());
  return out;  // set order = canonical (cardinality, mask)
}

std::vector<Subset> Matroid::independent_sets() const {
  std::vector<Subset> out;
  for_each_subset(n_, [&](const Subset& s) {
    if (independent(s)) out.push_back(s);
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::string Matroid::describe() const {
  switch (kind_) {
    case Kind::Boolean:
      return "boolean:" + std::to_string(n_);
    case Kind::Uniform:
      return "uniform:" + std::to_string(uniform_k_) + ":" + std::to_string(n_);
    case Kind::Explicit:
      return "bases(n=" + std::to_string(n_) + ",count=" + std::to_string(bases_.size()) + ")";
  }
  return "";
}

FlatLattice FlatLattice::of(const Matroid& m) {
  FlatLattice L(m);
  L.flats_ = m.flats();
  L.ranks_.resize(L.flats_.size());
  for (size_t i = 0; i < L.flats_.size(); ++i) L.ranks_[i] = m.rank(L.flats_[i]);
  if (!L.flats_.front().is_empty())
    throw std::logic_error("FlatLattice: matroid has loops, cl(empty) != empty");
  for (int a = 0; a < L.size(); ++a)
    for (int b = 0; b < L.size(); ++b)
      if (a != b && L.leq(a, b) && L.ranks_[b] == L.ranks_[a] + 1) L.covers_.push_back({a, b});
  return L;
}

int FlatLattice::index_of(const Subset& f) const {
  auto it = std::lower_bound(flats_.begin(), flats_.end(), f);
  if (it == flats_.end() || !(*it == f)) throw std::invalid_argument("FlatLattice: not a flat");
  return static_cast<int>(it - flats_.begin());
}

int FlatLattice::join(int a, int b) const {
  return index_of(m_.closure(flats_[a].union_with(flats_[b])));
}

int FlatLattice::meet(int a, int b) const {
  // intersection of flats is a flat
  return index_of(flats_[a].intersect(flats_[b]));
}

}  // namespace chowlab
