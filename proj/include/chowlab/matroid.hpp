#pragma once

#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "chowlab/subset.hpp"

namespace chowlab {

// A loopless matroid on [n], given either in closed form (boolean, uniform)
// or explicitly by its list of bases. Explicit inputs are validated against
// the basis-exchange axiom at construction.
class Matroid {
 public:
  enum class Kind { Boolean, Uniform, Explicit };

  static Matroid boolean(int n);
  static Matroid uniform(int k, int n);
  static Matroid from_bases(int n, std::vector<Subset> bases);
  static Matroid from_json(const nlohmann::json& j);
  // "boolean:3", "uniform:2:4", or a path to a JSON file.
  static Matroid from_spec(const std::string& spec);

  Kind kind() const { return kind_; }
  int n() const { return n_; }
  int rank() const { return rank_; }
  const std::vector<Subset>& bases() const { return bases_; }

  int rank(const Subset& s) const;
  bool independent(const Subset& s) const;
  Subset closure(const Subset& s) const;

  std::vector<Subset> flats() const;             // canonical order
  std::vector<Subset> independent_sets() const;  // canonical order

  std::string describe() const;

 private:
  Matroid(Kind kind, int n, int k, std::vector<Subset> bases);

  Kind kind_;
  int n_;
  int rank_;                   // rank of the whole matroid
  int uniform_k_ = 0;          // Uniform only
  std::vector<Subset> bases_;  // Explicit only
};

// The lattice of flats, with covers, ranks, joins and meets. Element ids
// index the canonical flat list.
class FlatLattice {
 public:
  static FlatLattice of(const Matroid& m);

  int size() const { return static_cast<int>(flats_.size()); }
  const std::vector<Subset>& flats() const { return flats_; }
  const Subset& flat(int id) const { return flats_[id]; }
  int index_of(const Subset& f) const;
  int rank(int id) const { return ranks_[id]; }
  int bottom() const { return 0; }
  int top() const { return size() - 1; }
  bool leq(int a, int b) const { return flats_[a].subset_of(flats_[b]); }
  int join(int a, int b) const;
  int meet(int a, int b) const;
  const std::vector<std::pair<int, int>>& covers() const { return covers_; }

 private:
  explicit FlatLattice(Matroid m) : m_(std::move(m)) {}

  Matroid m_;
  std::vector<Subset> flats_;
  std::vector<int> ranks_;
  std::vector<std::pair<int, int>> covers_;
};

}  // namespace chowlab
