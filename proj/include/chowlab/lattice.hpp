#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "chowlab/subset.hpp"

namespace chowlab {

// A finite lattice given by its order relation. Construction validates that
// joins and meets exist for every pair (throws std::logic_error otherwise)
// and precomputes the join/meet tables, so instances are immutable and
// queries are pure.
class AtomicLattice {
 public:
  static AtomicLattice from_leq(int size, const std::function<bool(int, int)>& leq,
                                std::vector<std::string> labels = {});
  static AtomicLattice from_covers(int size, const std::vector<std::pair<int, int>>& covers,
                                   std::vector<std::string> labels = {});
  // The Boolean lattice 2^[n]; element ids are the masks.
  static AtomicLattice boolean(int n);

  int size() const { return m_; }
  bool leq(int a, int b) const { return (up_[a][word(b)] >> bit(b)) & 1u; }
  bool incomparable(int a, int b) const { return !leq(a, b) && !leq(b, a); }
  int join(int a, int b) const { return join_[a][b]; }
  int meet(int a, int b) const { return meet_[a][b]; }
  int bottom() const { return bottom_; }
  int top() const { return top_; }
  const std::vector<int>& atoms() const { return atoms_; }
  int rank(int a) const { return rank_[a]; }
  int height() const { return rank_[top_]; }
  bool is_graded() const { return graded_; }
  bool is_atomic() const;
  std::vector<int> interval(int a, int b) const;  // {x : a <= x <= b}
  std::vector<std::pair<int, int>> cover_pairs() const;
  const std::string& label(int a) const { return labels_[a]; }

  int join_all(const std::vector<int>& xs) const;

 private:
  static int word(int b) { return b >> 6; }
  static unsigned bit(int b) { return static_cast<unsigned>(b & 63); }
  void finish();  // computes bottom/top/ranks/tables; validates lattice axioms

  int m_ = 0;
  std::vector<std::vector<std::uint64_t>> up_;    // up_[a] = bitset of {x : a <= x}
  std::vector<std::vector<std::uint64_t>> down_;  // down_[a] = {x : x <= a}
  std::vector<std::vector<int>> join_, meet_;
  std::vector<int> rank_;
  std::vector<int> atoms_;
  int bottom_ = -1, top_ = -1;
  bool graded_ = true;
  std::vector<std::string> labels_;
};

// Graded + atomic + upper semimodular rank inequality on all pairs.
bool check_geometric(const AtomicLattice& L);

// Interval-factorization test: for every X > 0, the join map from the
// product of lower intervals of max(G_{<=X}) to [0,X] is an order
// isomorphism. Cost is exponential in interval sizes; capped by default.
bool is_building_set(const AtomicLattice& L, const std::vector<int>& G,
                     int size_cap = 200, bool override_cap = false);

// True iff every >=2-element antichain of N has its join outside G.
bool is_nested(const AtomicLattice& L, const std::vector<int>& G, const std::vector<int>& N);

// All nested sets (as sorted id vectors, including the empty set). With
// reduced=true, sets containing the top element are omitted; requires
// top in G.
std::vector<std::vector<int>> nested_sets(const AtomicLattice& L, const std::vector<int>& G,
                                          bool reduced = false);
void for_each_nested_set(const AtomicLattice& L, const std::vector<int>& G, bool reduced,
                         const std::function<void(const std::vector<int>&)>& fn);

// The graphical building set of a simple graph, inside the Boolean lattice
// on the vertex set: all vertex subsets inducing connected subgraphs.
struct GraphBuildingSet {
  AtomicLattice lattice;       // Boolean lattice on [vertices]
  std::vector<int> members;    // element ids (= masks)
  std::vector<Subset> member_sets;
};
GraphBuildingSet graphical_building_set(int vertices,
                                        const std::vector<std::pair<int, int>>& edges);

}  // namespace chowlab
