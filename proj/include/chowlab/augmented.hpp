#pragma once

#include <optional>
#include <string>
#include <vector>

#include "chowlab/lattice.hpp"
#include "chowlab/matroid.hpp"

namespace chowlab {

// The lattice I(M) ⊎ L(M)_* obtained by placing the independence complex
// below the starred lattice of flats along the covers I ⋖ cl(I)_*. The
// order is the transitive closure of the covers inside each half together
// with the gluing covers; construction validates the lattice axioms.
class AugmentedLattice {
 public:
  explicit AugmentedLattice(const Matroid& m);

  const Matroid& matroid() const { return m_; }
  const AtomicLattice& order() const { return order_; }
  int size() const { return order_.size(); }

  int independent_count() const { return static_cast<int>(independents_.size()); }
  int flat_count() const { return static_cast<int>(flats_.size()); }
  bool is_flat_node(int id) const { return id >= independent_count(); }
  const Subset& set_of(int id) const;
  int id_of_independent(const Subset& s) const;
  int id_of_flat(const Subset& f) const;
  int top_flat_id() const { return order_.top(); }

  // Lattice rank: |I| on the independent part, rk(F)+1 on the flat part.
  int rk(int id) const { return order_.rank(id); }

 private:
  Matroid m_;
  std::vector<Subset> independents_;
  std::vector<Subset> flats_;
  AtomicLattice order_;
};

AugmentedLattice augmented_lattice(const Matroid& m);

// G~ = singletons {1},...,{n} together with every starred flat.
std::vector<int> augmented_building_set(const AugmentedLattice& L);

// An independent set together with a flag of flats whose minimum contains it.
struct CompatiblePair {
  Subset independent;
  std::vector<Subset> flag;  // strictly increasing chain of flats

  bool operator==(const CompatiblePair& o) const {
    return independent == o.independent && flag == o.flag;
  }
  bool operator<(const CompatiblePair& o) const {
    if (!(independent == o.independent)) return independent < o.independent;
    return flag < o.flag;
  }
  std::string to_string() const;
};

CompatiblePair make_compatible_pair(const Matroid& m, Subset independent,
                                    std::vector<Subset> flag);

// Decomposition of a G~-nested set into (I <= F) and its inverse.
CompatiblePair nested_to_compatible_pair(const AugmentedLattice& L, const std::vector<int>& N);
std::vector<int> compatible_pair_to_nested(const AugmentedLattice& L, const CompatiblePair& p);

// All compatible pairs; with proper_only the flags avoid the top flat
// (these index the cones of the augmented Bergman fan).
std::vector<CompatiblePair> compatible_pairs(const Matroid& m, bool proper_only);

struct FaceIsoReport {
  bool pass = false;
  long face_count = 0;
  std::string detail;
};

// Verifies that nested sets of (L~(M), G~) reduced at the top are exactly
// the proper compatible pairs, bijectively and preserving containment both
// ways. For Boolean matroids additionally compares against the star-graph
// building set description of the nested sets.
FaceIsoReport face_iso_check(const Matroid& m);

}  // namespace chowlab
