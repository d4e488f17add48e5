#pragma once

#include <functional>
#include <string>
#include <vector>

#include "chowlab/chow.hpp"
#include "chowlab/partition.hpp"
#include "chowlab/perm.hpp"
#include "chowlab/word.hpp"

namespace chowlab {

// A marked sequence (alpha, f): every positive value k <= m(alpha) occurs at
// least twice and carries one mark on its f(k)+1-st occurrence, recorded as
// marks[k-1] = f(k) in [1, occurrences-1]. Entries may also be 0, or (in
// extended codes) the infinity letter. The all-infinity code has index -1.
struct Code {
  std::vector<int> alpha;  // letters: 0,1,2,... or kInfLetter
  std::vector<int> marks;  // marks[k-1] = f(k) for k = 1..m(alpha)

  int n() const { return static_cast<int>(alpha.size()); }
  int m() const { return static_cast<int>(marks.size()); }
  bool has_infinity() const;
  bool all_infinity() const;

  int index() const;          // -1 for the all-infinity code
  Partition content() const;  // occurrence counts sorted decreasingly
  Word word() const { return alpha; }

  bool operator==(const Code& o) const { return alpha == o.alpha && marks == o.marks; }
  // Canonical order: lexicographic on alpha (infinity greatest), then marks.
  bool operator<(const Code& o) const {
    if (alpha != o.alpha) return alpha < o.alpha;
    return marks < o.marks;
  }

  // "121'32'303'" style rendering; infinity prints as "∞".
  std::string render(char mark_char = '\'') const;
};

using ExtCode = Code;

// Validates the code structure; throws std::invalid_argument.
Code make_code(std::vector<int> alpha, std::vector<int> marks, bool allow_infinity);

// All codes of length n (optionally only those with the given index), each
// exactly once, in canonical order.
std::vector<Code> codes(int n, int index_filter = -2);
std::vector<Code> extended_codes(int n, int index_filter = -2);
void for_each_code(int n, bool extended, const std::function<void(const Code&)>& fn);

// Positional action: (sigma . alpha)_i = alpha_{sigma(i)}; marks unchanged.
Code sn_act_code(const Permutation& p, const Code& c);

// The index/degree-preserving bijections with the FY bases of the Boolean
// matroid.
Code phi(const FYMonomial& mono, int n);
FYMonomial phi_inv(const Code& c, int n);
ExtCode phi_tilde(const FYMonomial& mono, int n);
FYMonomial phi_tilde_inv(const ExtCode& c, int n);

struct EquivarianceReport {
  bool pass = false;
  long monomials_checked = 0;
  std::string detail;
};

// Verifies bijectivity, the degree/index relation, and equivariance with
// respect to all adjacent transpositions over the full basis.
EquivarianceReport equivariance_check(int n, ChowMode mode);

}  // namespace chowlab
