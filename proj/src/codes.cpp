#include "chowlab/codes.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "chowlab/caps.hpp"

namespace chowlab {

bool Code::has_infinity() const {
  return std::any_of(alpha.begin(), alpha.end(), [](int a) { return is_inf(a); });
}

bool Code::all_infinity() const {
  // vacuously true for the empty sequence (the unique length-0 extended code)
  return std::all_of(alpha.begin(), alpha.end(), [](int a) { return is_inf(a); });
}

int Code::index() const {
  if (all_infinity()) return -1;
  int s = 0;
  for (int f : marks) s += f;
  return s;
}

Partition Code::content() const {
  std::map<int, int> occ;
  for (int a : alpha) ++occ[a];
  std::vector<int> counts;
  for (auto& [letter, c] : occ) counts.push_back(c);
  return Partition::from_weak(counts);
}

std::string Code::render(char mark_char) const {
  std::string s;
  std::vector<int> seen(m() + 1, 0);
  bool wide = false;
  for (int a : alpha)
    if (!is_inf(a) && a > 9) wide = true;
  for (int i = 0; i < n(); ++i) {
    if (i && wide) s += " ";
    int a = alpha[i];
    if (is_inf(a)) {
      s += "∞";
      continue;
    }
    s += std::to_string(a);
    if (a >= 1 && a <= m()) {
      if (++seen[a] == marks[a - 1] + 1) s += mark_char;
    }
  }
  return s;
}

Code make_code(std::vector<int> alpha, std::vector<int> marks, bool allow_infinity) {
  int maxval = 0;
  std::map<int, int> occ;
  for (int a : alpha) {
    if (is_inf(a)) {
      if (!allow_infinity) throw std::invalid_argument("Code: infinity not allowed here");
      continue;
    }
    if (a < 0) throw std::invalid_argument("Code: negative letter");
    maxval = std::max(maxval, a);
    ++occ[a];
  }
  if (maxval != static_cast<int>(marks.size()))
    throw std::invalid_argument("Code: mark count must equal the maximum letter");
  for (int k = 1; k <= maxval; ++k) {
    if (occ[k] < 2) throw std::invalid_argument("Code: value " + std::to_string(k) +
                                                " must occur at least twice");
    if (marks[k - 1] < 1 || marks[k - 1] > occ[k] - 1)
      throw std::invalid_argument("Code: mark out of range for value " + std::to_string(k));
  }
  return Code{std::move(alpha), std::move(marks)};
}

void for_each_code(int n, bool extended, const std::function<void(const Code&)>& fn) {
  require_exhaustive_ok(n, "for_each_code");
  // Choose disjoint supports of size >= 2 for the values 1..m, then fill
  // the free positions with 0 (and infinity in extended mode), then all
  // mark vectors.
  std::vector<int> alpha(n, 0);
  std::vector<int> support_sizes;

  std::function<void(int)> emit_marks = [&](int) {
    std::vector<int> marks(support_sizes.size(), 1);
    for (;;) {
      fn(Code{alpha, marks});
      size_t carry = 0;
      while (carry < marks.size()) {
        if (++marks[carry] <= support_sizes[carry] - 1) break;
        marks[carry++] = 1;
      }
      if (carry == marks.size()) break;
    }
  };

  std::function<void(std::uint32_t)> fill_free = [&](std::uint32_t free) {
    if (!extended) {
      emit_marks(0);
      return;
    }
    // every free position independently 0 or infinity
    std::vector<int> positions;
    for (std::uint32_t f = free; f; f &= f - 1) positions.push_back(std::countr_zero(f));
    for (std::uint32_t pat = 0; pat < (1u << positions.size()); ++pat) {
      for (size_t i = 0; i < positions.size(); ++i)
        alpha[positions[i]] = (pat >> i) & 1 ? kInfLetter : 0;
      emit_marks(0);
    }
    for (int p : positions) alpha[p] = 0;
  };

  std::function<void(std::uint32_t, int)> choose_support = [&](std::uint32_t free, int value) {
    fill_free(free);
    if (std::popcount(free) < 2) return;
    // all subsets of the free positions with size >= 2
    std::uint32_t sub = free;
    for (; sub; sub = (sub - 1) & free) {
      if (std::popcount(sub) < 2) continue;
      for (std::uint32_t b = sub; b; b &= b - 1) alpha[std::countr_zero(b)] = value;
      support_sizes.push_back(std::popcount(sub));
      choose_support(free & ~sub, value + 1);
      support_sizes.pop_back();
      for (std::uint32_t b = sub; b; b &= b - 1) alpha[std::countr_zero(b)] = 0;
    }
  };

  if (n == 0) {
    if (extended) fn(Code{{}, {}});
    return;
  }
  choose_support((1u << n) - 1u, 1);
}

namespace {
std::vector<Code> collect(int n, bool extended, int index_filter) {
  std::vector<Code> out;
  for_each_code(n, extended, [&](const Code& c) {
    if (index_filter != -2 && c.index() != index_filter) return;
    out.push_back(c);
  });
  std::sort(out.begin(), out.end());
  return out;
}
}  // namespace

std::vector<Code> codes(int n, int index_filter) {
  if (n < 1) throw std::invalid_argument("codes: n must be >= 1");
  return collect(n, false, index_filter);
}

std::vector<Code> extended_codes(int n, int index_filter) {
  if (n < 0) throw std::invalid_argument("extended_codes: n must be >= 0");
  return collect(n, true, index_filter);
}

Code sn_act_code(const Permutation& p, const Code& c) {
  if (p.n() != c.n()) throw std::invalid_argument("sn_act_code: size mismatch");
  std::vector<int> alpha(c.n());
  for (int i = 1; i <= c.n(); ++i) alpha[i - 1] = c.alpha[p(i) - 1];
  return Code{std::move(alpha), c.marks};
}

Code phi(const FYMonomial& mono, int n) {
  if (mono.mode != ChowMode::Chow) throw std::invalid_argument("phi: expects a Chow monomial");
  std::vector<int> alpha(n, 0);
  for (size_t j = 0; j < mono.flag.size(); ++j) {
    Subset diff = j == 0 ? mono.flag[0] : mono.flag[j].minus(mono.flag[j - 1]);
    for (int i : diff.elements()) alpha[i - 1] = static_cast<int>(j) + 1;
  }
  return Code{std::move(alpha), mono.exponents};
}

FYMonomial phi_inv(const Code& c, int n) {
  if (c.n() != n) throw std::invalid_argument("phi_inv: length mismatch");
  if (c.has_infinity()) throw std::invalid_argument("phi_inv: plain codes only");
  std::vector<Subset> flag;
  Subset cur = Subset::empty(n);
  for (int j = 1; j <= c.m(); ++j) {
    for (int i = 1; i <= n; ++i)
      if (c.alpha[i - 1] == j) cur = cur.with(i);
    flag.push_back(cur);
  }
  return make_fy_monomial(Matroid::boolean(n), ChowMode::Chow, std::move(flag), c.marks);
}

ExtCode phi_tilde(const FYMonomial& mono, int n) {
  if (mono.mode != ChowMode::Augmented)
    throw std::invalid_argument("phi_tilde: expects an augmented monomial");
  std::vector<int> alpha(n, kInfLetter);
  if (mono.flag.empty()) return Code{std::move(alpha), {}};
  size_t ell = mono.flag.size();
  std::vector<int> marks;
  if (mono.exponents[0] == 1) {
    // labels j-1; marks shift down by one
    for (size_t j = 0; j < ell; ++j) {
      Subset diff = j == 0 ? mono.flag[0] : mono.flag[j].minus(mono.flag[j - 1]);
      for (int i : diff.elements()) alpha[i - 1] = static_cast<int>(j);
    }
    for (size_t j = 1; j < ell; ++j) marks.push_back(mono.exponents[j]);
  } else {
    // labels j; the first mark absorbs a_1 - 1
    for (size_t j = 0; j < ell; ++j) {
      Subset diff = j == 0 ? mono.flag[0] : mono.flag[j].minus(mono.flag[j - 1]);
      for (int i : diff.elements()) alpha[i - 1] = static_cast<int>(j) + 1;
    }
    marks.push_back(mono.exponents[0] - 1);
    for (size_t j = 1; j < ell; ++j) marks.push_back(mono.exponents[j]);
  }
  return Code{std::move(alpha), std::move(marks)};
}

FYMonomial phi_tilde_inv(const ExtCode& c, int n) {
  if (c.n() != n) throw std::invalid_argument("phi_tilde_inv: length mismatch");
  if (c.all_infinity() || c.n() == 0)
    return make_fy_monomial(Matroid::boolean(n), ChowMode::Augmented, {}, {});
  bool has_zero = std::any_of(c.alpha.begin(), c.alpha.end(), [](int a) { return a == 0; });
  std::vector<Subset> flag;
  std::vector<int> exps;
  if (has_zero) {
    // a_1 = 1 branch: F_j collects the labels 0..j-1
    Subset cur = Subset::empty(n);
    for (int j = 0; j <= c.m(); ++j) {
      for (int i = 1; i <= n; ++i)
        if (c.alpha[i - 1] == j) cur = cur.with(i);
      flag.push_back(cur);
    }
    exps.push_back(1);
    for (int f : c.marks) exps.push_back(f);
  } else {
    // a_1 >= 2 branch
    Subset cur = Subset::empty(n);
    for (int j = 1; j <= c.m(); ++j) {
      for (int i = 1; i <= n; ++i)
        if (c.alpha[i - 1] == j) cur = cur.with(i);
      flag.push_back(cur);
    }
    exps = c.marks;
    exps[0] += 1;
  }
  return make_fy_monomial(Matroid::boolean(n), ChowMode::Augmented, std::move(flag),
                          std::move(exps));
}

EquivarianceReport equivariance_check(int n, ChowMode mode) {
  EquivarianceReport rep;
  auto m = Matroid::boolean(n);
  GradedBasis basis = mode == ChowMode::Chow ? fy_basis_matroid(m) : fy_basis_augmented(m);
  std::vector<Code> all =
      mode == ChowMode::Chow ? codes(n) : extended_codes(n);
  std::map<Code, int> hits;
  for (auto& c : all) hits[c] = 0;

  auto apply = [&](const FYMonomial& mono) {
    return mode == ChowMode::Chow ? phi(mono, n) : phi_tilde(mono, n);
  };
  auto invert = [&](const Code& c) {
    return mode == ChowMode::Chow ? phi_inv(c, n) : phi_tilde_inv(c, n);
  };

  for (size_t k = 0; k < basis.by_degree.size(); ++k)
    for (auto& mono : basis.by_degree[k]) {
      Code img = apply(mono);
      auto it = hits.find(img);
      if (it == hits.end()) {
        rep.detail = "image is not a code: " + mono.to_string() + " -> " + img.render();
        return rep;
      }
      ++it->second;
      int expected_index = mode == ChowMode::Chow ? static_cast<int>(k)
                                                  : static_cast<int>(k) - 1;
      if (img.index() != expected_index) {
        rep.detail = "degree/index mismatch at " + mono.to_string();
        return rep;
      }
      if (!(invert(img) == mono)) {
        rep.detail = "inverse failed at " + mono.to_string();
        return rep;
      }
      for (int i = 1; i < n; ++i) {
        Permutation t = Permutation::transposition(n, i, i + 1);
        Code lhs = apply(sn_act_monomial(m, t, mono));
        Code rhs = sn_act_code(t, img);
        if (!(lhs == rhs)) {
          rep.detail = "equivariance failed at " + mono.to_string() + " with transposition (" +
                       std::to_string(i) + "," + std::to_string(i + 1) + ")";
          return rep;
        }
      }
      ++rep.monomials_checked;
    }
  for (auto& [c, count] : hits)
    if (count != 1) {
      rep.detail = "code hit " + std::to_string(count) + " times: " + c.render();
      return rep;
    }
  rep.pass = true;
  rep.detail = "pass";
  return rep;
}

}  // namespace chowlab
