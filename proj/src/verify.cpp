#include "chowlab/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "chowlab/augmented.hpp"
#include "chowlab/chow.hpp"
#include "chowlab/codes.hpp"
#include "chowlab/csp.hpp"
#include "chowlab/eulerian.hpp"
#include "chowlab/qsym.hpp"
#include "chowlab/shuffle.hpp"

namespace chowlab {

namespace {

using Clock = std::chrono::steady_clock;

struct Runner {
  std::string suite;
  std::vector<CheckResult>* out;

  void check(const std::string& key, const std::function<std::string()>& body) {
    CheckResult r;
    r.key = key;
    r.suite = suite;
    auto start = Clock::now();
    try {
      r.detail = body();  // empty string = pass
      r.pass = r.detail.empty();
      if (r.pass) r.detail = "pass";
    } catch (const std::exception& e) {
      r.pass = false;
      r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    out->push_back(std::move(r));
  }
};

// ---------------------------------------------------------------- stats --

// All words of length k over an alphabet of k letters starting above base.
void for_each_block_word(int k, int base, const std::function<void(const Word&)>& fn) {
  Word w(k);
  std::function<void(int)> rec = [&](int pos) {
    if (pos == k) {
      fn(w);
      return;
    }
    for (int v = 1; v <= k; ++v) {
      w[pos] = base + v;
      rec(pos + 1);
    }
  };
  rec(0);
}

void compositions_upto(int max_len, int max_blocks,
                       const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> parts;
  std::function<void(int)> rec = [&](int rem) {
    if (!parts.empty()) fn(parts);
    if (static_cast<int>(parts.size()) == max_blocks) return;
    for (int k = 1; k <= rem; ++k) {
      parts.push_back(k);
      rec(rem - k);
      parts.pop_back();
    }
  };
  rec(max_len);
}

std::string macmahon_check(int max_len) {
  for (int a = 0; a <= max_len; ++a)
    for (int b = 0; a + b <= max_len; ++b)
      for (int c = 0; a + b + c <= max_len; ++c) {
        if (a + b + c == 0) continue;
        Word w;
        for (int i = 0; i < a; ++i) w.push_back(1);
        for (int i = 0; i < b; ++i) w.push_back(2);
        for (int i = 0; i < c; ++i) w.push_back(3);
        UniPoly qi('q'), qm('q');
        do {
          qi.add_term(inv(w), 1);
          qm.add_term(maj(w), 1);
        } while (std::next_permutation(w.begin(), w.end()));
        std::vector<int> parts;
        for (int k : {a, b, c})
          if (k > 0) parts.push_back(k);
        UniPoly expect = q_multinomial(parts);
        if (!(qi == expect) || !(qm == expect))
          return "failed on multiset (" + std::to_string(a) + "," + std::to_string(b) + "," +
                 std::to_string(c) + ")";
      }
  return "";
}

std::string shuffle_lemmas_check(int max_len, bool increasing, bool use_maj) {
  std::string fail;
  compositions_upto(max_len, 3, [&](const std::vector<int>& ks) {
    if (!fail.empty()) return;
    int m = static_cast<int>(ks.size());
    // letter chunks: separated for the inv lemmas, interleaved for maj
    std::vector<std::vector<int>> alphabets(m);
    if (use_maj) {
      for (int i = 0; i < m; ++i)
        for (int v = 0; v < ks[i]; ++v) alphabets[i].push_back(1 + i + v * m);
    } else {
      int base = 0;
      for (int i = 0; i < m; ++i) {
        for (int v = 1; v <= ks[i]; ++v) alphabets[i].push_back(base + v);
        base += ks[i];
      }
    }
    // enumerate block words (weakly increasing or arbitrary over the chunk)
    std::vector<std::vector<Word>> block_words(m);
    for (int i = 0; i < m; ++i) {
      int k = ks[i];
      if (increasing) {
        Word w(k);
        std::function<void(int, int)> rec = [&](int pos, int minv) {
          if (pos == k) {
            block_words[i].push_back(w);
            return;
          }
          for (int v = minv; v < static_cast<int>(alphabets[i].size()); ++v) {
            w[pos] = alphabets[i][v];
            rec(pos + 1, v);
          }
        };
        rec(0, 0);
      } else {
        for_each_block_word(k, 0, [&](const Word& raw) {
          Word w(k);
          for (int p = 0; p < k; ++p) w[p] = alphabets[i][raw[p] - 1];
          block_words[i].push_back(w);
        });
      }
    }
    UniPoly multinom = q_multinomial(ks);
    std::vector<size_t> idx(m, 0);
    for (;;) {
      std::vector<Word> tuple;
      long stat_sum = 0;
      for (int i = 0; i < m; ++i) {
        tuple.push_back(block_words[i][idx[i]]);
        stat_sum += use_maj ? maj(tuple.back()) : inv(tuple.back());
      }
      UniPoly total('q');
      for_each_shuffle(tuple, [&](const Word& w) {
        total.add_term(use_maj ? maj(w) : inv(w), 1);
      });
      UniPoly expect('q');
      for (auto& [e, c] : multinom.terms()) expect.add_term(e + static_cast<int>(stat_sum), c);
      if (!(total == expect)) {
        fail = "failed on a block tuple with sizes";
        for (int k : ks) fail += " " + std::to_string(k);
        return;
      }
      size_t carry = 0;
      while (carry < idx.size()) {
        if (++idx[carry] < block_words[carry].size()) break;
        idx[carry++] = 0;
      }
      if (carry == idx.size()) break;
    }
  });
  return fail;
}

void suite_stats(Runner& r, int max_n) {
  int len = std::min(7, max_n);
  r.check("Thm_Multi_inv_maj", [&] { return macmahon_check(len); });
  r.check("Cor_IncreasingShuffle",
          [&] { return shuffle_lemmas_check(std::min(7, max_n), true, false); });
  r.check("Cor_ShuffleINV",
          [&] { return shuffle_lemmas_check(std::min(7, max_n), false, false); });
  r.check("Thm_Shuffle_maj",
          [&] { return shuffle_lemmas_check(std::min(7, max_n), false, true); });
  r.check("Thm_DEXPerm", [&] {
    for (int n = 1; n <= std::min(6, max_n); ++n) {
      std::string fail;
      for_each_permutation(n, [&](const Permutation& p) {
        long sum = 0;
        for (int i : dex(p).elements()) sum += i;
        if (sum != maj(p) - exc(p)) fail = "sum rule failed at n=" + std::to_string(n);
        int expect = p(1) == 1 ? des(p) : des(p) - 1;
        if (dex(p).size() != expect) fail = "size rule failed at n=" + std::to_string(n);
      });
      if (!fail.empty()) return fail;
    }
    return std::string();
  });
  r.check("Lemma_DEXDecorated", [&] {
    for (int n = 0; n <= std::min(6, max_n); ++n) {
      std::string fail;
      for_each_decorated(n, [&](const DecoratedPermutation& p) {
        long sum = 0;
        for (int i : dex(p).elements()) sum += i;
        if (sum != maj(p) - exc(p)) fail = "sum rule failed at n=" + std::to_string(n);
        if (!p.is_theta()) {
          int expect = (p(1) == 0 || p(1) == 1) ? des(p) : des(p) - 1;
          if (dex(p).size() != expect) fail = "size rule failed at n=" + std::to_string(n);
        }
      });
      if (!fail.empty()) return fail;
    }
    return std::string();
  });
  r.check("Cyclotomic_product", [&] {
    for (int d = 1; d <= 30; ++d) {
      UniPoly prod = UniPoly::one('q');
      for (int e = 1; e <= d; ++e)
        if (d % e == 0) prod *= cyclotomic(e);
      UniPoly qd('q');
      qd.add_term(d, 1);
      qd.add_term(0, -1);
      if (!(prod == qd)) return "product identity failed at d=" + std::to_string(d);
    }
    return std::string();
  });
}

// ---------------------------------------------------------------- polys --

void suite_polys(Runner& r, int max_n) {
  r.check("eq_DefEulPoly", [&] {
    for (int n = 1; n <= std::min(8, max_n); ++n) eulerian(n);  // asserts exc == des inside
    return std::string();
  });
  r.check("Thm_qCountCodes", [&] {
    for (int n = 1; n <= std::min(7, max_n); ++n) {
      BiPoly expect = q_eulerian(n);
      if (!(q_eulerian_from_codes(n, WordStat::Inv) == expect))
        return "inv route failed at n=" + std::to_string(n);
      if (!(q_eulerian_from_codes(n, WordStat::Maj) == expect))
        return "maj route failed at n=" + std::to_string(n);
    }
    return std::string();
  });
  r.check("Prop_qExtendedCodes", [&] {
    for (int n = 0; n <= std::min(6, max_n); ++n) {
      BiPoly expect = q_binomial_eulerian(n);
      if (!(q_binom_from_extcodes(n, WordStat::Inv) == expect))
        return "inv route failed at n=" + std::to_string(n);
      if (!(q_binom_from_extcodes(n, WordStat::Maj) == expect))
        return "maj route failed at n=" + std::to_string(n);
    }
    return std::string();
  });
  r.check("Thm_qpartialpermutations", [&] {
    for (int n = 0; n <= std::min(6, max_n); ++n)
      if (!(q_binom_from_dperms(n) == q_binomial_eulerian(n)))
        return "failed at n=" + std::to_string(n);
    return std::string();
  });
}

// ----------------------------------------------------------------- chow --

std::vector<Matroid> small_matroids(int max_n) {
  std::vector<Matroid> ms;
  for (int n = 1; n <= std::min(6, max_n); ++n) ms.push_back(Matroid::boolean(n));
  for (int n = 3; n <= std::min(6, max_n); ++n)
    for (int k = 2; k < n; ++k) ms.push_back(Matroid::uniform(k, n));
  return ms;
}

void suite_chow(Runner& r, int max_n) {
  r.check("Thm_FYbasis_hilbert", [&] {
    for (int n = 1; n <= std::min(8, max_n); ++n)
      if (!(hilbert_series(fy_basis_matroid(Matroid::boolean(n))) == eulerian(n)))
        return "Chow Hilbert series differs from the Eulerian polynomial at n=" +
               std::to_string(n);
    return std::string();
  });
  r.check("Cor_AugBasis_hilbert", [&] {
    for (int n = 1; n <= std::min(8, max_n); ++n)
      if (!(hilbert_series(fy_basis_augmented(Matroid::boolean(n))) == binomial_eulerian(n)))
        return "augmented Hilbert series differs at n=" + std::to_string(n);
    return std::string();
  });
  r.check("FY_palindromic", [&] {
    for (auto& m : small_matroids(max_n)) {
      auto counts = fy_basis_matroid(m).counts();
      auto rev = counts;
      std::reverse(rev.begin(), rev.end());
      if (counts != rev) return "not palindromic for " + m.describe();
    }
    return std::string();
  });
  r.check("Thm_FYbasis_linear_algebra", [&] {
    std::vector<std::pair<Matroid, ChowMode>> cases;
    for (int n = 2; n <= std::min(4, max_n); ++n)
      cases.push_back({Matroid::boolean(n), ChowMode::Chow});
    for (int n = 2; n <= std::min(3, max_n); ++n)
      cases.push_back({Matroid::boolean(n), ChowMode::Augmented});
    cases.push_back({Matroid::uniform(2, 3), ChowMode::Chow});
    cases.push_back({Matroid::uniform(2, 3), ChowMode::Augmented});
    cases.push_back({Matroid::uniform(2, 4), ChowMode::Chow});
    cases.push_back({Matroid::uniform(2, 4), ChowMode::Augmented});
    for (auto& [m, mode] : cases) {
      int top = mode == ChowMode::Augmented ? m.rank() : m.rank() - 1;
      for (int k = 0; k <= top + 1; ++k) {
        auto rep = fy_independence_report(m, mode, k);
        if (!rep.ok())
          return "linear-algebra check failed for " + m.describe() + " degree " +
                 std::to_string(k) + " (fy=" + std::to_string(rep.fy_count) +
                 ", dim=" + std::to_string(rep.quotient_dim) + ")";
      }
    }
    return std::string();
  });
  r.check("Thm_AugIsChow", [&] {
    for (auto& m : {Matroid::boolean(2), Matroid::boolean(3), Matroid::uniform(2, 3),
                    Matroid::uniform(2, 4)}) {
      AugmentedLattice L(m);
      auto general = fy_basis_general(L.order(), augmented_building_set(L));
      auto direct = fy_basis_augmented(m);
      if (general.size() != direct.by_degree.size())
        return "degree ranges differ for " + m.describe();
      for (size_t k = 0; k < general.size(); ++k) {
        std::set<FYMonomial> renamed;
        for (auto& lm : general[k]) {
          std::vector<Subset> flag;
          for (int id : lm.elems) {
            if (!L.is_flat_node(id)) return std::string("singleton support in a basis monomial");
            flag.push_back(L.set_of(id));
          }
          renamed.insert(FYMonomial{flag, lm.exps, ChowMode::Augmented});
        }
        std::set<FYMonomial> expect(direct.by_degree[k].begin(), direct.by_degree[k].end());
        if (renamed != expect)
          return "monomials differ for " + m.describe() + " at degree " + std::to_string(k);
      }
    }
    return std::string();
  });
  r.check("Prop_FYPermBasis", [&] {
    // the action permutes each graded piece of the basis
    for (int n = 2; n <= std::min(5, max_n); ++n) {
      auto m = Matroid::boolean(n);
      for (auto suite : {ChowMode::Chow, ChowMode::Augmented}) {
        auto basis = suite == ChowMode::Chow ? fy_basis_matroid(m) : fy_basis_augmented(m);
        for (auto& deg : basis.by_degree) {
          std::set<FYMonomial> members(deg.begin(), deg.end());
          for (int i = 1; i < n; ++i) {
            auto t = Permutation::transposition(n, i, i + 1);
            for (auto& mono : deg)
              if (!members.count(sn_act_monomial(m, t, mono)))
                return "action leaves the basis at n=" + std::to_string(n);
          }
        }
      }
    }
    return std::string();
  });
}

// --------------------------------------------------------------- lattice --

void suite_lattice(Runner& r, int max_n) {
  std::vector<Matroid> ms{Matroid::boolean(2), Matroid::boolean(3), Matroid::uniform(2, 3),
                          Matroid::uniform(2, 4)};
  if (max_n >= 4) ms.push_back(Matroid::boolean(4));
  r.check("BuildingSet_examples", [&] {
    auto B3 = AtomicLattice::boolean(3);
    if (!is_building_set(B3, {1, 2, 4, 6})) return std::string("atoms+{23} rejected");
    if (is_building_set(B3, {1, 2, 4, 3, 5, 6})) return std::string("rank-2 family accepted");
    std::vector<int> maximal;
    for (int x = 1; x < 8; ++x) maximal.push_back(x);
    if (!is_building_set(B3, maximal)) return std::string("maximal building set rejected");
    return std::string();
  });
  r.check("Prop_AugGeometric", [&] {
    for (auto& m : ms)
      if (!check_geometric(AugmentedLattice(m).order()))
        return "augmented lattice not geometric for " + m.describe();
    return std::string();
  });
  r.check("Lemma_AugBuildingSet", [&] {
    for (auto& m : ms) {
      AugmentedLattice L(m);
      if (!is_building_set(L.order(), augmented_building_set(L)))
        return "augmented building set rejected for " + m.describe();
    }
    return std::string();
  });
  r.check("Lemma_AugNestedSet", [&] {
    for (auto& m : ms) {
      AugmentedLattice L(m);
      auto nested = nested_sets(L.order(), augmented_building_set(L), false);
      auto pairs = compatible_pairs(m, false);
      if (nested.size() != pairs.size()) return "counts differ for " + m.describe();
      std::set<std::vector<int>> nset(nested.begin(), nested.end());
      for (auto& p : pairs)
        if (!nset.count(compatible_pair_to_nested(L, p)))
          return "missing nested set for " + m.describe();
    }
    return std::string();
  });
  r.check("Thm_AugFace", [&] {
    for (auto& m : {Matroid::boolean(2), Matroid::boolean(3), Matroid::uniform(2, 3)}) {
      auto rep = face_iso_check(m);
      if (!rep.pass) return m.describe() + ": " + rep.detail;
    }
    return std::string();
  });
  r.check("NestedSets_complex", [&] {
    // nested sets form a simplicial complex and chains in G are nested
    auto B3 = AtomicLattice::boolean(3);
    std::vector<std::pair<const AtomicLattice*, std::vector<int>>> cases;
    std::vector<int> g1{1, 2, 4, 6, 7}, g2{1, 2, 4, 7};
    std::vector<int> maximal;
    for (int x = 1; x < 8; ++x) maximal.push_back(x);
    cases.push_back({&B3, g1});
    cases.push_back({&B3, g2});
    cases.push_back({&B3, maximal});
    AugmentedLattice Lb3(Matroid::boolean(3));
    auto Gb3 = augmented_building_set(Lb3);
    cases.push_back({&Lb3.order(), Gb3});
    for (auto& [L, G] : cases) {
      for (auto& N : nested_sets(*L, G, false)) {
        for (size_t drop = 0; drop < N.size(); ++drop) {
          std::vector<int> sub;
          for (size_t i = 0; i < N.size(); ++i)
            if (i != drop) sub.push_back(N[i]);
          if (!is_nested(*L, G, sub)) return std::string("subset of a nested set not nested");
        }
      }
      // every chain inside G is nested
      for (size_t i = 0; i < G.size(); ++i)
        for (size_t j = i + 1; j < G.size(); ++j) {
          if (L->incomparable(G[i], G[j])) continue;
          if (!is_nested(*L, G, {G[i], G[j]}))
            return std::string("two-element chain rejected");
        }
    }
    return std::string();
  });
  r.check("eq_rkInd", [&] {
    for (auto& m : ms) {
      AugmentedLattice L(m);
      for (int id = 0; id < L.independent_count(); ++id) {
        const Subset& I = L.set_of(id);
        if (L.rk(id) != I.size() || L.rk(id) != m.rank(m.closure(I)))
          return "rank identity failed for " + m.describe();
      }
    }
    return std::string();
  });
  r.check("AugJoins_closed_forms", [&] {
    for (auto& m : ms) {
      AugmentedLattice L(m);
      auto& ord = L.order();
      for (int a = 0; a < L.size(); ++a)
        for (int b = 0; b < L.size(); ++b) {
          int j = ord.join(a, b);
          int expect;
          if (!L.is_flat_node(a) && !L.is_flat_node(b)) {
            Subset u = L.set_of(a).union_with(L.set_of(b));
            expect = m.independent(u) ? L.id_of_independent(u) : L.id_of_flat(m.closure(u));
          } else if (L.is_flat_node(a) && L.is_flat_node(b)) {
            expect = L.id_of_flat(m.closure(L.set_of(a).union_with(L.set_of(b))));
          } else {
            const Subset& I = L.set_of(L.is_flat_node(a) ? b : a);
            const Subset& F = L.set_of(L.is_flat_node(a) ? a : b);
            expect = L.id_of_flat(m.closure(m.closure(I).union_with(F)));
          }
          if (j != expect) return "join closed form failed for " + m.describe();
        }
    }
    return std::string();
  });
}

// -------------------------------------------------------------- bijection --

void suite_bijection(Runner& r, int max_n) {
  r.check("Thm_bijectionBasis1", [&] {
    for (int n = 1; n <= std::min(6, max_n); ++n) {
      auto rep = equivariance_check(n, ChowMode::Chow);
      if (!rep.pass) return "n=" + std::to_string(n) + ": " + rep.detail;
    }
    return std::string();
  });
  r.check("Thm_bijectionBasis2", [&] {
    for (int n = 1; n <= std::min(6, max_n); ++n) {
      auto rep = equivariance_check(n, ChowMode::Augmented);
      if (!rep.pass) return "n=" + std::to_string(n) + ": " + rep.detail;
    }
    return std::string();
  });
}

// ---------------------------------------------------------------- symfun --

void suite_symfun(Runner& r, int max_n) {
  r.check("Thm_QnCodes", [&] {
    for (int n = 1; n <= std::min(6, max_n); ++n)
      if (!(codes_des_expansion(n) == q_nj_from_perms(n)))
        return "failed at n=" + std::to_string(n);
    return std::string();
  });
  r.check("Thm_summaryQ", [&] {
    for (int n = 1; n <= std::min(6, max_n); ++n) {
      if (!(q_nj_from_perms(n) == h_to_f(frobenius_codes(n, false))))
        return "F-expansions differ at n=" + std::to_string(n);
      // graded dimensions match the Chow basis counts
      auto counts = fy_basis_matroid(Matroid::boolean(n)).counts();
      auto fc = frobenius_codes(n, false);
      for (size_t j = 0; j < counts.size(); ++j) {
        Int dim = 0;
        for (auto& [lam, c] : fc.terms()) {
          Int multi = factorial(n);
          for (int p : lam.parts()) multi /= factorial(p);
          dim += c.coeff(static_cast<int>(j)) * multi;
        }
        if (dim != counts[j]) return "dimensions differ at n=" + std::to_string(n);
      }
    }
    return std::string();
  });
  r.check("Thm_FcharExtCodes", [&] {
    for (int n = 0; n <= std::min(6, max_n); ++n)
      if (!(q_tilde_from_def(n) == frobenius_codes(n, true)))
        return "failed at n=" + std::to_string(n);
    return std::string();
  });
  r.check("Thm_summaryTildeQ", [&] {
    for (int n = 1; n <= std::min(5, max_n); ++n) {
      auto counts = fy_basis_augmented(Matroid::boolean(n)).counts();
      auto fce = frobenius_codes(n, true);
      for (size_t j = 0; j < counts.size(); ++j) {
        Int dim = 0;
        for (auto& [lam, c] : fce.terms()) {
          Int multi = factorial(n);
          for (int p : lam.parts()) multi /= factorial(p);
          dim += c.coeff(static_cast<int>(j)) * multi;
        }
        if (dim != counts[j]) return "dimensions differ at n=" + std::to_string(n);
      }
    }
    return std::string();
  });
  r.check("Thm_FexpWideQ", [&] {
    for (int n = 0; n <= std::min(5, max_n); ++n)
      if (!(q_tilde_from_dperms(n) == h_to_f(q_tilde_from_def(n))))
        return "failed at n=" + std::to_string(n);
    return std::string();
  });
  r.check("Thm_gfEulerianQsym", [&] {
    auto rep = gf_recurrence_check(std::min(6, max_n));
    if (!rep.pass) return "recurrence failed first at n=" + std::to_string(rep.first_failure);
    return std::string();
  });
  r.check("Thm_psEulerianQ", [&] {
    for (int n = 1; n <= std::min(6, max_n); ++n)
      if (!(nps(q_nj_from_perms(n)) == q_eulerian(n)))
        return "specialization failed at n=" + std::to_string(n);
    return std::string();
  });
  r.check("Thm_SpecializeBinEuler", [&] {
    for (int n = 0; n <= std::min(6, max_n); ++n) {
      if (!(nps(q_tilde_from_def(n)) == q_binomial_eulerian(n)))
        return "h-route failed at n=" + std::to_string(n);
      if (!(nps(q_tilde_from_dperms(n)) == q_binomial_eulerian(n)))
        return "F-route failed at n=" + std::to_string(n);
    }
    return std::string();
  });
  r.check("Qsym_symmetry", [&] {
    for (int n = 1; n <= std::min(5, max_n); ++n) {
      auto h1 = qsym_to_h(q_nj_from_perms(n));
      if (!h1 || !(*h1 == frobenius_codes(n, false)))
        return "plain h-expansion failed at n=" + std::to_string(n);
      auto h2 = qsym_to_h(q_tilde_from_dperms(n));
      if (!h2 || !(*h2 == q_tilde_from_def(n)))
        return "extended h-expansion failed at n=" + std::to_string(n);
    }
    return std::string();
  });
  r.check("PermModule_characters", [&] {
    for (int n = 1; n <= std::min(6, max_n); ++n) {
      auto p = h_to_p(frobenius_codes(n, false));
      for (auto& [nu, c] : p.terms())
        for (auto& [e, v] : c.terms()) {
          Rat chi = v * Rat(nu.z());
          chi.canonicalize();
          if (chi.get_den() != 1 || chi < 0)
            return "character value not a nonnegative integer at n=" + std::to_string(n);
        }
    }
    return std::string();
  });
}

// ------------------------------------------------------------------- csp --

void suite_csp(Runner& r, int max_n) {
  r.check("Thm_CSP1", [&] {
    for (int n = 1; n <= std::min(7, max_n); ++n)
      for (int j = 0; j < n; ++j) {
        auto rep = csp_verify(CspFamily::Codes, n, j);
        if (!rep.pass) return "codes n=" + std::to_string(n) + " j=" + std::to_string(j);
      }
    return std::string();
  });
  r.check("Thm_CSP2", [&] {
    for (int n = 1; n <= std::min(6, max_n); ++n)
      for (int j = 0; j <= n; ++j) {
        auto rep = csp_verify(CspFamily::ExtCodes, n, j);
        if (!rep.pass) return "extcodes n=" + std::to_string(n) + " j=" + std::to_string(j);
      }
    return std::string();
  });
  r.check("Cor_CSP_SnExc", [&] {
    for (int n = 1; n <= std::min(7, max_n); ++n)
      for (int j = 0; j < n; ++j) {
        auto rep = csp_verify(CspFamily::PermsExc, n, j);
        if (!rep.pass) return "perms n=" + std::to_string(n) + " j=" + std::to_string(j);
      }
    return std::string();
  });
  r.check("Thm_CSP_SnCycle", [&] {
    for (int n = 1; n <= std::min(6, max_n); ++n)
      for (auto& lam : partitions_of(n))
        for (int j = 0; j < n; ++j) {
          auto rep = csp_verify(CspFamily::PermsCycleType, n, j, &lam);
          if (!rep.pass)
            return "cycle type " + lam.to_string() + " n=" + std::to_string(n) +
                   " j=" + std::to_string(j);
        }
    return std::string();
  });
  r.check("Conjecture_dperms_CSP", [&] {
    for (int n = 1; n <= std::min(6, max_n); ++n)
      for (int j = 0; j <= n; ++j) {
        auto rep = csp_verify(CspFamily::DPermsConjecture, n, j);
        if (!rep.pass)
          return "conjecture fails under the relabeling action at n=" + std::to_string(n) +
                 " j=" + std::to_string(j);
      }
    return std::string();
  });
  r.check("Cor_CnSymmetry", [&] {
    for (int n = 1; n <= std::min(7, max_n); ++n)
      for (int j = 0; j < n; ++j) {
        auto rep = cn_character_compare(n, j);
        if (!rep.pass) return "characters differ at n=" + std::to_string(n);
      }
    return std::string();
  });
  r.check("Thm_CharacterRootOfUnity", [&] {
    for (int n = 2; n <= std::min(6, max_n); ++n) {
      auto fc = frobenius_codes(n, false);
      for (int d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        for (int j = 0; j < n; ++j) {
          SymH slice = fc.t_slice(j);
          if (slice.terms().empty()) continue;
          character_via_p(slice, d);  // throws on route disagreement
        }
      }
    }
    return std::string();
  });
  r.check("DivisorClass_constancy", [&] {
    for (int n = 2; n <= std::min(6, max_n); ++n)
      for (int j = 0; j < n; ++j)
        for (int r1 = 1; r1 < n; ++r1)
          for (int r2 = r1 + 1; r2 < n; ++r2) {
            if (std::gcd(r1, n) != std::gcd(r2, n)) continue;
            if (cyclic_fixed_codes(n, j, r1, false) != cyclic_fixed_codes(n, j, r2, false))
              return "plain counts differ at n=" + std::to_string(n);
            if (cyclic_fixed_codes(n, j, r1, true) != cyclic_fixed_codes(n, j, r2, true))
              return "extended counts differ at n=" + std::to_string(n);
          }
    return std::string();
  });
}

}  // namespace

std::vector<std::string> verify_suite_names() {
  return {"stats", "polys", "chow", "lattice", "bijection", "symfun", "csp"};
}

std::vector<CheckResult> run_suite(const std::string& suite, int max_n) {
  std::vector<CheckResult> out;
  Runner r{suite, &out};
  if (suite == "stats")
    suite_stats(r, max_n);
  else if (suite == "polys")
    suite_polys(r, max_n);
  else if (suite == "chow")
    suite_chow(r, max_n);
  else if (suite == "lattice")
    suite_lattice(r, max_n);
  else if (suite == "bijection")
    suite_bijection(r, max_n);
  else if (suite == "symfun")
    suite_symfun(r, max_n);
  else if (suite == "csp")
    suite_csp(r, max_n);
  else
    throw std::invalid_argument("unknown suite '" + suite + "'");
  return out;
}

std::vector<CheckResult> run_all_suites(int max_n) {
  std::vector<CheckResult> out;
  for (auto& s : verify_suite_names()) {
    auto part = run_suite(s, max_n);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

}  // namespace chowlab
