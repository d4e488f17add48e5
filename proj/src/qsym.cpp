#include "chowlab/qsym.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <stdexcept>

#include "chowlab/caps.hpp"
#include "chowlab/codes.hpp"
#include "chowlab/perm.hpp"
#include "chowlab/shuffle.hpp"

namespace chowlab {

QSymF QSymF::fundamental(const Subset& s, int n) {
  if (s.n() != std::max(0, n - 1))
    throw std::invalid_argument("QSymF: descent set must live in [n-1]");
  QSymF f(n);
  f.add(s.mask(), UniPoly::one('t'));
  return f;
}

void QSymF::add(std::uint32_t mask, const UniPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = c_.emplace(mask, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) c_.erase(it);
  }
}

UniPoly QSymF::coeff(std::uint32_t mask) const {
  auto it = c_.find(mask);
  return it == c_.end() ? UniPoly::zero('t') : it->second;
}

QSymF& QSymF::operator+=(const QSymF& o) {
  if (n_ != o.n_) throw std::invalid_argument("QSymF: degree mismatch");
  for (auto& [m, c] : o.c_) add(m, c);
  return *this;
}

QSymF& QSymF::scale(const UniPoly& c) {
  std::map<std::uint32_t, UniPoly> out;
  for (auto& [m, v] : c_) {
    UniPoly prod = v * c;
    if (!prod.is_zero()) out.emplace(m, std::move(prod));
  }
  c_ = std::move(out);
  return *this;
}

std::string QSymF::to_string() const {
  if (c_.empty()) return "0";
  std::string s;
  for (auto& [m, c] : c_) {
    if (!s.empty()) s += " + ";
    s += "(" + c.to_string() + ")F_{" + Subset(m, std::max(0, n_ - 1)).to_string() + "," +
         std::to_string(n_) + "}";
  }
  return s;
}

SymH SymH::h(const Partition& lambda) {
  SymH out(lambda.weight());
  out.add(lambda, UniPoly::one('t'));
  return out;
}

void SymH::add(const Partition& p, const UniPoly& c) {
  if (c.is_zero()) return;
  if (p.weight() != n_) throw std::invalid_argument("SymH: partition of wrong weight");
  auto [it, inserted] = c_.emplace(p, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) c_.erase(it);
  }
}

UniPoly SymH::coeff(const Partition& p) const {
  auto it = c_.find(p);
  return it == c_.end() ? UniPoly::zero('t') : it->second;
}

SymH& SymH::operator+=(const SymH& o) {
  if (n_ != o.n_) throw std::invalid_argument("SymH: degree mismatch");
  for (auto& [p, c] : o.c_) add(p, c);
  return *this;
}

SymH& SymH::scale(const UniPoly& c) {
  std::map<Partition, UniPoly> out;
  for (auto& [p, v] : c_) {
    UniPoly prod = v * c;
    if (!prod.is_zero()) out.emplace(p, std::move(prod));
  }
  c_ = std::move(out);
  return *this;
}

SymH SymH::times_h(int k) const {
  if (k == 0) return *this;
  SymH out(n_ + k);
  for (auto& [p, c] : c_) {
    std::vector<int> parts = p.parts();
    parts.push_back(k);
    out.add(Partition(parts), c);
  }
  return out;
}

SymH SymH::t_slice(int j) const {
  SymH out(n_);
  for (auto& [p, c] : c_) {
    Int v = c.coeff(j);
    if (v != 0) out.add(p, UniPoly::constant(v, 't'));
  }
  return out;
}

std::string SymH::to_string() const {
  if (c_.empty()) return "0";
  std::string s;
  for (auto& [p, c] : c_) {
    if (!s.empty()) s += " + ";
    s += "(" + c.to_string() + ")h_{" + p.to_string() + "}";
  }
  return s;
}

void SymP::add(const Partition& p, const RatUniPoly& c) {
  if (c.is_zero()) return;
  if (p.weight() != n_) throw std::invalid_argument("SymP: partition of wrong weight");
  auto [it, inserted] = c_.emplace(p, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) c_.erase(it);
  }
}

RatUniPoly SymP::coeff(const Partition& p) const {
  auto it = c_.find(p);
  return it == c_.end() ? RatUniPoly::zero('t') : it->second;
}

SymP& SymP::operator+=(const SymP& o) {
  if (n_ != o.n_) throw std::invalid_argument("SymP: degree mismatch");
  for (auto& [p, c] : o.c_) add(p, c);
  return *this;
}

namespace {

// A word with the given descent set over the letters base+1..base+len:
// later blocks take smaller values, each block increasing.
Word descent_class_word(std::uint32_t mask, int len, int base) {
  std::vector<int> block_of(len, 0);
  int block = 0;
  for (int pos = 1; pos <= len; ++pos) {
    block_of[pos - 1] = block;
    if (pos < len && ((mask >> (pos - 1)) & 1)) ++block;
  }
  int nblocks = len == 0 ? 0 : block + 1;
  std::vector<int> sizes(nblocks, 0);
  for (int b : block_of) ++sizes[b];
  // first value of each block, assigning the smallest run to the last block
  std::vector<int> start(nblocks, 0);
  int next = base + 1;
  for (int b = nblocks - 1; b >= 0; --b) {
    start[b] = next;
    next += sizes[b];
  }
  Word w(len);
  std::vector<int> used(nblocks, 0);
  for (int pos = 0; pos < len; ++pos) {
    int b = block_of[pos];
    w[pos] = start[b] + used[b]++;
  }
  return w;
}

// Multiplicities of descent masks among shuffles of two descent-class
// representatives; memoized.
const std::map<std::uint32_t, long>& shuffle_expansion(int m, std::uint32_t sm, int n,
                                                       std::uint32_t tm) {
  static std::map<std::tuple<int, std::uint32_t, int, std::uint32_t>,
                  std::map<std::uint32_t, long>>
      cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_tuple(m, sm, n, tm);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  Word u = descent_class_word(sm, m, 0);
  Word v = descent_class_word(tm, n, m);
  std::map<std::uint32_t, long> expansion;
  for_each_shuffle({u, v}, [&](const Word& w) { ++expansion[descent_set(w).mask()]; });
  return cache.emplace(key, std::move(expansion)).first->second;
}

}  // namespace

QSymF f_product(const QSymF& a, const QSymF& b) {
  QSymF out(a.n() + b.n());
  for (auto& [sm, sc] : a.terms())
    for (auto& [tm, tc] : b.terms()) {
      UniPoly c = sc * tc;
      for (auto& [mask, mult] : shuffle_expansion(a.n(), sm, b.n(), tm)) {
        UniPoly scaled = c;
        scaled *= Int(mult);
        out.add(mask, scaled);
      }
    }
  return out;
}

QSymF h_to_f(const Partition& lambda) {
  QSymF out(0);
  out.add(0, UniPoly::one('t'));
  for (int part : lambda.parts())
    out = f_product(out, QSymF::fundamental(Subset::empty(std::max(0, part - 1)), part));
  return out;
}

QSymF h_to_f(const SymH& h) {
  QSymF out(h.n());
  for (auto& [p, c] : h.terms()) {
    QSymF expanded = h_to_f(p);
    expanded.scale(c);
    out += expanded;
  }
  return out;
}

namespace {

// p-expansion of h_k: sum over partitions nu of k of p_nu / z_nu.
SymP h_to_p_single(int k) {
  SymP out(k);
  for (auto& nu : partitions_of(k))
    out.add(nu, RatUniPoly::constant(Rat(1) / Rat(nu.z()), 't'));
  return out;
}

SymP p_multiply(const SymP& a, const SymP& b) {
  SymP out(a.n() + b.n());
  for (auto& [pa, ca] : a.terms())
    for (auto& [pb, cb] : b.terms()) {
      std::vector<int> parts = pa.parts();
      parts.insert(parts.end(), pb.parts().begin(), pb.parts().end());
      out.add(Partition(parts), ca * cb);
    }
  return out;
}

RatUniPoly to_rat(const UniPoly& p) {
  RatUniPoly out(p.var());
  for (auto& [e, c] : p.terms()) out.add_term(e, Rat(c));
  return out;
}

}  // namespace

SymP h_to_p(const SymH& h) {
  SymP out(h.n());
  for (auto& [lambda, c] : h.terms()) {
    SymP prod(0);
    prod.add(Partition(std::vector<int>{}), RatUniPoly::one('t'));
    for (int part : lambda.parts()) prod = p_multiply(prod, h_to_p_single(part));
    RatUniPoly rc = to_rat(c);
    for (auto& [nu, pc] : prod.terms()) out.add(nu, pc * rc);
  }
  return out;
}

SymH frobenius_codes(int n, bool extended) {
  require_exhaustive_ok(n, "frobenius_codes");
  SymH out(n);
  // one orbit per (occupancy of infinity/0, value multiplicities >= 2, marks)
  std::vector<int> mults;  // multiplicities of the values 1..m
  std::function<void(int)> rec = [&](int used) {
    int rest = n - used;
    // close the value list: distribute rest over 0 (and infinity)
    long inf_options = extended ? rest + 1 : 1;
    for (long io = 0; io < inf_options; ++io) {
      int mu_inf = extended ? static_cast<int>(io) : 0;
      int mu_zero = rest - mu_inf;
      std::vector<int> weak = mults;
      weak.push_back(mu_zero);
      weak.push_back(mu_inf);
      Partition content = Partition::from_weak(weak);
      // all mark vectors; index = sum of marks (all-infinity code: -1)
      std::vector<int> marks(mults.size(), 1);
      for (;;) {
        int index = 0;
        for (int f : marks) index += f;
        // the all-infinity code (including the empty one) has index -1
        if (extended && mults.empty() && mu_zero == 0) index = -1;
        int texp = index + (extended ? 1 : 0);
        out.add(content, UniPoly::monomial(texp, 1, 't'));
        size_t carry = 0;
        while (carry < marks.size()) {
          if (++marks[carry] <= mults[carry] - 1) break;
          marks[carry++] = 1;
        }
        if (carry == marks.size()) break;
      }
    }
    // or open a new value with multiplicity >= 2
    for (int mu = 2; mu <= rest; ++mu) {
      mults.push_back(mu);
      rec(used + mu);
      mults.pop_back();
    }
  };
  rec(0);
  return out;
}

QSymF q_nj_from_perms(int n) {
  QSymF out(n);
  if (n == 0) {
    out.add(0, UniPoly::one('t'));
    return out;
  }
  for_each_permutation(n, [&](const Permutation& p) {
    out.add(dex(p).mask(), UniPoly::monomial(exc(p), 1, 't'));
  });
  return out;
}

QSymF q_tilde_from_dperms(int n) {
  QSymF out(n);
  for_each_decorated(n, [&](const DecoratedPermutation& p) {
    out.add(dex(p).mask(), UniPoly::monomial(exc(p) + 1, 1, 't'));
  });
  return out;
}

SymH q_tilde_from_def(int n) {
  SymH out = n > 0 ? SymH::h(Partition({n})) : SymH::h(Partition(std::vector<int>{}));
  UniPoly t = UniPoly::variable('t');
  for (int k = 1; k <= n; ++k) {
    SymH term = frobenius_codes(k, false).times_h(n - k);
    term.scale(t);
    out += term;
  }
  return out;
}

RecurrenceReport gf_recurrence_check(int N) {
  RecurrenceReport rep;
  std::vector<SymH> Q;
  Q.push_back(SymH::h(Partition(std::vector<int>{})));  // Q_0 = 1
  for (int k = 1; k <= N; ++k) Q.push_back(frobenius_codes(k, false));
  for (int n = 1; n <= N; ++n) {
    SymH rhs = SymH::h(Partition({n}));
    for (int k = 2; k <= n; ++k) {
      // t [k-1]_t h_k Q_{n-k}
      UniPoly factor('t');
      for (int e = 1; e <= k - 1; ++e) factor.add_term(e, 1);
      SymH term = Q[n - k].times_h(k);
      term.scale(factor);
      rhs += term;
    }
    if (!(rhs == Q[n])) {
      rep.pass = false;
      rep.first_failure = n;
      return rep;
    }
  }
  return rep;
}

BiPoly nps(const QSymF& f) {
  BiPoly out;
  for (auto& [mask, c] : f.terms()) {
    int qexp = 0;
    for (std::uint32_t m = mask; m; m &= m - 1) qexp += std::countr_zero(m) + 1;
    for (auto& [te, v] : c.terms()) out.add_term(qexp, te, v);
  }
  return out;
}

BiPoly nps(const SymH& h) {
  BiPoly out;
  for (auto& [lambda, c] : h.terms()) {
    UniPoly qm = lambda.parts().empty() ? UniPoly::one('q') : q_multinomial(lambda.parts());
    for (auto& [te, v] : c.terms()) {
      UniPoly scaled = qm;
      scaled *= v;
      out += BiPoly::from_q(scaled, te);
    }
  }
  return out;
}

QSymF codes_des_expansion(int n) {
  QSymF out(n);
  for_each_code(n, /*extended=*/false, [&](const Code& c) {
    out.add(descent_set(c.word()).mask(), UniPoly::monomial(c.index(), 1, 't'));
  });
  return out;
}

std::optional<SymH> qsym_to_h(const QSymF& f) {
  int n = f.n();
  std::vector<Partition> lambdas = partitions_of(n);
  std::vector<QSymF> h_expansions;
  for (auto& l : lambdas) h_expansions.push_back(h_to_f(l));

  // collect the participating t-exponents and masks
  std::vector<int> texps;
  for (auto& [m, c] : f.terms())
    for (auto& [e, v] : c.terms())
      if (std::find(texps.begin(), texps.end(), e) == texps.end()) texps.push_back(e);
  std::sort(texps.begin(), texps.end());

  std::uint32_t top = n >= 1 ? (1u << (n - 1)) : 1u;
  SymH out(n);
  for (int te : texps) {
    // dense solve: unknowns = partitions, equations = masks
    size_t cols = lambdas.size();
    std::vector<std::vector<Rat>> M;
    for (std::uint32_t mask = 0; mask < top; ++mask) {
      std::vector<Rat> row(cols + 1, Rat(0));
      for (size_t j = 0; j < cols; ++j) row[j] = Rat(h_expansions[j].coeff(mask).coeff(0));
      row[cols] = Rat(f.coeff(mask).coeff(te));
      M.push_back(std::move(row));
    }
    // Gaussian elimination
    size_t r = 0;
    std::vector<int> pivot_col;
    for (size_t c = 0; c < cols && r < M.size(); ++c) {
      size_t sel = r;
      while (sel < M.size() && M[sel][c] == 0) ++sel;
      if (sel == M.size()) continue;
      std::swap(M[r], M[sel]);
      for (size_t i = 0; i < M.size(); ++i) {
        if (i == r || M[i][c] == 0) continue;
        Rat factor = M[i][c] / M[r][c];
        for (size_t j = c; j <= cols; ++j) M[i][j] -= factor * M[r][j];
      }
      pivot_col.push_back(static_cast<int>(c));
      ++r;
    }
    // consistency: no row (0...0 | nonzero)
    for (size_t i = r; i < M.size(); ++i)
      if (M[i][cols] != 0) return std::nullopt;
    std::vector<Rat> x(cols, Rat(0));
    for (size_t i = 0; i < r; ++i) x[pivot_col[i]] = M[i][cols] / M[i][pivot_col[i]];
    for (size_t j = 0; j < cols; ++j) {
      if (x[j] == 0) continue;
      x[j].canonicalize();
      if (x[j].get_den() != 1) return std::nullopt;
      out.add(lambdas[j], UniPoly::monomial(te, x[j].get_num(), 't'));
    }
  }
  // verify exactly (guards the underdetermined corner)
  if (!(h_to_f(out) == f)) return std::nullopt;
  return out;
}

}  // namespace chowlab
