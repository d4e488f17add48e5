#include "chowlab/poly.hpp"

#include <functional>
#include <mutex>

namespace chowlab {

BiPoly BiPoly::from_q(const UniPoly& p, int te) {
  if (p.var() != 'q') throw std::invalid_argument("BiPoly::from_q: expected a q-polynomial");
  BiPoly r;
  for (auto& [e, c] : p.terms()) r.add_term(e, te, c);
  return r;
}

Int BiPoly::coeff(int qe, int te) const {
  auto it = c_.find({qe, te});
  return it == c_.end() ? Int(0) : it->second;
}

int BiPoly::degree_t() const {
  int d = -1;
  for (auto& [k, c] : c_) d = std::max(d, k.second);
  return d;
}

int BiPoly::degree_q() const {
  int d = -1;
  for (auto& [k, c] : c_) d = std::max(d, k.first);
  return d;
}

void BiPoly::add_term(int qe, int te, const Int& c) {
  if (c == 0) return;
  if (qe < 0 || te < 0) throw std::invalid_argument("BiPoly: negative exponent");
  auto [it, inserted] = c_.emplace(std::make_pair(qe, te), c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) c_.erase(it);
  }
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  for (auto& [k, c] : o.c_) add_term(k.first, k.second, c);
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
  for (auto& [k, c] : o.c_) add_term(k.first, k.second, -c);
  return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  BiPoly r;
  for (auto& [ka, ca] : a.c_)
    for (auto& [kb, cb] : b.c_) r.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
  return r;
}

UniPoly BiPoly::coeff_of_t(int te) const {
  UniPoly p('q');
  for (auto& [k, c] : c_)
    if (k.second == te) p.add_term(k.first, c);
  return p;
}

UniPoly BiPoly::eval_q_one() const {
  UniPoly p('t');
  for (auto& [k, c] : c_) p.add_term(k.second, c);
  return p;
}

UniPoly BiPoly::eval_t_one() const {
  UniPoly p('q');
  for (auto& [k, c] : c_) p.add_term(k.first, c);
  return p;
}

std::string BiPoly::to_string() const {
  if (c_.empty()) return "0";
  std::string s;
  for (int te = 0; te <= degree_t(); ++te) {
    UniPoly qc = coeff_of_t(te);
    if (qc.is_zero()) continue;
    if (!s.empty()) s += " + ";
    bool single = qc.terms().size() == 1;
    std::string qs = qc.to_string();
    if (te == 0) {
      s += qs;
    } else {
      if (qs == "1")
        ;  // bare t power
      else if (single && qs[0] != '-')
        s += qs + " ";
      else
        s += "(" + qs + ")";
      s += "t";
      if (te > 1) s += "^" + std::to_string(te);
    }
  }
  return s;
}

UniPoly q_int(int n) {
  UniPoly p('q');
  for (int i = 0; i < n; ++i) p.add_term(i, 1);
  return p;
}

UniPoly q_factorial(int n) {
  UniPoly p = UniPoly::one('q');
  for (int i = 1; i <= n; ++i) p *= q_int(i);
  return p;
}

UniPoly q_binomial(int n, int k) {
  if (k < 0 || k > n) return UniPoly::zero('q');
  // Pascal recurrence [n,k] = [n-1,k-1] + q^k [n-1,k].
  std::vector<UniPoly> prev{UniPoly::one('q')};
  for (int m = 1; m <= n; ++m) {
    std::vector<UniPoly> cur(m + 1, UniPoly::zero('q'));
    cur[0] = UniPoly::one('q');
    cur[m] = UniPoly::one('q');
    for (int j = 1; j < m; ++j) {
      cur[j] = prev[j - 1];
      for (auto& [e, c] : prev[j].terms()) cur[j].add_term(e + j, c);
    }
    prev = std::move(cur);
  }
  return prev[k];
}

UniPoly q_multinomial(const std::vector<int>& parts) {
  if (parts.empty()) throw std::invalid_argument("q_multinomial: empty parts");
  int n = 0;
  for (int k : parts) {
    if (k < 0) throw std::invalid_argument("q_multinomial: negative part");
    n += k;
  }
  UniPoly num = q_factorial(n);
  for (int k : parts) num = exact_div(num, q_factorial(k));
  return num;
}

UniPoly exact_div(const UniPoly& num, const UniPoly& den) {
  if (den.is_zero()) throw std::logic_error("exact_div: division by zero");
  UniPoly rem = num;
  UniPoly quot(num.var());
  Int lead = den.leading();
  int dd = den.degree();
  while (!rem.is_zero() && rem.degree() >= dd) {
    Int lc = rem.leading();
    if (!mpz_divisible_p(lc.get_mpz_t(), lead.get_mpz_t()))
      throw std::logic_error("exact_div: leading coefficient not divisible");
    Int f = lc / lead;
    int e = rem.degree() - dd;
    quot.add_term(e, f);
    for (auto& [de, dc] : den.terms()) rem.add_term(de + e, -f * dc);
  }
  if (!rem.is_zero()) throw std::logic_error("exact_div: nonzero remainder");
  return quot;
}

UniPoly mod_monic(const UniPoly& p, const UniPoly& divisor) {
  if (divisor.leading() != 1) throw std::invalid_argument("mod_monic: divisor not monic");
  UniPoly rem = p;
  int dd = divisor.degree();
  while (!rem.is_zero() && rem.degree() >= dd) {
    Int f = rem.leading();
    int e = rem.degree() - dd;
    for (auto& [de, dc] : divisor.terms()) rem.add_term(de + e, -f * dc);
  }
  return rem;
}

int euler_phi(int d) {
  int result = d;
  for (int p = 2; p * p <= d; ++p) {
    if (d % p == 0) {
      while (d % p == 0) d /= p;
      result -= result / p;
    }
  }
  if (d > 1) result -= result / d;
  return result;
}

UniPoly cyclotomic(int d) {
  if (d < 1) throw std::invalid_argument("cyclotomic: d must be >= 1");
  static std::map<int, UniPoly> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(d);
  if (it != cache.end()) return it->second;
  std::function<UniPoly(int)> phi = [&](int m) -> UniPoly {
    auto jt = cache.find(m);
    if (jt != cache.end()) return jt->second;
    UniPoly num('q');
    num.add_term(m, 1);
    num.add_term(0, -1);  // q^m - 1
    for (int e = 1; e < m; ++e)
      if (m % e == 0) num = exact_div(num, phi(e));
    cache.emplace(m, num);
    return num;
  };
  return phi(d);
}

std::string CyclotomicResidue::to_string() const {
  UniPoly p('q');
  for (size_t i = 0; i < coeffs.size(); ++i) p.add_term(static_cast<int>(i), coeffs[i]);
  return p.to_string() + " (mod Phi_" + std::to_string(d) + ")";
}

CyclotomicResidue eval_at_root_of_unity(const UniPoly& p, int d) {
  UniPoly rem = mod_monic(p, cyclotomic(d));
  CyclotomicResidue r;
  r.d = d;
  r.coeffs.assign(rem.degree() + 1, Int(0));
  for (auto& [e, c] : rem.terms()) r.coeffs[e] = c;
  while (!r.coeffs.empty() && r.coeffs.back() == 0) r.coeffs.pop_back();
  return r;
}

}  // namespace chowlab
