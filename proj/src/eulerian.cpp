#include "chowlab/eulerian.hpp"

#include <stdexcept>

#include "chowlab/codes.hpp"
#include "chowlab/perm.hpp"

namespace chowlab {

UniPoly eulerian(int n) {
  if (n < 1) throw std::invalid_argument("eulerian: n must be >= 1");
  UniPoly by_exc('t'), by_des('t');
  for_each_permutation(n, [&](const Permutation& p) {
    by_exc.add_term(exc(p), 1);
    by_des.add_term(des(p), 1);
  });
  if (!(by_exc == by_des)) throw std::logic_error("eulerian: exc and des distributions differ");
  return by_exc;
}

UniPoly binomial_eulerian(int n) {
  if (n < 0) throw std::invalid_argument("binomial_eulerian: n must be >= 0");
  UniPoly out = UniPoly::one('t');
  UniPoly t = UniPoly::variable('t');
  for (int k = 1; k <= n; ++k) {
    UniPoly term = eulerian(k);
    term *= Int(binomial(n, k));
    out += t * term;
  }
  return out;
}

BiPoly q_eulerian(int n) {
  if (n < 1) throw std::invalid_argument("q_eulerian: n must be >= 1");
  BiPoly out;
  for_each_permutation(n, [&](const Permutation& p) {
    long m = maj(p);
    int e = exc(p);
    if (m < e) throw std::logic_error("q_eulerian: maj < exc should be impossible");
    out.add_term(static_cast<int>(m - e), e, 1);
  });
  return out;
}

BiPoly q_binomial_eulerian(int n) {
  if (n < 0) throw std::invalid_argument("q_binomial_eulerian: n must be >= 0");
  BiPoly out = BiPoly::one();
  for (int k = 1; k <= n; ++k) {
    BiPoly term = BiPoly::from_q(q_binomial(n, k)) * q_eulerian(k);
    // multiply by t
    BiPoly shifted;
    for (auto& [key, c] : term.terms()) shifted.add_term(key.first, key.second + 1, c);
    out += shifted;
  }
  return out;
}

BiPoly q_eulerian_from_codes(int n, WordStat stat) {
  BiPoly out;
  for_each_code(n, /*extended=*/false, [&](const Code& c) {
    long s = stat == WordStat::Inv ? inv(c.word()) : maj(c.word());
    out.add_term(static_cast<int>(s), c.index(), 1);
  });
  return out;
}

BiPoly q_binom_from_extcodes(int n, WordStat stat) {
  BiPoly out;
  for_each_code(n, /*extended=*/true, [&](const Code& c) {
    long s = stat == WordStat::Inv ? inv(c.word()) : maj(c.word());
    out.add_term(static_cast<int>(s), c.index() + 1, 1);
  });
  return out;
}

BiPoly q_binom_from_dperms(int n) {
  BiPoly out;
  for_each_decorated(n, [&](const DecoratedPermutation& p) {
    long m = maj(p);
    int e = exc(p);
    if (m - e < 0) throw std::logic_error("q_binom_from_dperms: maj < exc");
    out.add_term(static_cast<int>(m - e), e + 1, 1);
  });
  return out;
}

const UniPoly& PolyFamilyCache::eulerian(int n) {
  auto it = a_.find(n);
  if (it == a_.end()) it = a_.emplace(n, chowlab::eulerian(n)).first;
  return it->second;
}

const UniPoly& PolyFamilyCache::binomial_eulerian(int n) {
  auto it = at_.find(n);
  if (it == at_.end()) it = at_.emplace(n, chowlab::binomial_eulerian(n)).first;
  return it->second;
}

const BiPoly& PolyFamilyCache::q_eulerian(int n) {
  auto it = qa_.find(n);
  if (it == qa_.end()) it = qa_.emplace(n, chowlab::q_eulerian(n)).first;
  return it->second;
}

const BiPoly& PolyFamilyCache::q_binomial_eulerian(int n) {
  auto it = qat_.find(n);
  if (it == qat_.end()) it = qat_.emplace(n, chowlab::q_binomial_eulerian(n)).first;
  return it->second;
}

}  // namespace chowlab
