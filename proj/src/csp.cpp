#include "chowlab/csp.hpp"

#include <numeric>
#include <stdexcept>

#include "chowlab/codes.hpp"
#include "chowlab/eulerian.hpp"

namespace chowlab {

std::string to_string(CspFamily f) {
  switch (f) {
    case CspFamily::Codes: return "codes";
    case CspFamily::ExtCodes: return "extcodes";
    case CspFamily::PermsExc: return "perms-exc";
    case CspFamily::PermsCycleType: return "perms-cycletype";
    case CspFamily::DPermsConjecture: return "dperms";
  }
  return "?";
}

namespace {

bool rotation_fixed(const std::vector<int>& alpha, int r) {
  int n = static_cast<int>(alpha.size());
  for (int i = 0; i < n; ++i)
    if (alpha[i] != alpha[(i + r) % n]) return false;
  return true;
}

}  // namespace

long cyclic_fixed_codes(int n, int j, int r, bool extended) {
  long count = 0;
  for_each_code(n, extended, [&](const Code& c) {
    if (c.index() == j && rotation_fixed(c.alpha, r)) ++count;
  });
  return count;
}

DecoratedPermutation relabel_action(const Permutation& c, const DecoratedPermutation& s) {
  std::vector<int> img(s.n(), 0);
  for (int i = 1; i <= s.n(); ++i) {
    int v = s(i);
    img[c(i) - 1] = v == 0 ? 0 : c(v);
  }
  return DecoratedPermutation(std::move(img));
}

CyclicActionReport csp_verify(CspFamily family, int n, int j, const Partition* lambda,
                              const DPermAction& action) {
  CyclicActionReport rep;
  rep.family = family;
  rep.n = n;
  rep.j = j;
  rep.experimental = family == CspFamily::DPermsConjecture;
  if (lambda) rep.lambda = *lambda;

  // sieving polynomial
  switch (family) {
    case CspFamily::Codes:
    case CspFamily::PermsExc:
      rep.sieve_poly = q_eulerian(n).coeff_of_t(j);
      break;
    case CspFamily::ExtCodes:
    case CspFamily::DPermsConjecture:
      rep.sieve_poly = q_binomial_eulerian(n).coeff_of_t(j);
      break;
    case CspFamily::PermsCycleType: {
      if (!lambda) throw std::invalid_argument("csp_verify: cycle type required");
      UniPoly p('q');
      for_each_permutation(n, [&](const Permutation& s) {
        if (exc(s) == j && s.cycle_type() == *lambda)
          p.add_term(static_cast<int>(maj(s) - exc(s)), 1);
      });
      rep.sieve_poly = p;
      break;
    }
  }

  // fixed-point counts per power of the long cycle
  auto fixed_count = [&](int r) -> long {
    Permutation c = Permutation::long_cycle(n).power(r);
    long count = 0;
    switch (family) {
      case CspFamily::Codes:
        return cyclic_fixed_codes(n, j, r, false);
      case CspFamily::ExtCodes:
        return cyclic_fixed_codes(n, j - 1, r, true);
      case CspFamily::PermsExc:
        for_each_permutation(n, [&](const Permutation& s) {
          if (exc(s) == j && c.compose(s) == s.compose(c)) ++count;
        });
        return count;
      case CspFamily::PermsCycleType:
        for_each_permutation(n, [&](const Permutation& s) {
          if (exc(s) == j && s.cycle_type() == *lambda && c.compose(s) == s.compose(c))
            ++count;
        });
        return count;
      case CspFamily::DPermsConjecture:
        for_each_decorated(n, [&](const DecoratedPermutation& s) {
          if (exc(s) == j - 1 && action(c, s) == s) ++count;
        });
        return count;
    }
    return count;
  };

  rep.pass = true;
  for (int r = 0; r < std::max(1, n); ++r) {
    CyclicActionReport::Row row;
    row.r = r;
    row.fixed = fixed_count(r);
    int d = n == 0 ? 1 : n / std::gcd(n, r);
    CyclotomicResidue res = eval_at_root_of_unity(rep.sieve_poly, d);
    row.residue_constant = res.is_integer_constant();
    row.residue = res.to_string();
    if (row.residue_constant) {
      row.value = res.constant_value();
      row.match = row.value == row.fixed;
    }
    if (!row.match) rep.pass = false;
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

Int character_via_p(const SymH& F, int d) {
  int n = F.n();
  if (n <= 0 || d < 1 || n % d != 0)
    throw std::invalid_argument("character_via_p: d must divide the degree");
  for (auto& [lam, c] : F.terms())
    if (c.degree() > 0)
      throw std::invalid_argument("character_via_p: expected t-free coefficients");

  // route 1: z-normalized power-sum coefficient at cycle type (d^{n/d})
  SymP p = h_to_p(F);
  Partition dk(std::vector<int>(n / d, d));
  Rat chi = p.coeff(dk).coeff(0) * Rat(dk.z());
  chi.canonicalize();
  if (chi.get_den() != 1)
    throw std::logic_error("character_via_p: non-integer character value");

  // route 2: cyclotomic residue of the normalized principal specialization
  UniPoly spec = nps(F).coeff_of_t(0);
  CyclotomicResidue res = eval_at_root_of_unity(spec, d);
  if (!res.is_integer_constant() || !(res.constant_value() == chi.get_num()))
    throw std::logic_error("character_via_p: power-sum and residue routes disagree");
  return chi.get_num();
}

CnCompareReport cn_character_compare(int n, int j) {
  CnCompareReport rep;
  rep.n = n;
  rep.j = j;
  rep.pass = true;
  for (int r = 0; r < n; ++r) {
    long codes_fixed = cyclic_fixed_codes(n, j, r, false);
    Permutation c = Permutation::long_cycle(n).power(r);
    long perms_fixed = 0;
    for_each_permutation(n, [&](const Permutation& s) {
      if (exc(s) == j && c.compose(s) == s.compose(c)) ++perms_fixed;
    });
    if (codes_fixed != perms_fixed) rep.pass = false;
    rep.per_r.push_back({codes_fixed, perms_fixed});
  }
  return rep;
}

}  // namespace chowlab
