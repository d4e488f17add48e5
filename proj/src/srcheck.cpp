// Degree-by-degree linear-algebra verification of the FY bases against the
// presented quotient rings. The monomial relations cut the ambient monomials
// down to "face" monomials (supports avoiding the quadratic generators); the
// linear forms then act by multiplication, and exact integer elimination
// gives the graded dimension.

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

#include "chowlab/chow.hpp"

namespace chowlab {

namespace {

// A sparse integer row: sorted (column, coefficient) pairs.
using Row = std::vector<std::pair<int, Int>>;

void normalize(Row& r) {
  std::sort(r.begin(), r.end());
  Row out;
  for (auto& [c, v] : r) {
    if (!out.empty() && out.back().first == c)
      out.back().second += v;
    else
      out.push_back({c, v});
  }
  out.erase(std::remove_if(out.begin(), out.end(), [](auto& p) { return p.second == 0; }),
            out.end());
  Int g = 0;
  for (auto& [c, v] : out) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  if (g > 1)
    for (auto& [c, v] : out) v /= g;
  if (!out.empty() && out.front().second < 0)
    for (auto& [c, v] : out) v = -v;
  r = std::move(out);
}

// Incremental row-echelon structure over the integers. Rows are combined
// fraction-free (p*r - v*pivot, content divided out), so no rationals occur.
class Eliminator {
 public:
  // Reduces the row against the pivots; returns true (and stores it) if a
  // new pivot emerges, false if the row lies in the current span.
  bool add_row(Row r) {
    normalize(r);
    while (!r.empty()) {
      int col = r.front().first;
      auto it = pivots_.find(col);
      if (it == pivots_.end()) {
        pivots_.emplace(col, std::move(r));
        return true;
      }
      const Row& p = it->second;
      // r <- p_lead * r - r_lead * p
      Int rl = r.front().second, pl = p.front().second;
      Row next;
      next.reserve(r.size() + p.size());
      for (auto& [c, v] : r) next.push_back({c, v * pl});
      for (auto& [c, v] : p) next.push_back({c, -v * rl});
      normalize(next);
      r = std::move(next);
    }
    return false;
  }

  long rank() const { return static_cast<long>(pivots_.size()); }

 private:
  std::map<int, Row> pivots_;
};

// Presentation data for one matroid/mode: the variables, the pairwise
// compatibility relation (complement of the quadratic generators), and the
// linear forms.
struct Presentation {
  int nvars = 0;
  std::vector<std::vector<char>> compat;     // symmetric, diagonal true
  std::vector<Row> linear_forms;             // coefficients per variable id
  std::map<std::uint32_t, int> flat_var;     // flat mask -> variable id
  int y_base = -1;                           // first y variable id, augmented only
  int top_flat_var = -1;                     // Chow mode: variable of the top flat
};

Presentation build_presentation(const Matroid& m, ChowMode mode) {
  Presentation P;
  std::vector<Subset> flats = m.flats();
  if (mode == ChowMode::Chow) {
    // variables x_F for nonempty flats, including the top
    std::vector<Subset> vars;
    for (auto& f : flats)
      if (!f.is_empty()) vars.push_back(f);
    P.nvars = static_cast<int>(vars.size());
    for (int i = 0; i < P.nvars; ++i) P.flat_var[vars[i].mask()] = i;
    P.top_flat_var = P.flat_var.at(Subset::full(m.n()).mask());
    P.compat.assign(P.nvars, std::vector<char>(P.nvars, 0));
    for (int i = 0; i < P.nvars; ++i)
      for (int j = 0; j < P.nvars; ++j)
        P.compat[i][j] = vars[i].subset_of(vars[j]) || vars[j].subset_of(vars[i]);
    // linear forms: sum over flats containing i
    for (int e = 1; e <= m.n(); ++e) {
      Row L;
      for (int i = 0; i < P.nvars; ++i)
        if (vars[i].contains(e)) L.push_back({i, 1});
      P.linear_forms.push_back(std::move(L));
    }
  } else {
    // variables x_F for proper flats (including the empty flat) and y_i
    std::vector<Subset> vars;
    for (auto& f : flats)
      if (!(f == Subset::full(m.n()))) vars.push_back(f);
    int nx = static_cast<int>(vars.size());
    P.y_base = nx;
    P.nvars = nx + m.n();
    for (int i = 0; i < nx; ++i) P.flat_var[vars[i].mask()] = i;
    P.compat.assign(P.nvars, std::vector<char>(P.nvars, 0));
    for (int i = 0; i < P.nvars; ++i)
      for (int j = 0; j < P.nvars; ++j) {
        bool ix = i < nx, jx = j < nx;
        if (ix && jx)
          P.compat[i][j] = vars[i].subset_of(vars[j]) || vars[j].subset_of(vars[i]);
        else if (!ix && !jx)
          P.compat[i][j] = 1;  // y_i y_j unconstrained by the generators
        else {
          int e = (ix ? j : i) - nx + 1;
          const Subset& f = ix ? vars[i] : vars[j];
          P.compat[i][j] = f.contains(e);  // y_e x_F dies unless e in F
        }
      }
    // linear forms y_i - sum over proper flats avoiding i
    for (int e = 1; e <= m.n(); ++e) {
      Row L;
      for (int i = 0; i < nx; ++i)
        if (!vars[i].contains(e)) L.push_back({i, -1});
      L.push_back({nx + e - 1, 1});
      P.linear_forms.push_back(std::move(L));
    }
  }
  if (P.nvars > 64)
    throw resource_limit_error("sr_quotient_dim: variable count exceeds the cap");
  return P;
}

// A monomial = sorted (variable, exponent) list with pairwise-compatible
// support ("face" monomial, i.e. nonzero in the Stanley-Reisner quotient).
using Monomial = std::vector<std::pair<int, int>>;

std::vector<Monomial> face_monomials(const Presentation& P, int degree) {
  std::vector<Monomial> out;
  Monomial cur;
  std::function<void(int, int)> rec = [&](int var, int rem) {
    if (rem == 0) {
      out.push_back(cur);
      return;
    }
    if (var >= P.nvars) return;
    rec(var + 1, rem);
    for (auto& [v, e] : cur)
      if (!P.compat[v][var]) return;
    for (int e = 1; e <= rem; ++e) {
      cur.push_back({var, e});
      rec(var + 1, rem - e);
      cur.pop_back();
    }
  };
  rec(0, degree);
  std::sort(out.begin(), out.end());
  return out;
}

// m * x_v, or nullopt when the product is killed by the quadratic relations.
std::optional<Monomial> multiply(const Presentation& P, const Monomial& m, int v) {
  Monomial out;
  bool placed = false;
  for (auto& [w, e] : m) {
    if (!P.compat[w][v] && w != v) return std::nullopt;
    if (w == v) {
      out.push_back({w, e + 1});
      placed = true;
    } else
      out.push_back({w, e});
  }
  if (!placed) {
    out.push_back({v, 1});
    std::sort(out.begin(), out.end());
  }
  return out;
}

struct DegreeData {
  std::vector<Monomial> cols;
  std::map<Monomial, int> index;
};

DegreeData degree_data(const Presentation& P, int k) {
  DegreeData d;
  d.cols = face_monomials(P, k);
  for (int i = 0; i < static_cast<int>(d.cols.size()); ++i) d.index[d.cols[i]] = i;
  return d;
}

// Rows spanning the degree-k piece of the ideal inside the face monomials.
void ideal_rows(const Presentation& P, int k, const DegreeData& deg, Eliminator& elim) {
  if (k < 1) return;
  auto lower = face_monomials(P, k - 1);
  for (auto& m : lower)
    for (auto& L : P.linear_forms) {
      Row row;
      for (auto& [v, c] : L)
        if (auto prod = multiply(P, m, v)) row.push_back({deg.index.at(*prod), c});
      elim.add_row(std::move(row));
    }
}

// Expands an FY monomial into presentation coordinates. In augmented mode
// the top flat is not a variable; substitute x_top = -sum of proper x_F.
Row fy_monomial_row(const Presentation& P, const Matroid& mat, ChowMode mode,
                    const FYMonomial& mono, const DegreeData& deg) {
  Monomial base;
  int top_exp = 0;
  Subset top = Subset::full(mat.n());
  for (size_t i = 0; i < mono.flag.size(); ++i) {
    if (mode == ChowMode::Augmented && mono.flag[i] == top) {
      top_exp = mono.exponents[i];
      continue;
    }
    base.push_back({P.flat_var.at(mono.flag[i].mask()), mono.exponents[i]});
  }
  std::sort(base.begin(), base.end());
  Row row;
  if (top_exp == 0) {
    row.push_back({deg.index.at(base), 1});
    return row;
  }
  // multiply base by (-sum x_F)^top_exp, keeping surviving face monomials
  std::map<Monomial, Int> expansion{{base, (top_exp % 2 == 0) ? Int(1) : Int(-1)}};
  int nx = P.y_base < 0 ? P.nvars : P.y_base;
  for (int step = 0; step < top_exp; ++step) {
    std::map<Monomial, Int> next;
    for (auto& [m, c] : expansion)
      for (int v = 0; v < nx; ++v)
        if (auto prod = multiply(P, m, v)) next[*prod] += c;
    expansion = std::move(next);
  }
  for (auto& [m, c] : expansion)
    if (c != 0) row.push_back({deg.index.at(m), c});
  return row;
}

}  // namespace

long sr_quotient_dim(const Matroid& m, ChowMode mode, int k) {
  if (k < 0) throw std::invalid_argument("sr_quotient_dim: negative degree");
  Presentation P = build_presentation(m, mode);
  DegreeData deg = degree_data(P, k);
  Eliminator elim;
  ideal_rows(P, k, deg, elim);
  return static_cast<long>(deg.cols.size()) - elim.rank();
}

GradedDimReport fy_independence_report(const Matroid& m, ChowMode mode, int k) {
  GradedDimReport rep;
  rep.mode = mode;
  rep.degree = k;
  Presentation P = build_presentation(m, mode);
  DegreeData deg = degree_data(P, k);
  Eliminator elim;
  ideal_rows(P, k, deg, elim);
  rep.quotient_dim = static_cast<long>(deg.cols.size()) - elim.rank();

  GradedBasis basis = mode == ChowMode::Chow ? fy_basis_matroid(m) : fy_basis_augmented(m);
  const std::vector<FYMonomial> empty;
  const std::vector<FYMonomial>& monos =
      k < static_cast<int>(basis.by_degree.size()) ? basis.by_degree[k] : empty;
  rep.fy_count = static_cast<long>(monos.size());

  rep.independent = true;
  for (auto& mono : monos) {
    Row row = fy_monomial_row(P, m, mode, mono, deg);
    if (!elim.add_row(std::move(row))) {
      rep.independent = false;  // image lies in the span: dependent mod the ideal
      break;
    }
  }
  return rep;
}

bool fy_independence_check(const Matroid& m, ChowMode mode, int k) {
  return fy_independence_report(m, mode, k).ok();
}

}  // namespace chowlab
