#include "chowlab/json_io.hpp"

namespace chowlab {

using nlohmann::json;

json to_json(const UniPoly& p) {
  json terms = json::array();
  for (auto& [e, c] : p.terms())
    terms.push_back({{std::string(1, p.var()), e}, {"c", to_string(c)}});
  return {{"var", std::string(1, p.var())}, {"terms", terms}};
}

json to_json(const BiPoly& p) {
  json terms = json::array();
  for (auto& [k, c] : p.terms())
    terms.push_back({{"q", k.first}, {"t", k.second}, {"c", to_string(c)}});
  return {{"terms", terms}};
}

json to_json(const Code& c) {
  json alpha = json::array();
  for (int a : c.alpha) {
    if (is_inf(a))
      alpha.push_back("inf");
    else
      alpha.push_back(a);
  }
  json marks = json::object();
  for (int k = 1; k <= c.m(); ++k) marks[std::to_string(k)] = c.marks[k - 1];
  return {{"alpha", alpha}, {"marks", marks}};
}

json to_json(const FYMonomial& m) {
  json flag = json::array();
  for (auto& f : m.flag) flag.push_back(f.elements());
  return {{"flag", flag}, {"exp", m.exponents}};
}

json to_json(const GradedBasis& b) {
  json degrees = json::array();
  for (size_t k = 0; k < b.by_degree.size(); ++k) {
    json monos = json::array();
    for (auto& m : b.by_degree[k]) monos.push_back(to_json(m));
    degrees.push_back({{"degree", k}, {"count", b.by_degree[k].size()}, {"monomials", monos}});
  }
  return {{"schema_version", kSchemaVersion},
          {"mode", b.mode == ChowMode::Chow ? "chow" : "augmented"},
          {"n", b.n},
          {"degrees", degrees}};
}

json to_json(const QSymF& f) {
  json terms = json::array();
  for (auto& [mask, c] : f.terms())
    for (auto& [te, v] : c.terms())
      terms.push_back({{"S", Subset(mask, std::max(0, f.n() - 1)).elements()},
                       {"t", te},
                       {"c", to_string(v)}});
  return {{"schema_version", kSchemaVersion}, {"basis", "F"}, {"n", f.n()}, {"terms", terms}};
}

json to_json(const SymH& h) {
  json terms = json::object();
  for (auto& [p, c] : h.terms()) terms[p.to_string()] = to_json(c);
  return {{"schema_version", kSchemaVersion}, {"basis", "h"}, {"n", h.n()}, {"terms", terms}};
}

json to_json(const CyclicActionReport& r) {
  json rows = json::array();
  for (auto& row : r.rows)
    rows.push_back({{"r", row.r},
                    {"fixed", row.fixed},
                    {"residue_constant", row.residue_constant},
                    {"value", row.residue_constant ? to_string(row.value) : ""},
                    {"residue", row.residue},
                    {"match", row.match}});
  json out{{"schema_version", kSchemaVersion},
           {"family", to_string(r.family)},
           {"n", r.n},
           {"j", r.j},
           {"sieve_poly", r.sieve_poly.to_string()},
           {"rows", rows},
           {"pass", r.pass}};
  if (r.lambda) out["lambda"] = r.lambda->to_string();
  if (r.experimental) out["experimental"] = true;
  return out;
}

json to_json(const CnCompareReport& r) {
  json rows = json::array();
  for (size_t i = 0; i < r.per_r.size(); ++i)
    rows.push_back(
        {{"r", i}, {"fixed_codes", r.per_r[i].first}, {"fixed_perms", r.per_r[i].second}});
  return {{"schema_version", kSchemaVersion}, {"n", r.n}, {"j", r.j}, {"rows", rows},
          {"pass", r.pass}};
}

json lattice_to_json(const AtomicLattice& L) {
  json elements = json::array();
  for (int i = 0; i < L.size(); ++i) elements.push_back(L.label(i));
  json covers = json::array();
  for (auto& [a, b] : L.cover_pairs()) covers.push_back({a, b});
  return {{"schema_version", kSchemaVersion},
          {"elements", elements},
          {"covers", covers},
          {"bottom", L.bottom()},
          {"top", L.top()}};
}

std::string to_tsv(const BiPoly& p) {
  int dq = std::max(0, p.degree_q()), dt = std::max(0, p.degree_t());
  std::string out = "q\\t";
  for (int t = 0; t <= dt; ++t) out += "\t" + std::to_string(t);
  out += "\n";
  for (int q = 0; q <= dq; ++q) {
    out += std::to_string(q);
    for (int t = 0; t <= dt; ++t) out += "\t" + to_string(p.coeff(q, t));
    out += "\n";
  }
  return out;
}

std::string to_tsv(const UniPoly& p) {
  std::string out = std::string(1, p.var()) + "\tc\n";
  for (int e = 0; e <= std::max(0, p.degree()); ++e)
    out += std::to_string(e) + "\t" + to_string(p.coeff(e)) + "\n";
  return out;
}

}  // namespace chowlab
