// chowlab: enumeration, bijections, polynomial families, quasisymmetric
// expansions, and cyclic-sieving reports for matroid Chow rings, with
// machine-readable output.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "chowlab/caps.hpp"
#include "chowlab/eulerian.hpp"
#include "chowlab/json_io.hpp"
#include "chowlab/verify.hpp"

using namespace chowlab;
using nlohmann::json;

namespace {

constexpr int kExitBadInput = 2;
constexpr int kExitCapExceeded = 3;

struct OutputOptions {
  std::string format = "text";
  std::string path;

  void attach(CLI::App* cmd) {
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json", "tsv"}));
    cmd->add_option("--output", path, "write output to a file instead of stdout");
  }

  void emit(const std::string& s) const {
    if (path.empty()) {
      std::cout << s;
      if (!s.empty() && s.back() != '\n') std::cout << "\n";
    } else {
      std::ofstream out(path);
      out << s;
      if (!s.empty() && s.back() != '\n') out << "\n";
    }
  }
  void emit(const json& j) const { emit(j.dump(2)); }
};

Matroid parse_matroid(const std::string& spec) { return Matroid::from_spec(spec); }

int cmd_fy(const std::string& matroid_spec, bool augmented, const OutputOptions& out) {
  Matroid m = parse_matroid(matroid_spec);
  GradedBasis basis = augmented ? fy_basis_augmented(m) : fy_basis_matroid(m);
  UniPoly hilbert = hilbert_series(basis);
  if (out.format == "json") {
    json j = to_json(basis);
    j["matroid"] = m.describe();
    j["hilbert"] = hilbert.to_string();
    out.emit(j);
  } else if (out.format == "tsv") {
    out.emit(to_tsv(hilbert));
  } else {
    std::string s = "matroid: " + m.describe() + "\nmode: " +
                    (augmented ? "augmented" : "chow") + "\nhilbert: " + hilbert.to_string() +
                    "\n";
    for (size_t k = 0; k < basis.by_degree.size(); ++k) {
      s += "degree " + std::to_string(k) + " (" + std::to_string(basis.by_degree[k].size()) +
           "):";
      for (auto& mono : basis.by_degree[k]) s += " " + mono.to_string();
      s += "\n";
    }
    out.emit(s);
  }
  return 0;
}

int cmd_codes(int n, int j, bool extended, const OutputOptions& out) {
  std::vector<Code> all = extended ? extended_codes(n, j) : codes(n, j);
  if (out.format == "json") {
    json arr = json::array();
    for (auto& c : all) {
      json cj = to_json(c);
      cj["index"] = c.index();
      cj["content"] = c.content().to_string();
      arr.push_back(cj);
    }
    out.emit(json{{"schema_version", kSchemaVersion},
                  {"n", n},
                  {"extended", extended},
                  {"count", all.size()},
                  {"codes", arr}});
  } else {
    std::string s;
    for (auto& c : all)
      s += c.render() + "\tindex=" + std::to_string(c.index()) + "\tcontent=" +
           c.content().to_string() + "\n";
    s += "count: " + std::to_string(all.size()) + "\n";
    out.emit(s);
  }
  return 0;
}

int cmd_bijection(int n, int degree, bool augmented, bool run_check,
                  const OutputOptions& out) {
  ChowMode mode = augmented ? ChowMode::Augmented : ChowMode::Chow;
  if (run_check) {
    auto rep = equivariance_check(n, mode);
    if (out.format == "json")
      out.emit(json{{"schema_version", kSchemaVersion},
                    {"n", n},
                    {"mode", augmented ? "augmented" : "chow"},
                    {"checked", rep.monomials_checked},
                    {"pass", rep.pass},
                    {"detail", rep.detail}});
    else
      out.emit(std::string(rep.pass ? "pass" : "FAIL") + " (" +
               std::to_string(rep.monomials_checked) + " monomials): " + rep.detail);
    return rep.pass ? 0 : 1;
  }
  Matroid m = Matroid::boolean(n);
  GradedBasis basis = augmented ? fy_basis_augmented(m) : fy_basis_matroid(m);
  json rows = json::array();
  std::string text;
  for (size_t k = 0; k < basis.by_degree.size(); ++k) {
    if (degree >= 0 && static_cast<int>(k) != degree) continue;
    for (auto& mono : basis.by_degree[k]) {
      Code c = augmented ? phi_tilde(mono, n) : phi(mono, n);
      rows.push_back({{"degree", k}, {"monomial", mono.to_string()}, {"code", c.render()},
                      {"index", c.index()}});
      text += mono.to_string() + "\t<->\t" + c.render() + "\n";
    }
  }
  if (out.format == "json")
    out.emit(json{{"schema_version", kSchemaVersion},
                  {"n", n},
                  {"mode", augmented ? "augmented" : "chow"},
                  {"rows", rows}});
  else
    out.emit(text);
  return 0;
}

int cmd_eulerian(int n, const std::string& variant, const OutputOptions& out) {
  if (variant == "eulerian" || variant == "binomial") {
    UniPoly p = variant == "eulerian" ? eulerian(n) : binomial_eulerian(n);
    if (out.format == "json") {
      json j = to_json(p);
      j["schema_version"] = kSchemaVersion;
      j["n"] = n;
      j["variant"] = variant;
      out.emit(j);
    } else if (out.format == "tsv")
      out.emit(to_tsv(p));
    else
      out.emit(p.to_string());
    return 0;
  }
  BiPoly p = variant == "q" ? q_eulerian(n) : q_binomial_eulerian(n);
  if (out.format == "json") {
    json j = to_json(p);
    j["schema_version"] = kSchemaVersion;
    j["n"] = n;
    j["variant"] = variant;
    out.emit(j);
  } else if (out.format == "tsv")
    out.emit(to_tsv(p));
  else
    out.emit(p.to_string());
  return 0;
}

int cmd_symfun(int n, const std::string& what, const OutputOptions& out) {
  json j;
  std::string text;
  if (what == "qnj") {
    auto f = q_nj_from_perms(n);
    j = to_json(f);
    text = f.to_string();
  } else if (what == "qtilde") {
    auto f = q_tilde_from_dperms(n);
    j = to_json(f);
    text = f.to_string();
  } else if (what == "frobenius") {
    auto h = frobenius_codes(n, false);
    j = to_json(h);
    text = h.to_string();
  } else if (what == "frobenius-ext") {
    auto h = frobenius_codes(n, true);
    j = to_json(h);
    text = h.to_string();
  } else if (what == "codes-des") {
    auto f = codes_des_expansion(n);
    j = to_json(f);
    text = f.to_string();
  } else {
    throw CLI::ValidationError("--what", "unknown expansion '" + what + "'");
  }
  j["n"] = n;
  j["what"] = what;
  if (out.format == "json")
    out.emit(j);
  else
    out.emit(text);
  return 0;
}

int cmd_csp(const std::string& family, int n, int j, const std::string& lambda_str,
            const OutputOptions& out) {
  CspFamily fam;
  if (family == "codes")
    fam = CspFamily::Codes;
  else if (family == "extcodes")
    fam = CspFamily::ExtCodes;
  else if (family == "perms-exc")
    fam = CspFamily::PermsExc;
  else if (family == "perms-cycletype")
    fam = CspFamily::PermsCycleType;
  else if (family == "dperms")
    fam = CspFamily::DPermsConjecture;
  else
    throw CLI::ValidationError("--family", "unknown family '" + family + "'");

  std::optional<Partition> lambda;
  if (!lambda_str.empty()) lambda = Partition::parse(lambda_str);
  if (fam == CspFamily::PermsCycleType && !lambda)
    throw CLI::ValidationError("--lambda", "perms-cycletype requires --lambda");

  auto rep = csp_verify(fam, n, j, lambda ? &*lambda : nullptr);
  if (out.format == "json") {
    out.emit(to_json(rep));
  } else {
    std::string s = "family " + to_string(fam) + " n=" + std::to_string(n) +
                    " j=" + std::to_string(j) + "\nsieve: " + rep.sieve_poly.to_string() + "\n";
    for (auto& row : rep.rows)
      s += "r=" + std::to_string(row.r) + " fixed=" + std::to_string(row.fixed) + " value=" +
           (row.residue_constant ? to_string(row.value) : row.residue) +
           (row.match ? " ok" : " MISMATCH") + "\n";
    s += rep.pass ? "pass\n" : "FAIL\n";
    out.emit(s);
  }
  return rep.pass ? 0 : 1;
}

int cmd_lattice_graph(const std::string& graph_path, const OutputOptions& out) {
  std::ifstream in(graph_path);
  if (!in) throw std::invalid_argument("cannot open graph file '" + graph_path + "'");
  json g;
  in >> g;
  int vertices = g.at("vertices").get<int>();
  std::vector<std::pair<int, int>> edges;
  for (auto& e : g.at("edges")) edges.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
  auto bs = graphical_building_set(vertices, edges);
  json members = json::array();
  for (auto& s : bs.member_sets) members.push_back(s.elements());
  json j = lattice_to_json(bs.lattice);
  j["graph"] = g;
  j["building_set"] = members;
  j["is_building_set"] = is_building_set(bs.lattice, bs.members);
  out.emit(j);
  return 0;
}

int cmd_lattice(const std::string& matroid_spec, bool augmented, const OutputOptions& out) {
  Matroid m = parse_matroid(matroid_spec);
  if (augmented) {
    AugmentedLattice L(m);
    json j = lattice_to_json(L.order());
    j["matroid"] = m.describe();
    j["augmented"] = true;
    j["geometric"] = check_geometric(L.order());
    out.emit(j);
  } else {
    auto F = FlatLattice::of(m);
    json elements = json::array();
    for (auto& f : F.flats()) elements.push_back(f.to_string());
    json covers = json::array();
    for (auto& [a, b] : F.covers()) covers.push_back({a, b});
    out.emit(json{{"schema_version", kSchemaVersion},
                  {"matroid", m.describe()},
                  {"augmented", false},
                  {"elements", elements},
                  {"covers", covers}});
  }
  return 0;
}

int cmd_verify(const std::string& suite, int max_n, const OutputOptions& out) {
  std::vector<CheckResult> results;
  if (suite == "none") {
    // trivially empty report
  } else if (suite == "all") {
    results = run_all_suites(max_n);
  } else {
    results = run_suite(suite, max_n);
  }
  bool all_pass = true;
  json checks = json::object();
  json details = json::array();
  for (auto& r : results) {
    all_pass = all_pass && r.pass;
    checks[r.key] = r.pass ? "pass" : "fail";
    details.push_back({{"key", r.key},
                       {"suite", r.suite},
                       {"pass", r.pass},
                       {"detail", r.detail},
                       {"seconds", r.seconds}});
  }
  if (out.format == "json") {
    out.emit(json{{"schema_version", kSchemaVersion},
                  {"suite", suite},
                  {"max_n", max_n},
                  {"pass", all_pass},
                  {"checks", checks},
                  {"details", details}});
  } else {
    std::string s;
    for (auto& r : results)
      s += std::string(r.pass ? "PASS" : "FAIL") + "  " + r.key + "  (" +
           std::to_string(r.seconds) + "s)" + (r.pass ? "" : "  " + r.detail) + "\n";
    s += all_pass ? "all checks passed\n" : "FAILURES PRESENT\n";
    out.emit(s);
  }
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"matroid Chow ring combinatorics workbench"};
  app.require_subcommand(1);

  bool force = false;
  app.add_flag("--force", force, "lift the exhaustive-enumeration size caps");

  OutputOptions out_fy, out_codes, out_bij, out_eul, out_sym, out_csp, out_lat, out_ver;

  auto* fy = app.add_subcommand("fy", "graded FY basis and Hilbert series");
  std::string fy_matroid = "boolean:3";
  bool fy_aug = false;
  fy->add_option("--matroid", fy_matroid, "matroid spec or JSON path")->required();
  fy->add_flag("--augmented", fy_aug, "augmented Chow ring basis");
  out_fy.attach(fy);

  auto* codes_cmd = app.add_subcommand("codes", "enumerate (extended) codes");
  int codes_n = 3, codes_j = -2;
  bool codes_ext = false;
  codes_cmd->add_option("--n", codes_n, "length")->required();
  codes_cmd->add_option("--j", codes_j, "restrict to one index");
  codes_cmd->add_flag("--extended", codes_ext, "extended codes");
  out_codes.attach(codes_cmd);

  auto* bij = app.add_subcommand("bijection", "monomial <-> code tables");
  int bij_n = 3, bij_degree = -1;
  bool bij_aug = false, bij_check = false;
  bij->add_option("--n", bij_n, "ground-set size")->required();
  bij->add_option("--degree", bij_degree, "restrict to one degree");
  bij->add_flag("--augmented", bij_aug, "use the augmented basis");
  bij->add_flag("--check", bij_check, "run the equivariance check instead");
  out_bij.attach(bij);

  auto* eul = app.add_subcommand("eulerian", "polynomial families");
  int eul_n = 4;
  std::string eul_variant = "eulerian";
  eul->add_option("--n", eul_n, "degree")->required();
  eul->add_option("--variant", eul_variant, "eulerian|binomial|q|q-binomial")
      ->check(CLI::IsMember({"eulerian", "binomial", "q", "q-binomial"}));
  out_eul.attach(eul);

  auto* sym = app.add_subcommand("symfun", "quasisymmetric expansions");
  int sym_n = 3;
  std::string sym_what = "qnj";
  sym->add_option("--n", sym_n, "degree")->required();
  sym->add_option("--what", sym_what, "qnj|qtilde|frobenius|frobenius-ext|codes-des");
  out_sym.attach(sym);

  auto* csp_cmd = app.add_subcommand("csp", "cyclic sieving reports");
  std::string csp_family = "codes", csp_lambda;
  int csp_n = 3, csp_j = 0;
  csp_cmd->add_option("--family", csp_family,
                      "codes|extcodes|perms-exc|perms-cycletype|dperms");
  csp_cmd->add_option("--n", csp_n, "size")->required();
  csp_cmd->add_option("--j", csp_j, "t-exponent of the sieving polynomial")->required();
  csp_cmd->add_option("--lambda", csp_lambda, "cycle type, e.g. 3+1");
  out_csp.attach(csp_cmd);

  auto* lat = app.add_subcommand("lattice", "lattice dumps as JSON Hasse lists");
  std::string lat_matroid, lat_graph;
  bool lat_aug = false;
  lat->add_option("--matroid", lat_matroid, "matroid spec or JSON path");
  lat->add_option("--graph", lat_graph, "graph JSON path (graphical building set)");
  lat->add_flag("--augmented", lat_aug, "the augmented lattice");
  out_lat.attach(lat);

  auto* ver = app.add_subcommand("verify", "run the verification suites");
  std::string ver_suite = "all";
  int ver_max_n = 5;
  ver->add_option("--suite", ver_suite, "all|none|stats|polys|chow|lattice|bijection|symfun|csp");
  ver->add_option("--max-n", ver_max_n, "cap on the exhaustive ranges");
  out_ver.attach(ver);

  CLI11_PARSE(app, argc, argv);

  if (force) {
    std::cerr << "warning: size caps lifted; exhaustive loops are factorial-sized "
                 "(n = 12 already means ~5e8 permutations)"
              << std::endl;
    set_max_exhaustive_n(kMaxGroundSet);
  }

  try {
    if (*fy) return cmd_fy(fy_matroid, fy_aug, out_fy);
    if (*codes_cmd) return cmd_codes(codes_n, codes_j, codes_ext, out_codes);
    if (*bij) return cmd_bijection(bij_n, bij_degree, bij_aug, bij_check, out_bij);
    if (*eul) return cmd_eulerian(eul_n, eul_variant, out_eul);
    if (*sym) return cmd_symfun(sym_n, sym_what, out_sym);
    if (*csp_cmd) return cmd_csp(csp_family, csp_n, csp_j, csp_lambda, out_csp);
    if (*lat) {
      if (!lat_graph.empty()) return cmd_lattice_graph(lat_graph, out_lat);
      if (lat_matroid.empty())
        throw std::invalid_argument("lattice: pass --matroid or --graph");
      return cmd_lattice(lat_matroid, lat_aug, out_lat);
    }
    if (*ver) return cmd_verify(ver_suite, ver_max_n, out_ver);
  } catch (const resource_limit_error& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return kExitCapExceeded;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return kExitBadInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << std::endl;
    return kExitBadInput;
  }
  return 0;
}
