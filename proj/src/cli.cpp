#include "glp/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "glp/json_io.hpp"

namespace glp::cli {

namespace {

using nlohmann::json;
using rootsys::Family;
using rootsys::RootSystem;

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("BadDocument", "cannot open '" + path + "'");
  json j;
  in >> j;
  return j;
}

// Weight specs mirror the usual notation: "omega3", "2omega1", "sigma_m",
// "3omega1"; sigma is accepted as a synonym for omega, and the index m or n
// resolves to the rank.
Vect resolve_weight(const RootSystem& rs, const std::string& spec) {
  std::size_t p = 0;
  long coeff = 1;
  if (p < spec.size() && std::isdigit(static_cast<unsigned char>(spec[p]))) {
    std::size_t used = 0;
    coeff = std::stol(spec.substr(p), &used);
    p += used;
  }
  std::string word;
  while (p < spec.size() && std::isalpha(static_cast<unsigned char>(spec[p]))) word += spec[p++];
  if (word != "omega" && word != "sigma")
    throw Error("BadWeightSpec", "expected omega<k> or sigma<k> in '" + spec + "'");
  if (p < spec.size() && spec[p] == '_') ++p;
  long index = 0;
  if (p < spec.size() && (spec[p] == 'm' || spec[p] == 'n')) {
    index = rs.rank();
    ++p;
  } else {
    std::size_t used = 0;
    index = std::stol(spec.substr(p), &used);
    p += used;
  }
  if (p != spec.size()) throw Error("BadWeightSpec", "trailing characters in '" + spec + "'");
  if (index < 1 || index > rs.rank())
    throw Error("BadWeightSpec", "weight index out of range in '" + spec + "'");
  auto fw = rootsys::fundamental_weights(rs);
  return Rational(coeff) * fw[index - 1];
}

int cmd_catalog_list(std::ostream& out) {
  for (const auto& c : slicer::catalog()) {
    out << c.name << "  [" << c.family << "]  type " << c.expected_type << "\n";
  }
  return 0;
}

void print_report(const slicer::ConstructionReport& rep, std::ostream& out) {
  out << "== " << rep.entry.name << " (" << rep.entry.family << ")\n";
  for (const auto& c : rep.checks) {
    out << "check " << c.name << ": expected " << c.expected << ", actual " << c.actual
        << (c.pass ? "  [ok]" : "  [FAIL]") << "\n";
  }
  if (!rep.entry.note.empty()) out << "note: " << rep.entry.note << "\n";
  out << rep.diagram;
  out << "RESULT: " << (rep.ok ? "PASS" : "FAIL") << "\n";
}

int cmd_catalog_build(const std::string& name, bool all, bool as_json, std::ostream& out) {
  std::vector<std::string> names;
  if (all) {
    for (const auto& c : slicer::catalog()) names.push_back(c.name);
  } else {
    names.push_back(name);
  }
  bool ok = true;
  json jout = json::array();
  for (const std::string& n : names) {
    auto rep = slicer::build_construction(n);
    ok = ok && rep.ok;
    if (as_json)
      jout.push_back(json_io::construction_report_to_json(rep));
    else
      print_report(rep, out);
  }
  if (as_json) out << (all ? jout : jout[0]).dump(2) << "\n";
  return ok ? 0 : 1;
}

int cmd_marker_solve(const std::string& family, int rank, const std::string& weight_spec,
                     int max_denom, bool as_json, std::ostream& out) {
  RootSystem base = rootsys::build_root_system(rootsys::family_from_char(family.at(0)), rank);
  Vect w = resolve_weight(base, weight_spec);
  auto sols = gcm::solve_single_marker(base, w, max_denom);
  if (as_json) {
    out << json_io::marker_solutions_to_json(base, {w}, sols).dump(2) << "\n";
    return 0;
  }
  out << "== marker solve " << base.type_label << " weight " << weight_spec
      << " (normalized to the lowest conjugate)\n";
  for (const auto& s : sols) {
    out << "b(eps,eps) = " << to_string(s.b_eps) << "  |omega+eps|^2 = " << to_string(s.norm_sq)
        << "  " << gcm::to_string(s.cls.kind);
    if (s.cls.kind == gcm::FiniteClass::Finite) out << "(" << s.cls.type_label << ")";
    out << "\n";
  }
  if (sols.empty()) out << "no admissible values\n";
  return 0;
}

int cmd_classify(const std::string& path, bool as_json, std::ostream& out) {
  json j = load_json(path);
  RootSystem rs = json_io::root_system_from_json(j);
  std::string label = rootsys::classify(rs.roots, rs.space);
  if (as_json)
    out << json{{"schema", json_io::kSchema}, {"type", label}}.dump(2) << "\n";
  else
    out << label << "\n";
  return 0;
}

int cmd_freelie(const std::string& gens, long depth, std::ostream& out) {
  std::map<long, long> profile;
  std::stringstream ss(gens);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto colon = item.find(':');
    if (colon == std::string::npos)
      throw Error("BadDocument", "generator spec must look like -1:2,-2:1");
    profile[std::stol(item.substr(0, colon))] = std::stol(item.substr(colon + 1));
  }
  auto dims = gla::free_lie_dims(profile, depth);
  for (auto it = dims.rbegin(); it != dims.rend(); ++it)
    out << "f_{" << it->first << "}: " << it->second << "\n";
  return 0;
}

int cmd_algebra_analyze(const std::string& path, bool effectiveness, bool want_radical,
                        bool reductive, bool decomposable, const std::string& levi_path,
                        std::ostream& out) {
  json j = load_json(path);
  auto g = json_io::algebra_from_json(j);
  g.validate();
  out << "dimension " << g.dim() << "\n";
  std::map<long, long> dims;
  for (long d : g.degrees()) ++dims[d];
  out << "graded dimensions:";
  for (const auto& [q, n] : dims) out << " " << q << ":" << n;
  out << "\n";
  bool ok = true;
  if (effectiveness)
    out << "effectiveness: " << gla::to_string(gla::effectiveness_class(g)) << "\n";
  if (want_radical) {
    auto r = gla::radical(g);
    out << "radical dimension: " << r.size() << "\n";
  }
  if (reductive) out << "reductive type: " << (gla::reductive_type(g) ? "true" : "false") << "\n";
  if (decomposable)
    out << "decomposable: " << (gla::decomposability_check(g) ? "true" : "false") << "\n";
  if (!levi_path.empty()) {
    json lj = load_json(levi_path);
    std::vector<Vect> basis;
    for (const auto& v : lj.at("basis")) basis.push_back(json_io::vect_from_json(v));
    bool levi = gla::verify_levi(g, basis);
    out << "levi: " << (levi ? "true" : "false") << "\n";
    ok = ok && levi;
  }
  return ok ? 0 : 1;
}

int cmd_algebra_from_matrix(const std::string& path, std::ostream& out) {
  json j = load_json(path);
  std::vector<Mat> gens;
  for (const auto& m : j.at("matrices")) gens.push_back(json_io::mat_from_json(m));
  Mat grading = json_io::mat_from_json(j.at("grading"));
  auto g = gla::from_matrices(gens, grading);
  out << json_io::algebra_to_json(g).dump(2) << "\n";
  return 0;
}

int cmd_regrade(const std::string& algebra_path, const std::string& module_path,
                std::ostream& out) {
  auto g = json_io::algebra_from_json(load_json(algebra_path));
  auto action = json_io::action_from_json(load_json(module_path));
  auto mod = gla::regrade_module(g, action);
  out << json_io::module_to_json(mod).dump(2) << "\n";
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"graded Lie prolongation toolkit"};
  app.require_subcommand(1);

  auto* cat = app.add_subcommand("catalog", "construction catalog");
  cat->require_subcommand(1);
  cat->add_subcommand("list", "list catalog entries");
  auto* build = cat->add_subcommand("build", "build and verify an entry");
  std::string build_name;
  bool build_all = false, build_json = false, build_report = false;
  build->add_option("name", build_name, "entry name");
  build->add_flag("--all", build_all, "build every entry");
  build->add_flag("--json", build_json, "machine output");
  build->add_flag("--report", build_report, "human report (default)");

  auto* marker = app.add_subcommand("marker", "marker feasibility");
  auto* solve = marker->add_subcommand("solve", "solve the single-marker conditions");
  std::string family, weight_spec;
  int rank = 0, max_denom = 0;
  bool marker_json = false;
  solve->add_option("--family", family, "base family A..G")->required();
  solve->add_option("--rank", rank, "base rank")->required();
  solve->add_option("--weight", weight_spec, "extremal weight, e.g. omega3")->required();
  solve->add_option("--max-denom", max_denom, "sweep bound (default env or 24)");
  solve->add_flag("--json", marker_json, "machine output");

  auto* classify = app.add_subcommand("classify", "classify a root set");
  std::string classify_path;
  bool classify_json = false;
  classify->add_option("file", classify_path, "root-system document")->required();
  classify->add_flag("--json", classify_json, "machine output");

  auto* algebra = app.add_subcommand("algebra", "graded Lie algebra operations");
  algebra->require_subcommand(1);
  auto* analyze = algebra->add_subcommand("analyze", "analyze an algebra document");
  std::string algebra_path, levi_path;
  bool f_eff = false, f_rad = false, f_red = false, f_dec = false;
  analyze->add_option("file", algebra_path, "algebra document")->required();
  analyze->add_flag("--effectiveness", f_eff, "effectiveness class");
  analyze->add_flag("--radical", f_rad, "radical dimension");
  analyze->add_flag("--reductive-type", f_red, "reductive-type test");
  analyze->add_flag("--decomposable", f_dec, "decomposability test");
  analyze->add_option("--levi", levi_path, "verify a Levi subspace document");
  auto* fromm = algebra->add_subcommand("from-matrix", "Lie closure of matrices");
  std::string fromm_path;
  fromm->add_option("file", fromm_path, "matrix specification document")->required();

  auto* freelie = app.add_subcommand("freelie", "free Lie algebra dimensions");
  std::string gens;
  long depth = 1;
  freelie->add_option("--gens", gens, "degree:dim list, e.g. -1:2,-2:1")->required();
  freelie->add_option("--depth", depth, "depth cutoff")->required();

  auto* regrade = app.add_subcommand("regrade", "regrade a module of a characteristic algebra");
  std::string re_algebra, re_module;
  regrade->add_option("algebra", re_algebra, "algebra document")->required();
  regrade->add_option("module", re_module, "module document")->required();

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (cat->parsed()) {
      if (cat->get_subcommand("list")->parsed()) return cmd_catalog_list(out);
      if (build->parsed()) {
        if (!build_all && build_name.empty())
          throw Error("BadDocument", "catalog build needs a name or --all");
        return cmd_catalog_build(build_name, build_all, build_json, out);
      }
    }
    if (solve->parsed())
      return cmd_marker_solve(family, rank, weight_spec, max_denom, marker_json, out);
    if (classify->parsed()) return cmd_classify(classify_path, classify_json, out);
    if (analyze->parsed())
      return cmd_algebra_analyze(algebra_path, f_eff, f_rad, f_red, f_dec, levi_path, out);
    if (fromm->parsed()) return cmd_algebra_from_matrix(fromm_path, out);
    if (freelie->parsed()) return cmd_freelie(gens, depth, out);
    if (regrade->parsed()) return cmd_regrade(re_algebra, re_module, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "usage error: no subcommand\n";
  return 2;
}

}  // namespace glp::cli
