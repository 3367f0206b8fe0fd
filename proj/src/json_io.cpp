#include "glp/json_io.hpp"

namespace glp::json_io {

using nlohmann::json;

json rational_to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw Error("BadDocument", "rational must be a string or an integer");
}

json vect_to_json(const Vect& v) {
  json a = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(rational_to_json(v[i]));
  return a;
}

Vect vect_from_json(const json& j) {
  if (!j.is_array()) throw Error("BadDocument", "vector must be an array");
  Vect v(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) v[i] = rational_from_json(j[i]);
  return v;
}

json mat_to_json(const Mat& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(rational_to_json(m(i, k)));
    rows.push_back(row);
  }
  return rows;
}

Mat mat_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw Error("BadDocument", "matrix must be a nonempty array");
  Mat m(j.size(), j[0].size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (j[i].size() != j[0].size()) throw Error("BadDocument", "ragged matrix rows");
    for (std::size_t k = 0; k < j[i].size(); ++k) m(i, k) = rational_from_json(j[i][k]);
  }
  return m;
}

json space_to_json(const exactspace::AmbientSpace& s) {
  return json{{"schema", kSchema}, {"base_dim", s.base_dim}, {"gram", mat_to_json(s.gram)}};
}

exactspace::AmbientSpace space_from_json(const json& j) {
  Mat gram = mat_from_json(j.at("gram"));
  int base_dim = j.at("base_dim").get<int>();
  return exactspace::AmbientSpace(static_cast<int>(gram.rows()), base_dim, gram);
}

json root_system_to_json(const rootsys::RootSystem& rs) {
  json roots = json::array();
  for (const Vect& r : rs.roots) roots.push_back(vect_to_json(r));
  json simple = json::array();
  for (const Vect& r : rs.simple_roots) simple.push_back(vect_to_json(r));
  return json{{"schema", kSchema},
              {"space", space_to_json(rs.space)},
              {"simple_roots", simple},
              {"roots", roots},
              {"type", rs.type_label}};
}

rootsys::RootSystem root_system_from_json(const json& j) {
  rootsys::RootSystem rs;
  rs.space = space_from_json(j.at("space"));
  for (const auto& r : j.at("roots")) rs.roots.push_back(vect_from_json(r));
  if (j.contains("simple_roots"))
    for (const auto& r : j["simple_roots"]) rs.simple_roots.push_back(vect_from_json(r));
  if (j.contains("type")) rs.type_label = j["type"].get<std::string>();
  return rs;
}

json algebra_to_json(const gla::GradedLieAlgebra& g) {
  json brackets = json::array();
  for (int i = 0; i < g.dim(); ++i)
    for (int k = i + 1; k < g.dim(); ++k) {
      const auto& b = g.bracket(i, k);
      if (b.empty()) continue;
      json terms = json::array();
      for (const auto& [t, c] : b) terms.push_back(json::array({t, rational_to_json(c)}));
      brackets.push_back(json::array({i, k, terms}));
    }
  json out{{"schema", kSchema},
           {"basis", g.basis_names()},
           {"degrees", g.degrees()},
           {"brackets", brackets}};
  if (g.matrices()) {
    json ms = json::array();
    for (const Mat& m : *g.matrices()) ms.push_back(mat_to_json(m));
    out["matrices"] = ms;
  }
  if (g.grading_matrix()) out["grading_element"] = mat_to_json(*g.grading_matrix());
  return out;
}

gla::GradedLieAlgebra algebra_from_json(const json& j) {
  std::vector<std::string> names = j.at("basis").get<std::vector<std::string>>();
  std::vector<long> degrees = j.at("degrees").get<std::vector<long>>();
  std::vector<std::tuple<int, int, gla::SparseVec>> entries;
  for (const auto& row : j.at("brackets")) {
    int a = row.at(0).get<int>();
    int b = row.at(1).get<int>();
    gla::SparseVec s;
    for (const auto& term : row.at(2))
      s.push_back({term.at(0).get<int>(), rational_from_json(term.at(1))});
    entries.push_back({a, b, s});
  }
  auto g = gla::GradedLieAlgebra::from_table(std::move(names), std::move(degrees), entries);
  if (j.contains("matrices")) {
    std::vector<Mat> ms;
    for (const auto& m : j["matrices"]) ms.push_back(mat_from_json(m));
    std::optional<Mat> grading;
    if (j.contains("grading_element")) grading = mat_from_json(j["grading_element"]);
    g.attach_matrices(std::move(ms), std::move(grading));
  }
  return g;
}

json module_to_json(const gla::GradedModule& m) {
  json acts = json::array();
  for (const Mat& a : m.action) acts.push_back(mat_to_json(a));
  return json{{"schema", kSchema}, {"dim", m.dim}, {"degrees", m.degrees}, {"action", acts}};
}

std::vector<Mat> action_from_json(const json& j) {
  std::vector<Mat> out;
  for (const auto& m : j.at("action")) out.push_back(mat_from_json(m));
  return out;
}

json marker_solutions_to_json(const rootsys::RootSystem& base, const std::vector<Vect>& weights,
                              const std::vector<gcm::MarkerSolution>& sols) {
  json ws = json::array();
  for (const Vect& w : weights) ws.push_back(vect_to_json(w));
  json list = json::array();
  for (const auto& s : sols) {
    json e{{"b_eps", rational_to_json(s.b_eps)},
           {"norm_sq", rational_to_json(s.norm_sq)},
           {"class", gcm::to_string(s.cls.kind)}};
    if (s.cls.kind == gcm::FiniteClass::Finite) e["type"] = s.cls.type_label;
    list.push_back(e);
  }
  return json{{"schema", kSchema},
              {"base", root_system_to_json(base)},
              {"weights", ws},
              {"solutions", list}};
}

json construction_report_to_json(const slicer::ConstructionReport& rep) {
  json checks = json::array();
  for (const auto& c : rep.checks)
    checks.push_back(json{
        {"name", c.name}, {"expected", c.expected}, {"actual", c.actual}, {"pass", c.pass}});
  json slices = json::object();
  for (const auto& [q, vs] : rep.graded.slices) slices[std::to_string(q)] = vs.size();
  return json{{"schema", kSchema},
              {"name", rep.entry.name},
              {"family", rep.entry.family},
              {"expected_type", rep.entry.expected_type},
              {"slice_sizes", slices},
              {"cartan_dim", rep.graded.cartan_dim},
              {"checks", checks},
              {"ok", rep.ok},
              {"note", rep.entry.note},
              {"diagram", rep.diagram}};
}

}  // namespace glp::json_io
