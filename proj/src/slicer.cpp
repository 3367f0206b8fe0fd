#include "glp/slicer.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace glp::slicer {

using exactspace::AmbientSpace;
using exactspace::extend_with_markers;
using exactspace::inner;
using exactspace::lift;
using rootsys::build_root_system;
using rootsys::Family;
using rootsys::fundamental_weights;
using rootsys::weight_set;

long GradedRootSystem::slice_size(long q) const {
  auto it = slices.find(q);
  return it == slices.end() ? 0 : static_cast<long>(it->second.size());
}

long GradedRootSystem::dim(long q) const { return slice_size(q) + (q == 0 ? cartan_dim : 0); }

long GradedRootSystem::degree_of(const Vect& root) const {
  for (const auto& [q, vs] : slices)
    if (std::binary_search(vs.begin(), vs.end(), root, VectLess())) return q;
  throw Error("NotARootSystem", "vector is not a root of this graded system");
}

namespace {

GradedRootSystem make_graded(RootSystem rs, int cartan_dim,
                             const std::map<Vect, long, VectLess>& degree) {
  GradedRootSystem g;
  g.rs = std::move(rs);
  g.cartan_dim = cartan_dim;
  for (const Vect& r : g.rs.roots) {
    auto it = degree.find(r);
    if (it == degree.end()) throw Error("NotARootSystem", "root without a degree");
    g.slices[it->second].push_back(r);
  }
  for (auto& [q, vs] : g.slices) std::sort(vs.begin(), vs.end(), VectLess());
  // Additivity and the symmetry deg(-a) = -deg(a) are structural; verify.
  for (const auto& [q, vs] : g.slices)
    for (const Vect& r : vs)
      if (degree.at(-r) != -q) throw Error("NotARootSystem", "degree not odd under negation");
  if (!check_degree_additivity(g)) throw Error("NotARootSystem", "degree is not additive");
  return g;
}

}  // namespace

GradedRootSystem slice(const RootSystem& rs, const std::vector<long>& degree_on_simple,
                       int cartan_dim) {
  if (degree_on_simple.size() != static_cast<std::size_t>(rs.rank()))
    throw Error("DimensionMismatch", "one degree per simple root required");
  std::map<Vect, long, VectLess> degree;
  for (const Vect& r : rs.roots) {
    auto c = rootsys::simple_coordinates(rs, r);
    if (!c) throw Error("NotARootSystem", "root outside the simple-root span");
    Rational d = 0;
    for (Eigen::Index i = 0; i < c->size(); ++i) d += (*c)[i] * degree_on_simple[i];
    degree[r] = to_long(d);
  }
  return make_graded(rs, cartan_dim, degree);
}

bool check_degree_additivity(const GradedRootSystem& g) {
  std::map<Vect, long, VectLess> deg;
  for (const auto& [q, vs] : g.slices)
    for (const Vect& r : vs) deg[r] = q;
  for (const auto& [a, qa] : deg)
    for (const auto& [b, qb] : deg) {
      auto it = deg.find(a + b);
      if (it != deg.end() && it->second != qa + qb) return false;
    }
  return true;
}

bool check_fundamental(const GradedRootSystem& g) {
  auto [depth, height] = depth_height(g);
  if (depth < 1) throw Error("NotARootSystem", "fundamentality needs depth >= 1");
  for (long q = 1; q + 1 <= depth; ++q) {
    auto target = g.slices.find(-q - 1);
    if (target == g.slices.end()) continue;
    auto minus1 = g.slices.find(-1);
    auto minusq = g.slices.find(-q);
    if (minus1 == g.slices.end() || minusq == g.slices.end()) return false;
    for (const Vect& gamma : target->second) {
      bool found = false;
      for (const Vect& beta : minus1->second) {
        Vect delta = gamma - beta;
        if (std::binary_search(minusq->second.begin(), minusq->second.end(), delta, VectLess())) {
          found = true;
          break;
        }
      }
      if (!found) return false;
    }
  }
  return true;
}

std::pair<long, long> depth_height(const GradedRootSystem& g) {
  long depth = 0, height = 0;
  for (const auto& [q, vs] : g.slices) {
    if (vs.empty()) continue;
    depth = std::max(depth, -q);
    height = std::max(height, q);
  }
  return {depth, height};
}

bool check_symmetry(const GradedRootSystem& g) {
  auto [depth, height] = depth_height(g);
  for (long q = 1; q <= std::max(depth, height); ++q)
    if (g.slice_size(q) != g.slice_size(-q)) return false;
  return true;
}

std::string to_string(Reality r) {
  switch (r) {
    case Reality::Real: return "Real";
    case Reality::Complex: return "Complex";
    case Reality::Quaternionic: return "Quaternionic";
  }
  return "?";
}

Reality spin_reality(int p, int q) {
  if (p < 0 || q < 0 || p + q < 1) throw Error("InvalidRank", "signature needs p,q >= 0, p+q >= 1");
  int r = ((q - p) % 8 + 8) % 8;
  if (r == 0 || r == 1 || r == 7) return Reality::Real;
  if (r == 2 || r == 6) return Reality::Complex;
  return Reality::Quaternionic;
}

// ---------------------------------------------------------------------------
// Construction catalog

namespace {

// One positive layer of a recipe: roots sum(mc_i eps_i) + w for w in the
// weight set of `dominant` (the zero vector gives the trivial module).
struct LayerSpec {
  std::vector<long> marker_coeffs;
  Vect dominant;
};

struct Recipe {
  Construction meta;
  RootSystem base;
  Mat marker_gram;
  std::vector<LayerSpec> layers;
};

RootSystem direct_sum(const RootSystem& a, const RootSystem& b, const std::string& label) {
  if (a.space.base_dim != a.space.dim || b.space.base_dim != b.space.dim)
    throw Error("BadSpace", "direct sums of marker spaces are not supported");
  AmbientSpace sp = AmbientSpace::euclidean(a.space.dim + b.space.dim);
  auto lift_a = [&](const Vect& v) { return lift(v, sp.dim); };
  auto lift_b = [&](const Vect& v) {
    Vect w = sp.zero();
    w.tail(b.space.dim) = v;
    return w;
  };
  RootSystem rs;
  rs.space = sp;
  for (const Vect& r : a.roots) rs.roots.push_back(lift_a(r));
  for (const Vect& r : b.roots) rs.roots.push_back(lift_b(r));
  std::sort(rs.roots.begin(), rs.roots.end(), VectLess());
  for (const Vect& s : a.simple_roots) rs.simple_roots.push_back(lift_a(s));
  for (const Vect& s : b.simple_roots) rs.simple_roots.push_back(lift_b(s));
  rs.type_label = label;
  return rs;
}

long binom(long n, long k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

Recipe recipe_B(int n) {
  RootSystem base = build_root_system(Family::A, n - 1);
  auto fw = fundamental_weights(base);
  Mat g(1, 1);
  g(0, 0) = Rational(1, n);
  Recipe r;
  r.meta = {"B" + std::to_string(n) + "-from-A" + std::to_string(n - 1),
            "Bn-from-An-1",
            "B" + std::to_string(n),
            {{-2, binom(n, 2)}, {-1, n}, {0, (long)n * (n - 1)}, {1, n}, {2, binom(n, 2)}},
            2,
            ""};
  r.base = base;
  r.marker_gram = g;
  r.layers = {{{1}, fw[0]}, {{2}, fw[1]}};
  return r;
}

Recipe recipe_G2_kind3() {
  RootSystem base = build_root_system(Family::A, 1);
  auto fw = fundamental_weights(base);
  Mat g(1, 1);
  g(0, 0) = Rational(1, 6);
  Recipe r;
  r.meta = {"G2-from-A1-kind3", "G2-from-A1-kind3", "G2",
            {{-3, 2}, {-2, 1}, {-1, 2}, {0, 2}, {1, 2}, {2, 1}, {3, 2}},
            3,
            ""};
  r.base = base;
  r.marker_gram = g;
  r.layers = {{{1}, fw[0]}, {{2}, base.space.zero()}, {{3}, fw[0]}};
  return r;
}

Recipe recipe_C(int n) {
  RootSystem base = build_root_system(Family::A, n - 1);
  auto fw = fundamental_weights(base);
  Mat g(1, 1);
  g(0, 0) = Rational(4, n);
  Recipe r;
  r.meta = {"C" + std::to_string(n) + "-from-Sym2",
            "Cn-from-Sym2",
            "C" + std::to_string(n),
            {{-1, binom(n + 1, 2)}, {0, (long)n * (n - 1)}, {1, binom(n + 1, 2)}},
            1,
            ""};
  r.base = base;
  r.marker_gram = g;
  r.layers = {{{1}, 2 * fw[0]}};
  return r;
}

Recipe recipe_G2_sym3() {
  RootSystem base = build_root_system(Family::A, 1);
  auto fw = fundamental_weights(base);
  Mat g(1, 1);
  g(0, 0) = Rational(3, 2);
  Recipe r;
  r.meta = {"G2-from-Sym3", "G2-from-Sym3", "G2",
            {{-2, 1}, {-1, 4}, {0, 2}, {1, 4}, {2, 1}},
            2,
            ""};
  r.base = base;
  r.marker_gram = g;
  r.layers = {{{1}, 3 * fw[0]}, {{2}, base.space.zero()}};
  return r;
}

Recipe recipe_D(int n) {
  RootSystem base = build_root_system(Family::A, n - 1);
  auto fw = fundamental_weights(base);
  Mat g(1, 1);
  g(0, 0) = Rational(4, n);
  Recipe r;
  r.meta = {"D" + std::to_string(n) + "-from-Lambda2",
            "Dn-from-Lambda2",
            "D" + std::to_string(n),
            {{-1, binom(n, 2)}, {0, (long)n * (n - 1)}, {1, binom(n, 2)}},
            1,
            ""};
  r.base = base;
  r.marker_gram = g;
  r.layers = {{{1}, fw[1]}};
  return r;
}

Recipe recipe_E_lambda3(int n) {
  RootSystem base = build_root_system(Family::A, n - 1);
  auto fw = fundamental_weights(base);
  Mat g(1, 1);
  g(0, 0) = Rational(2) - (Rational(3) - Rational(9, n));  // |w3|^2 + b = 2
  Recipe r;
  r.base = base;
  r.marker_gram = g;
  std::string nm = "E" + std::to_string(n) + "-from-Lambda3";
  if (n == 6) {
    r.meta = {nm, nm, "E6", {{-2, 1}, {-1, 20}, {0, 30}, {1, 20}, {2, 1}}, 2, ""};
    r.layers = {{{1}, fw[2]}, {{2}, base.space.zero()}};
  } else if (n == 7) {
    r.meta = {nm, nm, "E7", {{-2, 7}, {-1, 35}, {0, 42}, {1, 35}, {2, 7}}, 2, ""};
    r.layers = {{{1}, fw[2]}, {{2}, fw[5]}};
  } else {
    r.meta = {nm, nm, "E8",
              {{-3, 8}, {-2, 28}, {-1, 56}, {0, 56}, {1, 56}, {2, 28}, {3, 8}},
              3,
              "the level +-2 layer list alone covers 224 of the 240 roots; the "
              "level +-3 layers (8 roots each, vector weights) complete the system"};
    r.layers = {{{1}, fw[2]}, {{2}, fw[5]}, {{3}, fw[0]}};
  }
  return r;
}

Recipe recipe_F4_spin7() {
  RootSystem base = build_root_system(Family::B, 3);
  auto fw = fundamental_weights(base);
  Mat g(1, 1);
  g(0, 0) = Rational(1, 4);
  Recipe r;
  r.meta = {"F4-from-spin7", "F4-from-spin7", "F4",
            {{-2, 7}, {-1, 8}, {0, 18}, {1, 8}, {2, 7}},
            2,
            ""};
  r.base = base;
  r.marker_gram = g;
  r.layers = {{{1}, fw[2]}, {{2}, fw[0]}};
  return r;
}

Recipe recipe_F4_C3() {
  RootSystem base = build_root_system(Family::C, 3);
  auto fw = fundamental_weights(base);
  Mat g(1, 1);
  g(0, 0) = 1;
  Recipe r;
  r.meta = {"F4-from-C3omega3", "F4-from-C3omega3", "F4",
            {{-2, 1}, {-1, 14}, {0, 18}, {1, 14}, {2, 1}},
            2,
            ""};
  r.base = base;
  r.marker_gram = g;
  r.layers = {{{1}, fw[2]}, {{2}, base.space.zero()}};
  return r;
}

Recipe recipe_E_Dspin(int m) {
  RootSystem base = build_root_system(Family::D, m);
  auto fw = fundamental_weights(base);
  Mat g(1, 1);
  g(0, 0) = Rational(8 - m, 4);
  Recipe r;
  r.base = base;
  r.marker_gram = g;
  std::string nm = "E" + std::to_string(m + 1) + "-from-D" + std::to_string(m) + "-spin";
  std::string fam = "En-from-D-spin";
  if (m == 5) {
    r.meta = {nm, fam, "E6", {{-1, 16}, {0, 40}, {1, 16}}, 1, ""};
    r.layers = {{{1}, fw[3]}};  // negative-chirality spin weights
  } else if (m == 6) {
    r.meta = {nm, fam, "E7", {{-2, 1}, {-1, 32}, {0, 60}, {1, 32}, {2, 1}}, 2, ""};
    r.layers = {{{1}, fw[5]}, {{2}, base.space.zero()}};
  } else {
    r.meta = {nm, fam, "E8", {{-2, 14}, {-1, 64}, {0, 84}, {1, 64}, {2, 14}}, 2, ""};
    r.layers = {{{1}, fw[5]}, {{2}, fw[0]}};
  }
  return r;
}

Recipe recipe_E6_double_spin() {
  RootSystem base = build_root_system(Family::D, 4);
  auto fw = fundamental_weights(base);
  Mat g(2, 2);
  g(0, 0) = 1;
  g(1, 1) = 1;
  g(0, 1) = Rational(-1, 2);
  g(1, 0) = Rational(-1, 2);
  Recipe r;
  r.meta = {"E6-double-spin-D4", "E6-double-spin-D4", "E6",
            {{-2, 8}, {-1, 16}, {0, 24}, {1, 16}, {2, 8}},
            2,
            ""};
  r.base = base;
  r.marker_gram = g;
  r.layers = {{{1, 0}, fw[2]}, {{0, 1}, fw[3]}, {{1, 1}, fw[0]}};
  return r;
}

Recipe recipe_quaternionic(int m) {
  RootSystem a1 = build_root_system(Family::A, 1);
  RootSystem dm = build_root_system(Family::D, m);
  RootSystem base = direct_sum(a1, dm, "A1+D" + std::to_string(m));
  auto fw = fundamental_weights(base);
  Mat g(1, 1);
  g(0, 0) = m == 4 ? Rational(1, 2) : Rational(1, 4);
  Recipe r;
  r.base = base;
  r.marker_gram = g;
  if (m == 4) {
    r.meta = {"D6-quaternionic-spin", "D6-E7-quaternionic-spin", "D6",
              {{-2, 1}, {-1, 16}, {0, 26}, {1, 16}, {2, 1}},
              2,
              ""};
    r.layers = {{{1}, fw[0] + fw[4]}, {{2}, base.space.zero()}};
  } else {
    r.meta = {"E7-quaternionic-spin", "D6-E7-quaternionic-spin", "E7",
              {{-2, 10}, {-1, 32}, {0, 42}, {1, 32}, {2, 10}},
              2,
              ""};
    r.layers = {{{1}, fw[0] + fw[5]}, {{2}, fw[1]}};
  }
  return r;
}

std::vector<Recipe> all_recipes() {
  std::vector<Recipe> rs;
  for (int n = 3; n <= 8; ++n) rs.push_back(recipe_B(n));
  rs.push_back(recipe_G2_kind3());
  for (int n = 3; n <= 8; ++n) rs.push_back(recipe_C(n));
  rs.push_back(recipe_G2_sym3());
  for (int n = 4; n <= 8; ++n) rs.push_back(recipe_D(n));
  for (int n = 6; n <= 8; ++n) rs.push_back(recipe_E_lambda3(n));
  rs.push_back(recipe_F4_spin7());
  rs.push_back(recipe_F4_C3());
  for (int m = 5; m <= 7; ++m) rs.push_back(recipe_E_Dspin(m));
  rs.push_back(recipe_E6_double_spin());
  rs.push_back(recipe_quaternionic(4));
  rs.push_back(recipe_quaternionic(5));
  return rs;
}

std::string normalized_name(std::string s) {
  // Accept the Greek spelling of omega in entry names.
  const std::string omega = "ω";
  for (std::size_t p = s.find(omega); p != std::string::npos; p = s.find(omega))
    s.replace(p, omega.size(), "omega");
  return s;
}

long type_dimension(const std::string& label) {
  long total = 0;
  std::size_t i = 0;
  while (i < label.size()) {
    std::size_t j = label.find('+', i);
    std::string part = label.substr(i, j == std::string::npos ? j : j - i);
    char f = part[0];
    long n = std::stol(part.substr(1));
    switch (f) {
      case 'A': total += n * (n + 2); break;
      case 'B':
      case 'C': total += n * (2 * n + 1); break;
      case 'D': total += n * (2 * n - 1); break;
      case 'G': total += 14; break;
      case 'F': total += 52; break;
      case 'E': total += (n == 6 ? 78 : n == 7 ? 133 : 248); break;
      default: throw Error("Internal", "unknown type label " + label);
    }
    if (j == std::string::npos) break;
    i = j + 1;
  }
  return total;
}

ConstructionReport run_recipe(const Recipe& recipe) {
  const RootSystem& base = recipe.base;
  int k = static_cast<int>(recipe.marker_gram.rows());
  AmbientSpace ext = extend_with_markers(base.space, k, recipe.marker_gram);
  auto marker = [&](int i) { return ext.e(base.space.dim + i); };

  std::map<Vect, long, VectLess> degree;
  std::vector<Vect> roots;
  for (const Vect& r : base.roots) {
    Vect v = lift(r, ext.dim);
    degree[v] = 0;
    roots.push_back(v);
  }
  std::vector<Vect> marker_simples;
  for (const LayerSpec& layer : recipe.layers) {
    long q = 0;
    Vect shift = ext.zero();
    for (int i = 0; i < k; ++i) {
      q += layer.marker_coeffs[i];
      shift += Rational(layer.marker_coeffs[i]) * marker(i);
    }
    auto ws = weight_set(base, rootsys::dominant_conjugate(base, layer.dominant));
    bool single_marker_level1 = (q == 1);
    Vect lowest = rootsys::lowest_conjugate(base, layer.dominant);
    for (const Vect& w : ws.weights) {
      Vect v = lift(w, ext.dim) + shift;
      degree[v] = q;
      degree[-v] = -q;
      roots.push_back(v);
      roots.push_back(-v);
      if (single_marker_level1 && w == lowest) marker_simples.push_back(v);
    }
  }
  std::sort(roots.begin(), roots.end(), VectLess());

  RootSystem full;
  full.space = ext;
  full.roots = roots;
  for (const Vect& s : base.simple_roots) full.simple_roots.push_back(lift(s, ext.dim));
  for (const Vect& s : marker_simples) full.simple_roots.push_back(s);
  full.type_label = recipe.meta.expected_type;

  ConstructionReport rep;
  rep.entry = recipe.meta;
  rep.graded = make_graded(full, base.rank() + k, degree);

  auto add_check = [&](const std::string& name, const std::string& expected,
                       const std::string& actual) {
    rep.checks.push_back({name, expected, actual, expected == actual});
  };

  std::string cls;
  try {
    auto full_cls = rootsys::classify_full(roots, ext);
    cls = full_cls.label;
  } catch (const Error& e) {
    cls = std::string("error: ") + e.what();
  }
  add_check("type", recipe.meta.expected_type, cls);

  std::ostringstream want, got;
  for (const auto& [q, n] : recipe.meta.expected_slice_sizes) want << q << ":" << n << " ";
  for (const auto& [q, vs] : rep.graded.slices) got << q << ":" << vs.size() << " ";
  add_check("slice sizes", want.str(), got.str());

  auto [depth, height] = depth_height(rep.graded);
  add_check("depth", std::to_string(recipe.meta.expected_depth), std::to_string(depth));
  add_check("height", std::to_string(recipe.meta.expected_depth), std::to_string(height));
  add_check("symmetry", "true", check_symmetry(rep.graded) ? "true" : "false");
  add_check("fundamental", "true", check_fundamental(rep.graded) ? "true" : "false");
  add_check("degree additivity", "true",
            check_degree_additivity(rep.graded) ? "true" : "false");
  add_check("total dimension", std::to_string(type_dimension(recipe.meta.expected_type)),
            std::to_string(roots.size() + base.rank() + k));

  // The base simples plus the level-1 marker roots must form a simple system
  // of the union, and the marker-coefficient degree must be their linear
  // extension.
  rep.extended_simple_roots = full.simple_roots;
  bool simple_ok = full.simple_roots.size() == static_cast<std::size_t>(base.rank() + k);
  std::vector<long> sdeg;
  for (const Vect& s : full.simple_roots) sdeg.push_back(degree.at(s));
  rep.extended_simple_degrees = sdeg;
  if (simple_ok) {
    try {
      GradedRootSystem resliced = slice(full, sdeg, base.rank() + k);
      for (const auto& [q, vs] : rep.graded.slices)
        if (resliced.slices[q] != vs) simple_ok = false;
    } catch (const Error&) {
      simple_ok = false;
    }
  }
  add_check("degree from extended simple roots", "true", simple_ok ? "true" : "false");

  rep.ok = true;
  for (const auto& c : rep.checks) rep.ok = rep.ok && c.pass;
  rep.diagram = rootsys::dynkin_ascii(ext, rep.extended_simple_roots, &sdeg);
  return rep;
}

}  // namespace

std::vector<Construction> catalog() {
  std::vector<Construction> out;
  for (const Recipe& r : all_recipes()) out.push_back(r.meta);
  return out;
}

ConstructionReport build_construction(const std::string& name) {
  std::string n = normalized_name(name);
  for (const Recipe& r : all_recipes()) {
    if (r.meta.name == n) return run_recipe(r);
  }
  throw Error("UnknownConstruction", "no catalog entry named '" + name + "'");
}

}  // namespace glp::slicer
