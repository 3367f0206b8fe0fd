// Acceptance suite: runs every headline result end to end and prints one
// PASS/FAIL line per criterion.  All comparisons are exact.

#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "fixtures.hpp"
#include "glp/gcm.hpp"
#include "glp/gla.hpp"
#include "glp/json_io.hpp"
#include "glp/slicer.hpp"

using namespace glp;
using namespace glp::rootsys;

namespace {

int g_failures = 0;

struct Criterion {
  explicit Criterion(std::string n) : name(std::move(n)) {}
  std::string name;
  bool ok = true;
  std::ostringstream detail;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail << "    failed: " << what << "\n";
    }
  }
  ~Criterion() {
    std::cout << "criterion " << name << ": " << (ok ? "PASS" : "FAIL") << "\n";
    if (!ok) {
      std::cout << detail.str();
      ++g_failures;
    }
  }
};

std::map<long, long> slice_sizes(const slicer::GradedRootSystem& g) {
  std::map<long, long> out;
  for (const auto& [q, vs] : g.slices) out[q] = static_cast<long>(vs.size());
  return out;
}

std::string fmt(const std::map<long, long>& m) {
  std::ostringstream os;
  for (const auto& [q, n] : m) os << q << ":" << n << " ";
  return os.str();
}

long choose2(long n) { return n * (n - 1) / 2; }

std::map<long, long> graded_dims(const gla::GradedLieAlgebra& g) {
  std::map<long, long> out;
  for (long d : g.degrees()) ++out[d];
  return out;
}

// The three effectiveness kernels, recomputed directly from the brackets.
struct EffKernels {
  bool effective, quasi, almost;
};

EffKernels effectiveness_kernels(const gla::GradedLieAlgebra& g) {
  auto kernel_dim = [&](const std::vector<int>& dom, auto accept_component) {
    Mat rows(g.dim() * g.dim(), dom.size());
    rows.setZero();
    for (std::size_t d = 0; d < dom.size(); ++d)
      for (int j = 0; j < g.dim(); ++j) {
        if (g.degree(j) >= 0) continue;
        for (const auto& [k, c] : g.bracket(dom[d], j))
          if (accept_component(j, k)) rows(j * g.dim() + k, d) = c;
      }
    return kernel_basis(rows);
  };
  auto gplus = g.indices_where([](long d) { return d >= 0; });
  auto gzero = g.indices_where([](long d) { return d == 0; });
  bool effective =
      kernel_dim(gplus, [&](int j, int) { return g.degree(j) == -1; }).empty();
  bool almost = kernel_dim(gplus, [&](int, int) { return true; }).empty();
  bool quasi = kernel_dim(gzero, [&](int, int) { return true; }).empty();
  if (quasi) {
    // elements of positive degree mapping m into m must vanish
    for (const Vect& v : kernel_dim(gplus, [&](int, int k) { return g.degree(k) >= 0; })) {
      for (std::size_t d = 0; d < gplus.size(); ++d)
        if (v[d] != 0 && g.degree(gplus[d]) > 0) quasi = false;
    }
  }
  return {effective, quasi, almost};
}

void criterion_1() {
  Criterion c{"1 (catalog regression, 13 construction kinds)"};
  std::map<std::string, std::map<long, long>> expected;
  for (long n = 3; n <= 8; ++n)
    expected["B" + std::to_string(n) + "-from-A" + std::to_string(n - 1)] = {
        {-2, choose2(n)}, {-1, n}, {0, n * (n - 1)}, {1, n}, {2, choose2(n)}};
  expected["G2-from-A1-kind3"] = {{-3, 2}, {-2, 1}, {-1, 2}, {0, 2}, {1, 2}, {2, 1}, {3, 2}};
  for (long n = 3; n <= 8; ++n)
    expected["C" + std::to_string(n) + "-from-Sym2"] = {
        {-1, choose2(n + 1)}, {0, n * (n - 1)}, {1, choose2(n + 1)}};
  expected["G2-from-Sym3"] = {{-2, 1}, {-1, 4}, {0, 2}, {1, 4}, {2, 1}};
  for (long n = 4; n <= 8; ++n)
    expected["D" + std::to_string(n) + "-from-Lambda2"] = {
        {-1, choose2(n)}, {0, n * (n - 1)}, {1, choose2(n)}};
  expected["E6-from-Lambda3"] = {{-2, 1}, {-1, 20}, {0, 30}, {1, 20}, {2, 1}};
  expected["E7-from-Lambda3"] = {{-2, 7}, {-1, 35}, {0, 42}, {1, 35}, {2, 7}};
  expected["E8-from-Lambda3"] = {{-3, 8}, {-2, 28}, {-1, 56}, {0, 56},
                                 {1, 56}, {2, 28},  {3, 8}};
  expected["F4-from-spin7"] = {{-2, 7}, {-1, 8}, {0, 18}, {1, 8}, {2, 7}};
  expected["F4-from-C3omega3"] = {{-2, 1}, {-1, 14}, {0, 18}, {1, 14}, {2, 1}};
  expected["E6-from-D5-spin"] = {{-1, 16}, {0, 40}, {1, 16}};
  expected["E7-from-D6-spin"] = {{-2, 1}, {-1, 32}, {0, 60}, {1, 32}, {2, 1}};
  expected["E8-from-D7-spin"] = {{-2, 14}, {-1, 64}, {0, 84}, {1, 64}, {2, 14}};
  expected["E6-double-spin-D4"] = {{-2, 8}, {-1, 16}, {0, 24}, {1, 16}, {2, 8}};
  expected["D6-quaternionic-spin"] = {{-2, 1}, {-1, 16}, {0, 26}, {1, 16}, {2, 1}};
  expected["E7-quaternionic-spin"] = {{-2, 10}, {-1, 32}, {0, 42}, {1, 32}, {2, 10}};

  auto entries = slicer::catalog();
  c.expect(entries.size() == expected.size(), "catalog entry count");
  std::set<std::string> families;
  for (const auto& e : entries) families.insert(e.family);
  c.expect(families.size() == 13, "13 construction kinds");
  for (const auto& e : entries) {
    auto rep = slicer::build_construction(e.name);
    c.expect(rep.ok, e.name + ": internal report");
    auto it = expected.find(e.name);
    if (it == expected.end()) {
      c.expect(false, e.name + ": not covered by the regression table");
      continue;
    }
    auto actual = slice_sizes(rep.graded);
    c.expect(actual == it->second,
             e.name + ": slice sizes, expected " + fmt(it->second) + "got " + fmt(actual));
    auto cls = classify(rep.graded.rs.roots, rep.graded.rs.space);
    c.expect(cls == e.expected_type, e.name + ": type " + cls + " vs " + e.expected_type);
  }
  // the F4 exterior-power entry states its table with the Cartan included
  auto f4 = slicer::build_construction("F4-from-C3omega3");
  std::vector<long> dims;
  for (long q = -2; q <= 2; ++q) dims.push_back(f4.graded.dim(q));
  c.expect(dims == std::vector<long>{1, 14, 22, 14, 1}, "F4-from-C3omega3 graded dimensions");
}

void criterion_2() {
  Criterion c{"2 (rank-4 exceptional dimension table)"};
  auto f4 = gla::chevalley_basis(build_root_system(Family::F, 4), {0, 0, 0, 1});
  auto dims = graded_dims(f4);
  c.expect(dims == std::map<long, long>{{-2, 1}, {-1, 14}, {0, 22}, {1, 14}, {2, 1}},
           "graded dimensions (1,14,22,14,1)");
  c.expect(f4.dim() == 52, "total dimension 52");
}

void criterion_3() {
  Criterion c{"3 (rank-8 exterior-cube completion)"};
  auto rep = slicer::build_construction("E8-from-Lambda3");
  long printed = 0;
  for (long q = -2; q <= 2; ++q) printed += rep.graded.slice_size(q);
  c.expect(printed == 224, "levels -2..2 hold 224 roots");
  c.expect(rep.graded.slice_size(3) == 8 && rep.graded.slice_size(-3) == 8,
           "levels +-3 hold 8 roots each");
  c.expect(rep.graded.rs.roots.size() == 240, "240 roots in total");
  c.expect(classify(rep.graded.rs.roots, rep.graded.rs.space) == "E8", "classifies as E8");
  c.expect(!rep.entry.note.empty(), "completion is flagged in the report");
}

void criterion_4() {
  Criterion c{"4 (marker solver families)"};
  for (int n = 2; n <= 10; ++n) {
    auto base = build_root_system(Family::A, n - 1);
    auto fw = fundamental_weights(base);
    std::set<Rational> norms;
    for (const auto& s : gcm::solve_single_marker(base, fw[0]))
      if (s.cls.kind == gcm::FiniteClass::Finite) norms.insert(s.norm_sq);
    std::set<Rational> expect = {Rational(2), Rational(1)};
    if (n == 2) expect.insert(Rational(2, 3));
    c.expect(norms == expect,
             "standard module, n=" + std::to_string(n) + ": finite norms {2,1" +
                 (n == 2 ? ",2/3" : "") + "}");
  }
  for (int n = 4; n <= 12; ++n) {
    auto base = build_root_system(Family::A, n - 1);
    auto fw = fundamental_weights(base);
    bool finite_exists = false;
    std::set<std::string> types;
    for (const auto& s : gcm::solve_single_marker(base, fw[2]))
      if (s.cls.kind == gcm::FiniteClass::Finite) {
        finite_exists = true;
        types.insert(s.cls.type_label);
      }
    bool expected = (n >= 6 && n <= 8);
    std::ostringstream what;
    what << "exterior cube, n=" << n << ": finite-type solutions exist iff n in {6,7,8}";
    if (finite_exists != expected) {
      what << " (solver finds";
      for (const auto& t : types) what << " " << t;
      what << "; for n=4,5 the cube weight is Weyl-dual to a smaller fundamental weight,"
           << " so these finite extensions are genuine)";
    }
    c.expect(finite_exists == expected, what.str());
  }
}

void criterion_5() {
  Criterion c{"5 (triangular worked examples)"};
  auto d4 = fixtures::orthogonal_nilradical8();
  c.expect(graded_dims(d4) ==
               std::map<long, long>{{-3, 2}, {-2, 3}, {-1, 5}, {0, 1}, {1, 1}},
           "rank-4 orthogonal nilradical dims (2,3,5,1,1)");
  for (long h : {2L, 3L, 4L}) {
    auto t3 = fixtures::triangular3(h);
    c.expect(gla::effectiveness_class(t3) == gla::Effectiveness::AlmostEffective,
             "3x3 family h=" + std::to_string(h) + " almost-but-not-quasi effective");
    for (long k : {2L, 3L, 4L}) {
      auto t4 = fixtures::triangular4(h, k);
      c.expect(gla::effectiveness_class(t4) == gla::Effectiveness::AlmostEffective,
               "4x4 family (h,k)=(" + std::to_string(h) + "," + std::to_string(k) +
                   ") almost-but-not-quasi effective");
      c.expect(gla::reductive_type(t4),
               "4x4 family h=" + std::to_string(h) + " is of reductive type");
    }
  }
  for (long k : {2L, 3L, 4L}) {
    auto t4 = fixtures::triangular4(1, k);
    c.expect(!gla::reductive_type(t4), "4x4 family h=1 is not of reductive type");
  }
}

void criterion_6() {
  Criterion c{"6 (property suites)"};
  // Jordan-Chevalley postconditions on 500 randomized rational matrices.
  std::mt19937 rng(424242);
  std::uniform_int_distribution<int> num(-4, 4), den(1, 3), sz(2, 6);
  for (int trial = 0; trial < 500; ++trial) {
    int n = sz(rng);
    Mat a(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) a(i, j) = Rational(num(rng), den(rng));
    auto [s, nn] = gla::jordan_chevalley(a);
    bool ok = (a == s + nn) && commutator(s, nn).isZero() && is_nilpotent(nn);
    auto p = charpoly(s);
    auto f = poly::monic(poly::divmod(p, poly::gcd(p, poly::derivative(p))).first);
    ok = ok && poly::eval(f, s).isZero();
    RowSpace powers(n * n);
    Mat pw = Mat::Identity(n, n);
    for (int k = 1; k <= n; ++k) {
      pw = pw * a;
      powers.add(flatten(pw));
    }
    ok = ok && powers.contains(flatten(s)) && powers.contains(flatten(nn));
    if (!ok) {
      c.expect(false, "Jordan-Chevalley postconditions, trial " + std::to_string(trial));
      break;
    }
  }

  // Constructed algebras: identities, Killing orthogonality, radical facts,
  // the effectiveness chain, and the fundamental-case collapse.
  std::vector<std::pair<std::string, gla::GradedLieAlgebra>> algebras;
  algebras.push_back({"G2 graded", gla::chevalley_basis(build_root_system(Family::G, 2), {0, 1})});
  algebras.push_back(
      {"B3 graded", gla::chevalley_basis(build_root_system(Family::B, 3), {0, 0, 1})});
  algebras.push_back(
      {"C3 graded", gla::chevalley_basis(build_root_system(Family::C, 3), {0, 0, 1})});
  algebras.push_back(
      {"F4 graded", gla::chevalley_basis(build_root_system(Family::F, 4), {0, 0, 0, 1})});
  algebras.push_back({"triangular3(2)", fixtures::triangular3(2)});
  algebras.push_back({"triangular4(2,3)", fixtures::triangular4(2, 3)});
  algebras.push_back({"orthogonal nilradical", fixtures::orthogonal_nilradical8()});
  algebras.push_back({"sl2 semidirect", fixtures::sl2_semidirect()});
  algebras.push_back({"plane with torus", fixtures::plane_with_action(1, 0, 0, -1)});

  for (auto& [name, g] : algebras) {
    try {
      g.validate();  // antisymmetry, grading, exhaustive Jacobi
    } catch (const Error& e) {
      c.expect(false, name + ": " + e.what());
      continue;
    }
    auto k = gla::killing_form(g);
    for (int i = 0; i < g.dim(); ++i)
      for (int j = 0; j < g.dim(); ++j)
        if (g.degree(i) + g.degree(j) != 0 && k(i, j) != 0)
          c.expect(false, name + ": Killing form not degree-orthogonal");
    auto r = gla::radical(g);
    c.expect(gla::is_ideal(g, r), name + ": radical is an ideal");
    c.expect(gla::is_solvable_subspace(g, r), name + ": radical is solvable");
    auto q = gla::quotient_algebra(g, r);
    c.expect(rank_of(gla::killing_form(q)) == q.dim(),
             name + ": radical quotient has nondegenerate Killing form");
    auto kers = effectiveness_kernels(g);
    c.expect(!(kers.effective && !(kers.quasi && kers.almost)) && !(kers.quasi && !kers.almost),
             name + ": effectiveness implication chain");
    auto cls = gla::effectiveness_class(g);
    c.expect((cls == gla::Effectiveness::Effective) == kers.effective,
             name + ": effectiveness class agrees with the kernels");
  }

  // Fundamental negative part: the three notions coincide on the graded
  // semisimple prolongations, so anything short of effective must be None.
  for (const char* nm : {"G2 graded", "B3 graded", "C3 graded", "F4 graded"}) {
    for (auto& [name, g] : algebras)
      if (name == nm) {
        auto cls = gla::effectiveness_class(g);
        c.expect(cls == gla::Effectiveness::Effective,
                 std::string(nm) + ": effective on a fundamental negative part");
      }
  }
}

void criterion_7() {
  Criterion c{"7 (free Lie dimensions)"};
  auto two = gla::free_lie_dims({{-1, 2}}, 3);
  c.expect(two[-3] == 2, "two generators: third layer has dimension 2");
  long checked = 0;
  for (long n1 = 0; n1 <= 6; ++n1)
    for (long n2 = 0; n1 + n2 <= 6; ++n2)
      for (long n3 = 0; n1 + n2 + n3 <= 6; ++n3)
        for (long n4 = 0; n1 + n2 + n3 + n4 <= 6; ++n4)
          for (long n5 = 0; n1 + n2 + n3 + n4 + n5 <= 6; ++n5) {
            if (n1 + n2 + n3 + n4 + n5 == 0) continue;
            std::map<long, long> p = {{-1, n1}, {-2, n2}, {-3, n3}, {-4, n4}, {-5, n5}};
            if (gla::free_lie_dims_hall(p, 5) != gla::free_lie_dims_witt(p, 5)) {
              c.expect(false, "Hall count mismatch at a profile");
              return;
            }
            ++checked;
          }
  c.expect(checked == 461, "profile sweep covered all 461 profiles");
}

void criterion_8() {
  Criterion c{"8 (Weyl machinery)"};
  // 2^m spin dimensions; the rank-one orthogonal algebra is realized as A1.
  {
    auto a1 = build_root_system(Family::A, 1);
    auto fw = fundamental_weights(a1);
    c.expect(weyl_dim(a1, fw[0]) == 2, "spin dimension 2 at m=1");
  }
  for (int m = 2; m <= 7; ++m) {
    auto b = build_root_system(Family::B, m);
    auto fw = fundamental_weights(b);
    c.expect(weyl_dim(b, fw[m - 1]) == Integer(1) << m,
             "spin dimension 2^m at m=" + std::to_string(m));
  }
  // Minuscule weights of rank <= 8: weight set = Weyl orbit, multiplicity 1.
  std::vector<std::pair<RootSystem, std::vector<int>>> cases;
  for (int n = 1; n <= 8; ++n) {
    std::vector<int> all;
    for (int i = 1; i <= n; ++i) all.push_back(i);
    cases.push_back({build_root_system(Family::A, n), all});
  }
  for (int n = 2; n <= 8; ++n) cases.push_back({build_root_system(Family::B, n), {n}});
  for (int n = 2; n <= 8; ++n) cases.push_back({build_root_system(Family::C, n), {1}});
  for (int n = 4; n <= 8; ++n)
    cases.push_back({build_root_system(Family::D, n), {1, n - 1, n}});
  cases.push_back({build_root_system(Family::E, 6), {1, 6}});
  cases.push_back({build_root_system(Family::E, 7), {7}});
  for (const auto& [rs, indices] : cases) {
    auto fw = fundamental_weights(rs);
    for (int i : indices) {
      auto ws = weight_set(rs, fw[i - 1]);
      auto orbit = weyl_orbit(rs, fw[i - 1]);
      bool ok = ws.weights == orbit;
      for (const auto& [w, m] : ws.multiplicities) ok = ok && m == 1;
      c.expect(ok, rs.type_label + " fundamental weight " + std::to_string(i) +
                       ": minuscule weight set is a single free orbit");
    }
  }
}

void criterion_9() {
  Criterion c{"9 (spin reality classifier)"};
  for (int p = 0; p <= 16; ++p)
    for (int q = 0; p + q <= 16; ++q) {
      if (p + q < 1) continue;
      int r = ((q - p) % 8 + 8) % 8;
      slicer::Reality want = (r == 0 || r == 1 || r == 7) ? slicer::Reality::Real
                             : (r == 2 || r == 6)         ? slicer::Reality::Complex
                                                          : slicer::Reality::Quaternionic;
      if (slicer::spin_reality(p, q) != want) {
        c.expect(false,
                 "signature (" + std::to_string(p) + "," + std::to_string(q) + ")");
        return;
      }
    }
}

void criterion_10() {
  Criterion c{"10 (module regrading of the worked examples)"};
  std::vector<std::pair<std::string, gla::GradedLieAlgebra>> examples;
  for (long h : {2L, 3L, 4L}) {
    examples.push_back({"3x3 h=" + std::to_string(h), fixtures::triangular3(h)});
    for (long k : {2L, 3L, 4L})
      examples.push_back(
          {"4x4 (h,k)=(" + std::to_string(h) + "," + std::to_string(k) + ")",
           fixtures::triangular4(h, k)});
  }
  examples.push_back({"orthogonal nilradical", fixtures::orthogonal_nilradical8()});
  for (auto& [name, g] : examples) {
    auto prol = gla::characteristic_prolongation(g);
    if (!prol.matrices()) {
      c.expect(false, name + ": prolongation lost its matrix realization");
      continue;
    }
    gla::GradedModule mod;
    try {
      mod = gla::regrade_module(prol, *prol.matrices());
    } catch (const Error& e) {
      c.expect(false, name + ": " + e.what());
      continue;
    }
    bool compatible = true;
    for (int i = 0; i < prol.dim(); ++i) {
      long p = prol.degree(i);
      for (int a = 0; a < mod.dim; ++a)
        for (int b = 0; b < mod.dim; ++b)
          if (mod.action[i](a, b) != 0 && mod.degrees[a] != mod.degrees[b] + p)
            compatible = false;
    }
    c.expect(compatible, name + ": regraded action is degree compatible");
  }
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  if (g_failures) {
    std::cout << g_failures << " criterion(s) failed\n";
    return 1;
  }
  std::cout << "all criteria passed\n";
  return 0;
}
