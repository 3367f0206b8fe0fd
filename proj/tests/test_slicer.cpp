#include <doctest.h>

#include "glp/slicer.hpp"

using namespace glp;
using namespace glp::slicer;
using namespace glp::rootsys;

TEST_CASE("slicing by a degree functional") {
  auto f4 = build_root_system(Family::F, 4);
  auto g = slice(f4, {0, 0, 0, 1}, 4);
  CHECK(g.dim(-2) == 1);
  CHECK(g.dim(-1) == 14);
  CHECK(g.dim(0) == 22);
  CHECK(g.dim(1) == 14);
  CHECK(g.dim(2) == 1);
  auto [depth, height] = depth_height(g);
  CHECK(depth == 2);
  CHECK(height == 2);
  CHECK(check_symmetry(g));
  CHECK(check_fundamental(g));
}

TEST_CASE("trivial grading has a single slice") {
  auto b3 = build_root_system(Family::B, 3);
  auto g = slice(b3, {0, 0, 0}, 3);
  CHECK(g.slice_size(0) == 18);
  auto [depth, height] = depth_height(g);
  CHECK(depth == 0);
  CHECK(height == 0);
  CHECK(check_symmetry(g));
}

TEST_CASE("slice sizes for the doubly graded orthogonal family") {
  for (int n = 3; n <= 6; ++n) {
    auto b = build_root_system(Family::B, n);
    std::vector<long> deg(n, 0);
    deg[n - 1] = 1;
    auto g = slice(b, deg, n);
    CHECK(g.slice_size(-2) == n * (n - 1) / 2);
    CHECK(g.slice_size(-1) == n);
    CHECK(g.slice_size(0) == n * (n - 1));
    CHECK(g.dim(0) == n * n);
  }
}

TEST_CASE("symmetry detects a mutilated grading") {
  auto f4 = build_root_system(Family::F, 4);
  auto g = slice(f4, {0, 0, 0, 1}, 4);
  GradedRootSystem broken = g;
  broken.slices.erase(2);
  CHECK(!check_symmetry(broken));
}

TEST_CASE("spin reality classifier") {
  CHECK(spin_reality(3, 4) == Reality::Real);
  CHECK(spin_reality(2, 5) == Reality::Quaternionic);
  CHECK(spin_reality(0, 8) == Reality::Real);
  CHECK(spin_reality(1, 6) == Reality::Quaternionic);
  CHECK(spin_reality(2, 6) == Reality::Quaternionic);
  CHECK(spin_reality(0, 2) == Reality::Complex);
  CHECK_THROWS_AS(spin_reality(0, 0), Error);
}

TEST_CASE("catalog inventory") {
  auto entries = catalog();
  CHECK(entries.size() == 30);
  std::set<std::string> families;
  for (const auto& e : entries) families.insert(e.family);
  CHECK(families.size() == 13);
  CHECK_THROWS_AS(build_construction("nonsense"), Error);
}

TEST_CASE("catalog names accept the Greek spelling") {
  auto rep = build_construction("F4-from-C3ω3");
  CHECK(rep.entry.name == "F4-from-C3omega3");
  CHECK(rep.ok);
}

TEST_CASE("representative constructions verify") {
  for (const char* name : {"F4-from-C3omega3", "G2-from-A1-kind3", "E7-from-Lambda3",
                           "E8-from-D7-spin", "D6-quaternionic-spin"}) {
    auto rep = build_construction(name);
    CHECK(rep.ok);
    for (const auto& c : rep.checks) CHECK_MESSAGE(c.pass, name, ": ", c.name);
  }
  auto e7 = build_construction("E7-from-Lambda3");
  CHECK(e7.graded.slice_size(1) == 35);
  CHECK(e7.graded.slice_size(2) == 7);
  CHECK(e7.graded.slice_size(0) == 42);
  auto e8 = build_construction("E8-from-D7-spin");
  CHECK(e8.graded.slice_size(1) == 64);
  CHECK(e8.graded.slice_size(2) == 14);
  CHECK(e8.graded.slice_size(0) == 84);
}

TEST_CASE("the completed exterior-cube rank-8 entry is flagged") {
  auto rep = build_construction("E8-from-Lambda3");
  CHECK(rep.ok);
  CHECK(rep.entry.expected_depth == 3);
  CHECK(!rep.entry.note.empty());
  long printed = 0;
  for (long q = -2; q <= 2; ++q) printed += rep.graded.slice_size(q);
  CHECK(printed == 224);
  CHECK(rep.graded.rs.roots.size() == 240);
  CHECK(rep.graded.slice_size(3) == 8);
  CHECK(rep.graded.slice_size(-3) == 8);
}

TEST_CASE("fundamentality fails for a gapped grading") {
  // Drop the level -1 layer of a depth-2 grading: level -2 can no longer be
  // reached from level -1.
  auto f4 = build_root_system(Family::F, 4);
  auto g = slice(f4, {0, 0, 0, 1}, 4);
  GradedRootSystem gapped = g;
  gapped.slices[-1].clear();
  CHECK(!check_fundamental(gapped));
}

TEST_CASE("catalog systems carry Chevalley bases in their marker spaces") {
  // Builds the graded algebra of an entry from its extended simple system;
  // exercises structure constants over a nontrivial marker Gram.
  for (const char* name : {"F4-from-spin7", "G2-from-Sym3", "B3-from-A2"}) {
    auto rep = build_construction(name);
    REQUIRE(rep.ok);
    rootsys::RootSystem rs = rep.graded.rs;
    rs.simple_roots = rep.extended_simple_roots;
    auto g = gla::chevalley_basis(rs, rep.extended_simple_degrees);
    std::map<long, long> dims;
    for (long d : g.degrees()) ++dims[d];
    for (const auto& [q, n] : dims) CHECK(n == rep.graded.dim(q));
    CHECK(g.dim() == static_cast<int>(rs.roots.size()) + rep.graded.cartan_dim);
    // faithful degree-0 action forces the layer symmetry
    CHECK(gla::effectiveness_class(g) == gla::Effectiveness::Effective);
  }
}
