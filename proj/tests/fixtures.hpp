#ifndef GLP_TESTS_FIXTURES_HPP
#define GLP_TESTS_FIXTURES_HPP

#include "glp/gla.hpp"

// Shared worked examples: triangular families on K^3 and K^4, the rank-4
// orthogonal nilradical on K^8, and a semidirect product used for radical and
// Levi checks.

namespace glp::fixtures {

inline Mat mat_unit(int n, int i, int j) {
  Mat m = Mat::Zero(n, n);
  m(i, j) = 1;
  return m;
}

inline Mat diag(const std::vector<long>& d) {
  Mat m = Mat::Zero(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

// Strictly upper triangular 3x3 matrices graded by diag(0,h,1).
inline gla::GradedLieAlgebra triangular3(long h) {
  std::vector<Mat> gens = {mat_unit(3, 0, 1), mat_unit(3, 0, 2), mat_unit(3, 1, 2)};
  return gla::from_matrices(gens, diag({0, h, 1}));
}

// Strictly upper triangular 4x4 matrices graded by diag(0,h,-k,1).
inline gla::GradedLieAlgebra triangular4(long h, long k) {
  std::vector<Mat> gens;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) gens.push_back(mat_unit(4, i, j));
  return gla::from_matrices(gens, diag({0, h, -k, 1}));
}

// Strictly upper triangular 8x8 matrices antisymmetric about the second
// diagonal, graded by diag(-1,-2,-1,0,0,1,2,1); 12-dimensional.
inline gla::GradedLieAlgebra orthogonal_nilradical8() {
  std::vector<Mat> gens;
  for (int i = 0; i < 8; ++i)
    for (int j = i + 1; j < 8; ++j) {
      if (i + j == 7) continue;  // fixed by the reflection, forced to zero
      gens.push_back(mat_unit(8, i, j) - mat_unit(8, 7 - j, 7 - i));
    }
  return gla::from_matrices(gens, diag({-1, -2, -1, 0, 0, 1, 2, 1}));
}

// sl_2 acting on K^2 as an abelian ideal in degrees (0,0,0,-1,-1).
inline gla::GradedLieAlgebra sl2_semidirect() {
  using gla::SparseVec;
  // basis: H, X, Y, v1, v2
  std::vector<std::tuple<int, int, SparseVec>> entries = {
      {0, 1, {{1, Rational(2)}}},   // [H,X] = 2X
      {0, 2, {{2, Rational(-2)}}},  // [H,Y] = -2Y
      {1, 2, {{0, Rational(1)}}},   // [X,Y] = H
      {0, 3, {{3, Rational(1)}}},   // [H,v1] = v1
      {0, 4, {{4, Rational(-1)}}},  // [H,v2] = -v2
      {1, 4, {{3, Rational(1)}}},   // [X,v2] = v1
      {2, 3, {{4, Rational(1)}}},   // [Y,v1] = v2
  };
  auto g = gla::GradedLieAlgebra::from_table({"H", "X", "Y", "v1", "v2"}, {0, 0, 0, -1, -1},
                                             entries);
  g.validate();
  return g;
}

// Abelian plane in degree -1 with a prescribed one-dimensional action in
// degree 0.
inline gla::GradedLieAlgebra plane_with_action(const Rational& a11, const Rational& a12,
                                               const Rational& a21, const Rational& a22) {
  using gla::SparseVec;
  std::vector<std::tuple<int, int, SparseVec>> entries;
  SparseVec c1, c2;
  if (a11 != 0) c1.push_back({1, a11});
  if (a21 != 0) c1.push_back({2, a21});
  if (a12 != 0) c2.push_back({1, a12});
  if (a22 != 0) c2.push_back({2, a22});
  if (!c1.empty()) entries.push_back({0, 1, c1});
  if (!c2.empty()) entries.push_back({0, 2, c2});
  auto g = gla::GradedLieAlgebra::from_table({"t", "v1", "v2"}, {0, -1, -1}, entries);
  g.validate();
  return g;
}

}  // namespace glp::fixtures

#endif
