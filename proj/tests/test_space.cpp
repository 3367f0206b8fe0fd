#include <doctest.h>

#include "glp/space.hpp"

using namespace glp;
using namespace glp::exactspace;

TEST_CASE("inner products on the orthonormal base") {
  auto sp = AmbientSpace::euclidean(3);
  CHECK(inner(sp, sp.e(0), sp.e(0)) == 1);
  CHECK(inner(sp, sp.e(0), sp.e(1)) == 0);
  CHECK_THROWS_AS(inner(sp, Vect::Zero(2), sp.e(0)), Error);
}

TEST_CASE("weight-space inner products match the closed form") {
  // sl_6 weights: omega_j = e_1+..+e_j - (j/6) e_0, (omega_j|omega_k) = j(1-k/6).
  auto sp = AmbientSpace::euclidean(6);
  Vect e0 = Vect::Zero(6);
  for (int i = 0; i < 6; ++i) e0[i] = 1;
  auto omega = [&](int j) {
    Vect w = Vect::Zero(6);
    for (int i = 0; i < j; ++i) w[i] = 1;
    w -= Rational(j, 6) * e0;
    return w;
  };
  CHECK(inner(sp, omega(1), omega(2)) == Rational(2, 3));
  for (int j = 1; j <= 5; ++j)
    for (int k = j; k <= 5; ++k)
      CHECK(inner(sp, omega(j), omega(k)) == Rational(j) * (1 - Rational(k, 6)));
}

TEST_CASE("markers extend the form orthogonally") {
  auto sp = AmbientSpace::euclidean(6);
  Mat mg(1, 1);
  mg(0, 0) = Rational(1, 2);
  auto ext = extend_with_markers(sp, 1, mg);
  CHECK(ext.dim == 7);
  Vect eps = ext.e(6);
  CHECK(inner(ext, eps, eps) == Rational(1, 2));

  // |omega_3 + eps|^2 = 3 - 9/6 + 1/2 = 2 in the sl_6 weight space.
  Vect w = ext.zero();
  for (int i = 0; i < 3; ++i) w[i] = 1;
  for (int i = 0; i < 6; ++i) w[i] -= Rational(3, 6);
  CHECK(inner(ext, w, w) == Rational(3, 2));
  Vect v = w + eps;
  CHECK(inner(ext, v, v) == 2);

  // pre-existing inner products survive the extension
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j)
      CHECK(inner(ext, ext.e(i), ext.e(j)) == inner(sp, sp.e(i), sp.e(j)));
}

TEST_CASE("double marker block for paired spin weights") {
  auto sp = AmbientSpace::euclidean(4);
  Mat mg(2, 2);
  mg << Rational(1), Rational(-1, 2), Rational(-1, 2), Rational(1);
  auto ext = extend_with_markers(sp, 2, mg);
  CHECK(inner(ext, ext.e(4), ext.e(5)) == Rational(-1, 2));
  CHECK(inner(ext, ext.e(4) + ext.e(5), ext.e(4) + ext.e(5)) == 1);
}

TEST_CASE("pairing and isotropic errors") {
  auto sp = AmbientSpace::euclidean(3);
  Vect a1 = sp.e(0) - sp.e(1), a2 = sp.e(1) - sp.e(2);
  CHECK(pairing(sp, a1, a1) == 2);
  CHECK(pairing(sp, a1, a2) == -1);
  // B_2 pattern
  auto sp2 = AmbientSpace::euclidean(2);
  Vect b1 = sp2.e(0) - sp2.e(1), b2 = sp2.e(1);
  CHECK(pairing(sp2, b1, b2) == -2);
  CHECK(pairing(sp2, b2, b1) == -1);
  Mat mg(1, 1);
  mg(0, 0) = 0;
  auto ext = extend_with_markers(sp, 1, mg);
  CHECK_THROWS_AS(pairing(ext, ext.e(0), ext.e(3)), Error);
}

TEST_CASE("bilinearity and symmetry under a randomized sweep") {
  auto sp = AmbientSpace::euclidean(4);
  Mat mg(1, 1);
  mg(0, 0) = Rational(2, 7);
  auto ext = extend_with_markers(sp, 1, mg);
  unsigned state = 12345;
  auto next = [&]() {
    state = state * 1103515245u + 12345u;
    return Rational((state >> 16) % 11) - 5;
  };
  for (int trial = 0; trial < 50; ++trial) {
    Vect u(5), v(5), w(5);
    for (int i = 0; i < 5; ++i) {
      u[i] = next();
      v[i] = next();
      w[i] = next();
    }
    Rational a = next();
    CHECK(inner(ext, u, v) == inner(ext, v, u));
    CHECK(inner(ext, u + a * w, v) == inner(ext, u, v) + a * inner(ext, w, v));
    Rational nv = inner(ext, v, v);
    if (nv != 0) CHECK(pairing(ext, u, v) * nv == 2 * inner(ext, u, v));
  }
}
