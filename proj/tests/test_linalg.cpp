#include <doctest.h>

#include "glp/linalg.hpp"

using namespace glp;

TEST_CASE("kernel and solve are exact") {
  Mat a(2, 3);
  a << 1, 2, 3, 2, 4, 6;
  CHECK(rank_of(a) == 1);
  auto k = kernel_basis(a);
  CHECK(k.size() == 2);
  for (const auto& v : k) CHECK((a * v).isZero());

  Mat b(2, 2);
  b << Rational(1, 3), 1, 0, Rational(5, 7);
  Vect rhs(2);
  rhs << 1, 1;
  auto x = solve_linear(b, rhs);
  REQUIRE(x);
  CHECK(b * *x == rhs);

  Mat c(2, 1);
  c << 1, 0;
  Vect bad(2);
  bad << 0, 1;
  CHECK(!solve_linear(c, bad));
}

TEST_CASE("row space tracks coordinates") {
  RowSpace sp(3);
  Vect v1(3), v2(3), v3(3);
  v1 << 1, 1, 0;
  v2 << 0, 1, 1;
  v3 << 1, 2, 1;  // v1 + v2
  CHECK(sp.add_tracked(v1));
  CHECK(sp.add_tracked(v2));
  CHECK(!sp.add_tracked(v3));
  auto c = sp.coordinates(v3);
  REQUIRE(c);
  CHECK((*c)[0] == 1);
  CHECK((*c)[1] == 1);
  CHECK((*c)[2] == 0);
  Vect out(3);
  out << 1, 0, 0;
  CHECK(!sp.coordinates(out));
}

TEST_CASE("characteristic polynomial by exact Leverrier") {
  Mat a(2, 2);
  a << 1, 1, 0, 1;
  auto p = charpoly(a);  // t^2 - 2t + 1
  REQUIRE(p.size() == 3);
  CHECK(p[0] == 1);
  CHECK(p[1] == -2);
  CHECK(p[2] == 1);
}

TEST_CASE("polynomial gcd and extended gcd") {
  // f = (t-1)^2 (t+2), f' share (t-1)
  std::vector<Rational> f = poly::mul(poly::mul({-1, 1}, {-1, 1}), {2, 1});
  auto g = poly::gcd(f, poly::derivative(f));
  REQUIRE(g.size() == 2);  // t - 1
  CHECK(g[0] == -1);
  CHECK(g[1] == 1);
  auto sqf = poly::monic(poly::divmod(f, g).first);
  auto eg = poly::ext_gcd(sqf, poly::derivative(sqf));
  REQUIRE(eg.g.size() == 1);  // coprime
  auto lhs = poly::sub(poly::mul(eg.u, sqf), poly::mul({0 - eg.v[0]}, {0}));
  // u f + v f' == 1
  auto total = poly::normalize(
      poly::sub(poly::mul(eg.u, sqf), poly::mul(poly::sub({}, eg.v), poly::derivative(sqf))));
  REQUIRE(total.size() == 1);
  CHECK(total[0] == 1);
}

TEST_CASE("nilpotency test") {
  Mat n(3, 3);
  n.setZero();
  n(0, 1) = 1;
  n(1, 2) = 5;
  CHECK(is_nilpotent(n));
  Mat d = Mat::Identity(3, 3);
  CHECK(!is_nilpotent(d));
}
