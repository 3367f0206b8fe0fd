#include "glp/space.hpp"

namespace glp::exactspace {

AmbientSpace::AmbientSpace(int dim_, int base_dim_, Mat gram_)
    : dim(dim_), base_dim(base_dim_), gram(std::move(gram_)) {
  if (dim < 0 || base_dim < 0 || base_dim > dim)
    throw Error("BadSpace", "base_dim must lie between 0 and dim");
  if (gram.rows() != dim || gram.cols() != dim)
    throw Error("DimensionMismatch", "gram must be dim x dim");
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < i; ++j)
      if (gram(i, j) != gram(j, i)) throw Error("BadSpace", "gram must be symmetric");
  for (int i = 0; i < base_dim; ++i)
    for (int j = 0; j < base_dim; ++j)
      if (gram(i, j) != Rational(i == j ? 1 : 0))
        throw Error("BadSpace", "base block of gram must be the identity");
  for (int i = 0; i < base_dim; ++i)
    for (int j = base_dim; j < dim; ++j)
      if (gram(i, j) != 0) throw Error("BadSpace", "markers must be orthogonal to the base");
}

AmbientSpace AmbientSpace::euclidean(int n) {
  return AmbientSpace(n, n, Mat::Identity(n, n));
}

Vect AmbientSpace::e(int i) const {
  if (i < 0 || i >= dim) throw Error("DimensionMismatch", "coordinate index out of range");
  Vect v = Vect::Zero(dim);
  v[i] = 1;
  return v;
}

Rational inner(const AmbientSpace& space, const Vect& u, const Vect& v) {
  if (u.size() != space.dim || v.size() != space.dim)
    throw Error("DimensionMismatch", "vector does not belong to this space");
  Rational acc = 0;
  for (int i = 0; i < space.dim; ++i) {
    if (u[i] == 0) continue;
    for (int j = 0; j < space.dim; ++j) {
      if (v[j] == 0 || space.gram(i, j) == 0) continue;
      acc += u[i] * space.gram(i, j) * v[j];
    }
  }
  return acc;
}

Rational pairing(const AmbientSpace& space, const Vect& a, const Vect& b) {
  Rational nb = inner(space, b, b);
  if (nb == 0) throw Error("IsotropicVector", "pairing against a b-isotropic vector");
  return 2 * inner(space, a, b) / nb;
}

AmbientSpace extend_with_markers(const AmbientSpace& space, int k, const Mat& marker_gram) {
  if (k <= 0) throw Error("BadSpace", "marker count must be positive");
  if (marker_gram.rows() != k || marker_gram.cols() != k)
    throw Error("DimensionMismatch", "marker gram must be k x k");
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < i; ++j)
      if (marker_gram(i, j) != marker_gram(j, i))
        throw Error("BadSpace", "marker gram must be symmetric");
  int n = space.dim + k;
  Mat g = Mat::Zero(n, n);
  g.topLeftCorner(space.dim, space.dim) = space.gram;
  g.bottomRightCorner(k, k) = marker_gram;
  return AmbientSpace(n, space.base_dim, std::move(g));
}

Vect lift(const Vect& v, int new_dim) {
  if (v.size() > new_dim) throw Error("DimensionMismatch", "cannot lift into a smaller space");
  Vect w = Vect::Zero(new_dim);
  w.head(v.size()) = v;
  return w;
}

}  // namespace glp::exactspace
