#ifndef GLP_SPACE_HPP
#define GLP_SPACE_HPP

#include "glp/linalg.hpp"

namespace glp::exactspace {

using glp::Mat;
using glp::Rational;
using glp::Vect;

// Rational vector space with a symmetric bilinear form b.  Coordinates
// 1..base_dim form an orthonormal Euclidean block; the remaining coordinates
// are formal marker directions, orthogonal to the base block.  Markers that
// would need irrational coordinates are represented abstractly by a fresh
// direction with a prescribed rational self-inner-product; only b-values
// matter downstream.
struct AmbientSpace {
  int dim = 0;
  int base_dim = 0;
  Mat gram;

  AmbientSpace() = default;
  AmbientSpace(int dim_, int base_dim_, Mat gram_);

  static AmbientSpace euclidean(int n);

  Vect zero() const { return Vect::Zero(dim); }
  // Unit coordinate vector e_i (0-based).
  Vect e(int i) const;
};

Rational inner(const AmbientSpace& space, const Vect& u, const Vect& v);

// 2 b(a,b) / b(b,b); the pairing <a|b> against the coroot of b.
Rational pairing(const AmbientSpace& space, const Vect& a, const Vect& b);

AmbientSpace extend_with_markers(const AmbientSpace& space, int k, const Mat& marker_gram);

// Zero-pads a vector of the original space into an extension of it.
Vect lift(const Vect& v, int new_dim);

}  // namespace glp::exactspace

#endif
