#ifndef GLP_GCM_HPP
#define GLP_GCM_HPP

#include "glp/rootsys.hpp"

namespace glp::gcm {

using exactspace::AmbientSpace;
using rootsys::RootSystem;

// Integer matrix in the row convention a_ij = 2 b(a_i,a_j) / b(a_i,a_i),
// together with the symmetrizing Gram matrix of the realized simple roots.
struct GeneralizedCartanMatrix {
  Eigen::MatrixXi entries;
  Mat sym_gram;
};

enum class FiniteClass { Finite, Affine, Indefinite };

struct GcmClass {
  FiniteClass kind;
  std::string type_label;  // set for Finite only
};

std::string to_string(FiniteClass c);

// base simple roots (lifted into `space`) followed by the added simple roots.
GeneralizedCartanMatrix build_gcm(const RootSystem& base, const AmbientSpace& space,
                                  const std::vector<Vect>& added_simple_roots);

// Finite iff the symmetrized matrix is positive definite; affine iff positive
// semidefinite with a one-dimensional kernel per diagram component.  Exact
// leading-minor / characteristic-coefficient tests, no numerics.
GcmClass classify_gcm(const GeneralizedCartanMatrix& g);

struct MarkerSolution {
  Rational b_eps;    // b(eps,eps)
  Rational norm_sq;  // |omega+eps|^2, the admissible denominator
  GcmClass cls;
};

// Sweep bound for the admissible-denominator search; reads
// GLP_MAX_MARKER_DENOM when set, defaults to 24.
int default_max_denom();

// All admissible values of b(eps,eps) for a single marker attached to an
// extremal weight of the base, each annotated with the finiteness class of
// the extended matrix.  The extremal weight may be lowest or highest; it is
// normalized to lowest internally.  Candidates are the complete divisor
// family d = g/t, t = 1..max_denom, where g is the rational gcd of the
// nonzero values 2(alpha|omega); ordered by decreasing d.
std::vector<MarkerSolution> solve_single_marker(const RootSystem& base, const Vect& extremal,
                                                int max_denom = 0);

struct MarkerProblem {
  RootSystem base;
  std::vector<Vect> lowest_weights;
};

MarkerProblem make_marker_problem(const RootSystem& base, const std::vector<Vect>& extremal_weights);

struct MarkerCheck {
  bool ok = true;
  std::vector<std::string> violations;
};

// Feasibility of a proposed marker Gram block: positivity of the new root
// norms, integrality of the mixed and cross entries, non-positivity of the
// cross inner products, and pairwise realizability of the markers as
// independent directions (Cauchy bound; vacuous for a single marker).
MarkerCheck check_multi_marker(const MarkerProblem& problem, const Mat& marker_gram);

}  // namespace glp::gcm

#endif
