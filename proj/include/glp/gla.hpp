#ifndef GLP_GLA_HPP
#define GLP_GLA_HPP

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "glp/rootsys.hpp"

namespace glp::gla {

using rootsys::RootSystem;

using SparseVec = std::vector<std::pair<int, Rational>>;  // sorted by index

// Finite dimensional Z-graded Lie algebra given by a basis, an integer degree
// per basis element and a rational structure-constant table, optionally
// carried by a concrete matrix realization.
class GradedLieAlgebra {
public:
  GradedLieAlgebra() = default;
  // entries hold (i, j, [e_i,e_j]) for i < j; the rest follows by antisymmetry.
  static GradedLieAlgebra from_table(std::vector<std::string> names, std::vector<long> degrees,
                                     const std::vector<std::tuple<int, int, SparseVec>>& entries);

  int dim() const { return static_cast<int>(degrees_.size()); }
  const std::vector<std::string>& basis_names() const { return names_; }
  const std::vector<long>& degrees() const { return degrees_; }
  long degree(int i) const { return degrees_[i]; }

  const SparseVec& bracket(int i, int j) const { return table_[i][j]; }
  Rational structure_constant(int i, int j, int k) const;
  Vect bracket_vec(const Vect& x, const Vect& y) const;
  Mat ad(int i) const;
  Mat ad_vec(const Vect& x) const;

  const std::optional<std::vector<Mat>>& matrices() const { return matrices_; }
  const std::optional<Mat>& grading_matrix() const { return grading_matrix_; }
  void attach_matrices(std::vector<Mat> ms, std::optional<Mat> grading = std::nullopt);

  // Indices of basis elements with degrees in the given sign class.
  std::vector<int> indices_where(const std::function<bool(long)>& pred) const;

  // Antisymmetry, grading compatibility, the Jacobi identity (exhaustive over
  // basis triples) and, when present, agreement of the matrix realization
  // with the bracket table.  Throws on the first violation.
  void validate() const;

private:
  std::vector<std::string> names_;
  std::vector<long> degrees_;
  std::vector<std::vector<SparseVec>> table_;
  std::optional<std::vector<Mat>> matrices_;
  std::optional<Mat> grading_matrix_;

  friend GradedLieAlgebra chevalley_basis(const RootSystem&, const std::vector<long>&);
  friend GradedLieAlgebra from_matrices(const std::vector<Mat>&, const Mat&);
  friend GradedLieAlgebra characteristic_prolongation(const GradedLieAlgebra&);
  friend GradedLieAlgebra quotient_algebra(const GradedLieAlgebra&, const std::vector<Vect>&);
};

// Semisimple algebra of the given finite root system in a Chevalley basis
// (extraspecial-pair sign convention), graded by the degree functional on the
// simple roots.  Structure constants are integers; Jacobi is verified.
GradedLieAlgebra chevalley_basis(const RootSystem& rs, const std::vector<long>& degree_on_simple);

// Lie closure of the generators inside gl(n), graded by ad of an integer
// diagonal matrix; the entry block (i,j) is homogeneous of degree k_i - k_j.
GradedLieAlgebra from_matrices(const std::vector<Mat>& generators, const Mat& grading_element);

Mat killing_form(const GradedLieAlgebra& g);

// Basis of the solvable radical: the Killing-orthogonal of [g,g], returned as
// homogeneous vectors.
std::vector<Vect> radical(const GradedLieAlgebra& g);

std::vector<Vect> derived_subalgebra(const GradedLieAlgebra& g);
bool is_solvable_subspace(const GradedLieAlgebra& g, std::vector<Vect> basis);
bool is_ideal(const GradedLieAlgebra& g, const std::vector<Vect>& basis);

// Quotient by an ideal (used for radical-quotient checks); the grading is
// inherited from the surviving coordinate basis vectors.
GradedLieAlgebra quotient_algebra(const GradedLieAlgebra& g, const std::vector<Vect>& ideal);

enum class Effectiveness { Effective, QuasiEffective, AlmostEffective, None };
std::string to_string(Effectiveness e);

// Strongest vanishing condition satisfied by the nonnegative part acting on
// the negative part; the implication chain is re-checked internally.
Effectiveness effectiveness_class(const GradedLieAlgebra& g);

// Coordinates of a degree-0 element E with [E, x] = deg(x) x, when one exists.
std::optional<Vect> characteristic_element(const GradedLieAlgebra& g);

// g itself when characteristic, otherwise g extended by an adjoined grading
// derivation in degree 0.
GradedLieAlgebra characteristic_prolongation(const GradedLieAlgebra& g);

// Exact Jordan-Chevalley split A = S + N over the rationals, by the Newton
// iteration on the squarefree part of the characteristic polynomial.
std::pair<Mat, Mat> jordan_chevalley(const Mat& a);

// Smallest matrix Lie algebra containing the span of the inputs and closed
// under taking semisimple and nilpotent parts of its elements.
std::vector<Mat> decomposable_envelope(const std::vector<Mat>& elems);

// Adjoint action of the coordinate vector x restricted to the span of the
// basis elements listed in cols (matrix in that sub-basis).
Mat restricted_ad(const GradedLieAlgebra& g, const Vect& x, const std::vector<int>& cols);

// Degree-0 slice of the nilradical: elements of the degree-0 radical slice
// acting nilpotently on the negative part.  Requires almost effectiveness.
std::vector<Vect> nilradical_degree0(const GradedLieAlgebra& g);
bool reductive_type(const GradedLieAlgebra& g);

// True iff the action of the degree-0 part on the negative part equals its
// decomposable envelope.  Requires almost effectiveness.
bool decomposability_check(const GradedLieAlgebra& g);

// Checks that s_basis spans a graded subalgebra with nondegenerate intrinsic
// Killing form that complements the radical.  The optional flag additionally
// requires the degree-0 radical slice to commute with the candidate factor.
bool verify_levi(const GradedLieAlgebra& g, const std::vector<Vect>& s_basis,
                 bool require_radical_commutes = false);

std::vector<Vect> centralizer_in_degree0(const GradedLieAlgebra& g);

// All matrices commuting with every element of the list.
std::vector<Mat> commutant(const std::vector<Mat>& action);

struct GradedModule {
  int dim = 0;
  std::vector<long> degrees;  // one per coordinate of the module
  std::vector<Mat> action;    // one matrix per algebra basis element
};

// Regrades a module of a characteristic algebra: coordinates are grouped by
// generalized eigenvalue of the action of the characteristic element, and the
// common integer shift is chosen to minimize |sum_q q dim V_q|.
GradedModule regrade_module(const GradedLieAlgebra& g, const std::vector<Mat>& action);

// Graded dimensions of the free Lie algebra on generators placed in negative
// degrees, by Hall-tree enumeration cross-checked against the graded Witt
// formula.
std::map<long, long> free_lie_dims(const std::map<long, long>& generator_dims, long depth_cutoff);

// Independent counting routes, exposed for cross-checks.
std::map<long, long> free_lie_dims_witt(const std::map<long, long>& generator_dims,
                                        long depth_cutoff);
std::map<long, long> free_lie_dims_hall(const std::map<long, long>& generator_dims,
                                        long depth_cutoff);

}  // namespace glp::gla

#endif
