#ifndef GLP_ROOTSYS_HPP
#define GLP_ROOTSYS_HPP

#include <map>
#include <set>
#include <string>
#include <vector>

#include "glp/space.hpp"

namespace glp::rootsys {

using exactspace::AmbientSpace;
using exactspace::inner;
using exactspace::pairing;

enum class Family { A, B, C, D, E, F, G };

Family family_from_char(char c);
char family_to_char(Family f);

struct RootSystem {
  AmbientSpace space;
  std::vector<Vect> roots;         // closed under negation, sorted
  std::vector<Vect> simple_roots;  // ordered as in the standard realization
  std::string type_label;

  int rank() const { return static_cast<int>(simple_roots.size()); }
};

// Standard realization in an orthonormal basis (plus an abstract marker
// direction where the usual model needs one).
RootSystem build_root_system(Family family, int rank);

// A[i][j] = <alpha_i | alpha_j> = 2 b(a_i,a_j) / b(a_j,a_j).
Eigen::MatrixXi cartan_matrix(const RootSystem& rs);

std::vector<Vect> positive_roots(const RootSystem& rs);

// Coordinates of v in the simple-root basis; empty when outside the span.
std::optional<Vect> simple_coordinates(const RootSystem& rs, const Vect& v);

std::vector<Vect> fundamental_weights(const RootSystem& rs);

Vect reflect(const AmbientSpace& space, const Vect& v, const Vect& root);
Vect dominant_conjugate(const RootSystem& rs, const Vect& w);
Vect lowest_conjugate(const RootSystem& rs, const Vect& w);

std::vector<Vect> weyl_orbit(const RootSystem& rs, const Vect& w);

struct WeightSet {
  Vect dominant;
  std::vector<Vect> weights;  // sorted
  std::map<Vect, long, VectLess> multiplicities;
};

// All weights of the irreducible module with the given dominant extremal
// weight; multiplicities by the Freudenthal recursion, exact.
WeightSet weight_set(const RootSystem& rs, const Vect& dominant);

Integer weyl_dim(const RootSystem& rs, const Vect& dominant);

// Result of simple-system extraction plus Dynkin matching.
struct Classification {
  std::string label;
  std::vector<Vect> simple_roots;
};

Classification classify_full(const std::vector<Vect>& roots, const AmbientSpace& space);
std::string classify(const std::vector<Vect>& roots, const AmbientSpace& space);

// Dynkin matching of an integer Cartan-like matrix whose rows/columns realize
// vectors with the given norms; used both on extracted simple systems and on
// positive-definite generalized Cartan matrices.
std::string classify_cartan(const Eigen::MatrixXi& cartan, const std::vector<Rational>& norms);

// Cross-marked diagram; crosses go under nodes whose degree entry is nonzero.
std::string dynkin_ascii(const AmbientSpace& space, const std::vector<Vect>& simple_roots,
                         const std::vector<long>* degrees = nullptr);

}  // namespace glp::rootsys

#endif
