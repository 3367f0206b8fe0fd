#ifndef GLP_SLICER_HPP
#define GLP_SLICER_HPP

#include "glp/rootsys.hpp"

namespace glp::slicer {

using rootsys::RootSystem;

// Root system sliced by an additive integer degree.  For marker-built systems
// the degree of a root is its total marker coefficient.
struct GradedRootSystem {
  RootSystem rs;
  int cartan_dim = 0;
  std::map<long, std::vector<Vect>> slices;  // q -> sorted roots

  long slice_size(long q) const;
  long dim(long q) const;  // |slice q| plus cartan_dim at q = 0
  long degree_of(const Vect& root) const;
};

GradedRootSystem slice(const RootSystem& rs, const std::vector<long>& degree_on_simple,
                       int cartan_dim);

// True iff every root of layer -(q+1), q >= 1, splits as a layer -1 root plus
// a layer -q root; bracket nonvanishing is automatic for root pairs summing
// to a root.
bool check_fundamental(const GradedRootSystem& g);

// (depth, height): largest q with a nonempty slice below / above zero.
std::pair<long, long> depth_height(const GradedRootSystem& g);

bool check_symmetry(const GradedRootSystem& g);

// Exhaustive additivity of the degree over root pairs whose sum is a root.
bool check_degree_additivity(const GradedRootSystem& g);

enum class Reality { Real, Complex, Quaternionic };
std::string to_string(Reality r);

// Reality type of the spin representation of the orthogonal algebra of
// signature (p,q), by the residue of q-p mod 8.
Reality spin_reality(int p, int q);

struct Construction {
  std::string name;    // concrete entry, e.g. "B4-from-A3"
  std::string family;  // construction kind, e.g. "Bn-from-An-1"
  std::string expected_type;
  std::map<long, long> expected_slice_sizes;
  long expected_depth = 0;
  std::string note;
};

std::vector<Construction> catalog();

struct CheckLine {
  std::string name;
  std::string expected;
  std::string actual;
  bool pass = false;
};

struct ConstructionReport {
  Construction entry;
  GradedRootSystem graded;
  std::vector<Vect> extended_simple_roots;
  std::vector<long> extended_simple_degrees;
  std::vector<CheckLine> checks;
  bool ok = false;
  std::string diagram;
};

ConstructionReport build_construction(const std::string& name);

}  // namespace glp::slicer

#endif
