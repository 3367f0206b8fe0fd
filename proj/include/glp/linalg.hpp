#ifndef GLP_LINALG_HPP
#define GLP_LINALG_HPP

#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>
#include <optional>
#include <vector>

#include "glp/rational.hpp"

namespace glp {

using Mat = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using Vect = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

struct VectLess {
  bool operator()(const Vect& a, const Vect& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    for (Eigen::Index i = 0; i < a.size(); ++i) {
      if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
  }
};

long rank_of(const Mat& a);
std::vector<Vect> kernel_basis(const Mat& a);

// Exact solve of a x = b; empty when inconsistent.
std::optional<Vect> solve_linear(const Mat& a, const Vect& b);

// Row space in reduced echelon form; supports membership and incremental spans.
class RowSpace {
public:
  explicit RowSpace(Eigen::Index width) : width_(width) {}
  Eigen::Index width() const { return width_; }
  long dim() const { return static_cast<long>(rows_.size()); }
  // Returns true when v enlarged the span.
  bool add(const Vect& v);
  bool contains(const Vect& v) const;
  const std::vector<Vect>& basis() const { return rows_; }
  // Coordinates of v in terms of a fixed spanning list previously added via
  // add_tracked; empty when v is outside the span.
  bool add_tracked(const Vect& v);
  std::optional<Vect> coordinates(const Vect& v) const;

private:
  Vect reduce(const Vect& v, Vect* combo) const;
  Eigen::Index width_;
  std::vector<Vect> rows_;        // echelon basis
  std::vector<long> pivots_;      // pivot column per row
  std::vector<Vect> combos_;      // rows_ expressed in the tracked input list
  long tracked_count_ = 0;
};

// Characteristic polynomial, coefficients ascending: p(t) = sum c[k] t^k, monic.
std::vector<Rational> charpoly(const Mat& a);

// Dense univariate polynomials over the rationals, coefficients ascending.
namespace poly {
std::vector<Rational> derivative(const std::vector<Rational>& p);
std::vector<Rational> normalize(std::vector<Rational> p);  // strip leading zeros
std::vector<Rational> monic(std::vector<Rational> p);
std::pair<std::vector<Rational>, std::vector<Rational>> divmod(
    const std::vector<Rational>& num, const std::vector<Rational>& den);
std::vector<Rational> gcd(std::vector<Rational> a, std::vector<Rational> b);
// g = gcd(a,b) together with u,v such that u a + v b = g.
std::vector<Rational> mul(const std::vector<Rational>& a, const std::vector<Rational>& b);
std::vector<Rational> sub(const std::vector<Rational>& a, const std::vector<Rational>& b);
struct ExtGcd {
  std::vector<Rational> g, u, v;
};
ExtGcd ext_gcd(const std::vector<Rational>& a, const std::vector<Rational>& b);
Mat eval(const std::vector<Rational>& p, const Mat& x);
Rational eval(const std::vector<Rational>& p, const Rational& x);
}  // namespace poly

inline Mat commutator(const Mat& a, const Mat& b) { return a * b - b * a; }

Vect flatten(const Mat& m);
Mat unflatten(const Vect& v, Eigen::Index rows, Eigen::Index cols);

bool is_nilpotent(const Mat& a);

}  // namespace glp

#endif
