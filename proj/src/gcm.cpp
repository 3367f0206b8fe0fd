#include "glp/gcm.hpp"

#include <cstdlib>
#include <sstream>

namespace glp::gcm {

using exactspace::extend_with_markers;
using exactspace::inner;
using exactspace::lift;
using exactspace::pairing;

std::string to_string(FiniteClass c) {
  switch (c) {
    case FiniteClass::Finite: return "Finite";
    case FiniteClass::Affine: return "Affine";
    case FiniteClass::Indefinite: return "Indefinite";
  }
  return "?";
}

GeneralizedCartanMatrix build_gcm(const RootSystem& base, const AmbientSpace& space,
                                  const std::vector<Vect>& added_simple_roots) {
  std::vector<Vect> alphas;
  for (const Vect& a : base.simple_roots) alphas.push_back(lift(a, space.dim));
  for (const Vect& a : added_simple_roots) {
    if (a.size() != space.dim) throw Error("DimensionMismatch", "added simple root outside space");
    alphas.push_back(a);
  }
  int n = static_cast<int>(alphas.size());
  Mat gram(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) gram(i, j) = inner(space, alphas[i], alphas[j]);

  Eigen::MatrixXi entries(n, n);
  std::ostringstream bad;
  for (int i = 0; i < n; ++i) {
    if (gram(i, i) == 0) throw Error("NotGCM", "isotropic simple root");
    for (int j = 0; j < n; ++j) {
      Rational a = 2 * gram(i, j) / gram(i, i);
      if (!is_integer(a)) {
        bad << " a[" << i + 1 << "][" << j + 1 << "]=" << a.str() << " (non-integral)";
        continue;
      }
      long v = to_long(a);
      if (i != j && v > 0) bad << " a[" << i + 1 << "][" << j + 1 << "]=" << v << " (positive)";
      entries(i, j) = static_cast<int>(v);
    }
  }
  if (!bad.str().empty()) throw Error("NotGCM", "offending entries:" + bad.str());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if ((entries(i, j) == 0) != (entries(j, i) == 0))
        throw Error("NotGCM", "zero pattern is not symmetric");
  return {entries, gram};
}

namespace {

bool positive_definite(const Mat& g) {
  int n = static_cast<int>(g.rows());
  for (int k = 1; k <= n; ++k) {
    Mat minor = g.topLeftCorner(k, k);
    if (minor.determinant() <= 0) return false;
  }
  return true;
}

bool positive_semidefinite(const Mat& g) {
  // Symmetric g is psd iff every signed characteristic coefficient
  // (sum of principal k-minors) is nonnegative.
  auto c = charpoly(g);
  int n = static_cast<int>(g.rows());
  for (int k = 1; k <= n; ++k) {
    Rational sk = c[n - k];
    if (k % 2 == 1) sk = -sk;
    if (sk < 0) return false;
  }
  return true;
}

}  // namespace

GcmClass classify_gcm(const GeneralizedCartanMatrix& g) {
  int n = static_cast<int>(g.entries.rows());
  if (positive_definite(g.sym_gram)) {
    // Row vs column convention does not matter to the matcher: it only uses
    // bond products and norms.
    std::vector<Rational> norms(n);
    for (int i = 0; i < n; ++i) norms[i] = g.sym_gram(i, i);
    Eigen::MatrixXi cart = g.entries.transpose();
    return {FiniteClass::Finite, rootsys::classify_cartan(cart, norms)};
  }
  if (positive_semidefinite(g.sym_gram)) {
    // Affine needs a one-dimensional kernel on every diagram component.
    std::vector<int> comp(n, -1);
    int ncomp = 0;
    for (int i = 0; i < n; ++i) {
      if (comp[i] >= 0) continue;
      ++ncomp;
      std::vector<int> stack{i};
      comp[i] = i;
      while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v = 0; v < n; ++v)
          if (comp[v] < 0 && g.entries(u, v) != 0) {
            comp[v] = i;
            stack.push_back(v);
          }
      }
    }
    bool affine = true;
    for (int i = 0; i < n && affine; ++i) {
      if (comp[i] != i) continue;
      std::vector<int> nodes;
      for (int v = 0; v < n; ++v)
        if (comp[v] == i) nodes.push_back(v);
      Mat sub(nodes.size(), nodes.size());
      for (std::size_t a = 0; a < nodes.size(); ++a)
        for (std::size_t b = 0; b < nodes.size(); ++b) sub(a, b) = g.sym_gram(nodes[a], nodes[b]);
      long ker = static_cast<long>(nodes.size()) - rank_of(sub);
      if (ker != 1) affine = false;
    }
    if (affine) return {FiniteClass::Affine, ""};
  }
  return {FiniteClass::Indefinite, ""};
}

int default_max_denom() {
  if (const char* env = std::getenv("GLP_MAX_MARKER_DENOM")) {
    int v = std::atoi(env);
    if (v >= 1) return v;
  }
  return 24;
}

std::vector<MarkerSolution> solve_single_marker(const RootSystem& base, const Vect& extremal,
                                                int max_denom) {
  if (max_denom <= 0) max_denom = default_max_denom();
  Vect omega = rootsys::lowest_conjugate(base, extremal);
  Rational g = 0;
  for (const Vect& a : base.roots) g = rational_gcd(g, 2 * inner(base.space, a, omega));
  std::vector<MarkerSolution> out;
  if (g == 0) return out;  // weight orthogonal to every root: no constraint to solve

  Rational omega_sq = inner(base.space, omega, omega);
  for (int t = 1; t <= max_denom; ++t) {
    Rational d = g / t;
    Rational b_eps = d - omega_sq;
    Mat mg(1, 1);
    mg(0, 0) = b_eps;
    AmbientSpace ext = extend_with_markers(base.space, 1, mg);
    Vect alpha_new = lift(omega, ext.dim) + ext.e(ext.dim - 1);
    auto gcm = build_gcm(base, ext, {alpha_new});
    out.push_back({b_eps, d, classify_gcm(gcm)});
  }
  return out;
}

MarkerProblem make_marker_problem(const RootSystem& base,
                                  const std::vector<Vect>& extremal_weights) {
  MarkerProblem p{base, {}};
  for (const Vect& w : extremal_weights) {
    Vect low = rootsys::lowest_conjugate(base, w);
    for (const Vect& a : base.simple_roots)
      if (inner(base.space, low, a) > 0)
        throw Error("Internal", "lowest-weight normalization failed");
    p.lowest_weights.push_back(low);
  }
  return p;
}

MarkerCheck check_multi_marker(const MarkerProblem& problem, const Mat& marker_gram) {
  int k = static_cast<int>(problem.lowest_weights.size());
  if (marker_gram.rows() != k || marker_gram.cols() != k)
    throw Error("DimensionMismatch", "marker gram must be k x k");
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < i; ++j)
      if (marker_gram(i, j) != marker_gram(j, i))
        throw Error("BadSpace", "marker gram must be symmetric");

  const auto& base = problem.base;
  MarkerCheck res;
  auto fail = [&](const std::string& msg) {
    res.ok = false;
    res.violations.push_back(msg);
  };

  std::vector<Rational> nsq(k);
  for (int i = 0; i < k; ++i) {
    nsq[i] = inner(base.space, problem.lowest_weights[i], problem.lowest_weights[i]) +
             marker_gram(i, i);
    if (nsq[i] <= 0)
      fail("new simple root " + std::to_string(i + 1) + " has nonpositive norm " + nsq[i].str());
  }
  for (int i = 0; i < k; ++i) {
    if (nsq[i] <= 0) continue;
    for (std::size_t j = 0; j < base.simple_roots.size(); ++j) {
      Rational q = 2 * inner(base.space, problem.lowest_weights[i], base.simple_roots[j]) / nsq[i];
      if (!is_integer(q))
        fail("non-integral entry against base simple root " + std::to_string(j + 1) + ": " +
             q.str());
    }
  }
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      if (i == j) continue;
      Rational cross =
          inner(base.space, problem.lowest_weights[i], problem.lowest_weights[j]) +
          marker_gram(i, j);
      if (cross > 0)
        fail("positive cross term between markers " + std::to_string(i + 1) + "," +
             std::to_string(j + 1) + ": " + cross.str());
      if (nsq[i] > 0) {
        Rational cross_entry = 2 * cross / nsq[i];
        if (!is_integer(cross_entry))
          fail("non-integral cross entry between markers " + std::to_string(i + 1) + "," +
               std::to_string(j + 1) + ": " + cross_entry.str());
      }
    }
  // Markers must stay realizable as independent directions (Cauchy bound on
  // each pair); a degenerate or negative pair Gram cannot be embedded.
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      Rational det = marker_gram(i, i) * marker_gram(j, j) - marker_gram(i, j) * marker_gram(i, j);
      if (det <= 0)
        fail("marker pair " + std::to_string(i + 1) + "," + std::to_string(j + 1) +
             " fails the Cauchy independence bound (det " + det.str() + ")");
    }
  return res;
}

}  // namespace glp::gcm
