#include <algorithm>

#include "glp/gla.hpp"

namespace glp::gla {

std::pair<Mat, Mat> jordan_chevalley(const Mat& a) {
  if (a.rows() != a.cols()) throw Error("DimensionMismatch", "square matrix required");
  Eigen::Index n = a.rows();
  if (n == 0) return {a, a};
  auto p = charpoly(a);
  auto f = poly::monic(poly::divmod(p, poly::gcd(p, poly::derivative(p))).first);
  // Newton iteration on the squarefree part; f(a) is nilpotent, so this
  // terminates after at most log2(n)+1 rounds, exactly.
  auto ext = poly::ext_gcd(f, poly::derivative(f));
  // u f + v f' = 1
  const auto& v = ext.v;
  Mat s = a;
  while (true) {
    Mat fs = poly::eval(f, s);
    if (fs.isZero()) break;
    s = s - poly::eval(v, s) * fs;
  }
  return {s, a - s};
}

namespace {

// Lie closure of a list of matrices; returns an independent basis.
std::vector<Mat> lie_closure(std::vector<Mat> gens) {
  if (gens.empty()) return gens;
  Eigen::Index n = gens[0].rows();
  RowSpace span(n * n);
  std::vector<Mat> basis;
  auto push = [&](const Mat& m) {
    if (span.add(flatten(m))) {
      basis.push_back(m);
      return true;
    }
    return false;
  };
  for (const Mat& m : gens) push(m);
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) push(commutator(basis[i], basis[j]));
  return basis;
}

bool spans_subalgebra(const std::vector<Mat>& elems) {
  if (elems.empty()) return true;
  Eigen::Index n = elems[0].rows();
  RowSpace span(n * n);
  for (const Mat& m : elems) span.add(flatten(m));
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = i + 1; j < elems.size(); ++j)
      if (!span.contains(flatten(commutator(elems[i], elems[j])))) return false;
  return true;
}

}  // namespace

std::vector<Mat> decomposable_envelope(const std::vector<Mat>& elems) {
  for (const Mat& m : elems)
    if (m.rows() != m.cols() || (!elems.empty() && m.rows() != elems[0].rows()))
      throw Error("DimensionMismatch", "square matrices of equal size required");
  if (!spans_subalgebra(elems))
    throw Error("NotASubalgebra", "input does not span a Lie subalgebra");
  std::vector<Mat> basis = lie_closure(elems);
  while (true) {
    std::size_t before = basis.size();
    std::vector<Mat> enlarged = basis;
    for (const Mat& m : basis) enlarged.push_back(jordan_chevalley(m).first);
    basis = lie_closure(enlarged);
    if (basis.size() == before) break;
  }
  return basis;
}

GradedLieAlgebra from_matrices(const std::vector<Mat>& generators, const Mat& grading_element) {
  if (generators.empty()) throw Error("DimensionMismatch", "at least one generator required");
  Eigen::Index n = generators[0].rows();
  for (const Mat& m : generators)
    if (m.rows() != n || m.cols() != n)
      throw Error("DimensionMismatch", "generators must be square of equal size");
  if (grading_element.rows() != n || grading_element.cols() != n)
    throw Error("DimensionMismatch", "grading element must match the generators");
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      if (i != j && grading_element(i, j) != 0)
        throw Error("NonHomogeneousClosure", "grading element must be diagonal");
      if (i == j && !is_integer(grading_element(i, i)))
        throw Error("NonHomogeneousClosure", "grading element must have integer entries");
    }

  std::vector<Mat> closure = lie_closure(generators);
  // Split the closure into the homogeneous blocks of ad(grading_element):
  // the entry (i,j) is homogeneous of degree k_i - k_j.
  std::map<long, std::vector<std::pair<Eigen::Index, Eigen::Index>>> blocks;
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      blocks[to_long(grading_element(i, i) - grading_element(j, j))].push_back({i, j});

  RowSpace closure_span(n * n);
  for (const Mat& m : closure) closure_span.add(flatten(m));

  std::vector<Mat> graded_basis;
  std::vector<long> graded_degrees;
  for (const auto& [q, cells] : blocks) {
    // Intersection of the closure with this block: kernel of the off-block
    // coordinates within closure coordinates.
    Mat rows(n * n - cells.size(), closure.size());
    rows.setZero();
    {
      std::vector<bool> in_block(n * n, false);
      for (auto [i, j] : cells) in_block[i * n + j] = true;
      Eigen::Index r = 0;
      for (Eigen::Index t = 0; t < n * n; ++t) {
        if (in_block[t]) continue;
        for (std::size_t c = 0; c < closure.size(); ++c) rows(r, c) = flatten(closure[c])[t];
        ++r;
      }
    }
    for (const Vect& coeff : kernel_basis(rows)) {
      Mat m = Mat::Zero(n, n);
      for (std::size_t c = 0; c < closure.size(); ++c) m += coeff[c] * closure[c];
      graded_basis.push_back(m);
      graded_degrees.push_back(q);
    }
  }
  if (graded_basis.size() != closure.size())
    throw Error("NonHomogeneousClosure",
                "closure is not the direct sum of its homogeneous components");

  // Structure constants by expanding commutators in the graded basis.
  RowSpace coords(n * n);
  for (const Mat& m : graded_basis) coords.add_tracked(flatten(m));
  std::vector<std::tuple<int, int, SparseVec>> entries;
  int d = static_cast<int>(graded_basis.size());
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      auto c = coords.coordinates(flatten(commutator(graded_basis[i], graded_basis[j])));
      if (!c) throw Error("Internal", "commutator escaped the Lie closure");
      SparseVec s;
      for (Eigen::Index k = 0; k < c->size(); ++k)
        if ((*c)[k] != 0) s.push_back({static_cast<int>(k), (*c)[k]});
      if (!s.empty()) entries.push_back({i, j, s});
    }
  std::vector<std::string> names;
  for (int i = 0; i < d; ++i) names.push_back("x" + std::to_string(i + 1));
  GradedLieAlgebra g = GradedLieAlgebra::from_table(std::move(names), graded_degrees, entries);
  g.attach_matrices(graded_basis, grading_element);
  g.validate();
  return g;
}

std::vector<Mat> commutant(const std::vector<Mat>& action) {
  if (action.empty()) throw Error("DimensionMismatch", "empty action list");
  Eigen::Index n = action[0].rows();
  Mat rows(action.size() * n * n, n * n);
  rows.setZero();
  // [B, A_t] = 0 for each t, linear in the entries of B.
  for (std::size_t t = 0; t < action.size(); ++t) {
    const Mat& a = action[t];
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j)
        for (Eigen::Index k = 0; k < n; ++k) {
          // (BA - AB)(i,j) = sum_k B(i,k)A(k,j) - A(i,k)B(k,j)
          rows(t * n * n + i * n + j, i * n + k) += a(k, j);
          rows(t * n * n + i * n + j, k * n + j) -= a(i, k);
        }
  }
  std::vector<Mat> out;
  for (const Vect& v : kernel_basis(rows)) out.push_back(unflatten(v, n, n));
  return out;
}

namespace {

void require_almost_effective(const GradedLieAlgebra& g) {
  if (effectiveness_class(g) == Effectiveness::None)
    throw Error("NotAlmostEffective", "operation requires an almost effective algebra");
}

// Unital associative closure of the given matrices.
std::vector<Mat> associative_closure(const std::vector<Mat>& gens, Eigen::Index n) {
  RowSpace span(n * n);
  std::vector<Mat> basis;
  auto push = [&](const Mat& m) {
    if (span.add(flatten(m))) basis.push_back(m);
  };
  push(Mat::Identity(n, n));
  for (const Mat& m : gens) push(m);
  for (bool grew = true; grew;) {
    grew = false;
    std::size_t sz = basis.size();
    for (std::size_t i = 0; i < sz; ++i)
      for (std::size_t j = 0; j < sz; ++j) {
        std::size_t before = basis.size();
        push(basis[i] * basis[j]);
        if (basis.size() != before) grew = true;
      }
  }
  return basis;
}

}  // namespace

std::vector<Vect> nilradical_degree0(const GradedLieAlgebra& g) {
  require_almost_effective(g);
  auto m = g.indices_where([](long d) { return d < 0; });
  auto rad = radical(g);
  std::vector<Vect> r0;
  for (const Vect& v : rad) {
    bool deg0 = true;
    for (int i = 0; i < g.dim(); ++i)
      if (v[i] != 0 && g.degree(i) != 0) deg0 = false;
    if (deg0) r0.push_back(v);
  }
  if (r0.empty() || m.empty()) return {};

  // rho(r0) is solvable, so an element acts nilpotently on the negative part
  // iff it is trace-orthogonal to the unital associative algebra generated by
  // rho(r0); that cuts out the degree-0 nilradical slice as a subspace.
  Eigen::Index md = static_cast<Eigen::Index>(m.size());
  std::vector<Mat> rho;
  for (const Vect& v : r0) rho.push_back(restricted_ad(g, v, m));
  auto assoc = associative_closure(rho, md);
  Mat rows(assoc.size(), r0.size());
  for (std::size_t a = 0; a < assoc.size(); ++a)
    for (std::size_t b = 0; b < r0.size(); ++b) {
      Mat p = rho[b] * assoc[a];
      Rational tr = 0;
      for (Eigen::Index t = 0; t < md; ++t) tr += p(t, t);
      rows(a, b) = tr;
    }
  std::vector<Vect> out;
  for (const Vect& c : kernel_basis(rows)) {
    Vect v = Vect::Zero(g.dim());
    for (std::size_t b = 0; b < r0.size(); ++b) v += c[b] * r0[b];
    out.push_back(v);
  }
  // The slice must consist of elements nilpotent on m and span an ideal of
  // the degree-0 part whose action satisfies the Engel condition.
  for (const Vect& v : out)
    if (!is_nilpotent(restricted_ad(g, v, m)))
      throw Error("Internal", "non-nilpotent element in the degree-0 nilradical slice");
  {
    std::vector<Mat> acts;
    for (const Vect& v : out) acts.push_back(restricted_ad(g, v, m));
    if (!acts.empty()) {
      std::vector<Mat> words = acts;
      for (Eigen::Index round = 0; round < md; ++round) {
        std::vector<Mat> next;
        for (const Mat& w : words)
          for (const Mat& a : acts) next.push_back(w * a);
        words = std::move(next);
        bool all_zero = true;
        for (const Mat& w : words) all_zero = all_zero && w.isZero();
        if (all_zero) break;
      }
      bool all_zero = true;
      for (const Mat& w : words) all_zero = all_zero && w.isZero();
      if (!all_zero)
        throw Error("Internal", "degree-0 nilradical slice fails the Engel check");
    }
  }
  auto gzero = g.indices_where([](long d) { return d == 0; });
  RowSpace span(g.dim());
  for (const Vect& v : out) span.add(v);
  for (int i : gzero) {
    Vect e = Vect::Zero(g.dim());
    e[i] = 1;
    for (const Vect& v : out)
      if (!span.contains(g.bracket_vec(e, v)))
        throw Error("Internal", "degree-0 nilradical slice is not an ideal");
  }
  return out;
}

bool reductive_type(const GradedLieAlgebra& g) { return nilradical_degree0(g).empty(); }

bool decomposability_check(const GradedLieAlgebra& g) {
  require_almost_effective(g);
  auto m = g.indices_where([](long d) { return d < 0; });
  auto gzero = g.indices_where([](long d) { return d == 0; });
  if (m.empty() || gzero.empty()) return true;
  std::vector<Mat> rho;
  for (int i : gzero) {
    Vect e = Vect::Zero(g.dim());
    e[i] = 1;
    rho.push_back(restricted_ad(g, e, m));
  }
  RowSpace span(static_cast<Eigen::Index>(m.size() * m.size()));
  for (const Mat& r : rho) span.add(flatten(r));
  auto env = decomposable_envelope(rho);
  for (const Mat& r : env)
    if (!span.contains(flatten(r))) return false;
  return true;
}

GradedModule regrade_module(const GradedLieAlgebra& g, const std::vector<Mat>& action) {
  if (static_cast<int>(action.size()) != g.dim())
    throw Error("DimensionMismatch", "one action matrix per basis element required");
  Eigen::Index n = action.empty() ? 0 : action[0].rows();
  for (const Mat& m : action)
    if (m.rows() != n || m.cols() != n)
      throw Error("DimensionMismatch", "action matrices must be square of equal size");
  // Lie homomorphism check.
  for (int i = 0; i < g.dim(); ++i)
    for (int j = i + 1; j < g.dim(); ++j) {
      Mat rhs = Mat::Zero(n, n);
      for (const auto& [k, c] : g.bracket(i, j)) rhs += c * action[k];
      if (commutator(action[i], action[j]) != rhs)
        throw Error("NotALieAlgebra", "action is not a Lie homomorphism");
    }
  auto e = characteristic_element(g);
  if (!e) throw Error("NotCharacteristic", "algebra has no characteristic element");
  Mat re = Mat::Zero(n, n);
  for (int i = 0; i < g.dim(); ++i)
    if ((*e)[i] != 0) re += (*e)[i] * action[i];

  // Rational spectrum with multiplicities, by repeated root extraction.
  auto p = poly::monic(charpoly(re));
  std::vector<std::pair<Rational, long>> eigen;  // (eigenvalue, algebraic mult)
  {
    auto rem = p;
    while (rem.size() > 1) {
      // Rational roots of the monic remainder divide the constant term.
      bool found = false;
      // Try roots among eigenvalue candidates: rational root theorem on the
      // primitive integer form of rem.
      std::vector<Rational> cand;
      {
        Integer den = 1;
        for (const auto& c : rem) den = den / gcd(den, denominator(c)) * denominator(c);
        std::vector<Integer> ic;
        for (const auto& c : rem) ic.push_back(numerator(c * Rational(den)));
        Integer a0 = ic.front(), an = ic.back();
        if (a0 == 0) {
          cand.push_back(0);
        } else {
          Integer p0 = abs(a0), pn = abs(an);
          std::vector<Integer> nums, dens;
          for (Integer d1 = 1; d1 * d1 <= p0; ++d1) {
            if (p0 % d1 != 0) continue;
            nums.push_back(d1);
            nums.push_back(p0 / d1);
          }
          for (Integer d2 = 1; d2 * d2 <= pn; ++d2) {
            if (pn % d2 != 0) continue;
            dens.push_back(d2);
            dens.push_back(pn / d2);
          }
          for (const Integer& num : nums)
            for (const Integer& den2 : dens) {
              cand.push_back(Rational(num, den2));
              cand.push_back(Rational(-num, den2));
            }
        }
      }
      for (const Rational& r : cand) {
        if (poly::eval(rem, r) == 0) {
          long mult = 0;
          while (poly::eval(rem, r) == 0) {
            rem = poly::divmod(rem, {-r, Rational(1)}).first;
            ++mult;
          }
          bool merged = false;
          for (auto& [v, m] : eigen)
            if (v == r) {
              m += mult;
              merged = true;
            }
          if (!merged) eigen.push_back({r, mult});
          found = true;
          break;
        }
      }
      if (!found)
        throw Error("IrrationalSpectrum",
                    "characteristic action has a non-rational eigenvalue");
    }
  }
  std::sort(eigen.begin(), eigen.end());
  for (std::size_t i = 1; i < eigen.size(); ++i)
    if (!is_integer(eigen[i].first - eigen[0].first))
      throw Error("NonIntegralSpacing", "eigenvalue differences must be integers");

  // Generalized eigenspaces; coordinates change to a graded basis.
  std::vector<std::vector<Vect>> spaces;
  for (const auto& [v, m] : eigen) {
    Mat shifted = re;
    for (Eigen::Index i = 0; i < n; ++i) shifted(i, i) -= v;
    Mat pw = Mat::Identity(n, n);
    for (long t = 0; t < m; ++t) pw = pw * shifted;
    spaces.push_back(kernel_basis(pw));
  }

  // Degrees: eigenvalue minus the smallest one, plus a common integer shift
  // minimizing |sum_q q dim V_q|; ties prefer the smaller shift.
  Rational base = eigen.front().first;
  long total = 0;
  Rational weighted = 0;
  for (std::size_t i = 0; i < eigen.size(); ++i) {
    long dimv = static_cast<long>(spaces[i].size());
    total += dimv;
    weighted += (eigen[i].first - base) * dimv;
  }
  if (total != n) throw Error("Internal", "generalized eigenspaces do not fill the module");
  long best_shift = 0;
  bool have = false;
  Rational best_abs = 0;
  long center = total ? static_cast<long>(rational_floor(-weighted / total)) : 0;
  for (long s = center - 2; s <= center + 2; ++s) {
    Rational val = weighted + Rational(s) * total;
    Rational a = abs(val);
    if (!have || a < best_abs || (a == best_abs && s < best_shift)) {
      have = true;
      best_abs = a;
      best_shift = s;
    }
  }

  GradedModule mod;
  mod.dim = static_cast<int>(n);
  mod.degrees.assign(n, 0);
  // Change of basis to eigen-coordinates: stack the eigenspace bases.
  Mat basis(n, n);
  std::vector<long> col_degree(n);
  Eigen::Index col = 0;
  for (std::size_t i = 0; i < eigen.size(); ++i) {
    long q = to_long(eigen[i].first - base) + best_shift;
    for (const Vect& v : spaces[i]) {
      basis.col(col) = v;
      col_degree[col] = q;
      ++col;
    }
  }
  Eigen::FullPivLU<Mat> lu(basis);
  Mat inv = lu.inverse();
  mod.degrees = col_degree;
  for (int i = 0; i < g.dim(); ++i) mod.action.push_back(inv * action[i] * basis);

  // The regraded action must be degree-compatible; verify exhaustively.
  for (int i = 0; i < g.dim(); ++i) {
    long p2 = g.degree(i);
    for (Eigen::Index a = 0; a < n; ++a)
      for (Eigen::Index b = 0; b < n; ++b)
        if (mod.action[i](a, b) != 0 && col_degree[a] != col_degree[b] + p2)
          throw Error("Internal", "regraded action violates degree compatibility");
  }
  return mod;
}

}  // namespace glp::gla
