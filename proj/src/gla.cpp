#include "glp/gla.hpp"

#include <algorithm>
#include <sstream>

namespace glp::gla {

using exactspace::inner;
using exactspace::pairing;

namespace {

SparseVec sparse_normalize(SparseVec v) {
  std::sort(v.begin(), v.end());
  SparseVec out;
  for (auto& [k, c] : v) {
    if (!out.empty() && out.back().first == k)
      out.back().second += c;
    else
      out.push_back({k, c});
  }
  out.erase(std::remove_if(out.begin(), out.end(), [](auto& p) { return p.second == 0; }),
            out.end());
  return out;
}

SparseVec sparse_negate(const SparseVec& v) {
  SparseVec out = v;
  for (auto& [k, c] : out) c = -c;
  return out;
}

}  // namespace

GradedLieAlgebra GradedLieAlgebra::from_table(
    std::vector<std::string> names, std::vector<long> degrees,
    const std::vector<std::tuple<int, int, SparseVec>>& entries) {
  GradedLieAlgebra g;
  g.names_ = std::move(names);
  g.degrees_ = std::move(degrees);
  int n = g.dim();
  if (g.names_.size() != g.degrees_.size())
    throw Error("DimensionMismatch", "one degree per basis name required");
  g.table_.assign(n, std::vector<SparseVec>(n));
  for (const auto& [i, j, v] : entries) {
    if (i < 0 || j < 0 || i >= n || j >= n || i >= j)
      throw Error("DimensionMismatch", "bracket entries must have 0 <= i < j < dim");
    SparseVec s = sparse_normalize(v);
    g.table_[i][j] = s;
    g.table_[j][i] = sparse_negate(s);
  }
  return g;
}

Rational GradedLieAlgebra::structure_constant(int i, int j, int k) const {
  for (const auto& [idx, c] : table_[i][j])
    if (idx == k) return c;
  return 0;
}

Vect GradedLieAlgebra::bracket_vec(const Vect& x, const Vect& y) const {
  Vect out = Vect::Zero(dim());
  for (int i = 0; i < dim(); ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < dim(); ++j) {
      if (y[j] == 0) continue;
      for (const auto& [k, c] : table_[i][j]) out[k] += x[i] * y[j] * c;
    }
  }
  return out;
}

Mat GradedLieAlgebra::ad(int i) const {
  Mat m = Mat::Zero(dim(), dim());
  for (int j = 0; j < dim(); ++j)
    for (const auto& [k, c] : table_[i][j]) m(k, j) = c;
  return m;
}

Mat GradedLieAlgebra::ad_vec(const Vect& x) const {
  Mat m = Mat::Zero(dim(), dim());
  for (int i = 0; i < dim(); ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < dim(); ++j)
      for (const auto& [k, c] : table_[i][j]) m(k, j) += x[i] * c;
  }
  return m;
}

void GradedLieAlgebra::attach_matrices(std::vector<Mat> ms, std::optional<Mat> grading) {
  if (static_cast<int>(ms.size()) != dim())
    throw Error("DimensionMismatch", "one matrix per basis element required");
  matrices_ = std::move(ms);
  grading_matrix_ = std::move(grading);
}

std::vector<int> GradedLieAlgebra::indices_where(const std::function<bool(long)>& pred) const {
  std::vector<int> out;
  for (int i = 0; i < dim(); ++i)
    if (pred(degrees_[i])) out.push_back(i);
  return out;
}

void GradedLieAlgebra::validate() const {
  int n = dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (sparse_negate(table_[i][j]) != table_[j][i])
        throw Error("NotALieAlgebra", "antisymmetry fails at (" + std::to_string(i) + "," +
                                          std::to_string(j) + ")");
      for (const auto& [k, c] : table_[i][j]) {
        if (degrees_[k] != degrees_[i] + degrees_[j])
          throw Error("NotALieAlgebra", "grading incompatibility at (" + std::to_string(i) + "," +
                                            std::to_string(j) + ")");
      }
    }
  // Jacobi, exhaustively over basis triples.
  Vect acc = Vect::Zero(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        acc.setZero();
        for (const auto& [l, c] : table_[i][j])
          for (const auto& [m, d] : table_[l][k]) acc[m] += c * d;
        for (const auto& [l, c] : table_[j][k])
          for (const auto& [m, d] : table_[l][i]) acc[m] += c * d;
        for (const auto& [l, c] : table_[k][i])
          for (const auto& [m, d] : table_[l][j]) acc[m] += c * d;
        if (!acc.isZero())
          throw Error("NotALieAlgebra", "Jacobi fails at (" + std::to_string(i) + "," +
                                            std::to_string(j) + "," + std::to_string(k) + ")");
      }
  if (matrices_) {
    const auto& ms = *matrices_;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Mat lhs = commutator(ms[i], ms[j]);
        Mat rhs = Mat::Zero(ms[i].rows(), ms[i].cols());
        for (const auto& [k, c] : table_[i][j]) rhs += c * ms[k];
        if (lhs != rhs)
          throw Error("NotALieAlgebra", "matrix realization disagrees with the bracket table");
      }
  }
}

// ---------------------------------------------------------------------------
// Chevalley basis

namespace {

struct RootIndex {
  std::vector<Vect> roots;                  // all roots
  std::map<Vect, int, VectLess> index;      // root -> position in `roots`
  std::vector<Vect> positive;               // sorted by (height, lex)
  std::map<Vect, int, VectLess> pos_order;  // root -> rank in `positive`
  std::vector<Vect> coords;                 // simple coordinates per root
};

RootIndex index_roots(const RootSystem& rs) {
  RootIndex ri;
  ri.roots = rs.roots;
  std::vector<std::pair<Rational, Vect>> pos;
  for (const Vect& r : rs.roots) {
    auto c = rootsys::simple_coordinates(rs, r);
    if (!c) throw Error("NotARootSystem", "root outside the simple span");
    Rational h = 0;
    bool nonneg = true;
    for (Eigen::Index i = 0; i < c->size(); ++i) {
      h += (*c)[i];
      if ((*c)[i] < 0) nonneg = false;
    }
    if (nonneg) pos.push_back({h, r});
  }
  std::sort(pos.begin(), pos.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return VectLess()(a.second, b.second);
  });
  for (auto& [h, r] : pos) {
    ri.pos_order[r] = static_cast<int>(ri.positive.size());
    ri.positive.push_back(r);
  }
  std::sort(ri.roots.begin(), ri.roots.end(), VectLess());
  for (std::size_t i = 0; i < ri.roots.size(); ++i) ri.index[ri.roots[i]] = static_cast<int>(i);
  return ri;
}

// Chevalley structure constants N(a,b) with [e_a, e_b] = N(a,b) e_{a+b}.
class ChevalleyConstants {
public:
  ChevalleyConstants(const RootSystem& rs, const RootIndex& ri) : rs_(rs), ri_(ri) {
    compute();
  }

  Rational n(const Vect& a, const Vect& b) const {
    Vect s = a + b;
    if (!ri_.index.count(s)) return 0;
    return n_general(a, b);
  }

private:
  bool is_root(const Vect& v) const { return ri_.index.count(v) != 0; }
  bool is_positive(const Vect& v) const { return ri_.pos_order.count(v) != 0; }
  Rational norm(const Vect& v) const { return inner(rs_.space, v, v); }

  long chain_down(const Vect& a, const Vect& b) const {
    // max k >= 0 with b - k a a root
    long p = 0;
    Vect v = b - a;
    while (is_root(v)) {
      ++p;
      v -= a;
    }
    return p;
  }

  Rational pos_pair(const Vect& a, const Vect& b) const {
    auto it = npos_.find({ri_.pos_order.at(a), ri_.pos_order.at(b)});
    if (it == npos_.end()) throw Error("Internal", "missing positive-pair constant");
    return it->second;
  }

  Rational n_general(const Vect& a, const Vect& b) const {
    bool pa = is_positive(a), pb = is_positive(b);
    if (pa && pb) return pos_pair(a, b);
    if (!pa && !pb) return -n_general(-a, -b);
    if (!pa && pb) return -n_general(b, a);
    // a positive, b negative, a+b a root z: fold the triple (a, b, -z).
    Vect z = a + b;
    if (is_positive(z)) {
      // N(a,b) = (z,z)/(a,a) N(b,-z);  (b,-z) are both negative.
      return norm(z) / norm(a) * (-pos_pair(-b, z));
    }
    // N(a,b) = (z,z)/(b,b) N(-z,a);  (-z,a) are both positive.
    return norm(z) / norm(b) * pos_pair(-z, a);
  }

  void compute() {
    // Process positive roots by increasing order; all constants needed for a
    // sum root of some height involve only smaller heights.
    for (const Vect& gamma : ri_.positive) {
      std::vector<std::pair<Vect, Vect>> pairs;  // (a,b), a <= b in the order
      for (const Vect& a : ri_.positive) {
        if (ri_.pos_order.at(a) > ri_.pos_order.at(gamma)) break;
        Vect b = gamma - a;
        if (!is_positive(b)) continue;
        if (ri_.pos_order.at(a) > ri_.pos_order.at(b)) continue;
        pairs.push_back({a, b});
      }
      if (pairs.empty()) continue;  // simple root
      // Extraspecial pair: minimal first member.
      const auto& [a1, b1] = pairs.front();
      Rational n1 = Rational(chain_down(a1, b1) + 1);
      set_pair(a1, b1, n1);
      for (std::size_t t = 1; t < pairs.size(); ++t) {
        const auto& [a, b] = pairs[t];
        // Quadruple a1 + b1 + (-a) + (-b) = 0, no two opposite:
        //   N(a1,b1)N(-a,-b)/(g,g) + N(b1,-a)N(a1,-b)/(b1-a,b1-a)
        //     + N(-a,a1)N(b1,-b)/(a1-a,a1-a) = 0.
        Rational term2 = 0, term3 = 0;
        if (is_root(b1 - a) && is_root(a1 - b))
          term2 = n_general(b1, -a) * n_general(a1, -b) / norm(b1 - a);
        if (is_root(a1 - a) && is_root(b1 - b))
          term3 = n_general(-a, a1) * n_general(b1, -b) / norm(a1 - a);
        // N(-a,-b) = -N(a,b).
        Rational nab = norm(gamma) * (term2 + term3) / n1;
        set_pair(a, b, nab);
      }
    }
  }

  void set_pair(const Vect& a, const Vect& b, const Rational& v) {
    npos_[{ri_.pos_order.at(a), ri_.pos_order.at(b)}] = v;
    npos_[{ri_.pos_order.at(b), ri_.pos_order.at(a)}] = -v;
  }

  const RootSystem& rs_;
  const RootIndex& ri_;
  std::map<std::pair<int, int>, Rational> npos_;
};

std::string coord_name(const Vect& c) {
  std::ostringstream os;
  os << "(";
  for (Eigen::Index i = 0; i < c.size(); ++i) {
    if (i) os << ",";
    os << c[i];
  }
  os << ")";
  return os.str();
}

}  // namespace

GradedLieAlgebra chevalley_basis(const RootSystem& rs, const std::vector<long>& degree_on_simple) {
  if (degree_on_simple.size() != static_cast<std::size_t>(rs.rank()))
    throw Error("DimensionMismatch", "one degree per simple root required");
  RootIndex ri = index_roots(rs);
  ChevalleyConstants cc(rs, ri);
  int l = rs.rank();
  int nroots = static_cast<int>(ri.roots.size());

  // Basis: simple coroots h_1..h_l, then e_r for all roots in sorted order.
  std::vector<std::string> names;
  std::vector<long> degrees;
  for (int i = 0; i < l; ++i) {
    names.push_back("h" + std::to_string(i + 1));
    degrees.push_back(0);
  }
  std::vector<Vect> coords(nroots);
  for (int r = 0; r < nroots; ++r) {
    auto c = rootsys::simple_coordinates(rs, ri.roots[r]);
    coords[r] = *c;
    long d = 0;
    for (int i = 0; i < l; ++i) d += to_long((*c)[i]) * degree_on_simple[i];
    bool positive = ri.pos_order.count(ri.roots[r]) != 0;
    names.push_back((positive ? "e" : "f") + coord_name(positive ? coords[r] : Vect(-coords[r])));
    degrees.push_back(d);
  }

  auto coroot_coords = [&](const Vect& root, const Vect& c) {
    // alpha^vee in the basis of simple coroots; integral for root systems.
    Vect out(l);
    Rational nr = inner(rs.space, root, root);
    for (int i = 0; i < l; ++i) {
      Rational v = c[i] * inner(rs.space, rs.simple_roots[i], rs.simple_roots[i]) / nr;
      if (!is_integer(v)) throw Error("NotARootSystem", "non-integral coroot coordinates");
      out[i] = v;
    }
    return out;
  };

  std::vector<std::tuple<int, int, SparseVec>> entries;
  // [h_i, e_r] = <r | alpha_i> e_r
  for (int i = 0; i < l; ++i)
    for (int r = 0; r < nroots; ++r) {
      Rational p = pairing(rs.space, ri.roots[r], rs.simple_roots[i]);
      if (p != 0) entries.push_back({i, l + r, SparseVec{{l + r, p}}});
    }
  // [e_r, e_s]
  for (int r = 0; r < nroots; ++r)
    for (int s = r + 1; s < nroots; ++s) {
      Vect sum = ri.roots[r] + ri.roots[s];
      if (sum.isZero()) {
        Vect h = coroot_coords(ri.roots[r], coords[r]);
        SparseVec v;
        for (int i = 0; i < l; ++i)
          if (h[i] != 0) v.push_back({i, h[i]});
        entries.push_back({l + r, l + s, v});
      } else if (ri.index.count(sum)) {
        Rational nn = cc.n(ri.roots[r], ri.roots[s]);
        if (!is_integer(nn)) throw Error("Internal", "non-integral structure constant");
        if (nn != 0) entries.push_back({l + r, l + s, SparseVec{{l + ri.index.at(sum), nn}}});
      }
    }

  GradedLieAlgebra g = GradedLieAlgebra::from_table(std::move(names), std::move(degrees), entries);
  g.validate();
  return g;
}

// ---------------------------------------------------------------------------
// Killing form, radical, Levi verification

Mat killing_form(const GradedLieAlgebra& g) {
  int n = g.dim();
  Mat k = Mat::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      Rational acc = 0;
      for (int l = 0; l < n; ++l)
        for (const auto& [m, c] : g.bracket(j, l)) acc += c * g.structure_constant(i, m, l);
      k(i, j) = acc;
      k(j, i) = acc;
    }
  return k;
}

std::vector<Vect> derived_subalgebra(const GradedLieAlgebra& g) {
  RowSpace sp(g.dim());
  std::vector<Vect> out;
  for (int i = 0; i < g.dim(); ++i)
    for (int j = i + 1; j < g.dim(); ++j) {
      Vect v = Vect::Zero(g.dim());
      for (const auto& [k, c] : g.bracket(i, j)) v[k] = c;
      if (sp.add(v)) out.push_back(v);
    }
  return out;
}

namespace {

// Splits vectors into homogeneous components and returns a reduced basis;
// fails when the span is not graded.
std::vector<Vect> homogeneous_basis(const GradedLieAlgebra& g, const std::vector<Vect>& basis) {
  RowSpace span(g.dim());
  for (const Vect& v : basis) span.add(v);
  RowSpace graded(g.dim());
  std::vector<Vect> out;
  for (const Vect& v : basis) {
    std::map<long, Vect> parts;
    for (int i = 0; i < g.dim(); ++i) {
      if (v[i] == 0) continue;
      auto [it, fresh] = parts.try_emplace(g.degree(i), Vect::Zero(g.dim()));
      it->second[i] = v[i];
    }
    for (auto& [d, p] : parts) {
      if (!span.contains(p))
        throw Error("NotGraded", "subspace is not spanned by homogeneous elements");
      if (graded.add(p)) out.push_back(p);
    }
  }
  if (graded.dim() != span.dim()) throw Error("NotGraded", "graded basis extraction failed");
  return out;
}

}  // namespace

std::vector<Vect> radical(const GradedLieAlgebra& g) {
  Mat k = killing_form(g);
  std::vector<Vect> derived = derived_subalgebra(g);
  Mat rows(derived.size(), g.dim());
  for (std::size_t i = 0; i < derived.size(); ++i) rows.row(i) = (k * derived[i]).transpose();
  auto ker = kernel_basis(rows);
  return homogeneous_basis(g, ker);
}

bool is_solvable_subspace(const GradedLieAlgebra& g, std::vector<Vect> basis) {
  while (!basis.empty()) {
    RowSpace next(g.dim());
    std::vector<Vect> nb;
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (std::size_t j = i + 1; j < basis.size(); ++j) {
        Vect v = g.bracket_vec(basis[i], basis[j]);
        if (next.add(v)) nb.push_back(v);
      }
    if (next.dim() == static_cast<long>(basis.size())) return false;  // stalled while nonzero
    if (nb.empty()) return true;
    basis = std::move(nb);
  }
  return true;
}

bool is_ideal(const GradedLieAlgebra& g, const std::vector<Vect>& basis) {
  RowSpace sp(g.dim());
  for (const Vect& v : basis) sp.add(v);
  for (int i = 0; i < g.dim(); ++i) {
    Vect e = Vect::Zero(g.dim());
    e[i] = 1;
    for (const Vect& v : basis)
      if (!sp.contains(g.bracket_vec(e, v))) return false;
  }
  return true;
}

GradedLieAlgebra quotient_algebra(const GradedLieAlgebra& g, const std::vector<Vect>& ideal) {
  RowSpace sp(g.dim());
  for (const Vect& v : ideal) sp.add(v);
  std::vector<bool> pivot(g.dim(), false);
  for (const Vect& row : sp.basis()) {
    for (int i = 0; i < g.dim(); ++i)
      if (row[i] != 0) {
        pivot[i] = true;
        break;
      }
  }
  std::vector<int> keep;
  for (int i = 0; i < g.dim(); ++i)
    if (!pivot[i]) keep.push_back(i);

  auto project = [&](Vect v) {
    for (const Vect& row : sp.basis()) {
      int p = -1;
      for (int i = 0; i < g.dim(); ++i)
        if (row[i] != 0) {
          p = i;
          break;
        }
      if (v[p] != 0) v -= v[p] * row;
    }
    Vect out(keep.size());
    for (std::size_t a = 0; a < keep.size(); ++a) out[a] = v[keep[a]];
    return out;
  };

  GradedLieAlgebra q;
  std::vector<std::tuple<int, int, SparseVec>> entries;
  std::vector<std::string> names;
  std::vector<long> degrees;
  for (int i : keep) {
    names.push_back(g.basis_names()[i]);
    degrees.push_back(g.degree(i));
  }
  for (std::size_t a = 0; a < keep.size(); ++a)
    for (std::size_t b = a + 1; b < keep.size(); ++b) {
      Vect v = Vect::Zero(g.dim());
      for (const auto& [k, c] : g.bracket(keep[a], keep[b])) v[k] = c;
      Vect w = project(v);
      SparseVec s;
      for (Eigen::Index k = 0; k < w.size(); ++k)
        if (w[k] != 0) s.push_back({static_cast<int>(k), w[k]});
      if (!s.empty()) entries.push_back({static_cast<int>(a), static_cast<int>(b), s});
    }
  return GradedLieAlgebra::from_table(std::move(names), std::move(degrees), entries);
}

// ---------------------------------------------------------------------------
// Effectiveness and the characteristic element

std::string to_string(Effectiveness e) {
  switch (e) {
    case Effectiveness::Effective: return "Effective";
    case Effectiveness::QuasiEffective: return "QuasiEffective";
    case Effectiveness::AlmostEffective: return "AlmostEffective";
    case Effectiveness::None: return "None";
  }
  return "?";
}

namespace {

// Kernel of the map X -> [X, -] from span(dom) into the components listed in
// `against`, i.e. {X in span(dom) : [X, y] = 0 for all y in span(against)}.
std::vector<Vect> annihilator(const GradedLieAlgebra& g, const std::vector<int>& dom,
                              const std::vector<int>& against) {
  Mat rows(g.dim() * against.size(), dom.size());
  rows.setZero();
  for (std::size_t d = 0; d < dom.size(); ++d) {
    for (std::size_t a = 0; a < against.size(); ++a)
      for (const auto& [k, c] : g.bracket(dom[d], against[a]))
        rows(a * g.dim() + k, d) = c;
  }
  return kernel_basis(rows);
}

}  // namespace

Effectiveness effectiveness_class(const GradedLieAlgebra& g) {
  auto gplus = g.indices_where([](long d) { return d >= 0; });
  auto gzero = g.indices_where([](long d) { return d == 0; });
  auto gm1 = g.indices_where([](long d) { return d == -1; });
  auto m = g.indices_where([](long d) { return d < 0; });

  bool effective = annihilator(g, gplus, gm1).empty();
  bool almost = annihilator(g, gplus, m).empty();

  // Quasi-effectiveness: elements of the nonnegative part mapping m into m
  // lie in degree 0, and no degree-0 element kills m.
  bool quasi;
  {
    Mat rows(g.dim() * m.size(), gplus.size());
    rows.setZero();
    for (std::size_t d = 0; d < gplus.size(); ++d)
      for (std::size_t a = 0; a < m.size(); ++a)
        for (const auto& [k, c] : g.bracket(gplus[d], m[a])) {
          if (g.degree(k) >= 0) rows(a * g.dim() + k, d) = c;
        }
    bool preserves_in_gzero = true;
    for (const Vect& v : kernel_basis(rows)) {
      for (std::size_t d = 0; d < gplus.size(); ++d)
        if (v[d] != 0 && g.degree(gplus[d]) > 0) preserves_in_gzero = false;
    }
    quasi = preserves_in_gzero && annihilator(g, gzero, m).empty();
  }

  if (effective && !(quasi && almost))
    throw Error("Internal", "effectiveness implication chain violated");
  if (quasi && !almost) throw Error("Internal", "effectiveness implication chain violated");

  if (effective) return Effectiveness::Effective;
  if (quasi) return Effectiveness::QuasiEffective;
  if (almost) return Effectiveness::AlmostEffective;
  return Effectiveness::None;
}

std::optional<Vect> characteristic_element(const GradedLieAlgebra& g) {
  auto gzero = g.indices_where([](long d) { return d == 0; });
  Mat a(g.dim() * g.dim(), gzero.size());
  a.setZero();
  Vect b = Vect::Zero(g.dim() * g.dim());
  for (std::size_t d = 0; d < gzero.size(); ++d)
    for (int j = 0; j < g.dim(); ++j)
      for (const auto& [k, c] : g.bracket(gzero[d], j)) a(j * g.dim() + k, d) = c;
  for (int j = 0; j < g.dim(); ++j) b[j * g.dim() + j] = g.degree(j);
  auto sol = solve_linear(a, b);
  if (!sol) return std::nullopt;
  Vect e = Vect::Zero(g.dim());
  for (std::size_t d = 0; d < gzero.size(); ++d) e[gzero[d]] = (*sol)[d];
  return e;
}

GradedLieAlgebra characteristic_prolongation(const GradedLieAlgebra& g) {
  if (characteristic_element(g)) return g;
  GradedLieAlgebra c;
  c.names_ = g.names_;
  c.names_.push_back("E");
  c.degrees_ = g.degrees_;
  c.degrees_.push_back(0);
  int n = g.dim();
  c.table_.assign(n + 1, std::vector<SparseVec>(n + 1));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) c.table_[i][j] = g.table_[i][j];
  for (int j = 0; j < n; ++j) {
    if (g.degree(j) != 0) {
      c.table_[n][j] = SparseVec{{j, Rational(g.degree(j))}};
      c.table_[j][n] = SparseVec{{j, Rational(-g.degree(j))}};
    }
  }
  if (g.matrices_ && g.grading_matrix_) {
    auto ms = *g.matrices_;
    ms.push_back(*g.grading_matrix_);
    c.matrices_ = std::move(ms);
    c.grading_matrix_ = g.grading_matrix_;
  }
  return c;
}

// ---------------------------------------------------------------------------
// Levi verification and centralizers

Mat restricted_ad(const GradedLieAlgebra& g, const Vect& x, const std::vector<int>& cols) {
  std::map<int, int> pos;
  for (std::size_t a = 0; a < cols.size(); ++a) pos[cols[a]] = static_cast<int>(a);
  Mat m = Mat::Zero(cols.size(), cols.size());
  for (int i = 0; i < g.dim(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t a = 0; a < cols.size(); ++a)
      for (const auto& [k, c] : g.bracket(i, cols[a])) {
        auto it = pos.find(k);
        if (it == pos.end())
          throw Error("NotGraded", "action does not preserve the requested sub-basis");
        m(it->second, a) += x[i] * c;
      }
  }
  return m;
}

bool verify_levi(const GradedLieAlgebra& g, const std::vector<Vect>& s_basis,
                 bool require_radical_commutes) {
  RowSpace s(g.dim());
  for (const Vect& v : s_basis)
    if (!s.add(v)) return false;  // dependent spanning set
  // Graded subspace, closed under the bracket.
  try {
    homogeneous_basis(g, s_basis);
  } catch (const Error&) {
    return false;
  }
  for (std::size_t i = 0; i < s_basis.size(); ++i)
    for (std::size_t j = i + 1; j < s_basis.size(); ++j)
      if (!s.contains(g.bracket_vec(s_basis[i], s_basis[j]))) return false;
  // Intrinsic Killing form of s must be nondegenerate.
  int d = static_cast<int>(s_basis.size());
  Mat k(d, d);
  std::vector<int> all(g.dim());
  for (int i = 0; i < g.dim(); ++i) all[i] = i;
  std::vector<Mat> ads;
  RowSpace coords(g.dim());
  for (const Vect& v : s_basis) coords.add_tracked(v);
  for (int i = 0; i < d; ++i) {
    // ad of s_basis[i] restricted to s, in the s_basis coordinates.
    Mat m(d, d);
    for (int j = 0; j < d; ++j) {
      auto c = coords.coordinates(g.bracket_vec(s_basis[i], s_basis[j]));
      if (!c) return false;
      m.col(j) = *c;
    }
    ads.push_back(m);
  }
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      Rational tr = 0;
      Mat p = ads[i] * ads[j];
      for (int t = 0; t < d; ++t) tr += p(t, t);
      k(i, j) = tr;
    }
  if (rank_of(k) != d) return false;
  // Complement to the radical.
  auto rad = radical(g);
  RowSpace all_span(g.dim());
  for (const Vect& v : s_basis) all_span.add(v);
  for (const Vect& v : rad)
    if (!all_span.add(v)) return false;  // nontrivial intersection
  if (all_span.dim() != g.dim()) return false;
  if (require_radical_commutes) {
    for (const Vect& r : rad) {
      bool deg0 = true;
      for (int i = 0; i < g.dim(); ++i)
        if (r[i] != 0 && g.degree(i) != 0) deg0 = false;
      if (!deg0) continue;
      for (const Vect& v : s_basis)
        if (!g.bracket_vec(r, v).isZero()) return false;
    }
  }
  return true;
}

std::vector<Vect> centralizer_in_degree0(const GradedLieAlgebra& g) {
  auto gzero = g.indices_where([](long d) { return d == 0; });
  std::vector<int> all(g.dim());
  for (int i = 0; i < g.dim(); ++i) all[i] = i;
  auto ker = annihilator(g, gzero, all);
  std::vector<Vect> out;
  for (const Vect& v : ker) {
    Vect w = Vect::Zero(g.dim());
    for (std::size_t d = 0; d < gzero.size(); ++d) w[gzero[d]] = v[d];
    out.push_back(w);
  }
  return out;
}

}  // namespace glp::gla
