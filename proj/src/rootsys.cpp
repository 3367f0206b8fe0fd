#include "glp/rootsys.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace glp::rootsys {

using exactspace::extend_with_markers;

Family family_from_char(char c) {
  switch (c) {
    case 'A': return Family::A;
    case 'B': return Family::B;
    case 'C': return Family::C;
    case 'D': return Family::D;
    case 'E': return Family::E;
    case 'F': return Family::F;
    case 'G': return Family::G;
    default: throw Error("InvalidRank", std::string("unknown family '") + c + "'");
  }
}

char family_to_char(Family f) {
  switch (f) {
    case Family::A: return 'A';
    case Family::B: return 'B';
    case Family::C: return 'C';
    case Family::D: return 'D';
    case Family::E: return 'E';
    case Family::F: return 'F';
    case Family::G: return 'G';
  }
  return '?';
}

namespace {

void sort_vects(std::vector<Vect>& v) { std::sort(v.begin(), v.end(), VectLess()); }

std::vector<Vect> with_negatives(std::vector<Vect> v) {
  std::size_t n = v.size();
  for (std::size_t i = 0; i < n; ++i) v.push_back(-v[i]);
  sort_vects(v);
  return v;
}

RootSystem build_A(int n) {
  AmbientSpace sp = AmbientSpace::euclidean(n + 1);
  std::vector<Vect> pos, simple;
  for (int i = 0; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) pos.push_back(sp.e(i) - sp.e(j));
  for (int i = 0; i < n; ++i) simple.push_back(sp.e(i) - sp.e(i + 1));
  return {sp, with_negatives(pos), simple, "A" + std::to_string(n)};
}

RootSystem build_B(int n) {
  AmbientSpace sp = AmbientSpace::euclidean(n);
  std::vector<Vect> pos, simple;
  for (int i = 0; i < n; ++i) pos.push_back(sp.e(i));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      pos.push_back(sp.e(i) - sp.e(j));
      pos.push_back(sp.e(i) + sp.e(j));
    }
  for (int i = 0; i + 1 < n; ++i) simple.push_back(sp.e(i) - sp.e(i + 1));
  simple.push_back(sp.e(n - 1));
  return {sp, with_negatives(pos), simple, "B" + std::to_string(n)};
}

RootSystem build_C(int n) {
  AmbientSpace sp = AmbientSpace::euclidean(n);
  std::vector<Vect> pos, simple;
  for (int i = 0; i < n; ++i) pos.push_back(2 * sp.e(i));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      pos.push_back(sp.e(i) - sp.e(j));
      pos.push_back(sp.e(i) + sp.e(j));
    }
  for (int i = 0; i + 1 < n; ++i) simple.push_back(sp.e(i) - sp.e(i + 1));
  simple.push_back(2 * sp.e(n - 1));
  return {sp, with_negatives(pos), simple, "C" + std::to_string(n)};
}

RootSystem build_D(int n) {
  AmbientSpace sp = AmbientSpace::euclidean(n);
  std::vector<Vect> pos, simple;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      pos.push_back(sp.e(i) - sp.e(j));
      pos.push_back(sp.e(i) + sp.e(j));
    }
  for (int i = 0; i + 1 < n; ++i) simple.push_back(sp.e(i) - sp.e(i + 1));
  simple.push_back(sp.e(n - 2) + sp.e(n - 1));
  return {sp, with_negatives(pos), simple, "D" + std::to_string(n)};
}

// Rank-2 base with one marker of self-inner-product 1/6; roots come in the
// seven layers 2w, e+-w, 2e, 3e+-w and their negatives.
RootSystem build_G2() {
  AmbientSpace base = AmbientSpace::euclidean(2);
  Mat mg(1, 1);
  mg(0, 0) = Rational(1, 6);
  AmbientSpace sp = extend_with_markers(base, 1, mg);
  Vect w = (sp.e(1) - sp.e(0)) / 2;
  Vect eps = sp.e(2);
  std::vector<Vect> pos = {2 * w,          eps + w,  eps - w, 2 * eps,
                           3 * eps + w, 3 * eps - w};
  std::vector<Vect> simple = {2 * w, -w - eps};
  return {sp, with_negatives(pos), simple, "G2"};
}

RootSystem build_F4() {
  AmbientSpace sp = AmbientSpace::euclidean(4);
  std::vector<Vect> roots;
  for (int i = 0; i < 4; ++i) {
    roots.push_back(2 * sp.e(i));
    roots.push_back(-2 * sp.e(i));
  }
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      for (int si : {1, -1})
        for (int sj : {1, -1}) roots.push_back(si * sp.e(i) + sj * sp.e(j));
  for (int s0 : {1, -1})
    for (int s1 : {1, -1})
      for (int s2 : {1, -1})
        for (int s3 : {1, -1})
          roots.push_back(s0 * sp.e(0) + s1 * sp.e(1) + s2 * sp.e(2) + s3 * sp.e(3));
  sort_vects(roots);
  std::vector<Vect> simple = {sp.e(0) - sp.e(1), sp.e(1) - sp.e(2), 2 * sp.e(2),
                              sp.e(3) - sp.e(0) - sp.e(1) - sp.e(2)};
  return {sp, roots, simple, "F4"};
}

std::vector<Vect> e8_roots(const AmbientSpace& sp) {
  std::vector<Vect> roots;
  for (int i = 0; i < 8; ++i)
    for (int j = i + 1; j < 8; ++j)
      for (int si : {1, -1})
        for (int sj : {1, -1}) roots.push_back(si * sp.e(i) + sj * sp.e(j));
  for (int mask = 0; mask < 256; ++mask) {
    if (__builtin_popcount(mask) % 2 != 0) continue;
    Vect v = sp.zero();
    for (int i = 0; i < 8; ++i) v[i] = Rational((mask >> i) & 1 ? -1 : 1, 2);
    roots.push_back(v);
  }
  return roots;
}

std::vector<Vect> e8_simple(const AmbientSpace& sp) {
  Vect a1 = sp.zero();
  a1[0] = Rational(1, 2);
  a1[7] = Rational(1, 2);
  for (int i = 1; i <= 6; ++i) a1[i] = Rational(-1, 2);
  std::vector<Vect> simple = {a1, sp.e(0) + sp.e(1)};
  for (int i = 1; i <= 6; ++i) simple.push_back(sp.e(i) - sp.e(i - 1));
  return simple;
}

RootSystem build_E(int n) {
  AmbientSpace sp = AmbientSpace::euclidean(8);
  std::vector<Vect> simple = e8_simple(sp);
  simple.resize(n);
  // Roots of E6/E7 are the E8 roots lying in the span of the first n simples.
  Mat s(8, n);
  for (int j = 0; j < n; ++j) s.col(j) = simple[j];
  std::vector<Vect> roots;
  for (const Vect& r : e8_roots(sp)) {
    if (n == 8 || solve_linear(s, r)) roots.push_back(r);
  }
  sort_vects(roots);
  return {sp, roots, simple, "E" + std::to_string(n)};
}

}  // namespace

RootSystem build_root_system(Family family, int rank) {
  switch (family) {
    case Family::A:
      if (rank < 1) throw Error("InvalidRank", "A requires rank >= 1");
      return build_A(rank);
    case Family::B:
      if (rank < 2) throw Error("InvalidRank", "B requires rank >= 2");
      return build_B(rank);
    case Family::C:
      if (rank < 2) throw Error("InvalidRank", "C requires rank >= 2");
      return build_C(rank);
    case Family::D:
      if (rank < 4) throw Error("InvalidRank", "D requires rank >= 4");
      return build_D(rank);
    case Family::E:
      if (rank < 6 || rank > 8) throw Error("InvalidRank", "E requires rank 6..8");
      return build_E(rank);
    case Family::F:
      if (rank != 4) throw Error("InvalidRank", "F requires rank 4");
      return build_F4();
    case Family::G:
      if (rank != 2) throw Error("InvalidRank", "G requires rank 2");
      return build_G2();
  }
  throw Error("InvalidRank", "unreachable");
}

Eigen::MatrixXi cartan_matrix(const RootSystem& rs) {
  int l = rs.rank();
  if (l == 0) throw Error("InvalidRank", "no simple roots");
  Eigen::MatrixXi a(l, l);
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) {
      Rational p = pairing(rs.space, rs.simple_roots[i], rs.simple_roots[j]);
      a(i, j) = static_cast<int>(to_long(p));
    }
  return a;
}

std::optional<Vect> simple_coordinates(const RootSystem& rs, const Vect& v) {
  Mat s(rs.space.dim, rs.rank());
  for (int j = 0; j < rs.rank(); ++j) s.col(j) = rs.simple_roots[j];
  return solve_linear(s, v);
}

std::vector<Vect> positive_roots(const RootSystem& rs) {
  std::vector<Vect> pos;
  for (const Vect& r : rs.roots) {
    auto c = simple_coordinates(rs, r);
    if (!c) throw Error("NotARootSystem", "root outside the simple-root span");
    bool nonneg = true;
    for (Eigen::Index i = 0; i < c->size(); ++i)
      if ((*c)[i] < 0) nonneg = false;
    if (nonneg) pos.push_back(r);
  }
  return pos;
}

std::vector<Vect> fundamental_weights(const RootSystem& rs) {
  int l = rs.rank();
  Mat at(l, l);
  Eigen::MatrixXi a = cartan_matrix(rs);
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) at(i, j) = Rational(a(j, i));
  std::vector<Vect> out;
  for (int i = 0; i < l; ++i) {
    Vect rhs = Vect::Zero(l);
    rhs[i] = 1;
    auto c = solve_linear(at, rhs);
    if (!c) throw Error("NotARootSystem", "degenerate Cartan matrix");
    Vect w = rs.space.zero();
    for (int k = 0; k < l; ++k) w += (*c)[k] * rs.simple_roots[k];
    out.push_back(w);
  }
  return out;
}

Vect reflect(const AmbientSpace& space, const Vect& v, const Vect& root) {
  return v - pairing(space, v, root) * root;
}

namespace {

Vect conjugate_by_sign(const RootSystem& rs, Vect w, int sign) {
  // sign=+1 walks to the dominant chamber, -1 to the antidominant one.
  for (bool moved = true; moved;) {
    moved = false;
    for (const Vect& a : rs.simple_roots) {
      Rational p = pairing(rs.space, w, a);
      if ((sign > 0 && p < 0) || (sign < 0 && p > 0)) {
        w = w - p * a;
        moved = true;
      }
    }
  }
  return w;
}

}  // namespace

Vect dominant_conjugate(const RootSystem& rs, const Vect& w) {
  return conjugate_by_sign(rs, w, +1);
}

Vect lowest_conjugate(const RootSystem& rs, const Vect& w) {
  return conjugate_by_sign(rs, w, -1);
}

std::vector<Vect> weyl_orbit(const RootSystem& rs, const Vect& w) {
  if (w.size() != rs.space.dim) throw Error("DimensionMismatch", "weight outside the space");
  for (const Vect& a : rs.simple_roots) {
    if (!is_integer(pairing(rs.space, w, a)))
      throw Error("NonIntegralWeight", "weight pairs non-integrally with a simple root");
  }
  std::set<Vect, VectLess> seen;
  std::deque<Vect> queue;
  seen.insert(w);
  queue.push_back(w);
  while (!queue.empty()) {
    Vect v = queue.front();
    queue.pop_front();
    for (const Vect& a : rs.simple_roots) {
      Vect r = reflect(rs.space, v, a);
      if (seen.insert(r).second) queue.push_back(r);
    }
  }
  return {seen.begin(), seen.end()};
}

WeightSet weight_set(const RootSystem& rs, const Vect& dominant) {
  for (const Vect& a : rs.simple_roots) {
    Rational p = pairing(rs.space, dominant, a);
    if (!is_integer(p) || p < 0)
      throw Error("NotDominant", "extremal weight must be dominant integral");
  }
  // Saturate downward along root strings; this reaches every weight.
  std::set<Vect, VectLess> seen;
  std::deque<Vect> queue;
  seen.insert(dominant);
  queue.push_back(dominant);
  while (!queue.empty()) {
    Vect v = queue.front();
    queue.pop_front();
    for (const Vect& a : rs.simple_roots) {
      long m = to_long(pairing(rs.space, v, a));
      for (long j = 1; j <= m; ++j) {
        Vect u = v - Rational(j) * a;
        if (seen.insert(u).second) queue.push_back(u);
      }
    }
  }

  std::vector<Vect> pos = positive_roots(rs);
  Vect rho = rs.space.zero();
  for (const Vect& a : pos) rho += a;
  rho /= 2;

  auto norm_sq = [&](const Vect& v) { return inner(rs.space, v, v); };
  Rational top = norm_sq(dominant + rho);

  // Freudenthal recursion on dominant weights, by increasing depth below the
  // extremal weight.
  std::map<Vect, long, VectLess> mult;
  std::vector<std::pair<Rational, Vect>> dominants;
  for (const Vect& v : seen) {
    bool dom = true;
    for (const Vect& a : rs.simple_roots)
      if (pairing(rs.space, v, a) < 0) dom = false;
    if (!dom) continue;
    auto c = simple_coordinates(rs, dominant - v);
    if (!c) throw Error("NotARootSystem", "weight outside dominant + root lattice");
    Rational level = 0;
    for (Eigen::Index i = 0; i < c->size(); ++i) level += (*c)[i];
    dominants.push_back({level, v});
  }
  std::sort(dominants.begin(), dominants.end(),
            [](const auto& x, const auto& y) {
              if (x.first != y.first) return x.first < y.first;
              return VectLess()(x.second, y.second);
            });
  for (const auto& [level, mu] : dominants) {
    if (level == 0) {
      mult[mu] = 1;
      continue;
    }
    Rational num = 0;
    for (const Vect& a : pos) {
      for (long k = 1;; ++k) {
        Vect w = mu + Rational(k) * a;
        if (!seen.count(w)) break;
        Vect wd = dominant_conjugate(rs, w);
        auto it = mult.find(wd);
        if (it == mult.end()) throw Error("Internal", "Freudenthal order violated");
        num += Rational(it->second) * inner(rs.space, w, a);
      }
    }
    Rational den = top - norm_sq(mu + rho);
    if (den == 0) throw Error("Internal", "Freudenthal denominator vanished");
    Rational m = 2 * num / den;
    mult[mu] = to_long(m);
  }

  WeightSet ws;
  ws.dominant = dominant;
  ws.weights.assign(seen.begin(), seen.end());
  for (const Vect& v : ws.weights) ws.multiplicities[v] = mult.at(dominant_conjugate(rs, v));

  Integer total = 0;
  for (const auto& [v, m] : ws.multiplicities) total += m;
  if (total != weyl_dim(rs, dominant))
    throw Error("Internal", "weight multiplicities do not sum to the Weyl dimension");
  return ws;
}

Integer weyl_dim(const RootSystem& rs, const Vect& dominant) {
  for (const Vect& a : rs.simple_roots) {
    Rational p = pairing(rs.space, dominant, a);
    if (!is_integer(p) || p < 0)
      throw Error("NotDominant", "extremal weight must be dominant integral");
  }
  std::vector<Vect> pos = positive_roots(rs);
  Vect rho = rs.space.zero();
  for (const Vect& a : pos) rho += a;
  rho /= 2;
  Rational d = 1;
  for (const Vect& a : pos) d *= inner(rs.space, dominant + rho, a) / inner(rs.space, rho, a);
  return to_integer(d);
}

namespace {

struct ComponentInfo {
  std::vector<int> nodes;  // indices into the simple system
};

// Matches one connected diagram component against the finite Dynkin shapes.
// Rank-2 double-bond components are labelled by the short-root norm: 1 -> B2,
// 2 -> C2, anything else defaults to B2 (B2 and C2 coincide as abstract
// systems; the convention keeps both standard realizations round-tripping).
std::string match_component(const std::vector<int>& nodes, const Eigen::MatrixXi& cartan,
                            const std::vector<Rational>& norms) {
  int n = static_cast<int>(nodes.size());
  if (n == 1) return "A1";

  auto bond = [&](int i, int j) { return cartan(nodes[i], nodes[j]) * cartan(nodes[j], nodes[i]); };

  int max_bond = 0;
  std::vector<std::vector<int>> adj(n);
  int edge_count = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      int b = bond(i, j);
      if (b > 0) {
        adj[i].push_back(j);
        adj[j].push_back(i);
        ++edge_count;
        max_bond = std::max(max_bond, b);
      }
    }
  if (edge_count != n - 1) throw Error("NotARootSystem", "diagram component is not a tree");

  if (max_bond >= 3) {
    if (n != 2 || max_bond > 3) throw Error("NotARootSystem", "invalid triple bond");
    return "G2";
  }

  if (max_bond == 2) {
    // Must be a path with a single double bond.
    int doubles = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (bond(i, j) == 2) ++doubles;
    if (doubles != 1) throw Error("NotARootSystem", "multiple double bonds");
    for (int i = 0; i < n; ++i)
      if (adj[i].size() > 2) throw Error("NotARootSystem", "branched diagram with a double bond");
    if (n == 2) {
      Rational shortn = std::min(norms[nodes[0]], norms[nodes[1]]);
      return shortn == 2 ? "C2" : "B2";
    }
    long shorts = 0;
    Rational maxn = norms[nodes[0]];
    for (int i = 1; i < n; ++i) maxn = std::max(maxn, norms[nodes[i]]);
    for (int i = 0; i < n; ++i)
      if (norms[nodes[i]] < maxn) ++shorts;
    if (shorts == 2 && n == 4) return "F4";
    if (shorts == 1) return "B" + std::to_string(n);
    if (shorts == n - 1) return "C" + std::to_string(n);
    throw Error("NotARootSystem", "unrecognized doubly-laced diagram");
  }

  // Simply laced: path or star with three arms.
  std::vector<int> branch;
  for (int i = 0; i < n; ++i) {
    if (adj[i].size() > 3) throw Error("NotARootSystem", "node of degree > 3");
    if (adj[i].size() == 3) branch.push_back(i);
  }
  if (branch.empty()) return "A" + std::to_string(n);
  if (branch.size() > 1) throw Error("NotARootSystem", "more than one branch node");
  int b = branch[0];
  std::vector<int> arms;
  for (int s : adj[b]) {
    int len = 1, prev = b, cur = s;
    while (true) {
      int next = -1;
      for (int t : adj[cur])
        if (t != prev) next = t;
      if (next < 0) break;
      prev = cur;
      cur = next;
      ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms[0] == 1 && arms[1] == 1) return "D" + std::to_string(n);
  if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4)
    return "E" + std::to_string(n);
  throw Error("NotARootSystem", "unrecognized simply-laced diagram");
}

struct LabelLess {
  bool operator()(const std::string& a, const std::string& b) const {
    if (a[0] != b[0]) return a[0] < b[0];
    return std::stoi(a.substr(1)) < std::stoi(b.substr(1));
  }
};

}  // namespace

std::string classify_cartan(const Eigen::MatrixXi& cartan, const std::vector<Rational>& norms) {
  int l = static_cast<int>(cartan.rows());
  std::vector<int> comp(l, -1);
  std::vector<std::string> labels;
  for (int i = 0; i < l; ++i) {
    if (comp[i] >= 0) continue;
    std::vector<int> nodes;
    std::deque<int> queue{i};
    comp[i] = i;
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      nodes.push_back(u);
      for (int v = 0; v < l; ++v) {
        if (comp[v] < 0 && cartan(u, v) != 0) {
          comp[v] = i;
          queue.push_back(v);
        }
      }
    }
    std::sort(nodes.begin(), nodes.end());
    labels.push_back(match_component(nodes, cartan, norms));
  }
  std::sort(labels.begin(), labels.end(), LabelLess());
  std::string label;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) label += "+";
    label += labels[i];
  }
  return label;
}

Classification classify_full(const std::vector<Vect>& roots, const AmbientSpace& space) {
  if (roots.empty()) throw Error("NotARootSystem", "empty root set");
  std::set<Vect, VectLess> rset;
  for (const Vect& r : roots) {
    if (r.size() != space.dim) throw Error("DimensionMismatch", "root outside the space");
    if (r.isZero()) throw Error("NotARootSystem", "zero vector in root set");
    if (inner(space, r, r) == 0) throw Error("NotARootSystem", "isotropic root");
    rset.insert(r);
  }
  std::vector<Vect> rs(rset.begin(), rset.end());
  for (const Vect& r : rs) {
    if (!rset.count(-r)) throw Error("NotARootSystem", "not closed under negation");
    if (rset.count(2 * r)) throw Error("NotARootSystem", "nonreduced root set");
  }
  for (const Vect& a : rs)
    for (const Vect& b : rs) {
      if (!is_integer(pairing(space, a, b)))
        throw Error("NotARootSystem", "non-integral root pairing");
    }
  for (const Vect& a : rs)
    for (const Vect& b : rs) {
      if (!rset.count(reflect(space, a, b)))
        throw Error("NotARootSystem", "not closed under reflections");
    }

  // Deterministic generic functional 1, t, t^2, ... with escalating t.
  std::vector<Vect> positives;
  for (long t : {8191L, 1000003L, 2147483647L}) {
    positives.clear();
    bool ok = true;
    for (const Vect& r : rs) {
      Rational f = 0, p = 1;
      for (Eigen::Index i = 0; i < r.size(); ++i) {
        f += r[i] * p;
        p *= t;
      }
      if (f == 0) {
        ok = false;
        break;
      }
      if (f > 0) positives.push_back(r);
    }
    if (ok) break;
    positives.clear();
  }
  if (positives.empty()) throw Error("NotARootSystem", "no generic functional separates the roots");

  std::set<Vect, VectLess> pset(positives.begin(), positives.end());
  std::vector<Vect> simple;
  for (const Vect& a : positives) {
    bool decomposable = false;
    for (const Vect& b : positives) {
      Vect diff = a - b;
      if (!diff.isZero() && pset.count(diff)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) simple.push_back(a);
  }
  sort_vects(simple);

  int l = static_cast<int>(simple.size());
  Mat smat(space.dim, l);
  for (int j = 0; j < l; ++j) smat.col(j) = simple[j];
  for (const Vect& r : rs) {
    auto c = solve_linear(smat, r);
    if (!c) throw Error("NotARootSystem", "root outside the simple span");
    int sign = 0;
    for (Eigen::Index i = 0; i < c->size(); ++i) {
      if (!is_integer((*c)[i])) throw Error("NotARootSystem", "non-integral simple coordinates");
      if ((*c)[i] > 0) sign |= 1;
      if ((*c)[i] < 0) sign |= 2;
    }
    if (sign == 3) throw Error("NotARootSystem", "mixed-sign simple coordinates");
  }

  Eigen::MatrixXi cart(l, l);
  std::vector<Rational> norms(l);
  for (int i = 0; i < l; ++i) norms[i] = inner(space, simple[i], simple[i]);
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) cart(i, j) = static_cast<int>(to_long(pairing(space, simple[i], simple[j])));

  return {classify_cartan(cart, norms), simple};
}

std::string classify(const std::vector<Vect>& roots, const AmbientSpace& space) {
  return classify_full(roots, space).label;
}

std::string dynkin_ascii(const AmbientSpace& space, const std::vector<Vect>& simple_roots,
                         const std::vector<long>* degrees) {
  int l = static_cast<int>(simple_roots.size());
  std::vector<std::vector<int>> adj(l);
  std::vector<std::vector<int>> bond(l, std::vector<int>(l, 0));
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) {
      if (i == j) continue;
      long a = to_long(pairing(space, simple_roots[i], simple_roots[j]));
      long b = to_long(pairing(space, simple_roots[j], simple_roots[i]));
      bond[i][j] = static_cast<int>(a * b);
      if (bond[i][j] > 0 && j > i) {
        adj[i].push_back(j);
        adj[j].push_back(i);
      }
    }

  // Lay a longest-path walk horizontally; leftover leaves hang below their
  // chain neighbor.
  std::vector<int> order;
  std::vector<bool> used(l, false);
  {
    // Prefer starting from a leaf that does not sit on a branch node.
    int start = -1, fallback = 0;
    for (int i = 0; i < l; ++i) {
      if (adj[i].size() > 1) continue;
      if (fallback == 0) fallback = i;
      if (adj[i].empty() || adj[adj[i][0]].size() <= 2) {
        start = i;
        break;
      }
    }
    if (start < 0) start = fallback;
    int cur = start;
    while (cur >= 0) {
      order.push_back(cur);
      used[cur] = true;
      int next = -1;
      for (int v : adj[cur])
        if (!used[v] && (next < 0 || adj[v].size() > adj[next].size())) next = v;
      cur = next;
    }
  }
  int chain_len = static_cast<int>(order.size());

  auto norm = [&](int i) { return inner(space, simple_roots[i], simple_roots[i]); };
  std::ostringstream top, mid, cross, branch_line, branch_cross;
  bool any_branch = false;
  std::vector<int> hang(l, -1);
  for (int i = 0; i < l; ++i) {
    if (used[i]) continue;
    if (adj[i].size() != 1 || !used[adj[i][0]] || hang[adj[i][0]] >= 0)
      throw Error("NotARootSystem", "diagram shape out of scope for rendering");
    hang[adj[i][0]] = i;
    any_branch = true;
  }

  auto pad_to = [](std::ostringstream& os, std::size_t w) {
    std::size_t len = os.str().size();
    for (std::size_t t = len; t < w; ++t) os << ' ';
  };
  std::size_t colpos = 0;
  for (int k = 0; k < chain_len; ++k) {
    int i = order[k];
    std::string name = "a" + std::to_string(i + 1);
    std::string under;
    if (hang[i] >= 0) {
      under = "o(a" + std::to_string(hang[i] + 1) + ")";
      if (degrees && (*degrees)[hang[i]] != 0) under += " x";
    }
    pad_to(top, colpos);
    pad_to(mid, colpos);
    pad_to(cross, colpos);
    pad_to(branch_line, colpos);
    pad_to(branch_cross, colpos);
    top << name;
    mid << "o";
    if (degrees && (*degrees)[i] != 0) cross << "x";
    if (hang[i] >= 0) {
      branch_line << "|";
      branch_cross << under;
    }
    std::size_t width = std::max<std::size_t>(name.size() + 2, under.size() + 2);
    if (k + 1 < chain_len) {
      int j = order[k + 1];
      int b = bond[i][j];
      std::string link = "---";
      if (b == 2) link = norm(i) > norm(j) ? "=>=" : "=<=";
      if (b == 3) link = norm(i) > norm(j) ? "3>3" : "3<3";
      mid << link;
      while (mid.str().size() < colpos + width) mid << link.back();
      width = std::max(width, mid.str().size() - colpos);
    }
    colpos += width;
  }
  std::ostringstream out;
  out << top.str() << "\n" << mid.str() << "\n";
  if (degrees) out << cross.str() << "\n";
  if (any_branch) out << branch_line.str() << "\n" << branch_cross.str() << "\n";
  return out.str();
}

}  // namespace glp::rootsys
