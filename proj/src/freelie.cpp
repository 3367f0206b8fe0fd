#include "glp/gla.hpp"

namespace glp::gla {

namespace {

std::vector<long> positive_profile(const std::map<long, long>& generator_dims, long cutoff) {
  // profile[d] = number of generators in degree -d
  std::vector<long> profile(cutoff + 1, 0);
  for (const auto& [deg, dim] : generator_dims) {
    if (deg >= 0) throw Error("InvalidRank", "generators must sit in negative degrees");
    if (dim < 0) throw Error("InvalidRank", "generator dimensions must be nonnegative");
    if (-deg <= cutoff) profile[-deg] = dim;
  }
  return profile;
}

}  // namespace

std::map<long, long> free_lie_dims_witt(const std::map<long, long>& generator_dims,
                                        long depth_cutoff) {
  if (depth_cutoff < 1) throw Error("InvalidRank", "depth cutoff must be >= 1");
  auto profile = positive_profile(generator_dims, depth_cutoff);
  long n = depth_cutoff;
  // w = -log(1 - P) as a truncated power series; then sum_{d|m} d f_d = m w_m.
  std::vector<Rational> w(n + 1, Rational(0));
  std::vector<Rational> pk(n + 1, Rational(0));  // P^k
  pk[0] = 1;
  for (long k = 1; k <= n; ++k) {
    std::vector<Rational> next(n + 1, Rational(0));
    for (long a = 0; a <= n; ++a) {
      if (pk[a] == 0) continue;
      for (long d = 1; a + d <= n; ++d)
        if (profile[d]) next[a + d] += pk[a] * profile[d];
    }
    pk = std::move(next);
    for (long m = 0; m <= n; ++m) w[m] += pk[m] / k;
  }
  std::map<long, long> dims;
  for (long m = 1; m <= n; ++m) {
    Rational acc = Rational(m) * w[m];
    for (long d = 1; d < m; ++d)
      if (m % d == 0) acc -= Rational(d) * dims[-d];
    Rational f = acc / m;
    dims[-m] = to_long(f);
  }
  return dims;
}

namespace {

// Classical Hall trees on a weighted alphabet: the order puts lower total
// degree first, then creation index; a tree (u,v) with u > v is admissible
// when u is a generator or u = (x,y) with y <= v.
struct HallCounter {
  struct Node {
    long degree;
    int left = -1, right = -1;  // -1,-1 for generators
  };
  std::vector<Node> nodes;  // sorted by (degree, creation)

  explicit HallCounter(const std::vector<long>& profile, long cutoff) {
    long maxd = cutoff;
    std::vector<std::vector<int>> by_degree(maxd + 1);
    for (long d = 1; d <= maxd; ++d)
      for (long c = 0; c < profile[d]; ++c) {
        nodes.push_back({d, -1, -1});
        by_degree[d].push_back(static_cast<int>(nodes.size() - 1));
      }
    // Build degree by degree; indices are monotone in (degree, creation).
    for (long d = 2; d <= maxd; ++d) {
      std::size_t count_before = nodes.size();
      for (std::size_t u = 0; u < count_before; ++u)
        for (std::size_t v = 0; v < count_before; ++v) {
          if (nodes[u].degree + nodes[v].degree != d) continue;
          if (u <= v) continue;  // require u > v
          if (nodes[u].left >= 0 && static_cast<std::size_t>(nodes[u].right) > v) continue;
          nodes.push_back({d, static_cast<int>(u), static_cast<int>(v)});
        }
    }
  }

  std::map<long, long> dims(long cutoff) const {
    std::map<long, long> out;
    for (long d = 1; d <= cutoff; ++d) out[-d] = 0;
    for (const Node& n : nodes)
      if (n.degree <= cutoff) ++out[-n.degree];
    return out;
  }
};

}  // namespace

std::map<long, long> free_lie_dims_hall(const std::map<long, long>& generator_dims,
                                        long depth_cutoff) {
  if (depth_cutoff < 1) throw Error("InvalidRank", "depth cutoff must be >= 1");
  auto profile = positive_profile(generator_dims, depth_cutoff);
  HallCounter h(profile, depth_cutoff);
  return h.dims(depth_cutoff);
}

std::map<long, long> free_lie_dims(const std::map<long, long>& generator_dims,
                                   long depth_cutoff) {
  auto hall = free_lie_dims_hall(generator_dims, depth_cutoff);
  auto witt = free_lie_dims_witt(generator_dims, depth_cutoff);
  if (hall != witt)
    throw Error("Internal", "Hall-tree count disagrees with the Witt formula");
  return hall;
}

}  // namespace glp::gla
