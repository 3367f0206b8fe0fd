#include "glp/linalg.hpp"

namespace glp {

long rank_of(const Mat& a) {
  if (a.rows() == 0 || a.cols() == 0) return 0;
  Eigen::FullPivLU<Mat> lu(a);
  return static_cast<long>(lu.rank());
}

std::vector<Vect> kernel_basis(const Mat& a) {
  std::vector<Vect> out;
  if (a.cols() == 0) return out;
  if (a.rows() == 0) {
    for (Eigen::Index i = 0; i < a.cols(); ++i) {
      Vect e = Vect::Zero(a.cols());
      e[i] = 1;
      out.push_back(e);
    }
    return out;
  }
  Eigen::FullPivLU<Mat> lu(a);
  if (lu.dimensionOfKernel() == 0) return out;
  Mat k = lu.kernel();
  for (Eigen::Index j = 0; j < k.cols(); ++j) out.push_back(k.col(j));
  return out;
}

std::optional<Vect> solve_linear(const Mat& a, const Vect& b) {
  if (a.cols() == 0) {
    if (b.isZero()) return Vect(0);
    return std::nullopt;
  }
  Eigen::FullPivLU<Mat> lu(a);
  Vect x = lu.solve(b);
  if (a * x == b) return x;
  return std::nullopt;
}

bool RowSpace::add(const Vect& v) {
  Vect r = reduce(v, nullptr);
  long p = -1;
  for (Eigen::Index i = 0; i < r.size(); ++i) {
    if (r[i] != 0) {
      p = static_cast<long>(i);
      break;
    }
  }
  if (p < 0) return false;
  r /= r[p];
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i][p] != 0) rows_[i] -= rows_[i][p] * r;
  }
  rows_.push_back(r);
  pivots_.push_back(p);
  return true;
}

bool RowSpace::add_tracked(const Vect& v) {
  Vect combo = Vect::Zero(tracked_count_ + 1);
  combo[tracked_count_] = 1;
  // Extend previous combos with a zero slot for the new input vector.
  for (auto& c : combos_) {
    Vect e = Vect::Zero(tracked_count_ + 1);
    e.head(c.size()) = c;
    c = e;
  }
  ++tracked_count_;
  Vect r = v;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    long p = pivots_[i];
    if (r[p] != 0) {
      combo -= r[p] * combos_[i];
      r -= r[p] * rows_[i];
    }
  }
  long p = -1;
  for (Eigen::Index i = 0; i < r.size(); ++i) {
    if (r[i] != 0) {
      p = static_cast<long>(i);
      break;
    }
  }
  if (p < 0) return false;
  combo /= r[p];
  r /= r[p];
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i][p] != 0) {
      combos_[i] -= rows_[i][p] * combo;
      rows_[i] -= rows_[i][p] * r;
    }
  }
  rows_.push_back(r);
  pivots_.push_back(p);
  combos_.push_back(combo);
  return true;
}

Vect RowSpace::reduce(const Vect& v, Vect* combo) const {
  Vect r = v;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    long p = pivots_[i];
    if (r[p] != 0) {
      if (combo) *combo -= r[p] * combos_[i];
      r -= r[p] * rows_[i];
    }
  }
  return r;
}

bool RowSpace::contains(const Vect& v) const { return reduce(v, nullptr).isZero(); }

std::optional<Vect> RowSpace::coordinates(const Vect& v) const {
  Vect combo = Vect::Zero(tracked_count_);
  Vect r = v;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    long p = pivots_[i];
    if (r[p] != 0) {
      combo += r[p] * combos_[i];
      r -= r[p] * rows_[i];
    }
  }
  if (!r.isZero()) return std::nullopt;
  return combo;
}

// Faddeev-LeVerrier; exact over the rationals.
std::vector<Rational> charpoly(const Mat& a) {
  Eigen::Index n = a.rows();
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  Mat m = Mat::Zero(n, n);
  for (Eigen::Index k = 1; k <= n; ++k) {
    m = a * m;
    for (Eigen::Index i = 0; i < n; ++i) m(i, i) += c[n - k + 1];
    Rational tr = 0;
    Mat am = a * m;
    for (Eigen::Index i = 0; i < n; ++i) tr += am(i, i);
    c[n - k] = -tr / Rational(static_cast<long>(k));
  }
  return c;
}

namespace poly {

std::vector<Rational> normalize(std::vector<Rational> p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

std::vector<Rational> monic(std::vector<Rational> p) {
  p = normalize(std::move(p));
  if (p.empty()) return p;
  Rational lead = p.back();
  for (auto& c : p) c /= lead;
  return p;
}

std::vector<Rational> derivative(const std::vector<Rational>& p) {
  std::vector<Rational> d;
  for (std::size_t k = 1; k < p.size(); ++k) d.push_back(p[k] * Rational(static_cast<long>(k)));
  return normalize(std::move(d));
}

std::vector<Rational> mul(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<Rational> r(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return normalize(std::move(r));
}

std::vector<Rational> sub(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  std::vector<Rational> r(std::max(a.size(), b.size()), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  return normalize(std::move(r));
}

std::pair<std::vector<Rational>, std::vector<Rational>> divmod(
    const std::vector<Rational>& num, const std::vector<Rational>& den) {
  std::vector<Rational> r = normalize(num);
  std::vector<Rational> d = normalize(den);
  if (d.empty()) throw Error("DivideByZero", "polynomial division by zero");
  if (r.size() < d.size()) return {{}, r};
  std::vector<Rational> q(r.size() - d.size() + 1, Rational(0));
  while (r.size() >= d.size()) {
    Rational f = r.back() / d.back();
    std::size_t shift = r.size() - d.size();
    q[shift] = f;
    for (std::size_t i = 0; i < d.size(); ++i) r[shift + i] -= f * d[i];
    r = normalize(std::move(r));
    if (r.empty()) break;
    if (r.size() < d.size()) break;
  }
  return {normalize(std::move(q)), r};
}

std::vector<Rational> gcd(std::vector<Rational> a, std::vector<Rational> b) {
  a = normalize(std::move(a));
  b = normalize(std::move(b));
  while (!b.empty()) {
    auto [q, r] = divmod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(std::move(a));
}

ExtGcd ext_gcd(const std::vector<Rational>& a0, const std::vector<Rational>& b0) {
  std::vector<Rational> a = normalize(a0), b = normalize(b0);
  std::vector<Rational> u0 = {Rational(1)}, v0 = {}, u1 = {}, v1 = {Rational(1)};
  while (!b.empty()) {
    auto [q, r] = divmod(a, b);
    auto u2 = sub(u0, mul(q, u1));
    auto v2 = sub(v0, mul(q, v1));
    a = std::move(b);
    b = std::move(r);
    u0 = std::move(u1);
    v0 = std::move(v1);
    u1 = std::move(u2);
    v1 = std::move(v2);
  }
  if (!a.empty()) {
    Rational lead = a.back();
    for (auto& c : a) c /= lead;
    for (auto& c : u0) c /= lead;
    for (auto& c : v0) c /= lead;
  }
  return {a, u0, v0};
}

Mat eval(const std::vector<Rational>& p, const Mat& x) {
  Eigen::Index n = x.rows();
  Mat acc = Mat::Zero(n, n);
  for (std::size_t k = p.size(); k-- > 0;) {
    acc = acc * x;
    for (Eigen::Index i = 0; i < n; ++i) acc(i, i) += p[k];
  }
  return acc;
}

Rational eval(const std::vector<Rational>& p, const Rational& x) {
  Rational acc = 0;
  for (std::size_t k = p.size(); k-- > 0;) acc = acc * x + p[k];
  return acc;
}

}  // namespace poly

Vect flatten(const Mat& m) {
  Vect v(m.rows() * m.cols());
  Eigen::Index k = 0;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) v[k++] = m(i, j);
  return v;
}

Mat unflatten(const Vect& v, Eigen::Index rows, Eigen::Index cols) {
  Mat m(rows, cols);
  Eigen::Index k = 0;
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = v[k++];
  return m;
}

bool is_nilpotent(const Mat& a) {
  Mat p = a;
  Eigen::Index n = a.rows();
  // Square until the exponent passes n.
  Eigen::Index e = 1;
  while (e < n) {
    if (p.isZero()) return true;
    p = p * p;
    e *= 2;
  }
  return p.isZero();
}

}  // namespace glp
