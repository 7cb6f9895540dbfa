#include "evo/algebra.hpp"

#include <stdexcept>

namespace evo {

Algebra::Algebra(int dim, std::vector<Rat> constants,
                 std::vector<std::string> labels)
    : dim_(dim), c_(std::move(constants)), labels_(std::move(labels)) {
  const size_t want =
      static_cast<size_t>(dim) * static_cast<size_t>(dim) * dim;
  if (c_.size() != want)
    throw std::invalid_argument("structure constant count mismatch");
  if (labels_.empty()) {
    labels_.reserve(dim);
    for (int i = 1; i <= dim; ++i) labels_.push_back("e" + std::to_string(i));
  }
  if (static_cast<int>(labels_.size()) != dim)
    throw std::invalid_argument("label count mismatch");
}

Algebra Algebra::zero(int dim) {
  return Algebra(dim, std::vector<Rat>(
                          static_cast<size_t>(dim) * dim * dim, Rat(0)));
}

Vec multiply(const Algebra& a, const Vec& x, const Vec& y) {
  const int n = a.dim();
  if (static_cast<int>(x.size()) != n || static_cast<int>(y.size()) != n)
    throw std::invalid_argument("dimension mismatch");
  Vec out(n, Rat(0));
  for (int i = 0; i < n; ++i) {
    if (is_zero(x[i])) continue;
    for (int j = 0; j < n; ++j) {
      if (is_zero(y[j])) continue;
      const Rat f = x[i] * y[j];
      for (int k = 0; k < n; ++k) out[k] += f * a.c(i, j, k);
    }
  }
  return out;
}

Algebra tensor_algebra(const Algebra& a1, const Algebra& a2) {
  const int n = a1.dim(), m = a2.dim(), nm = n * m;
  Algebra t = Algebra::zero(nm);
  // (e_i (x) f_j)(e_k (x) f_r) = e_i e_k (x) f_j f_r.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < n; ++k)
        for (int r = 0; r < m; ++r)
          for (int p = 0; p < n; ++p) {
            const Rat& c1 = a1.c(i, k, p);
            if (is_zero(c1)) continue;
            for (int q = 0; q < m; ++q)
              t.c(i * m + j, k * m + r, p * m + q) = c1 * a2.c(j, r, q);
          }
  std::vector<std::string> labels;
  labels.reserve(nm);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j)
      labels.push_back(a1.labels()[i] + "(x)" + a2.labels()[j]);
  return Algebra(nm, t.constants(), std::move(labels));
}

bool is_commutative(const Algebra& a) {
  const int n = a.dim();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (a.c(i, j, k) != a.c(j, i, k)) return false;
  return true;
}

bool is_anticommutative(const Algebra& a) {
  const int n = a.dim();
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (a.c(i, j, k) != -a.c(j, i, k)) return false;
  return true;
}

bool is_zero_square(const Algebra& a) {
  // Polarized form of "x^2 = 0 for all x", exact over an infinite field:
  // basis squares vanish and e_i e_j + e_j e_i = 0.
  const int n = a.dim();
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (a.c(i, j, k) + a.c(j, i, k) != 0) return false;
  return true;
}

namespace {

// Columns are the n^2 basic products vec(e_i e_j).
Mat products_matrix(const Algebra& a) {
  const int n = a.dim();
  Mat p(n, n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) p.at(k, i * n + j) = a.c(i, j, k);
  return p;
}

}  // namespace

int square_dim(const Algebra& a) { return rank(products_matrix(a)); }

bool is_perfect(const Algebra& a) { return square_dim(a) == a.dim(); }

bool is_natural_basis(const Algebra& a, const std::vector<Vec>& candidate) {
  const int n = a.dim();
  if (static_cast<int>(candidate.size()) != n)
    throw std::invalid_argument("candidate basis size mismatch");
  Mat b(n, n);
  for (int j = 0; j < n; ++j) {
    if (static_cast<int>(candidate[j].size()) != n)
      throw std::invalid_argument("candidate vector dimension mismatch");
    for (int i = 0; i < n; ++i) b.at(i, j) = candidate[j][i];
  }
  if (rank(b) != n) return false;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      for (const Rat& coord : multiply(a, candidate[i], candidate[j]))
        if (!is_zero(coord)) return false;
    }
  return true;
}

Algebra change_basis(const Algebra& a, const Mat& p) {
  const int n = a.dim();
  if (p.rows() != n || p.cols() != n)
    throw std::invalid_argument("basis matrix size mismatch");
  const Mat pinv = inverse(p);  // throws if singular
  Algebra out = Algebra::zero(n);
  // b_i b_j = sum_{u,v} P_ui P_vj e_u e_v, re-expressed through P^-1.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Vec prod(n, Rat(0));
      for (int u = 0; u < n; ++u) {
        if (is_zero(p.at(u, i))) continue;
        for (int v = 0; v < n; ++v) {
          if (is_zero(p.at(v, j))) continue;
          const Rat f = p.at(u, i) * p.at(v, j);
          for (int k = 0; k < n; ++k) prod[k] += f * a.c(u, v, k);
        }
      }
      for (int s = 0; s < n; ++s) {
        Rat acc(0);
        for (int r = 0; r < n; ++r) acc += pinv.at(s, r) * prod[r];
        out.c(i, j, s) = acc;
      }
    }
  return out;
}

}  // namespace evo
