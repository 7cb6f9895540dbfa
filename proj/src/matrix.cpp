#include "evo/matrix.hpp"

#include <stdexcept>

namespace evo {

Mat::Mat(int rows, int cols)
    : rows_(rows), cols_(cols),
      e_(static_cast<size_t>(rows) * cols, Rat(0)) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative size");
}

Mat Mat::of(int rows, int cols, const std::vector<long>& entries) {
  if (entries.size() != static_cast<size_t>(rows) * cols)
    throw std::invalid_argument("entry count mismatch");
  Mat m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      m.at(i, j) = Rat(entries[static_cast<size_t>(i) * cols + j]);
  return m;
}

Mat Mat::identity(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Mat Mat::zeros(int rows, int cols) { return Mat(rows, cols); }

Mat Mat::operator+(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("size mismatch");
  Mat r(rows_, cols_);
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + o.e_[i];
  return r;
}

Mat Mat::operator-(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("size mismatch");
  Mat r(rows_, cols_);
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] - o.e_[i];
  return r;
}

Mat Mat::operator*(const Mat& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("size mismatch");
  Mat r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int t = 0; t < cols_; ++t) {
      const Rat& a = at(i, t);
      if (is_zero(a)) continue;
      for (int j = 0; j < o.cols_; ++j) r.at(i, j) += a * o.at(t, j);
    }
  return r;
}

Mat Mat::scaled(const Rat& s) const {
  Mat r(rows_, cols_);
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] * s;
  return r;
}

Mat Mat::transpose() const {
  Mat r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

bool Mat::operator==(const Mat& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
}

Rat Mat::trace() const {
  if (!is_square()) throw std::invalid_argument("trace of non-square matrix");
  Rat t(0);
  for (int i = 0; i < rows_; ++i) t += at(i, i);
  return t;
}

Mat kron(const Mat& a, const Mat& b) {
  Mat r(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      const Rat& f = a.at(i, j);
      if (is_zero(f)) continue;
      for (int p = 0; p < b.rows(); ++p)
        for (int q = 0; q < b.cols(); ++q)
          r.at(i * b.rows() + p, j * b.cols() + q) = f * b.at(p, q);
    }
  return r;
}

Rat det(const Mat& m) {
  if (!m.is_square()) throw std::invalid_argument("det of non-square matrix");
  const int n = m.rows();
  if (n == 0) return Rat(1);

  // Clear denominators row by row, then run integer Bareiss; every division
  // in the elimination is exact.
  std::vector<std::vector<mpz_class>> a(n, std::vector<mpz_class>(n));
  Rat scale(1);
  for (int i = 0; i < n; ++i) {
    mpz_class l(1);
    for (int j = 0; j < n; ++j) {
      const mpz_class& d = m.at(i, j).get_den();
      l = l / gcd(l, d) * d;
    }
    for (int j = 0; j < n; ++j) {
      const Rat& q = m.at(i, j);
      a[i][j] = q.get_num() * (l / q.get_den());
    }
    scale *= Rat(l);
  }

  mpz_class prev(1);
  int sign = 1;
  for (int c = 0; c < n - 1; ++c) {
    int pivot = -1;
    for (int i = c; i < n; ++i)
      if (a[i][c] != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) return Rat(0);
    if (pivot != c) {
      std::swap(a[pivot], a[c]);
      sign = -sign;
    }
    for (int i = c + 1; i < n; ++i) {
      for (int j = c + 1; j < n; ++j) {
        mpz_class t = a[i][j] * a[c][c] - a[i][c] * a[c][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[c][c];
  }
  Rat d(a[n - 1][n - 1] * sign);
  return d / scale;
}

namespace {

// Row echelon over the rationals; returns rank, optionally reducing an
// attached right block (Gauss-Jordan when reduce_full).
int eliminate(std::vector<std::vector<Rat>>& a, int rows, int cols,
              int work_cols, bool reduce_full) {
  int r = 0;
  for (int c = 0; c < work_cols && r < rows; ++c) {
    int pivot = -1;
    for (int i = r; i < rows; ++i)
      if (!is_zero(a[i][c])) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    std::swap(a[pivot], a[r]);
    const Rat inv = 1 / a[r][c];
    for (int j = c; j < cols; ++j) a[r][j] *= inv;
    const int start = reduce_full ? 0 : r + 1;
    for (int i = start; i < rows; ++i) {
      if (i == r || is_zero(a[i][c])) continue;
      const Rat f = a[i][c];
      for (int j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return r;
}

}  // namespace

int rank(const Mat& m) {
  std::vector<std::vector<Rat>> a(m.rows(), std::vector<Rat>(m.cols()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) a[i][j] = m.at(i, j);
  return eliminate(a, m.rows(), m.cols(), m.cols(), false);
}

Mat inverse(const Mat& m) {
  if (!m.is_square())
    throw std::invalid_argument("inverse of non-square matrix");
  const int n = m.rows();
  std::vector<std::vector<Rat>> a(n, std::vector<Rat>(2 * n, Rat(0)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[i][j] = m.at(i, j);
    a[i][n + i] = 1;
  }
  if (eliminate(a, n, 2 * n, n, true) != n)
    throw std::invalid_argument("singular matrix");
  Mat r(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r.at(i, j) = a[i][n + j];
  return r;
}

Poly charpoly(const Mat& m) {
  if (!m.is_square())
    throw std::invalid_argument("charpoly of non-square matrix");
  const int n = m.rows();
  // Faddeev-LeVerrier: c_{n-k} = -tr(M_k)/k with M_k = m*(M_{k-1} + c_{n-k+1} I).
  std::vector<Rat> coeff(static_cast<size_t>(n) + 1, Rat(0));
  coeff[n] = 1;
  Mat mk = m;
  for (int k = 1; k <= n; ++k) {
    if (k > 1) {
      Mat shifted = mk;
      for (int i = 0; i < n; ++i) shifted.at(i, i) += coeff[n - k + 1];
      mk = m * shifted;
    }
    coeff[n - k] = -mk.trace() / k;
  }
  return Poly(std::move(coeff));
}

bool solve_columns(const std::vector<std::vector<Rat>>& cols,
                   const std::vector<Rat>& target, std::vector<Rat>& out) {
  const int rows = static_cast<int>(target.size());
  const int nc = static_cast<int>(cols.size());
  std::vector<std::vector<Rat>> a(rows, std::vector<Rat>(nc + 1, Rat(0)));
  for (int j = 0; j < nc; ++j)
    for (int i = 0; i < rows; ++i) a[i][j] = cols[j][i];
  for (int i = 0; i < rows; ++i) a[i][nc] = target[i];

  eliminate(a, rows, nc + 1, nc, true);
  out.assign(nc, Rat(0));
  // Read the reduced system: each pivot row fixes one variable; a row with
  // all-zero coefficients but nonzero rhs is inconsistent.
  for (int i = 0; i < rows; ++i) {
    int lead = -1;
    for (int j = 0; j < nc; ++j)
      if (!is_zero(a[i][j])) {
        lead = j;
        break;
      }
    if (lead < 0) {
      if (!is_zero(a[i][nc])) return false;
    } else {
      out[lead] = a[i][nc];
    }
  }
  return true;
}

Poly minpoly(const Mat& m) {
  if (!m.is_square())
    throw std::invalid_argument("minpoly of non-square matrix");
  const int n = m.rows();
  const size_t nn = static_cast<size_t>(n) * n;
  auto vec_of = [&](const Mat& p) {
    std::vector<Rat> v(nn);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) v[static_cast<size_t>(i) * n + j] = p.at(i, j);
    return v;
  };
  std::vector<std::vector<Rat>> powers{vec_of(Mat::identity(n))};
  Mat p = Mat::identity(n);
  for (int d = 1; d <= n; ++d) {
    p = p * m;
    std::vector<Rat> coeffs;
    if (solve_columns(powers, vec_of(p), coeffs)) {
      std::vector<Rat> mono(coeffs.size() + 1, Rat(0));
      for (size_t i = 0; i < coeffs.size(); ++i) mono[i] = -coeffs[i];
      mono.back() = 1;
      return Poly(std::move(mono));
    }
    powers.push_back(vec_of(p));
  }
  throw std::logic_error("minimal polynomial search exceeded the dimension");
}

Mat eval_poly(const Poly& p, const Mat& m) {
  if (!m.is_square())
    throw std::invalid_argument("polynomial of non-square matrix");
  const int n = m.rows();
  Mat acc = Mat::zeros(n, n);
  for (int d = p.degree(); d >= 0; --d) {
    acc = acc * m;
    for (int i = 0; i < n; ++i) acc.at(i, i) += p.coeff(d);
  }
  return acc;
}

Mat hadamard_square(const Mat& m) {
  Mat r(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r.at(i, j) = m.at(i, j) * m.at(i, j);
  return r;
}

Mat perm_matrix(const Perm& sigma) {
  const int n = sigma.size();
  Mat r(n, n);
  for (int i = 0; i < n; ++i) r.at(sigma(i), i) = 1;
  return r;
}

Mat monomial_matrix(const Perm& sigma, const std::vector<Rat>& scales) {
  const int n = sigma.size();
  if (static_cast<int>(scales.size()) != n)
    throw std::invalid_argument("scale count mismatch");
  Mat r(n, n);
  for (int i = 0; i < n; ++i) {
    if (is_zero(scales[i])) throw std::invalid_argument("zero scale");
    r.at(sigma(i), i) = scales[i];
  }
  return r;
}

}  // namespace evo
