#pragma once

// Dense matrices of exact rationals, row-major, and the exact kernels built
// on them: Kronecker product, fraction-free determinant, rank, inverse,
// characteristic and minimal polynomials, entrywise square, monomial
// matrices.

#include <vector>

#include "evo/permutation.hpp"
#include "evo/polynomial.hpp"
#include "evo/rational.hpp"

namespace evo {

class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(int rows, int cols);
  // Row-major initialization from integer literals.
  static Mat of(int rows, int cols, const std::vector<long>& entries);
  static Mat identity(int n);
  static Mat zeros(int rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rat& at(int i, int j) { return e_[static_cast<size_t>(i) * cols_ + j]; }
  const Rat& at(int i, int j) const {
    return e_[static_cast<size_t>(i) * cols_ + j];
  }

  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat operator*(const Mat& o) const;
  Mat scaled(const Rat& s) const;
  Mat transpose() const;
  bool operator==(const Mat& o) const;
  bool operator!=(const Mat& o) const { return !(*this == o); }

  Rat trace() const;

 private:
  int rows_, cols_;
  std::vector<Rat> e_;
};

// Block (i,j) of the result is a[i][j] * b; row block order follows the
// (i,j) -> i*rows(b)+j basis ordering.
Mat kron(const Mat& a, const Mat& b);

// Exact determinant via row denominator clearing + integer Bareiss
// fraction-free elimination.
Rat det(const Mat& m);

// Rank over the rationals by exact Gaussian elimination.
int rank(const Mat& m);

// Inverse via exact Gauss-Jordan; throws std::invalid_argument if singular.
Mat inverse(const Mat& m);

// Monic det(xI - m), computed by the Faddeev-LeVerrier recurrence.
Poly charpoly(const Mat& m);

// Monic minimal polynomial: lowest-degree monic dependency among the
// vectorized powers I, m, m^2, ...
Poly minpoly(const Mat& m);

// Evaluates p at m (matrix polynomial).
Mat eval_poly(const Poly& p, const Mat& m);

// Entrywise square.
Mat hadamard_square(const Mat& m);

// Permutation matrix of sigma: column i is e_{sigma(i)}.
Mat perm_matrix(const Perm& sigma);

// perm_matrix(sigma) * diag(scales); throws on a zero scale.
Mat monomial_matrix(const Perm& sigma, const std::vector<Rat>& scales);

// Exact linear solve: finds x with sum_j x_j*cols[j] = target, if one
// exists.
bool solve_columns(const std::vector<std::vector<Rat>>& cols,
                   const std::vector<Rat>& target, std::vector<Rat>& out);

}  // namespace evo
