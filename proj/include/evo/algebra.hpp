#pragma once

// General finite-dimensional algebras presented by structure constants:
// constants[i][j][k] is the coefficient of e_k in the product e_i * e_j.

#include <string>
#include <vector>

#include "evo/matrix.hpp"
#include "evo/rational.hpp"

namespace evo {

using Vec = std::vector<Rat>;

class Algebra {
 public:
  Algebra(int dim, std::vector<Rat> constants,
          std::vector<std::string> labels = {});
  static Algebra zero(int dim);

  int dim() const { return dim_; }
  const Rat& c(int i, int j, int k) const {
    return c_[(static_cast<size_t>(i) * dim_ + j) * dim_ + k];
  }
  Rat& c(int i, int j, int k) {
    return c_[(static_cast<size_t>(i) * dim_ + j) * dim_ + k];
  }
  const std::vector<Rat>& constants() const { return c_; }
  const std::vector<std::string>& labels() const { return labels_; }

  bool operator==(const Algebra& o) const {
    return dim_ == o.dim_ && c_ == o.c_;
  }

 private:
  int dim_;
  std::vector<Rat> c_;
  std::vector<std::string> labels_;
};

// Bilinear product of coordinate vectors.
Vec multiply(const Algebra& a, const Vec& x, const Vec& y);

// Tensor product algebra; basis ordered (i,j) -> i*dim(a2)+j, with
// (e_i (x) f_j)(e_k (x) f_r) = e_i e_k (x) f_j f_r.
Algebra tensor_algebra(const Algebra& a1, const Algebra& a2);

bool is_commutative(const Algebra& a);
bool is_anticommutative(const Algebra& a);
// Zero-square in the polarized sense valid over the rationals: every basis
// square vanishes and symmetrized basis products vanish.
bool is_zero_square(const Algebra& a);

// Dimension of span{e_i e_j : all i, j}.
int square_dim(const Algebra& a);

bool is_perfect(const Algebra& a);

// True iff the candidate vectors are independent and all pairwise products
// of distinct vectors vanish (both orders).
bool is_natural_basis(const Algebra& a, const std::vector<Vec>& candidate);

// Structure constants in the basis whose j-th vector has old coordinates in
// column j of p; throws std::invalid_argument if p is singular.
Algebra change_basis(const Algebra& a, const Mat& p);

}  // namespace evo
