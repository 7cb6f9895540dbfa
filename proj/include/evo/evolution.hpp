#pragma once

// Evolution algebras presented by a square structure matrix: column i holds
// the coordinates of e_i^2 in the natural basis (e_i e_j = 0 for i != j).

#include <string>
#include <vector>

#include "evo/algebra.hpp"
#include "evo/matrix.hpp"
#include "evo/permutation.hpp"
#include "evo/rational.hpp"

namespace evo {

class EvoAlg {
 public:
  explicit EvoAlg(Mat structure, std::vector<std::string> labels = {});

  int dim() const { return m_.rows(); }
  const Mat& matrix() const { return m_; }
  const std::vector<std::string>& labels() const { return labels_; }

  bool operator==(const EvoAlg& o) const { return m_ == o.m_; }

 private:
  Mat m_;
  std::vector<std::string> labels_;
};

// Structure matrix = kron of the factors' matrices; labels tensored in the
// same (i,j) -> i*dim2+j order.
EvoAlg tensor_evolution(const EvoAlg& a, const EvoAlg& b);

// Perfect <=> invertible structure matrix.
bool is_perfect(const EvoAlg& e);

// Nondegenerate <=> no zero column (no basis vector squares to zero).
bool is_nondegenerate(const EvoAlg& e);

// Indices of zero columns; their span is the annihilator.
std::vector<int> annihilator(const EvoAlg& e);

// Natural-basis change of a perfect algebra by the monomial pair
// (sigma, scales): new entry (i,j) = scales[j]^2 * scales[i]^-1 *
// old(sigma(i), sigma(j)). Throws on non-perfect input or a zero scale.
EvoAlg natural_basis_change(const EvoAlg& e, const Perm& sigma,
                            const std::vector<Rat>& scales);

// Simplicity of a perfect evolution algebra: strongly connected support
// graph. Throws std::invalid_argument on non-perfect input.
bool is_simple(const EvoAlg& e);

// Structure-constant view (diagonal products only).
Algebra to_algebra(const EvoAlg& e);

std::vector<std::string> default_labels(int n);

}  // namespace evo
