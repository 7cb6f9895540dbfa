#include "evo/evolution.hpp"

#include <stdexcept>

#include "evo/graph.hpp"

namespace evo {

std::vector<std::string> default_labels(int n) {
  std::vector<std::string> out;
  out.reserve(n);
  for (int i = 1; i <= n; ++i) out.push_back("e" + std::to_string(i));
  return out;
}

EvoAlg::EvoAlg(Mat structure, std::vector<std::string> labels)
    : m_(std::move(structure)), labels_(std::move(labels)) {
  if (!m_.is_square())
    throw std::invalid_argument("structure matrix must be square");
  if (labels_.empty()) labels_ = default_labels(m_.rows());
  if (static_cast<int>(labels_.size()) != m_.rows())
    throw std::invalid_argument("label count mismatch");
}

EvoAlg tensor_evolution(const EvoAlg& a, const EvoAlg& b) {
  std::vector<std::string> labels;
  labels.reserve(static_cast<size_t>(a.dim()) * b.dim());
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < b.dim(); ++j)
      labels.push_back(a.labels()[i] + "(x)" + b.labels()[j]);
  return EvoAlg(kron(a.matrix(), b.matrix()), std::move(labels));
}

bool is_perfect(const EvoAlg& e) { return !is_zero(det(e.matrix())); }

bool is_nondegenerate(const EvoAlg& e) { return annihilator(e).empty(); }

std::vector<int> annihilator(const EvoAlg& e) {
  const Mat& m = e.matrix();
  std::vector<int> idx;
  for (int j = 0; j < m.cols(); ++j) {
    bool zero_col = true;
    for (int i = 0; i < m.rows(); ++i)
      if (!is_zero(m.at(i, j))) {
        zero_col = false;
        break;
      }
    if (zero_col) idx.push_back(j);
  }
  return idx;
}

EvoAlg natural_basis_change(const EvoAlg& e, const Perm& sigma,
                            const std::vector<Rat>& scales) {
  const int n = e.dim();
  if (sigma.size() != n || static_cast<int>(scales.size()) != n)
    throw std::invalid_argument("basis-change data size mismatch");
  for (const Rat& s : scales)
    if (is_zero(s)) throw std::invalid_argument("zero scale");
  if (!is_perfect(e))
    throw std::invalid_argument(
        "monomial basis-change law requires a perfect algebra");
  // Entrywise form of (M_sigma P)^-1 M (M_sigma P^2), P = diag(scales).
  const Mat& m = e.matrix();
  Mat out(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      out.at(i, j) = scales[j] * scales[j] / scales[i] *
                     m.at(sigma(i), sigma(j));
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) labels[i] = e.labels()[sigma(i)];
  return EvoAlg(std::move(out), std::move(labels));
}

bool is_simple(const EvoAlg& e) {
  if (!is_perfect(e))
    throw std::invalid_argument(
        "simplicity criterion inapplicable: algebra is not perfect");
  return is_strongly_connected(support_graph(e));
}

Algebra to_algebra(const EvoAlg& e) {
  const int n = e.dim();
  Algebra a = Algebra::zero(n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) a.c(i, i, k) = e.matrix().at(k, i);
  return Algebra(n, a.constants(), e.labels());
}

}  // namespace evo
