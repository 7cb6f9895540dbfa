#pragma once

// Boolean matrix semiring and the directed graphs associated to evolution
// algebras: reachability sums, stabilizing index, strong connectivity,
// categorical products, periods, component counts.

#include <cstdint>
#include <string>
#include <vector>

#include "evo/evolution.hpp"
#include "evo/matrix.hpp"

namespace evo {

class BoolMat {
 public:
  BoolMat() : n_(0) {}
  explicit BoolMat(int n);

  int size() const { return n_; }
  bool get(int i, int j) const {
    return bits_[static_cast<size_t>(i) * n_ + j] != 0;
  }
  void set(int i, int j, bool v) {
    bits_[static_cast<size_t>(i) * n_ + j] = v ? 1 : 0;
  }
  bool operator==(const BoolMat& o) const {
    return n_ == o.n_ && bits_ == o.bits_;
  }
  bool operator!=(const BoolMat& o) const { return !(*this == o); }
  bool all_ones() const;
  bool any() const;

 private:
  int n_;
  std::vector<std::uint8_t> bits_;
};

struct Digraph {
  BoolMat adj;  // edge i -> j iff adj.get(i, j)
  int size() const { return adj.size(); }
};

// Zero/nonzero support pattern of a matrix.
BoolMat support(const Mat& m);
Digraph support_graph(const EvoAlg& e);

// OR-AND matrix product.
BoolMat bool_product(const BoolMat& a, const BoolMat& b);
BoolMat bool_or(const BoolMat& a, const BoolMat& b);

// sigma_k = A v A^2 v ... v A^k; requires k >= 1.
BoolMat sigma(const BoolMat& a, int k);

// Least k with sigma_k = sigma_{k+1}; at most n, and stabilization persists
// from the first repeat onward.
int stabilizing_index(const BoolMat& a);

// True iff sigma at the stabilizing index is all ones.
bool is_strongly_connected(const Digraph& g);

// Adjacency = Boolean Kronecker product; vertex (i,j) -> i*n2 + j.
Digraph categorical_product(const Digraph& g1, const Digraph& g2);

// gcd of the lengths of all closed paths, by BFS edge defects. Requires a
// strongly connected graph with at least one edge.
int period(const Digraph& g);

// Same quantity as gcd{k <= n : some diagonal entry of A^k is true} —
// an independent route kept for cross-checking.
int period_by_powers(const Digraph& g);

// Connected components of the underlying undirected graph.
int weak_component_count(const Digraph& g);

// 0/1 rational matrix of the adjacency (for charpoly / minpoly).
Mat to_matrix(const BoolMat& a);

std::string to_dot(const Digraph& g, const std::vector<std::string>& labels);

}  // namespace evo
