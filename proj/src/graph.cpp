#include "evo/graph.hpp"

#include <numeric>
#include <queue>
#include <stdexcept>

namespace evo {

BoolMat::BoolMat(int n)
    : n_(n), bits_(static_cast<size_t>(n) * n, 0) {
  if (n < 0) throw std::invalid_argument("negative size");
}

bool BoolMat::all_ones() const {
  for (auto b : bits_)
    if (!b) return false;
  return true;
}

bool BoolMat::any() const {
  for (auto b : bits_)
    if (b) return true;
  return false;
}

BoolMat support(const Mat& m) {
  if (!m.is_square())
    throw std::invalid_argument("support of non-square matrix");
  BoolMat s(m.rows());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) s.set(i, j, !is_zero(m.at(i, j)));
  return s;
}

Digraph support_graph(const EvoAlg& e) { return Digraph{support(e.matrix())}; }

BoolMat bool_product(const BoolMat& a, const BoolMat& b) {
  if (a.size() != b.size()) throw std::invalid_argument("size mismatch");
  const int n = a.size();
  BoolMat r(n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      if (!a.get(i, k)) continue;
      for (int j = 0; j < n; ++j)
        if (b.get(k, j)) r.set(i, j, true);
    }
  return r;
}

BoolMat bool_or(const BoolMat& a, const BoolMat& b) {
  if (a.size() != b.size()) throw std::invalid_argument("size mismatch");
  const int n = a.size();
  BoolMat r(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r.set(i, j, a.get(i, j) || b.get(i, j));
  return r;
}

BoolMat sigma(const BoolMat& a, int k) {
  if (k < 1) throw std::invalid_argument("sigma requires k >= 1");
  BoolMat acc = a, pw = a;
  for (int i = 2; i <= k; ++i) {
    pw = bool_product(pw, a);
    acc = bool_or(acc, pw);
  }
  return acc;
}

int stabilizing_index(const BoolMat& a) {
  // sigma_{k+1} = sigma_k v (power_{k+1}); once two consecutive sums agree
  // they agree forever, and agreement occurs by k = n.
  BoolMat acc = a, pw = a;
  int k = 1;
  while (true) {
    pw = bool_product(pw, a);
    const BoolMat next = bool_or(acc, pw);
    if (next == acc) return k;
    acc = next;
    ++k;
  }
}

bool is_strongly_connected(const Digraph& g) {
  return sigma(g.adj, stabilizing_index(g.adj)).all_ones();
}

Digraph categorical_product(const Digraph& g1, const Digraph& g2) {
  const int n1 = g1.size(), n2 = g2.size();
  BoolMat r(n1 * n2);
  for (int i = 0; i < n1; ++i)
    for (int k = 0; k < n1; ++k) {
      if (!g1.adj.get(i, k)) continue;
      for (int j = 0; j < n2; ++j)
        for (int l = 0; l < n2; ++l)
          if (g2.adj.get(j, l)) r.set(i * n2 + j, k * n2 + l, true);
    }
  return Digraph{r};
}

int period(const Digraph& g) {
  if (!is_strongly_connected(g) || !g.adj.any())
    throw std::invalid_argument(
        "period requires a strongly connected graph with an edge");
  const int n = g.size();
  // BFS levels from vertex 0; every edge u->v contributes the closed-path
  // defect dist(u) + 1 - dist(v), and the gcd of all defects is the period.
  std::vector<int> dist(n, -1);
  std::queue<int> q;
  dist[0] = 0;
  q.push(0);
  while (!q.empty()) {
    const int u = q.front();
    q.pop();
    for (int v = 0; v < n; ++v)
      if (g.adj.get(u, v) && dist[v] < 0) {
        dist[v] = dist[u] + 1;
        q.push(v);
      }
  }
  long long d = 0;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (g.adj.get(u, v)) d = std::gcd(d, static_cast<long long>(dist[u]) + 1 - dist[v]);
  return static_cast<int>(d);
}

int period_by_powers(const Digraph& g) {
  if (!is_strongly_connected(g) || !g.adj.any())
    throw std::invalid_argument(
        "period requires a strongly connected graph with an edge");
  const int n = g.size();
  // Closed walks decompose into simple cycles (length <= n), so the gcd of
  // {k <= n : diag of A^k nonzero} equals the gcd of all closed-path lengths.
  long long d = 0;
  BoolMat pw = g.adj;
  for (int k = 1; k <= n; ++k) {
    if (k > 1) pw = bool_product(pw, g.adj);
    bool diag = false;
    for (int i = 0; i < n && !diag; ++i) diag = pw.get(i, i);
    if (diag) d = std::gcd(d, static_cast<long long>(k));
  }
  return static_cast<int>(d);
}

int weak_component_count(const Digraph& g) {
  const int n = g.size();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (g.adj.get(i, j)) parent[find(i)] = find(j);
  int count = 0;
  for (int i = 0; i < n; ++i)
    if (find(i) == i) ++count;
  return count;
}

Mat to_matrix(const BoolMat& a) {
  Mat m(a.size(), a.size());
  for (int i = 0; i < a.size(); ++i)
    for (int j = 0; j < a.size(); ++j)
      if (a.get(i, j)) m.at(i, j) = 1;
  return m;
}

std::string to_dot(const Digraph& g, const std::vector<std::string>& labels) {
  std::string out = "digraph evolution {\n";
  for (int i = 0; i < g.size(); ++i) {
    out += "  v" + std::to_string(i);
    if (static_cast<int>(labels.size()) == g.size())
      out += " [label=\"" + labels[i] + "\"]";
    out += ";\n";
  }
  for (int i = 0; i < g.size(); ++i)
    for (int j = 0; j < g.size(); ++j)
      if (g.adj.get(i, j))
        out += "  v" + std::to_string(i) + " -> v" + std::to_string(j) + ";\n";
  out += "}\n";
  return out;
}

}  // namespace evo
