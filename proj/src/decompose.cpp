#include "evo/decompose.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace evo {

ZeroProfile zero_profile(const Mat& m) {
  if (!m.is_square())
    throw std::invalid_argument("zero profile of non-square matrix");
  const int n = m.rows();
  ZeroProfile p{0, 0, 0, 0, rank(m)};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (is_zero(m.at(i, j))) ++p.z;
  for (int i = 0; i < n; ++i)
    if (is_zero(m.at(i, i))) ++p.z_d;
  for (int j = 0; j < n; ++j) {
    bool zc = true;
    for (int i = 0; i < n && zc; ++i) zc = is_zero(m.at(i, j));
    if (zc) ++p.z_c;
  }
  for (int i = 0; i < n; ++i) {
    bool zr = true;
    for (int j = 0; j < n && zr; ++j) zr = is_zero(m.at(i, j));
    if (zr) ++p.z_r;
  }
  return p;
}

ZeroProfile predicted_profile(const ZeroProfile& pa, const ZeroProfile& pb,
                              int n, int m) {
  auto check = [](const ZeroProfile& p, int size, const char* which) {
    if (p.z < 0 || p.z > size * size || p.z_d > size || p.z_c > size ||
        p.z_r > size || p.rank > size || p.z < size * p.z_c ||
        p.z < size * p.z_r)
      throw std::invalid_argument(std::string("profile inconsistent with ") +
                                  which + " factor size");
  };
  check(pa, n, "left");
  check(pb, m, "right");
  ZeroProfile out{};
  out.z = pa.z * m * m + (n * n - pa.z) * pb.z;
  out.z_d = pa.z_d * m + (n - pa.z_d) * pb.z_d;
  out.z_c = pa.z_c * m + (n - pa.z_c) * pb.z_c;
  out.z_r = pa.z_r * m + (n - pa.z_r) * pb.z_r;
  out.rank = pa.rank * pb.rank;
  return out;
}

const std::vector<std::pair<int, int>>& realizable_pairs_4x4() {
  // (z, z_d) pairs realized by Kronecker products of 2x2 patterns; the
  // all-zero-factor case contributes (16, 4).
  static const std::vector<std::pair<int, int>> pairs = {
      {0, 0},  {4, 0},  {4, 2},  {7, 0},  {7, 2},  {7, 3},  {8, 0},
      {8, 2},  {8, 4},  {10, 0}, {10, 2}, {10, 3}, {10, 4}, {12, 0},
      {12, 2}, {12, 3}, {12, 4}, {13, 2}, {13, 3}, {13, 4}, {14, 2},
      {14, 3}, {14, 4}, {15, 3}, {15, 4}, {16, 4}};
  return pairs;
}

std::string screen_reason_text(ScreenReason r, const ZeroProfile& p) {
  switch (r) {
    case ScreenReason::ZForbidden:
      return "z=" + std::to_string(p.z) +
             " is in the impossible set {1,2,3,5,6,9,11}";
    case ScreenReason::RankThree:
      return "rank is 3 (Kronecker products of 2x2s have rank 0, 1, 2 or 4)";
    case ScreenReason::OneZeroColumn:
      return "exactly one zero column";
    case ScreenReason::OneZeroRow:
      return "exactly one zero row";
    case ScreenReason::OneDiagonalZero:
      return "exactly one zero diagonal entry";
    case ScreenReason::PairUnrealizable:
      return "(z,z_d)=(" + std::to_string(p.z) + "," + std::to_string(p.z_d) +
             ") is not realizable by any 2x2 Kronecker pair";
  }
  return "unknown";
}

Screen screen(const Mat& m) {
  if (m.rows() != 4 || m.cols() != 4)
    throw std::invalid_argument("screening is defined for 4x4 matrices");
  Screen s{zero_profile(m), {}};
  const ZeroProfile& p = s.profile;
  static const int forbidden[] = {1, 2, 3, 5, 6, 9, 11};
  if (std::find(std::begin(forbidden), std::end(forbidden), p.z) !=
      std::end(forbidden))
    s.violations.push_back(ScreenReason::ZForbidden);
  if (p.rank == 3) s.violations.push_back(ScreenReason::RankThree);
  if (p.z_c == 1) s.violations.push_back(ScreenReason::OneZeroColumn);
  if (p.z_r == 1) s.violations.push_back(ScreenReason::OneZeroRow);
  if (p.z_d == 1) s.violations.push_back(ScreenReason::OneDiagonalZero);
  const auto& ok = realizable_pairs_4x4();
  if (std::find(ok.begin(), ok.end(), std::make_pair(p.z, p.z_d)) == ok.end())
    s.violations.push_back(ScreenReason::PairUnrealizable);
  return s;
}

Mat extended_matrix(const Mat& m, int n, int k) {
  if (n < 1 || k < 1 || !m.is_square() || m.rows() != n * k)
    throw std::invalid_argument("matrix size does not match the (n,k) split");
  Mat ex(k * k, n * n);
  for (int bi = 0; bi < k; ++bi)
    for (int bj = 0; bj < k; ++bj)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          ex.at(bi * k + bj, i * n + j) = m.at(bi * n + i, bj * n + j);
  return ex;
}

std::optional<std::pair<Mat, Mat>> rank1_factorize(const Mat& ex, int n,
                                                   int k) {
  if (ex.rows() != k * k || ex.cols() != n * n)
    throw std::invalid_argument("extended matrix size mismatch");
  // Rank one iff some row is nonzero and every row is a multiple of it.
  int base = -1, lead = -1;
  for (int r = 0; r < ex.rows() && base < 0; ++r)
    for (int c = 0; c < ex.cols(); ++c)
      if (!is_zero(ex.at(r, c))) {
        base = r;
        lead = c;
        break;
      }
  if (base < 0) return std::nullopt;  // zero matrix: rank 0, not 1
  const Rat& pivot = ex.at(base, lead);
  Mat left(k, k), right(n, n);
  for (int r = 0; r < ex.rows(); ++r) {
    const Rat f = ex.at(r, lead) / pivot;
    for (int c = 0; c < ex.cols(); ++c)
      if (ex.at(r, c) != f * ex.at(base, c)) return std::nullopt;
    left.at(r / k, r % k) = f;
  }
  for (int c = 0; c < ex.cols(); ++c) right.at(c / n, c % n) = ex.at(base, c);
  // Normalize: first row-major nonzero of the left factor becomes 1.
  Rat t(0);
  for (int i = 0; i < k && is_zero(t); ++i)
    for (int j = 0; j < k; ++j)
      if (!is_zero(left.at(i, j))) {
        t = left.at(i, j);
        break;
      }
  return std::make_pair(left.scaled(1 / t), right.scaled(t));
}

namespace {

std::optional<Witness> try_permutation(const EvoAlg& e, const Perm& sigma,
                                       int n, int k) {
  const std::vector<Rat> ones(e.dim(), Rat(1));
  const EvoAlg changed = natural_basis_change(e, sigma, ones);
  const Mat ex = extended_matrix(changed.matrix(), n, k);
  auto f = rank1_factorize(ex, n, k);
  if (!f) return std::nullopt;
  return Witness{sigma, ones, n, k, changed.matrix(), f->first, f->second};
}

void validate_orbit_input(const EvoAlg& e, int n, int k) {
  if (n < 2 || k < 2 || e.dim() != n * k)
    throw std::invalid_argument("orbit search split must satisfy dim = n*k");
  if (!is_perfect(e))
    throw std::invalid_argument("orbit search requires a perfect algebra");
}

}  // namespace

std::optional<Witness> orbit_search_serial(const EvoAlg& e, int n, int k) {
  validate_orbit_input(e, n, k);
  Perm sigma = Perm::identity(e.dim());
  do {
    if (auto w = try_permutation(e, sigma, n, k)) return w;
  } while (sigma.next());
  return std::nullopt;
}

std::optional<Witness> orbit_search(const EvoAlg& e, int n, int k) {
  validate_orbit_input(e, n, k);
#ifdef _OPENMP
  const std::uint64_t total = Perm::factorial(e.dim());
  std::atomic<std::uint64_t> best(total);
#pragma omp parallel for schedule(dynamic, 64)
  for (std::int64_t r = 0; r < static_cast<std::int64_t>(total); ++r) {
    const auto ur = static_cast<std::uint64_t>(r);
    if (ur >= best.load(std::memory_order_relaxed)) continue;
    const Perm sigma = Perm::unrank(e.dim(), ur);
    if (try_permutation(e, sigma, n, k)) {
      std::uint64_t cur = best.load(std::memory_order_relaxed);
      while (ur < cur &&
             !best.compare_exchange_weak(cur, ur, std::memory_order_relaxed)) {
      }
    }
  }
  if (best.load() == total) return std::nullopt;
  return try_permutation(e, Perm::unrank(e.dim(), best.load()), n, k);
#else
  return orbit_search_serial(e, n, k);
#endif
}

std::vector<Witness> orbit_witnesses(const EvoAlg& e, int n, int k) {
  validate_orbit_input(e, n, k);
  std::vector<Witness> out;
  Perm sigma = Perm::identity(e.dim());
  do {
    if (auto w = try_permutation(e, sigma, n, k)) out.push_back(*w);
  } while (sigma.next());
  return out;
}

std::vector<int> orbit_extended_ranks(const EvoAlg& e, int n, int k) {
  validate_orbit_input(e, n, k);
  std::vector<int> out;
  const std::vector<Rat> ones(e.dim(), Rat(1));
  Perm sigma = Perm::identity(e.dim());
  do {
    const EvoAlg changed = natural_basis_change(e, sigma, ones);
    out.push_back(rank(extended_matrix(changed.matrix(), n, k)));
  } while (sigma.next());
  return out;
}

}  // namespace evo
