#pragma once

// Kronecker-decomposability machinery: zero-profile invariants and their
// transfer formulas, the 4x4 screening rules, extended matrices, rank-1
// factorization, and the permutation-orbit search.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "evo/evolution.hpp"
#include "evo/matrix.hpp"
#include "evo/permutation.hpp"

namespace evo {

struct ZeroProfile {
  int z;     // zero entries
  int z_d;   // zero diagonal entries
  int z_c;   // all-zero columns
  int z_r;   // all-zero rows
  int rank;  // rank over the rationals
  bool operator==(const ZeroProfile& o) const = default;
};

ZeroProfile zero_profile(const Mat& m);

// Transfer formulas for a Kronecker product of an n x n by an m x m matrix:
//   z   -> z_a*m^2 + (n^2 - z_a)*z_b
//   z_d -> zd_a*m + (n - zd_a)*zd_b      (z_c, z_r analogous)
//   rank-> rank_a * rank_b
ZeroProfile predicted_profile(const ZeroProfile& pa, const ZeroProfile& pb,
                              int n, int m);

enum class ScreenReason {
  ZForbidden,        // z in {1,2,3,5,6,9,11}
  RankThree,         // rank == 3
  OneZeroColumn,     // z_c == 1
  OneZeroRow,        // z_r == 1
  OneDiagonalZero,   // z_d == 1
  PairUnrealizable,  // (z, z_d) not realizable by any 2x2 Kronecker pair
};

std::string screen_reason_text(ScreenReason r, const ZeroProfile& p);

struct Screen {
  ZeroProfile profile;
  std::vector<ScreenReason> violations;  // empty = passes all screens
  bool passes() const { return violations.empty(); }
};

// Necessary conditions for a 4x4 matrix to be a Kronecker product of 2x2s.
Screen screen(const Mat& m);

// Realizable (z, z_d) pairs over all Kronecker products of 2x2 patterns.
const std::vector<std::pair<int, int>>& realizable_pairs_4x4();

// View m (nk x nk) as a k x k grid of n x n blocks; row (i,j) of the result
// is the row-major flattening of block (i,j): k^2 rows, n^2 columns.
Mat extended_matrix(const Mat& m, int n, int k);

// If rank(ex) == 1, recovers factors: left k x k (block coefficients), right
// n x n (the shared block), kron(left, right) reassembling the source
// matrix; left is normalized so its first row-major nonzero is 1.
std::optional<std::pair<Mat, Mat>> rank1_factorize(const Mat& ex, int n,
                                                   int k);

struct Witness {
  Perm sigma;
  std::vector<Rat> scales;  // all ones in the permutation-only search
  int n = 0, k = 0;         // split: right factor n x n, left factor k x k
  Mat changed;              // structure matrix after the basis change
  Mat left, right;          // changed == kron(left, right)
};

// Scans permutations in lexicographic order with unit scales and returns the
// first sigma whose basis change has an extended matrix of rank 1. Requires
// a perfect algebra of dimension n*k.
std::optional<Witness> orbit_search_serial(const EvoAlg& e, int n, int k);

// Same result as orbit_search_serial (smallest successful permutation), with
// the scan parallelized across permutation ranks when OpenMP is enabled.
std::optional<Witness> orbit_search(const EvoAlg& e, int n, int k);

// All successful witnesses in lexicographic order (full orbit enumeration).
std::vector<Witness> orbit_witnesses(const EvoAlg& e, int n, int k);

// Ranks of the extended matrices across the whole permutation orbit, in
// lexicographic order.
std::vector<int> orbit_extended_ranks(const EvoAlg& e, int n, int k);

}  // namespace evo
