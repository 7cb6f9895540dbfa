#pragma once

// Permutations of {0..n-1} stored as image vectors: img[i] = sigma(i).

#include <cstdint>
#include <vector>

namespace evo {

class Perm {
 public:
  Perm() = default;
  explicit Perm(std::vector<int> images);
  static Perm identity(int n);

  int size() const { return static_cast<int>(img_.size()); }
  int operator()(int i) const { return img_[i]; }
  const std::vector<int>& images() const { return img_; }

  // (a.compose(b))(i) = a(b(i)).
  Perm compose(const Perm& b) const;
  Perm inverse() const;
  bool operator==(const Perm& o) const { return img_ == o.img_; }

  // Lexicographic successor over image vectors; false once past the last.
  bool next();

  // Lexicographic rank/unrank (Lehmer codes), for partitioning the n!-scan.
  static Perm unrank(int n, std::uint64_t rank);
  std::uint64_t rank() const;
  static std::uint64_t factorial(int n);

 private:
  std::vector<int> img_;
};

}  // namespace evo
