#include "evo/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace evo {

Perm::Perm(std::vector<int> images) : img_(std::move(images)) {
  std::vector<char> seen(img_.size(), 0);
  for (int v : img_) {
    if (v < 0 || v >= static_cast<int>(img_.size()) || seen[v])
      throw std::invalid_argument("not a permutation");
    seen[v] = 1;
  }
}

Perm Perm::identity(int n) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 0);
  return Perm(std::move(img));
}

Perm Perm::compose(const Perm& b) const {
  std::vector<int> img(img_.size());
  for (size_t i = 0; i < img_.size(); ++i) img[i] = img_[b.img_[i]];
  return Perm(std::move(img));
}

Perm Perm::inverse() const {
  std::vector<int> img(img_.size());
  for (size_t i = 0; i < img_.size(); ++i) img[img_[i]] = static_cast<int>(i);
  return Perm(std::move(img));
}

bool Perm::next() { return std::next_permutation(img_.begin(), img_.end()); }

std::uint64_t Perm::factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

Perm Perm::unrank(int n, std::uint64_t rank) {
  std::vector<int> pool(n);
  std::iota(pool.begin(), pool.end(), 0);
  std::vector<int> img;
  img.reserve(n);
  for (int i = n - 1; i >= 0; --i) {
    const std::uint64_t f = factorial(i);
    const auto idx = static_cast<size_t>(rank / f);
    rank %= f;
    img.push_back(pool[idx]);
    pool.erase(pool.begin() + static_cast<long>(idx));
  }
  return Perm(std::move(img));
}

std::uint64_t Perm::rank() const {
  const int n = size();
  std::uint64_t r = 0;
  for (int i = 0; i < n; ++i) {
    int smaller = 0;
    for (int j = i + 1; j < n; ++j)
      if (img_[j] < img_[i]) ++smaller;
    r += static_cast<std::uint64_t>(smaller) * factorial(n - 1 - i);
  }
  return r;
}

}  // namespace evo
