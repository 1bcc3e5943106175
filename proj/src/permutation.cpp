#include "edgebasis/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "edgebasis/error.hpp"

namespace edgebasis {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = size();
  positions_.assign(n, 0);
  for (int p = 1; p <= n; ++p) {
    const int v = images_[p - 1];
    if (v < 1 || v > n)
      throw InvalidInput("permutation entry " + std::to_string(v) + " outside [1," + std::to_string(n) + "]");
    if (positions_[v - 1] != 0)
      throw InvalidInput("permutation repeats entry " + std::to_string(v));
    positions_[v - 1] = p;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 1);
  return Permutation(std::move(images));
}

std::vector<Permutation> Permutation::all(int n) {
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

} // namespace edgebasis
