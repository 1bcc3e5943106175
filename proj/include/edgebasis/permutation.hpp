#pragma once

#include <span>
#include <vector>

namespace edgebasis {

/// A permutation sigma of [n], stored by its image list sigma(1), ..., sigma(n).
/// `position(v)` is sigma^{-1}(v): the 1-based rank of vertex v in the list.
class Permutation {
public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int position) const { return images_[position - 1]; }
  int position(int vertex) const { return positions_[vertex - 1]; }

  /// True when u comes strictly before v in the priority list.
  bool precedes(int u, int v) const { return position(u) < position(v); }

  std::span<const int> images() const { return images_; }

  /// All n! permutations in lexicographic order of their image lists.
  static std::vector<Permutation> all(int n);

  friend bool operator==(const Permutation&, const Permutation&) = default;

private:
  std::vector<int> images_;
  std::vector<int> positions_;
};

} // namespace edgebasis
