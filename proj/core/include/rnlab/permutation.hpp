#pragma once

#include <compare>
#include <initializer_list>
#include <string>
#include <vector>

namespace rnlab {

/// A permutation of {1, ..., d}. Letters are 1-based everywhere in the API.
///
/// Composition is function composition: `compose(p, q)(i) == p(q(i))`, so
/// the right factor acts first. This matches left actions on the tree.
class Permutation {
 public:
  Permutation() = default;

  static Permutation identity(int degree);
  /// `images[i-1]` is the image of i. Throws std::invalid_argument if the
  /// list is not a bijection of {1, ..., images.size()}.
  static Permutation from_images(std::vector<int> images);
  /// Product of cycles, each listed in 1-based letters, e.g. {{2, 3}}.
  /// The product is function composition, so the last cycle acts first.
  static Permutation from_cycles(int degree, std::initializer_list<std::vector<int>> cycles);
  static Permutation from_cycles(int degree, const std::vector<std::vector<int>>& cycles);

  int degree() const noexcept { return static_cast<int>(images_.size()); }
  int operator()(int letter) const;
  const std::vector<int>& images() const noexcept { return images_; }

  bool is_identity() const noexcept;
  Permutation inverse() const;
  /// Same permutation acting on {1, ..., new_degree}, fixing the new letters.
  Permutation extended(int new_degree) const;
  /// k-th power, k may be negative.
  Permutation pow(long long k) const;

  /// Disjoint-cycle notation, e.g. "(1 3 2)"; identity prints "()".
  std::string cycle_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  explicit Permutation(std::vector<int> images) : images_(std::move(images)) {}
  std::vector<int> images_;
};

/// p o q. Throws DegreeError when the degrees differ.
Permutation compose(const Permutation& p, const Permutation& q);

inline Permutation operator*(const Permutation& p, const Permutation& q) { return compose(p, q); }

}  // namespace rnlab
