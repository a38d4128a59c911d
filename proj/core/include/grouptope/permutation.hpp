#pragma once

#include <compare>
#include <string>
#include <vector>

namespace grouptope {

/// A permutation of {0,...,degree-1}, stored as the image vector.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int degree);

  /// Parse one permutation in cycle notation, e.g. "(0 1 2)(3 4)".
  /// Fixed points may be omitted; degree is max(point)+1 unless a larger
  /// degree_hint is given. "()" is the identity.
  static Permutation from_cycles(const std::string& text, int degree_hint = 0);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[i]; }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;

  /// Extend to a larger degree, fixing the new points.
  Permutation extended(int degree) const;

  std::string to_cycles() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.images_ <=> b.images_;
  }

 private:
  std::vector<int> images_;
};

/// (p * q)(x) = p(q(x)); q acts first.
Permutation operator*(const Permutation& p, const Permutation& q);

}  // namespace grouptope
