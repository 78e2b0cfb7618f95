#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace wreathfock {

/// A bijection of {0..degree-1}, stored as its image list.
/// Composition is function composition: (p * q)(i) = p(q(i)).
class Permutation {
 public:
  Permutation() = default;
  /// Throws InputError unless `images` is a bijection.
  explicit Permutation(std::vector<std::int32_t> images);
  static Permutation identity(std::size_t degree);
  /// Builds from disjoint cycles given as point lists.
  static Permutation from_cycles(std::size_t degree, const std::vector<std::vector<std::int32_t>>& cycles);

  std::size_t degree() const { return images_.size(); }
  std::int32_t operator()(std::size_t i) const { return images_[i]; }
  const std::vector<std::int32_t>& images() const { return images_; }

  Permutation inverse() const;
  bool is_identity() const;
  /// Disjoint cycles including fixed points; each starts at its least point
  /// and follows i -> p(i). Cycles are ordered by their least point.
  std::vector<std::vector<std::int32_t>> cycles() const;
  /// Cycle notation with 0-based points, e.g. "(0 1)(2 3 4)"; "()" for identity.
  std::string to_cycle_string() const;

  friend Permutation operator*(const Permutation& p, const Permutation& q);
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::int32_t> images_;
};

}  // namespace wreathfock
