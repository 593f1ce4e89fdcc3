#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

namespace aic {

/// A bijection of {0, ..., n-1}; points are element codes of I.
class Permutation {
 public:
  using Point = std::uint16_t;

  Permutation() = default;
  /// Throws InvalidArgument unless `images` is a bijection.
  explicit Permutation(std::vector<Point> images);
  static Permutation identity(std::size_t n);

  std::size_t size() const noexcept { return images_.size(); }
  Point operator()(std::size_t x) const noexcept { return images_[x]; }
  const std::vector<Point>& images() const noexcept { return images_; }

  /// (a * b)(x) = a(b(x)).
  Permutation operator*(const Permutation& other) const;
  Permutation inverse() const;

  bool is_identity() const noexcept;
  std::size_t fixed_points() const noexcept;
  std::uint64_t order() const;
  /// cycle length -> count
  std::map<std::size_t, std::size_t> cycle_type() const;

  auto operator<=>(const Permutation&) const = default;
  std::size_t hash() const noexcept;

 private:
  struct Unchecked {};
  Permutation(std::vector<Point> images, Unchecked) : images_(std::move(images)) {}

  std::vector<Point> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept { return p.hash(); }
};

}  // namespace aic
