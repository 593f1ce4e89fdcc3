#include "aic/permutation.hpp"

#include <numeric>
#include <string>

#include "aic/error.hpp"

namespace aic {

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> hit(images_.size(), false);
  for (const auto x : images_) {
    if (x >= images_.size() || hit[x]) throw Error(Errc::InvalidArgument, "not a bijection");
    hit[x] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  if (n > 65536) throw Error(Errc::TooLarge, "permutation degree " + std::to_string(n));
  std::vector<Point> id(n);
  std::iota(id.begin(), id.end(), Point{0});
  return {std::move(id), Unchecked{}};
}

Permutation Permutation::operator*(const Permutation& other) const {
  std::vector<Point> out(other.images_.size());
  for (std::size_t x = 0; x < out.size(); ++x) out[x] = images_[other.images_[x]];
  return {std::move(out), Unchecked{}};
}

Permutation Permutation::inverse() const {
  std::vector<Point> out(images_.size());
  for (std::size_t x = 0; x < out.size(); ++x) out[images_[x]] = static_cast<Point>(x);
  return {std::move(out), Unchecked{}};
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t x = 0; x < images_.size(); ++x) {
    if (images_[x] != x) return false;
  }
  return true;
}

std::size_t Permutation::fixed_points() const noexcept {
  std::size_t k = 0;
  for (std::size_t x = 0; x < images_.size(); ++x) k += images_[x] == x;
  return k;
}

std::map<std::size_t, std::size_t> Permutation::cycle_type() const {
  std::map<std::size_t, std::size_t> out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t x = 0; x < images_.size(); ++x) {
    if (seen[x]) continue;
    std::size_t len = 0;
    for (std::size_t y = x; !seen[y]; y = images_[y]) {
      seen[y] = true;
      ++len;
    }
    ++out[len];
  }
  return out;
}

std::uint64_t Permutation::order() const {
  std::uint64_t ord = 1;
  for (const auto& [len, count] : cycle_type()) ord = std::lcm(ord, std::uint64_t{len});
  return ord;
}

std::size_t Permutation::hash() const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (const auto x : images_) h = (h ^ x) * 1099511628211ull;
  return h;
}

}  // namespace aic
