#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace aic {

/// Sorted set of exponents in [0, p^m - 1].
class DefiningSet {
 public:
  DefiningSet() = default;
  DefiningSet(std::initializer_list<std::uint32_t> values);
  explicit DefiningSet(std::vector<std::uint32_t> values);

  /// All of [lo, hi].
  static DefiningSet range(std::uint32_t lo, std::uint32_t hi);
  /// `0,1,2,4`
  static DefiningSet parse(std::string_view text);

  const std::vector<std::uint32_t>& values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  bool empty() const noexcept { return values_.empty(); }
  bool contains(std::uint32_t i) const;
  auto begin() const noexcept { return values_.begin(); }
  auto end() const noexcept { return values_.end(); }

  std::string format() const;

  auto operator<=>(const DefiningSet&) const = default;

 private:
  std::vector<std::uint32_t> values_;
};

struct PadicExpansion {
  unsigned base = 2;
  std::vector<unsigned> digits;  // least significant first

  std::uint64_t value() const;
  auto operator<=>(const PadicExpansion&) const = default;
};

/// Minimal-length expansion; 0 expands to the single digit 0.
PadicExpansion padic_expansion(std::uint64_t x, unsigned p);

/// Digitwise comparison of base-p expansions.
bool preceq(std::uint64_t s, std::uint64_t t, unsigned p);

struct CyclotomicClass {
  std::vector<std::uint64_t> members;  // sorted
  std::uint64_t multiplier = 0;
  std::uint64_t modulus = 0;
};

/// Orbit of i under x -> q x mod n. Throws NonCoprimeMultiplier, InvalidArgument.
CyclotomicClass cyclotomic_class(std::uint64_t i, std::uint64_t q, std::uint64_t n);

/// All classes of [0, n) under multiplication by q, ordered by minimum.
std::vector<CyclotomicClass> cyclotomic_classes(std::uint64_t q, std::uint64_t n);

/// Whether D minus {n} is closed under multiplication by q mod n. The value n
/// itself (= p^m - 1 in use) is a flag, not a residue.
bool is_union_of_classes(const DefiningSet& d, std::uint64_t q, std::uint64_t n);

/// Least divisor d of m such that D minus {p^m - 1} is a union of
/// p^d-cyclotomic classes mod p^m - 1.
unsigned minimal_b(const DefiningSet& d, unsigned p, unsigned m);

}  // namespace aic
