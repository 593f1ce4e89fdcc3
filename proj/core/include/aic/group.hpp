#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "aic/permutation.hpp"

namespace aic {

/// A finite group as a multiplication table on {0, ..., n-1}.
class CayleyTable {
 public:
  /// table[i * n + j] = i * j. Throws InvalidArgument on malformed input.
  CayleyTable(std::size_t order, std::vector<std::uint32_t> table);

  std::size_t order() const noexcept { return n_; }
  std::uint32_t mul(std::uint32_t i, std::uint32_t j) const noexcept { return table_[i * n_ + j]; }
  std::uint32_t identity() const noexcept { return identity_; }
  std::uint32_t inverse(std::uint32_t i) const noexcept { return inverse_[i]; }
  std::uint64_t element_order(std::uint32_t i) const;
  bool is_abelian() const noexcept;

  /// Exhaustive checks; the constructor only requires a two-sided identity.
  bool is_associative() const;
  bool has_inverses() const noexcept { return has_inverses_; }

  /// The subgroup generated by `gens`, as sorted element indices.
  std::vector<std::uint32_t> generated(const std::vector<std::uint32_t>& gens) const;

 private:
  std::size_t n_;
  std::vector<std::uint32_t> table_;
  std::uint32_t identity_ = 0;
  std::vector<std::uint32_t> inverse_;
  bool has_inverses_ = true;
};

CayleyTable direct_product(const CayleyTable& left, const CayleyTable& right);

struct GroupFingerprint {
  std::uint64_t order = 0;
  bool abelian = false;
  std::uint64_t exponent = 0;
  std::uint64_t center_order = 0;
  std::uint64_t derived_order = 0;
  std::map<std::uint64_t, std::uint64_t> order_histogram;  // element order -> count
  std::optional<std::vector<std::uint64_t>> abelian_invariants;  // d1 | d2 | ...

  bool operator==(const GroupFingerprint&) const = default;
  /// `C2^2 × C4` for abelian groups, `order 8 nonabelian ...` otherwise.
  std::string summary() const;
};

/// Throws TooLarge past order 4096.
GroupFingerprint fingerprint(const CayleyTable& table);

/// Invariant factors of the abelian group with the given element-order
/// histogram, ascending in the divisibility chain.
std::vector<std::uint64_t> abelian_invariants(const std::map<std::uint64_t, std::uint64_t>& histogram,
                                              std::uint64_t order);

/// A regular permutation group on I, indexed by the image of 0.
class RegularGroup {
 public:
  /// Throws NotRegular unless `perms` is a group acting regularly.
  static RegularGroup from_permutations(std::vector<Permutation> perms);

  std::size_t order() const noexcept { return elems_.size(); }
  /// The unique element sending 0 to x.
  const Permutation& element(std::size_t x) const { return elems_.at(x); }
  const std::vector<Permutation>& elements() const noexcept { return elems_; }
  /// Element index x multiplies as g_x g_y = g_{g_x(y)}.
  CayleyTable table() const;
  bool is_abelian() const;
  /// Sorted list of the elements, for set comparison.
  std::vector<Permutation> sorted() const;

  bool operator==(const RegularGroup& other) const { return elems_ == other.elems_; }

 private:
  explicit RegularGroup(std::vector<Permutation> elems) : elems_(std::move(elems)) {}
  std::vector<Permutation> elems_;
};

GroupFingerprint fingerprint(const RegularGroup& group);

}  // namespace aic
