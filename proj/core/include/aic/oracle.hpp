#pragma once

#include <cstdint>
#include <vector>

#include "aic/code.hpp"
#include "aic/group.hpp"
#include "aic/permutation.hpp"

namespace aic {

/// Stabilizer of C in the full symmetric group, sorted. Throws TooLarge past
/// 9 points.
std::vector<Permutation> brute_paut_scan(const AffineInvariantCode& code);

/// Translations composed with the semilinear group, sorted. Throws TooLarge
/// past 16 points, TrivialCode, InternalInconsistency when the count differs
/// from paut_order.
std::vector<Permutation> enumerate_paut(const AffineInvariantCode& code);

inline constexpr std::uint64_t kDefaultSearchBudget = 10'000'000;

struct SearchResult {
  std::vector<RegularGroup> groups;
  std::vector<GroupFingerprint> fingerprints;
  /// False when the node budget ran out; `groups` is then partial.
  bool complete = true;
  std::uint64_t nodes = 0;
};

/// All regular subgroups of PAut(C), by backtracking over fixed-point-free
/// elements of p-power order. Trivial codes are searched in S_n for n <= 9.
SearchResult regular_subgroup_search(const AffineInvariantCode& code, std::uint64_t budget = kDefaultSearchBudget);

/// Regular subgroups of the group listed in `ambient` (n = p^k points).
SearchResult regular_subgroup_search(const std::vector<Permutation>& ambient, unsigned p,
                                     std::uint64_t budget = kDefaultSearchBudget);

/// {y -> g_y(x) : x in I}, checked to commute with every element of G.
RegularGroup centralizer_of_regular(const RegularGroup& group);

struct StructureReport {
  SearchResult search;
  /// Per group: whether its centralizer also preserves C.
  std::vector<bool> twosided;

  std::vector<GroupFingerprint> left_types() const;
  std::vector<GroupFingerprint> twosided_types() const;
};

StructureReport left_and_twosided_groups(const AffineInvariantCode& code,
                                         std::uint64_t budget = kDefaultSearchBudget);

}  // namespace aic
