#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "aic/finite_field.hpp"
#include "aic/group.hpp"

namespace aic {

/// One direct factor of a symbolic group.
struct DescriptorAtom {
  enum class Kind { Cyclic, VxV, Fa, Vmu };
  /// What acts on V x V in a VxV atom: F_q additively, or the group Fa(q).
  enum class Acting { Additive, Fa };

  Kind kind = Kind::Cyclic;

  // Cyclic: a product of cyclic groups of these orders.
  std::vector<std::uint64_t> orders;

  // VxV and Fa: the field F_q, q = p^a.
  std::uint64_t q = 2;
  // VxV: (F_q^dim x F_q^dim) semidirect the acting group; (x, y) sends
  // (u, v) to (u - y v, v).
  unsigned dim = 0;
  Acting acting = Acting::Additive;

  // Vmu: V_mu semidirect U realised inside a field K. V and U are given by
  // F_p-bases, mu by its values on V's basis.
  std::string field;
  std::vector<Elem> v_basis;
  std::vector<Elem> mu;
  std::vector<Elem> u_basis;

  static DescriptorAtom cyclic(std::vector<std::uint64_t> orders);
  static DescriptorAtom vxv(std::uint64_t q, unsigned dim, Acting acting);
  static DescriptorAtom fa(std::uint64_t q);

  std::uint64_t order() const;
  std::string render() const;
};

struct GroupDescriptor {
  std::vector<DescriptorAtom> factors;

  std::uint64_t order() const;
  /// `C2 × ((F2×F2)⋊F2)`
  std::string render() const;
};

/// Expands the descriptor into a multiplication table. Throws
/// MalformedDescriptor on bad atoms or a failed group-law check (run for
/// orders up to 256), TooLarge past order 4096.
CayleyTable build_descriptor_group(const GroupDescriptor& d);

nlohmann::json to_json(const GroupDescriptor& d);
/// Throws MalformedDescriptor.
GroupDescriptor descriptor_from_json(const nlohmann::json& j);

}  // namespace aic
