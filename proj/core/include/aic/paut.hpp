#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "aic/additive_map.hpp"
#include "aic/code.hpp"
#include "aic/finite_field.hpp"
#include "aic/permutation.hpp"

namespace aic {

using BigInt = boost::multiprecision::cpp_int;

/// Whether f commutes with multiplication by a generator of F_{p^d}^*.
/// Throws NotADivisor.
bool is_d_linear(const FieldSpec& field, const AdditiveMap& f, unsigned d);

/// The j in [0, a/b) with f(g x) = g^(p^(b j)) f(x) for a generator g of
/// F_{p^a}^*, or nullopt when f lies outside G_{a,b}. Throws SingularMap.
std::optional<unsigned> semilinear_tag(const FieldSpec& field, const AdditiveMap& f, unsigned a, unsigned b);

/// A validated member of G_{a,b}.
struct SemilinearElement {
  AdditiveMap map;
  unsigned tau = 0;  // Frobenius power p^(b tau) on F_{p^a}
  unsigned a = 1;
  unsigned b = 1;

  SemilinearElement compose(const SemilinearElement& other) const;
  SemilinearElement inverse() const;
};

/// Throws NotInGroup.
SemilinearElement make_semilinear(const FieldSpec& field, AdditiveMap map, unsigned a, unsigned b);

/// z -> map(z) + translation.
struct AffineElement {
  Elem translation = 0;
  AdditiveMap map;
  unsigned tau = 0;

  Elem apply(Elem z) const;
  /// (n1, g1)(n2, g2) = (n1 + g1(n2), g1 g2).
  AffineElement compose(const AffineElement& other) const;
  Permutation to_permutation() const;
};

AffineElement translation(const FieldSpec& field, Elem y);
AffineElement affine(Elem y, const SemilinearElement& part);

/// Generators of GL(K over F_{p^d}). Throws NotADivisor.
std::vector<AdditiveMap> gl_generators(const FieldSpec& field, unsigned d);

/// Every product of `gens`; throws TooLarge past `limit` elements.
std::vector<AdditiveMap> closure(const std::vector<AdditiveMap>& gens, std::size_t limit = 1'000'000);

/// G_{a,b} = <GL(K over F_{p^a}), Frobenius^b>, listed.
std::vector<AdditiveMap> semilinear_group(const FieldSpec& field, unsigned a, unsigned b);

bool is_code_invariant(const Permutation& sigma, const AffineInvariantCode& code);
bool is_code_invariant(const AffineElement& sigma, const AffineInvariantCode& code);

/// a = least divisor of m whose GL generators preserve C, b = minimal_b(D).
/// Throws InternalInconsistency when b | r and b | a | m fail.
CodeParams compute_params(const AffineInvariantCode& code);

/// prod_{i < n} (q^n - q^i)
BigInt gl_order(unsigned n, std::uint64_t q);
/// p^m |GL(m/a, p^a)| (a/b). Throws TrivialCode.
BigInt paut_order(const AffineInvariantCode& code);

/// The F_{p^a}-span of the images of rho - 1 over the group generated by
/// `gens`. Throws NotAPGroup unless that group has p-power order.
Subspace sum_images(const FieldSpec& field, const std::vector<AdditiveMap>& gens, unsigned a);
bool sum_images_proper(const FieldSpec& field, const std::vector<AdditiveMap>& gens, unsigned a);

}  // namespace aic
