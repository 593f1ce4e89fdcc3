#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "aic/additive_map.hpp"
#include "aic/code.hpp"
#include "aic/descriptor.hpp"
#include "aic/finite_field.hpp"
#include "aic/group.hpp"

namespace aic {

/// A map I -> G_{a,b}, stored densely by element code.
struct AlphaMap {
  Field field;
  unsigned a = 1;
  unsigned b = 1;
  std::vector<AdditiveMap> values;

  const AdditiveMap& operator()(Elem x) const { return values.at(x); }
};

AlphaMap trivial_alpha(const Field& field, unsigned a, unsigned b);

/// alpha(x + y) = alpha(alpha(y)(x)) alpha(y) for every pair.
bool check_iyb(const AlphaMap& alpha);

/// {z -> y + alpha(y)^-1 (z) : y in I}. Throws NotACocycle.
RegularGroup build_regular_group(const AlphaMap& alpha);

/// Inverse of build_regular_group for a regular group of affine maps:
/// alpha(x) = (z -> g_x(z) - x)^-1. Throws NotACocycle when some g_x is not
/// affine, NotInGroup when a value leaves G_{a,b}.
AlphaMap reconstruct_alpha(const Field& field, const RegularGroup& group, unsigned a, unsigned b);

/// Every alpha(x) is F_{p^a}-linear and (x, y) -> alpha(x)^-1 (y) - y is
/// F_{p^a}-bilinear. Throws NotACocycle when check_iyb fails.
bool is_twosided_alpha(const AlphaMap& alpha, unsigned a);

/// An additive chi: K -> F_{p^a} (as a map into K) and an F_{p^a}-linear f
/// with chi != 0 != f, f f = 0 and chi f = 0.
struct ChiF {
  Field field;
  unsigned a = 1;
  AdditiveMap chi;
  AdditiveMap f;
};

/// x -> Tr_{K/F_{p^a}}(c x).
AdditiveMap trace_form(const FieldSpec& field, unsigned a, Elem c);

/// Whether chi(g x) = g chi(x) for a generator g of F_{p^a}^*.
bool is_scalar_linear(const FieldSpec& field, const AdditiveMap& chi, unsigned a);

/// Throws DegenerateA when a = m, CondViolation naming the failed clause.
ChiF make_chi_f(const Field& field, AdditiveMap chi, AdditiveMap f, unsigned a);

/// alpha(x) = 1 + chi(x) f, valued in G_{a,b}.
AlphaMap chi_f_alpha(const ChiF& cf, unsigned b);
inline AlphaMap chi_f_alpha(const ChiF& cf) { return chi_f_alpha(cf, cf.a); }

struct ChiFClass {
  bool abelian = false;
  Subspace center;  // translations; all of I when abelian
  std::uint64_t exponent = 0;
};

/// Predicted from chi and f, then checked against the concrete group.
/// Throws InternalInconsistency on disagreement.
ChiFClass classify_chi_f(const ChiF& cf);

struct Decomposition {
  Subspace z, v, w, wp, u;
  /// f g = 1 on V and g f(ker chi) lies in ker chi; zero off V.
  AdditiveMap g;
  /// Z x (V_mu semidirect chi(U)), mu = chi g.
  GroupDescriptor target;
  /// The bijection x -> (z, (v, f(w + w'); chi(u))) is a homomorphism.
  bool verified = false;
};

Decomposition decompose_chi_f(const ChiF& cf);

struct EstrResult {
  char which = 'a';  // 'a'..'d'
  unsigned u = 0;    // rank of f over F_{p^a}
  GroupDescriptor descriptor;
  GroupFingerprint expected;
  GroupFingerprint concrete;
  bool matches() const { return expected == concrete; }
};

/// Throws ChiNotLinear unless chi is F_{p^a}-linear.
EstrResult estr_descriptor(const ChiF& cf);

/// Splits ker chi = Z + V + W over F_{p^a} with dim V = dim W = u and picks
/// X outside ker chi; f maps W onto V and kills Z + V + X, so ker f is not
/// inside ker chi. Needs chi F_{p^a}-linear and nonzero, 1 <= 2u <= m/a - 1;
/// throws InvalidArgument otherwise.
ChiF construct_f1(const Field& field, unsigned a, const AdditiveMap& chi, unsigned u);
/// As construct_f1 but with dim W = u - 1 and f mapping W + X onto V, so
/// ker f = Z + V sits properly inside ker chi when u > 1 and equals it when
/// u = 1.
ChiF construct_f2(const Field& field, unsigned a, const AdditiveMap& chi, unsigned u);

struct NonabelianWitness {
  bool exists = false;
  std::optional<ChiF> witness;
  std::optional<EstrResult> structure;
};

/// True iff 2 a(C) < m; then also builds an f1 witness with u = 1 and the
/// trace form. Throws TrivialCode.
NonabelianWitness nonabelian_exists(const AffineInvariantCode& code);

}  // namespace aic
