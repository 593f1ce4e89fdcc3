#include <gtest/gtest.h>

#include <map>
#include <set>

#include "aic/additive_map.hpp"
#include "aic/paut.hpp"
#include "support.hpp"

namespace aic {
namespace {

using testing::expect_errc;
using testing::hamming8;
using testing::length4;

std::uint64_t gl_count(unsigned n, std::uint64_t q) {
  std::uint64_t qn = 1;
  for (unsigned i = 0; i < n; ++i) qn *= q;
  std::uint64_t out = 1;
  std::uint64_t qi = 1;
  for (unsigned i = 0; i < n; ++i, qi *= q) out *= qn - qi;
  return out;
}

TEST(DLinear, Examples) {
  const Field gf16 = make_field(2, 4);
  EXPECT_TRUE(is_d_linear(*gf16, mul_matrix(*gf16, 7), 4));
  EXPECT_TRUE(is_d_linear(*gf16, frobenius_map(*gf16, 1), 1));
  EXPECT_FALSE(is_d_linear(*gf16, frobenius_map(*gf16, 1), 4));
  EXPECT_TRUE(is_d_linear(*gf16, frobenius_map(*gf16, 2), 2));
  expect_errc([&] { is_d_linear(*gf16, mul_matrix(*gf16, 1), 3); }, Errc::NotADivisor);
}

TEST(SemilinearTag, Examples) {
  const Field gf4 = make_field(2, 2);
  EXPECT_EQ(semilinear_tag(*gf4, mul_matrix(*gf4, 2), 2, 1), 0u);
  EXPECT_EQ(semilinear_tag(*gf4, frobenius_map(*gf4, 1), 2, 1), 1u);
  EXPECT_EQ(semilinear_tag(*gf4, frobenius_map(*gf4, 1), 2, 2), std::nullopt);
  const Field gf8 = make_field(2, 3);
  for (const auto& f : closure(gl_generators(*gf8, 1))) ASSERT_EQ(semilinear_tag(*gf8, f, 1, 1), 0u);
  expect_errc([&] { semilinear_tag(*gf4, AdditiveMap::zero(2, 2), 2, 1); }, Errc::SingularMap);
  expect_errc([&] { make_semilinear(*gf4, frobenius_map(*gf4, 1), 2, 2); }, Errc::NotInGroup);
}

TEST(SemilinearTag, IsHomomorphismWithLinearKernel) {
  const Field gf16 = make_field(2, 4);
  for (auto [a, b] : std::vector<std::pair<unsigned, unsigned>>{{2, 1}, {4, 1}, {4, 2}}) {
    const auto group = semilinear_group(*gf16, a, b);
    EXPECT_EQ(group.size(), gl_count(4 / a, 1ull << a) * (a / b));
    const unsigned period = a / b;
    std::vector<unsigned> tags;
    for (const auto& f : group) {
      const auto tag = semilinear_tag(*gf16, f, a, b);
      ASSERT_TRUE(tag.has_value());
      EXPECT_EQ(*tag == 0, is_d_linear(*gf16, f, a));
      tags.push_back(*tag);
    }
    for (std::size_t i = 0; i < group.size(); i += 7)
      for (std::size_t j = 0; j < group.size(); ++j) {
        const auto composed = semilinear_tag(*gf16, group[i] * group[j], a, b);
        ASSERT_TRUE(composed.has_value());
        ASSERT_EQ(*composed, (tags[i] + tags[j]) % period);
      }
  }
}

TEST(GlGenerators, ClosureOrders) {
  struct Case {
    unsigned p, m, d;
  };
  for (auto c : std::vector<Case>{{2, 3, 3}, {2, 3, 1}, {2, 4, 2}, {2, 4, 1}, {2, 4, 4}, {3, 2, 1}, {3, 2, 2},
                                   {3, 3, 1}, {3, 3, 3}, {2, 2, 1}}) {
    const Field field = make_field(c.p, c.m);
    const auto gens = gl_generators(*field, c.d);
    if (c.m == c.d) EXPECT_EQ(gens.size(), 1u);
    const auto group = closure(gens);
    std::uint64_t q = 1;
    for (unsigned i = 0; i < c.d; ++i) q *= c.p;
    EXPECT_EQ(group.size(), gl_count(c.m / c.d, q)) << c.p << "^" << c.m << " d=" << c.d;
    EXPECT_EQ(BigInt(group.size()), gl_order(c.m / c.d, q));
    for (const auto& f : group) ASSERT_TRUE(is_d_linear(*field, f, c.d));
  }
  EXPECT_EQ(closure(gl_generators(*make_field(2, 3), 1)).size(), 168u);
  EXPECT_EQ(closure(gl_generators(*make_field(2, 4), 2)).size(), 180u);
}

TEST(CodeInvariance, Examples) {
  const auto code = hamming8();
  const Field& f = code.field();
  for (Elem y = 0; y < 8; ++y) EXPECT_TRUE(is_code_invariant(translation(*f, y), code));
  const AffineElement by_primitive{0, mul_matrix(*f, f->primitive()), 0};
  EXPECT_TRUE(is_code_invariant(by_primitive, code));
  std::vector<Permutation::Point> swap{1, 0, 2, 3, 4, 5, 6, 7};
  EXPECT_FALSE(is_code_invariant(Permutation(swap), code));
}

TEST(Params, Examples) {
  EXPECT_EQ(hamming8().params().a, 1u);
  EXPECT_EQ(hamming8().params().b, 1u);
  for (auto d : {DefiningSet{0, 1}, DefiningSet{0, 2}}) {
    const auto code = length4(d);
    EXPECT_EQ(code.params().a, 2u);
    EXPECT_EQ(code.params().b, 2u);
    EXPECT_EQ(paut_order(code), 12);
  }
  EXPECT_EQ(paut_order(hamming8()), 1344);
  const AffineInvariantCode augmentation(make_field(2, 3), 1, DefiningSet{0});
  EXPECT_TRUE(augmentation.params().trivial);
  expect_errc([&] { paut_order(augmentation); }, Errc::TrivialCode);
}

TEST(Params, BDividesADividesMAndMonotone) {
  for (auto [p, m, r] : std::vector<std::array<unsigned, 3>>{{2, 4, 1}, {2, 4, 2}, {2, 4, 4}, {3, 2, 1}, {3, 2, 2}}) {
    const Field field = make_field(p, m);
    for (const auto& e : enumerate_affine_invariant(p, m, r)) {
      if (e.trivial) continue;
      const AffineInvariantCode code(field, r, e.set);
      const auto params = code.params();
      EXPECT_EQ(params.a % params.b, 0u);
      EXPECT_EQ(m % params.a, 0u);
      EXPECT_EQ(r % params.b, 0u);
      std::map<unsigned, bool> ok;
      for (unsigned d : divisors(m)) {
        ok[d] = true;
        for (const auto& g : gl_generators(*field, d)) ok[d] = ok[d] && is_code_invariant(AffineElement{0, g, 0}, code);
      }
      for (auto [d, passes] : ok) {
        if (d < params.a) EXPECT_FALSE(passes);
        if (d == params.a) EXPECT_TRUE(passes);
        if (!passes) continue;
        for (auto [multiple, also] : ok)
          if (multiple % d == 0) EXPECT_TRUE(also);
      }
    }
  }
}

TEST(Affine, SemidirectLaw) {
  const Field gf16 = make_field(2, 4);
  const auto group = semilinear_group(*gf16, 2, 1);
  std::vector<AffineElement> samples;
  for (std::size_t k = 0; k < group.size(); k += 17)
    samples.push_back(affine(static_cast<Elem>(k % 16), make_semilinear(*gf16, group[k], 2, 1)));
  for (const auto& left : samples)
    for (const auto& right : samples) {
      const AffineElement product = left.compose(right);
      for (Elem x = 0; x < 16; ++x) ASSERT_EQ(product.apply(x), left.apply(right.apply(x)));
      ASSERT_EQ(product.to_permutation(), left.to_permutation() * right.to_permutation());
    }
}

TEST(Affine, AbelianCommutingCriterion) {
  const Field gf16 = make_field(2, 4);
  const DigitSpace& s = gf16->space();
  const auto linear = closure(gl_generators(*gf16, 2));
  for (std::size_t i = 0; i < linear.size(); i += 5)
    for (std::size_t j = 0; j < linear.size(); j += 3)
      for (Elem x = 0; x < 16; x += 5)
        for (Elem y = 0; y < 16; y += 3) {
          const AffineElement left{x, linear[i], 0};
          const AffineElement right{y, linear[j], 0};
          const bool commute = left.to_permutation() * right.to_permutation() ==
                               right.to_permutation() * left.to_permutation();
          const bool criterion = s.add(x, linear[i](y)) == s.add(y, linear[j](x)) &&
                                 linear[i] * linear[j] == linear[j] * linear[i];
          ASSERT_EQ(commute, criterion);
        }
}

/// Upper unitriangular generators in the power basis: t^j -> t^j + t^(j-1).
std::vector<AdditiveMap> unitriangular(const FieldSpec& field) {
  const unsigned m = field.m();
  const DigitSpace& s = field.space();
  std::vector<Elem> basis;
  for (unsigned i = 0; i < m; ++i) basis.push_back(s.unit(i));
  std::vector<AdditiveMap> gens;
  for (unsigned i = 0; i < m; ++i)
    for (unsigned j = i + 1; j < m; ++j) {
      std::vector<Elem> images = basis;
      images[j] = s.add(basis[j], basis[i]);
      gens.push_back(AdditiveMap::from_basis_images(field.p(), m, basis, images));
    }
  return gens;
}

TEST(SumImages, UnitriangularGroups) {
  for (unsigned m : {3u, 4u}) {
    const Field field = make_field(2, m);
    const DigitSpace& s = field->space();
    const auto gens = unitriangular(*field);
    // Independent span of all (rho - 1)(x).
    Subspace expected = Subspace::span(2, m, {});
    for (const auto& rho : closure(gens))
      for (Elem x = 0; x < field->size(); ++x) expected.insert(s.sub(rho(x), x));
    const Subspace got = sum_images(*field, gens, 1);
    EXPECT_EQ(got.dim(), m - 1);
    EXPECT_TRUE(got.is_subspace_of(expected) && expected.is_subspace_of(got));
    for (unsigned i = 0; i + 1 < m; ++i) EXPECT_TRUE(got.contains(s.unit(i)));
    EXPECT_TRUE(sum_images_proper(*field, gens, 1));
  }
  const Field gf8 = make_field(2, 3);
  EXPECT_TRUE(sum_images_proper(*gf8, {AdditiveMap::identity(2, 3)}, 1));
  EXPECT_EQ(sum_images(*gf8, {AdditiveMap::identity(2, 3)}, 1).dim(), 0u);
  EXPECT_EQ(sum_images(*gf8, {unitriangular(*gf8).front()}, 1).dim(), 1u);
  expect_errc([&] { sum_images(*gf8, {mul_matrix(*gf8, gf8->primitive())}, 1); }, Errc::NotAPGroup);
}

}  // namespace
}  // namespace aic
