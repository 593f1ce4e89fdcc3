#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "aic/code.hpp"
#include "aic/cyclotomic.hpp"
#include "aic/paut.hpp"
#include "support.hpp"

namespace aic {
namespace {

using testing::expect_errc;
using testing::hamming8;

std::uint64_t power(std::uint64_t base, unsigned e) {
  std::uint64_t out = 1;
  while (e--) out *= base;
  return out;
}

bool digitwise_leq(std::uint64_t s, std::uint64_t t, unsigned p) {
  for (; s || t; s /= p, t /= p)
    if (s % p > t % p) return false;
  return true;
}

/// All subsets of [0, n] that satisfy the three defining-set conditions,
/// found by brute force over every subset.
std::set<std::vector<std::uint32_t>> subset_oracle(unsigned p, unsigned m, unsigned r) {
  const std::uint64_t n = power(p, m) - 1;
  const std::uint64_t q = power(p, r) % n;
  std::set<std::vector<std::uint32_t>> out;
  for (std::uint64_t mask = 0; mask < (1ull << (n + 1)); ++mask) {
    if (!(mask & 1)) continue;
    auto in = [&](std::uint64_t i) { return (mask >> i) & 1; };
    bool ok = true;
    for (std::uint64_t i = 1; i < n && ok; ++i)
      if (in(i) && !in((i * q) % n)) ok = false;
    for (std::uint64_t t = 1; t <= n && ok; ++t)
      for (std::uint64_t s = 1; s <= t && ok; ++s)
        if (in(t) && digitwise_leq(s, t, p) && !in(s)) ok = false;
    if (!ok) continue;
    std::vector<std::uint32_t> values;
    for (std::uint64_t i = 0; i <= n; ++i)
      if (in(i)) values.push_back(static_cast<std::uint32_t>(i));
    out.insert(values);
  }
  return out;
}

TEST(IsAffineInvariant, Examples) {
  EXPECT_TRUE(is_affine_invariant(DefiningSet{0, 1, 2, 4}, 2, 3));
  EXPECT_FALSE(is_affine_invariant(DefiningSet{0, 3}, 2, 3));
  EXPECT_TRUE(is_affine_invariant(DefiningSet::range(0, 7), 3, 2));
}

TEST(Enumerate, Examples) {
  const auto gf8 = enumerate_affine_invariant(2, 3, 1);
  ASSERT_EQ(gf8.size(), 4u);
  EXPECT_EQ(gf8[1].set.values(), (std::vector<std::uint32_t>{0, 1, 2, 4}));
  EXPECT_EQ(std::count_if(gf8.begin(), gf8.end(), [](const auto& e) { return !e.trivial; }), 1);
  const auto len4 = enumerate_affine_invariant(2, 2, 1);
  EXPECT_EQ(len4.size(), 3u);
  const auto len4_even = enumerate_affine_invariant(2, 2, 2);
  ASSERT_EQ(len4_even.size(), 5u);
  std::vector<std::vector<std::uint32_t>> nontrivial;
  for (const auto& e : len4_even)
    if (!e.trivial) nontrivial.push_back(e.set.values());
  EXPECT_EQ(nontrivial, (std::vector<std::vector<std::uint32_t>>{{0, 1}, {0, 2}}));
  expect_errc([] { enumerate_affine_invariant(2, 17, 1); }, Errc::TooLarge);
  expect_errc([] { enumerate_affine_invariant(4, 2, 1); }, Errc::NonPrime);
}

TEST(Enumerate, MatchesSubsetOracle) {
  for (auto [p, m, r] : std::vector<std::array<unsigned, 3>>{
           {2, 2, 1}, {2, 2, 2}, {2, 2, 3}, {2, 3, 1}, {2, 3, 2}, {2, 3, 3}, {3, 2, 1}, {3, 2, 2}}) {
    const auto oracle = subset_oracle(p, m, r);
    std::set<std::vector<std::uint32_t>> found;
    for (const auto& e : enumerate_affine_invariant(p, m, r)) {
      found.insert(e.set.values());
      EXPECT_EQ(e.trivial, is_trivial_set(e.set, p, m));
    }
    EXPECT_EQ(found, oracle) << p << "," << m << "," << r;
    // Three trivial sets always validate, except the degenerate length 2.
    std::size_t nontrivial = 0;
    for (const auto& e : enumerate_affine_invariant(p, m, r)) nontrivial += !e.trivial;
    EXPECT_EQ(nontrivial, oracle.size() - 3);
  }
}

TEST(Enumerate, SortedBySizeThenLex) {
  const auto sets = enumerate_affine_invariant(2, 4, 1);
  for (std::size_t k = 1; k < sets.size(); ++k) {
    const auto& prev = sets[k - 1].set.values();
    const auto& cur = sets[k].set.values();
    EXPECT_TRUE(prev.size() < cur.size() || (prev.size() == cur.size() && prev < cur));
  }
}

TEST(CodeBasis, HammingExamples) {
  const auto code = hamming8();
  EXPECT_EQ(code.dimension(), 4u);
  const Codeword ones{std::vector<Elem>(8, 1)};
  EXPECT_TRUE(code.contains(ones));
  EXPECT_TRUE(code.contains(Codeword{std::vector<Elem>(8, 0)}));
  for (Elem g = 0; g < 8; ++g) {
    Codeword e{std::vector<Elem>(8, 0)};
    e.values[g] = 1;
    EXPECT_FALSE(code.contains(e));
  }
  for (const auto& w : code.basis()) EXPECT_TRUE(code.contains(w));
  expect_errc([&] { code.contains(Codeword{std::vector<Elem>(8, 2)}); }, Errc::AlphabetMismatch);
  expect_errc([&] { code.contains(Codeword{std::vector<Elem>(4, 0)}); }, Errc::AlphabetMismatch);
}

TEST(CodeBasis, PowerSumsOfHammingVanish) {
  const Field f = make_field(2, 3);
  for (std::uint64_t i : {0u, 1u, 2u, 4u}) {
    Elem sum = 0;
    for (Elem g = 0; g < 8; ++g) sum = f->add(sum, i == 0 ? 1 : f->pow(g, i));
    EXPECT_EQ(sum, 0u) << i;
  }
}

TEST(CodeBasis, TrivialCodes) {
  const Field f = make_field(2, 2);
  const AffineInvariantCode zero(f, 1, DefiningSet::range(0, 3));
  EXPECT_TRUE(zero.basis().empty());
  EXPECT_TRUE(zero.is_trivial());
  const AffineInvariantCode augmentation(f, 1, DefiningSet{0});
  EXPECT_EQ(augmentation.dimension(), 3u);
  const AffineInvariantCode repetition(f, 1, DefiningSet::range(0, 2));
  ASSERT_EQ(repetition.dimension(), 1u);
  EXPECT_EQ(compute_defining_set(repetition.basis(), f, 1).values(), (std::vector<std::uint32_t>{0, 1, 2}));
  EXPECT_EQ(compute_defining_set({}, f, 1).values(), (std::vector<std::uint32_t>{0, 1, 2, 3}));
  EXPECT_FALSE(hamming8().is_trivial());
}

TEST(CodeBasis, RejectsInvalidSets) {
  const Field f = make_field(2, 3);
  expect_errc([&] { AffineInvariantCode(f, 1, DefiningSet{0, 3}); }, Errc::InvalidDefiningSet);
  expect_errc([&] { AffineInvariantCode(f, 1, DefiningSet{1, 2, 4}); }, Errc::InvalidDefiningSet);
  expect_errc([&] { AffineInvariantCode(f, 1, DefiningSet{0, 1}); }, Errc::InvalidDefiningSet);
}

TEST(CodeBasis, EnumeratedCodesUpTo16) {
  for (auto [p, m, r] : std::vector<std::array<unsigned, 3>>{
           {2, 2, 1}, {2, 2, 2}, {2, 3, 1}, {2, 3, 2}, {3, 2, 1}, {3, 2, 2}, {2, 4, 1}, {2, 4, 2}}) {
    const Field field = make_field(p, m);
    for (const auto& e : enumerate_affine_invariant(p, m, r)) {
      const AffineInvariantCode code(field, r, e.set);
      ASSERT_EQ(code.dimension(), field->size() - e.set.size());
      ASSERT_EQ(compute_defining_set(code.basis(), field, r), e.set);
      // Every map x -> alpha x + beta preserves the code.
      for (Elem alpha = 1; alpha < field->size(); ++alpha)
        for (Elem beta = 0; beta < field->size(); beta += 3) {
          std::vector<Permutation::Point> images(field->size());
          for (Elem x = 0; x < field->size(); ++x)
            images[x] = static_cast<Permutation::Point>(field->add(field->mul(alpha, x), beta));
          const Permutation sigma(images);
          for (const auto& w : code.basis()) ASSERT_TRUE(code.contains(permute(sigma, w)));
        }
    }
  }
}

TEST(CodeBasis, BEachDividesR) {
  for (auto [p, m, r] : std::vector<std::array<unsigned, 3>>{{2, 4, 2}, {2, 4, 4}, {2, 6, 2}, {3, 2, 2}, {2, 6, 3}}) {
    for (const auto& e : enumerate_affine_invariant(p, m, r)) {
      const unsigned b = minimal_b(e.set, p, m);
      EXPECT_EQ(r % b, 0u);
      EXPECT_EQ(m % b, 0u);
    }
  }
}

}  // namespace
}  // namespace aic
