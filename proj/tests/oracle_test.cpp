#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "aic/oracle.hpp"
#include "aic/paut.hpp"
#include "aic/structures.hpp"
#include "support.hpp"

namespace aic {
namespace {

using testing::expect_errc;
using testing::hamming8;
using testing::length4;

std::vector<AffineInvariantCode> nontrivial_codes_up_to_9() {
  std::vector<AffineInvariantCode> out;
  for (auto [p, m, r] : std::vector<std::array<unsigned, 3>>{{2, 2, 2}, {2, 3, 1}, {2, 3, 3}, {3, 2, 1}, {3, 2, 2}}) {
    const Field field = make_field(p, m);
    for (const auto& e : enumerate_affine_invariant(p, m, r))
      if (!e.trivial) out.emplace_back(field, r, e.set);
  }
  return out;
}

TEST(BruteScan, Examples) {
  EXPECT_EQ(brute_paut_scan(length4(DefiningSet{0, 1})).size(), 12u);
  EXPECT_EQ(brute_paut_scan(hamming8()).size(), 1344u);
}

TEST(EnumeratePaut, MatchesScanUpTo9) {
  const auto codes = nontrivial_codes_up_to_9();
  EXPECT_GE(codes.size(), 5u);
  for (const auto& code : codes) {
    const auto scan = brute_paut_scan(code);
    const auto theory = enumerate_paut(code);
    EXPECT_EQ(scan, theory) << code.defining_set().format();
    EXPECT_EQ(BigInt(theory.size()), paut_order(code));
  }
}

TEST(EnumeratePaut, ReedMullerLength16) {
  const AffineInvariantCode code(make_field(2, 4), 1, DefiningSet{0, 1, 2, 4, 8});
  const auto perms = enumerate_paut(code);
  EXPECT_EQ(BigInt(perms.size()), paut_order(code));
  EXPECT_EQ(perms.size(), 322560u);
  expect_errc([] { enumerate_paut(AffineInvariantCode(make_field(2, 3), 1, DefiningSet{0})); }, Errc::TrivialCode);
}

TEST(Search, Length4OnlyKlein) {
  for (auto d : {DefiningSet{0, 1}, DefiningSet{0, 2}}) {
    const auto result = regular_subgroup_search(length4(d));
    ASSERT_TRUE(result.complete);
    ASSERT_EQ(result.groups.size(), 1u);
    EXPECT_EQ(result.fingerprints[0].abelian_invariants, (std::vector<std::uint64_t>{2, 2}));
  }
}

TEST(Search, HammingFindsElementaryAndNonabelian) {
  const auto result = regular_subgroup_search(hamming8());
  ASSERT_TRUE(result.complete);
  bool elementary = false;
  bool nonabelian = false;
  for (const auto& fp : result.fingerprints) {
    elementary = elementary || fp.abelian_invariants == std::vector<std::uint64_t>{2, 2, 2};
    nonabelian = nonabelian || !fp.abelian;
  }
  EXPECT_TRUE(elementary);
  EXPECT_TRUE(nonabelian);
  // Every found subgroup is regular and inside PAut.
  const auto paut = enumerate_paut(hamming8());
  const std::set<Permutation> members(paut.begin(), paut.end());
  for (const auto& g : result.groups)
    for (const auto& x : g.elements()) ASSERT_TRUE(members.count(x));
}

TEST(Search, BudgetIsReported) {
  const auto result = regular_subgroup_search(hamming8(), 5);
  EXPECT_FALSE(result.complete);
  EXPECT_LE(result.nodes, 6u);
}

TEST(Search, ContainsEveryChiFGroup) {
  const auto code = hamming8();
  const Field& field = code.field();
  const auto result = regular_subgroup_search(code);
  ASSERT_TRUE(result.complete);
  std::set<std::vector<Permutation>> found;
  for (const auto& g : result.groups) found.insert(g.sorted());
  std::size_t pairs = 0;
  for (Elem c = 1; c < 8; ++c) {
    const AdditiveMap chi = trace_form(*field, 1, c);
    for (std::uint32_t bits = 1; bits < (1u << 9); ++bits) {
      std::vector<std::vector<unsigned>> rows(3, std::vector<unsigned>(3));
      for (unsigned k = 0; k < 9; ++k) rows[k / 3][k % 3] = (bits >> k) & 1;
      const AdditiveMap f = AdditiveMap::from_rows(2, rows);
      if (!(f * f).is_zero() || !(chi * f).is_zero()) continue;
      const auto group = build_regular_group(chi_f_alpha(make_chi_f(field, chi, f, 1)));
      EXPECT_TRUE(found.count(group.sorted()));
      ++pairs;
    }
  }
  EXPECT_GT(pairs, 0u);
}

TEST(Centralizer, DoubleCentralizerAndMaximality) {
  const auto code = hamming8();
  const auto paut = enumerate_paut(code);
  const auto result = regular_subgroup_search(code);
  for (const auto& g : result.groups) {
    const auto centralizer = centralizer_of_regular(g);
    EXPECT_EQ(centralizer.order(), g.order());
    for (const auto& x : centralizer.elements())
      for (const auto& y : g.elements()) ASSERT_EQ(x * y, y * x);
    EXPECT_EQ(centralizer_of_regular(centralizer).sorted(), g.sorted());
    const auto members = centralizer.sorted();
    for (const auto& s : paut) {
      bool commutes = true;
      for (const auto& y : g.elements()) commutes = commutes && s * y == y * s;
      if (commutes) ASSERT_TRUE(std::binary_search(members.begin(), members.end(), s));
    }
    EXPECT_EQ(g.is_abelian(), centralizer.sorted() == g.sorted());
  }
}

TEST(Centralizer, MutualForNonabelianChiF) {
  const Field gf16 = make_field(2, 4);
  const auto f = AdditiveMap::from_basis_images(2, 4, std::vector<Elem>{1, 2, 4, 8}, std::vector<Elem>{0, 0, 0, 2});
  const auto group = build_regular_group(chi_f_alpha(make_chi_f(gf16, trace_form(*gf16, 1, 2), f, 1)));
  const auto centralizer = centralizer_of_regular(group);
  EXPECT_EQ(centralizer.order(), 16u);
  EXPECT_NE(centralizer.sorted(), group.sorted());
  EXPECT_EQ(centralizer_of_regular(centralizer).sorted(), group.sorted());
}

TEST(LeftAndTwosided, Length4) {
  const auto report = left_and_twosided_groups(length4(DefiningSet{0, 1}));
  ASSERT_EQ(report.left_types().size(), 1u);
  EXPECT_EQ(report.left_types(), report.twosided_types());
  EXPECT_EQ(report.left_types()[0].abelian_invariants, (std::vector<std::uint64_t>{2, 2}));
}

TEST(LeftAndTwosided, HammingAgreesWithAlphaCriterion) {
  const auto code = hamming8();
  const auto report = left_and_twosided_groups(code);
  const auto twosided = report.twosided_types();
  EXPECT_TRUE(std::any_of(twosided.begin(), twosided.end(), [](const GroupFingerprint& fp) {
    return fp.abelian_invariants == std::vector<std::uint64_t>{2, 2, 2};
  }));
  for (std::size_t k = 0; k < report.search.groups.size(); ++k) {
    const AlphaMap alpha = reconstruct_alpha(code.field(), report.search.groups[k], 1, 1);
    ASSERT_TRUE(check_iyb(alpha));
    EXPECT_EQ(build_regular_group(alpha), report.search.groups[k]);
    EXPECT_EQ(bool(report.twosided[k]), is_twosided_alpha(alpha, 1));
  }
}

}  // namespace
}  // namespace aic
