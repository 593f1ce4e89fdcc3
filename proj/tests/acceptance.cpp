// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 on any FAIL.

#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "aic/additive_map.hpp"
#include "aic/code.hpp"
#include "aic/error.hpp"
#include "aic/oracle.hpp"
#include "aic/paut.hpp"
#include "aic/structures.hpp"
#include "aic_cli/cli.hpp"

namespace {

using namespace aic;
using Clock = std::chrono::steady_clock;

constexpr double kLimitAc1 = 1.0;
constexpr double kLimitAc2 = 1.0;
constexpr double kLimitAc3 = 60.0;
constexpr double kLimitAc4 = 300.0;
constexpr double kLimitAc5 = 120.0;
constexpr double kLimitAc6 = 60.0;
constexpr double kLimitAc7 = 300.0;

/// Collects the first failure; later checks still run.
struct Verdict {
  bool ok = true;
  std::string detail;

  void require(bool condition, const std::string& what) {
    if (!condition && ok) {
      ok = false;
      detail = what;
    }
  }
};

const GroupFingerprint& klein() {
  static const GroupFingerprint fp = [] {
    return fingerprint(build_regular_group(trivial_alpha(make_field(2, 2), 1, 1)));
  }();
  return fp;
}

std::vector<AffineInvariantCode> nontrivial(unsigned p, unsigned m, unsigned r) {
  std::vector<AffineInvariantCode> out;
  const Field field = make_field(p, m);
  for (const auto& e : enumerate_affine_invariant(p, m, r))
    if (!e.trivial) out.emplace_back(field, r, e.set);
  return out;
}

Verdict ac1_length4_landscape() {
  Verdict v;
  std::set<unsigned> parities;
  for (unsigned r = 1; r <= 8; ++r) {
    std::vector<std::vector<std::uint32_t>> found;
    for (const auto& e : enumerate_affine_invariant(2, 2, r))
      if (!e.trivial) found.push_back(e.set.values());
    if (!found.empty()) {
      v.require(found == std::vector<std::vector<std::uint32_t>>{{0, 1}, {0, 2}}, "wrong nontrivial sets at r=" + std::to_string(r));
      parities.insert(r % 2);
    }
    std::ostringstream out, err;
    const int code = cli::run({"code", "list", "--p", "2", "--m", "2", "--r", std::to_string(r)}, out, err);
    const auto report = nlohmann::json::parse(out.str());
    v.require(code == cli::kOk, "code list failed");
    v.require(report["results"]["nontrivial"] == found.size(), "report count differs");
    bool flagged = false;
    for (const auto& w : report["warnings"]) flagged = flagged || w["tag"] == "ParityNote";
    v.require(flagged, "parity note missing at r=" + std::to_string(r));
  }
  v.require(parities.size() == 1, "nontrivial codes for both parities");
  if (v.ok) v.detail = std::string("2 nontrivial codes exactly for ") + (*parities.begin() == 0 ? "even" : "odd") + " r";
  return v;
}

Verdict ac2_length4_structures() {
  Verdict v;
  std::size_t count = 0;
  for (unsigned r : {2u, 4u})
    for (const auto& code : nontrivial(2, 2, r)) {
      ++count;
      v.require(code.params().a == 2 && code.params().b == 2, "params differ from (2,2)");
      v.require(brute_paut_scan(code).size() == 12, "S_4 scan size differs from 12");
      const auto report = left_and_twosided_groups(code);
      v.require(report.search.complete, "search incomplete");
      v.require(report.left_types() == std::vector<GroupFingerprint>{klein()}, "left types differ from C2^2");
      v.require(report.twosided_types() == std::vector<GroupFingerprint>{klein()}, "two-sided types differ from C2^2");
    }
  v.require(count == 4, "expected two codes for each even r");
  if (v.ok) v.detail = "(a,b)=(2,2), |PAut|=12, left = two-sided = {C2^2}";
  return v;
}

Verdict ac3_length8_paut() {
  Verdict v;
  const auto codes = nontrivial(2, 3, 1);
  v.require(codes.size() == 1, "expected one nontrivial code");
  if (!v.ok) return v;
  const auto& code = codes.front();
  v.require(code.defining_set() == DefiningSet{0, 1, 2, 4}, "unexpected defining set");
  v.require(code.params().a == 1 && code.params().b == 1, "params differ from (1,1)");
  const auto scan = brute_paut_scan(code);
  v.require(scan.size() == 1344, "S_8 scan size " + std::to_string(scan.size()));
  v.require(scan == enumerate_paut(code), "scan differs from enumeration");
  v.require(paut_order(code) == 1344, "order formula differs");
  if (v.ok) v.detail = "(a,b)=(1,1), scan = enumeration, 1344 permutations";
  return v;
}

Verdict ac4_roundtrip() {
  Verdict v;
  std::size_t groups = 0;
  std::size_t twosided = 0;
  std::size_t codes = 0;
  for (auto [p, m, r] : std::vector<std::array<unsigned, 3>>{{2, 2, 2}, {2, 3, 1}, {2, 3, 3}, {3, 2, 1}, {3, 2, 2}})
    for (const auto& code : nontrivial(p, m, r)) {
      ++codes;
      const auto report = left_and_twosided_groups(code);
      v.require(report.search.complete, "search incomplete for D=" + code.defining_set().format());
      const auto [a, b, trivial] = code.params();
      for (std::size_t k = 0; k < report.search.groups.size(); ++k) {
        const RegularGroup& g = report.search.groups[k];
        const AlphaMap alpha = reconstruct_alpha(code.field(), g, a, b);
        v.require(check_iyb(alpha), "reconstructed alpha fails the cocycle law");
        v.require(build_regular_group(alpha) == g, "rebuilt group differs");
        v.require(is_twosided_alpha(alpha, a) == bool(report.twosided[k]), "two-sided criteria disagree");
        ++groups;
        twosided += report.twosided[k];
      }
    }
  if (v.ok)
    v.detail = std::to_string(codes) + " codes, " + std::to_string(groups) + " regular subgroups, " +
               std::to_string(twosided) + " two-sided";
  return v;
}

Verdict ac5_chi_f_family() {
  Verdict v;
  const Field field = make_field(2, 4);
  const DigitSpace& s = field->space();
  std::set<char> cases;
  std::size_t pairs = 0;
  std::vector<AdditiveMap> nilpotent;
  for (std::uint32_t bits = 1; bits < (1u << 16); ++bits) {
    std::vector<std::vector<unsigned>> rows(4, std::vector<unsigned>(4));
    for (unsigned k = 0; k < 16; ++k) rows[k / 4][k % 4] = (bits >> k) & 1;
    AdditiveMap f = AdditiveMap::from_rows(2, rows);
    const unsigned rank = f.rank();
    if ((rank == 1 || rank == 2) && (f * f).is_zero()) nilpotent.push_back(std::move(f));
  }
  for (Elem c = 1; c < 16 && v.ok; ++c) {
    const AdditiveMap chi = trace_form(*field, 1, c);
    for (const auto& f : nilpotent) {
      if (!(chi * f).is_zero()) continue;
      ++pairs;
      const ChiF cf = make_chi_f(field, chi, f, 1);
      const AlphaMap alpha = chi_f_alpha(cf);
      v.require(check_iyb(alpha), "cocycle law fails");
      const RegularGroup group = build_regular_group(alpha);
      const CayleyTable table = group.table();
      const ChiFClass cls = classify_chi_f(cf);
      v.require(cls.abelian == table.is_abelian(), "abelian flag disagrees with the table");
      std::uint64_t exponent = 1;
      for (std::uint32_t x = 0; x < table.order(); ++x) exponent = std::lcm(exponent, table.element_order(x));
      v.require(cls.exponent == exponent, "exponent disagrees with the table");
      if (!cls.abelian) {
        std::size_t central = 0;
        for (std::uint32_t x = 0; x < table.order(); ++x) {
          bool commutes = true;
          for (std::uint32_t y = 0; y < table.order() && commutes; ++y) commutes = table.mul(x, y) == table.mul(y, x);
          if (!commutes) continue;
          ++central;
          const Permutation& g = group.element(x);
          v.require(cls.center.contains(g(0)) && g == translation(*field, g(0)).to_permutation(),
                    "central element is not a listed translation");
        }
        v.require(central == std::size_t{1} << cls.center.dim(), "center size disagrees");
      }
      v.require(decompose_chi_f(cf).verified, "decomposition isomorphism fails");
      const EstrResult e = estr_descriptor(cf);
      v.require(e.matches(), "descriptor fingerprint differs from the concrete group");
      v.require(e.concrete == fingerprint(table), "concrete fingerprint mismatch");
      cases.insert(e.which);
      (void)s;
    }
  }
  v.require(cases.count('b') && cases.count('c'), "cases (b) and (c) not both reached");
  if (v.ok) {
    v.detail = std::to_string(pairs) + " pairs, cases ";
    for (char c : cases) v.detail += c;
  }
  return v;
}

Verdict ac6_nonabelian_witness() {
  Verdict v;
  const auto hamming = nontrivial(2, 3, 1).front();
  const auto w = nonabelian_exists(hamming);
  v.require(w.exists && w.structure && w.structure->concrete.order == 8 && !w.structure->concrete.abelian &&
                w.structure->matches(),
            "length-8 witness missing or wrong");
  for (const auto& code : nontrivial(2, 2, 2)) v.require(!nonabelian_exists(code).exists, "length-4 witness reported");
  const AffineInvariantCode rm16(make_field(2, 4), 1, DefiningSet{0, 1, 2, 4, 8});
  v.require(rm16.params().a == 1, "length-16 code has a != 1");
  const auto w16 = nonabelian_exists(rm16);
  v.require(w16.exists && w16.structure && !w16.structure->concrete.abelian, "length-16 witness missing");
  const Field& k = rm16.field();
  const AdditiveMap chi = trace_form(*k, 1, 1);
  const auto c = estr_descriptor(construct_f1(k, 1, chi, 1));
  v.require(c.which == 'c' && c.matches() && !c.concrete.abelian, "f1 does not give case (c)");
  const ChiF f2 = construct_f2(k, 1, chi, 1);
  v.require(f2.f.kernel().dim() == chi.kernel().dim() && estr_descriptor(f2).concrete.abelian,
            "f2 with u=1 is not abelian");
  bool guarded = false;
  try {
    construct_f2(k, 1, chi, 2);
  } catch (const aic::Error&) {
    guarded = true;
  }
  v.require(guarded, "f2 accepted u=2 with m/a-1=3");
  // u > 1 becomes available at length 32.
  const Field gf32 = make_field(2, 5);
  const auto d = estr_descriptor(construct_f2(gf32, 1, trace_form(*gf32, 1, 1), 2));
  v.require(d.which == 'd' && d.matches() && !d.concrete.abelian, "f2 with u=2 does not give case (d)");
  if (v.ok) v.detail = "witness at length 8 and 16, none at length 4; f1 -> (c), f2 -> abelian at u=1, (d) at u=2";
  return v;
}

Verdict ac7_properties() {
  Verdict v;
  std::size_t instances = 0;
  // Cocycle identity, lambda additivity, 1-cocycle, abelian criterion over GF(16) chi,f pairs for a in {1,2}.
  const Field gf16 = make_field(2, 4);
  const DigitSpace& s = gf16->space();
  for (unsigned a : {1u, 2u}) {
    const Subfield sub = subfield(gf16, a);
    for (Elem c = 1; c < 16; ++c) {
      const AdditiveMap chi = trace_form(*gf16, a, c);
      for (Elem v_elem : chi.kernel().elements()) {
        if (v_elem == 0) continue;
        for (Elem c2 = 1; c2 < 16; c2 += 4) {
          const AdditiveMap f = AdditiveMap::from_function(s, [&](Elem x) {
            return gf16->mul(sub.trace_to(gf16->mul(c2, x)), v_elem);
          });
          if (!(f * f).is_zero()) continue;
          const AlphaMap alpha = chi_f_alpha(make_chi_f(gf16, chi, f, a));
          v.require(check_iyb(alpha), "cocycle identity fails");
          const RegularGroup group = build_regular_group(alpha);
          v.require(group.is_abelian() == chi.kernel().is_subspace_of(f.kernel()), "abelian criterion fails");
          v.require(is_twosided_alpha(alpha, a), "linear chi not two-sided");
          for (Elem x1 = 0; x1 < 16; ++x1) {
            const Permutation& gx = group.element(x1);
            const Permutation gx_inv = gx.inverse();
            for (Elem x2 = 0; x2 < 16; ++x2) {
              v.require(alpha(s.add(x1, x2)).inverse() + AdditiveMap::identity(2, 4) ==
                            alpha(x1).inverse() + alpha(x2).inverse(),
                        "lambda additivity fails");
              const Elem acted = (gx * translation(*gf16, x2).to_permutation() * gx_inv)(0);
              v.require((gx * group.element(x2))(0) == s.add(x1, acted), "bijective 1-cocycle fails");
            }
          }
          ++instances;
        }
      }
    }
  }
  // Abelian commuting criterion for affine pairs (x,f),(y,g).
  const auto linear = closure(gl_generators(*gf16, 2));
  for (std::size_t i = 0; i < linear.size(); i += 3)
    for (std::size_t j = 0; j < linear.size(); j += 11)
      for (Elem x = 0; x < 16; x += 3)
        for (Elem y = 0; y < 16; y += 5) {
          const auto left = AffineElement{x, linear[i], 0}.to_permutation();
          const auto right = AffineElement{y, linear[j], 0}.to_permutation();
          const bool criterion =
              s.add(x, linear[i](y)) == s.add(y, linear[j](x)) && linear[i] * linear[j] == linear[j] * linear[i];
          v.require((left * right == right * left) == criterion, "abelian commuting criterion fails");
        }
  // Sum of images on unitriangular groups, m = 3, 4.
  for (unsigned m : {3u, 4u}) {
    const Field field = make_field(2, m);
    const DigitSpace& ds = field->space();
    std::vector<Elem> basis;
    for (unsigned i = 0; i < m; ++i) basis.push_back(ds.unit(i));
    std::vector<AdditiveMap> gens;
    for (unsigned i = 0; i < m; ++i)
      for (unsigned j = i + 1; j < m; ++j) {
        std::vector<Elem> images = basis;
        images[j] = ds.add(basis[j], basis[i]);
        gens.push_back(AdditiveMap::from_basis_images(2, m, basis, images));
      }
    v.require(closure(gens).size() == std::size_t{1} << (m * (m - 1) / 2), "unitriangular order");
    v.require(sum_images_proper(*field, gens, 1) && sum_images(*field, gens, 1).dim() == m - 1,
              "sum of images is not a hyperplane");
  }
  // Double centralizer on every regular subgroup at length 8.
  const auto hamming = nontrivial(2, 3, 1).front();
  for (const auto& g : regular_subgroup_search(hamming).groups) {
    const RegularGroup c = centralizer_of_regular(g);
    v.require(centralizer_of_regular(c).sorted() == g.sorted(), "double centralizer differs");
    for (const auto& x : c.elements())
      for (const auto& y : g.elements()) v.require(x * y == y * x, "centralizer element does not commute");
  }
  // T multiplicativity on G_{a,b} over GF(16).
  for (auto [a, b] : std::vector<std::pair<unsigned, unsigned>>{{2, 1}, {4, 1}, {4, 2}}) {
    const auto group = semilinear_group(*gf16, a, b);
    std::vector<unsigned> tags;
    for (const auto& f : group) tags.push_back(semilinear_tag(*gf16, f, a, b).value());
    for (std::size_t i = 0; i < group.size(); i += 3)
      for (std::size_t j = 0; j < group.size(); j += 2)
        v.require(semilinear_tag(*gf16, group[i] * group[j], a, b) == (tags[i] + tags[j]) % (a / b),
                  "T is not multiplicative");
  }
  if (v.ok) v.detail = std::to_string(instances) + " alpha instances, zero counterexamples";
  return v;
}

}  // namespace

int main() {
  struct Criterion {
    const char* id;
    double limit;
    std::function<Verdict()> run;
  };
  const std::vector<Criterion> criteria{
      {"AC1", kLimitAc1, ac1_length4_landscape}, {"AC2", kLimitAc2, ac2_length4_structures},
      {"AC3", kLimitAc3, ac3_length8_paut},      {"AC4", kLimitAc4, ac4_roundtrip},
      {"AC5", kLimitAc5, ac5_chi_f_family},      {"AC6", kLimitAc6, ac6_nonabelian_witness},
      {"AC7", kLimitAc7, ac7_properties},
  };
  bool all = true;
  for (const auto& c : criteria) {
    const auto start = Clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v.ok = false;
      v.detail = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    const bool in_time = seconds < c.limit;
    const bool pass = v.ok && in_time;
    all = all && pass;
    std::cout << (pass ? "PASS " : "FAIL ") << c.id << " (" << seconds << " s, limit " << c.limit << " s) "
              << (in_time ? v.detail : "time limit exceeded; " + v.detail) << std::endl;
  }
  return all ? 0 : 1;
}
