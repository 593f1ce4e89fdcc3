#include "aic/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>
#include <string>

#include "aic/error.hpp"
#include "aic/paut.hpp"

namespace aic {

namespace {

bool is_power_of(std::uint64_t x, unsigned p) {
  while (x > 1 && x % p == 0) x /= p;
  return x == 1;
}

std::vector<Permutation> symmetric_group(std::size_t n) {
  std::vector<Permutation::Point> images(n);
  std::iota(images.begin(), images.end(), Permutation::Point{0});
  std::vector<Permutation> out;
  do {
    out.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

/// Non-identity elements whose cycles all share one p-power length.
bool usable(const Permutation& g, unsigned p) {
  if (g.is_identity()) return false;
  const auto type = g.cycle_type();
  return type.size() == 1 && is_power_of(type.begin()->first, p);
}

std::vector<GroupFingerprint> unique_types(const std::vector<GroupFingerprint>& fps) {
  std::vector<GroupFingerprint> out;
  for (const auto& fp : fps) {
    if (std::find(out.begin(), out.end(), fp) == out.end()) out.push_back(fp);
  }
  return out;
}

}  // namespace

std::vector<Permutation> brute_paut_scan(const AffineInvariantCode& code) {
  const std::size_t n = code.length();
  if (n > 9) throw Error(Errc::TooLarge, "full symmetric scan is limited to 9 points");
  const auto& basis = code.basis();
  std::vector<Permutation::Point> images(n);
  std::iota(images.begin(), images.end(), Permutation::Point{0});
  std::vector<Permutation> out;
  do {
    const Permutation sigma(images);
    if (std::all_of(basis.begin(), basis.end(), [&](const Codeword& w) { return code.contains(permute(sigma, w)); })) {
      out.push_back(sigma);
    }
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

std::vector<Permutation> enumerate_paut(const AffineInvariantCode& code) {
  if (code.length() > 16) throw Error(Errc::TooLarge, "PAut enumeration is limited to 16 points");
  if (code.is_trivial()) throw Error(Errc::TrivialCode, "PAut of a trivial code is the full symmetric group");
  const auto& field = *code.field();
  const auto& params = code.params();
  std::vector<Permutation> out;
  for (const auto& g : semilinear_group(field, params.a, params.b)) {
    for (Elem y = 0; y < field.size(); ++y) out.push_back(AffineElement{y, g, 0}.to_permutation());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  if (BigInt(out.size()) != paut_order(code)) {
    throw Error(Errc::InternalInconsistency, "enumerated " + std::to_string(out.size()) + " elements, expected " +
                                                 paut_order(code).str());
  }
  return out;
}

SearchResult regular_subgroup_search(const std::vector<Permutation>& ambient, unsigned p, std::uint64_t budget) {
  SearchResult result;
  if (ambient.empty()) return result;
  const std::size_t n = ambient.front().size();
  std::vector<std::vector<const Permutation*>> cand(n);
  for (const auto& g : ambient) {
    if (usable(g, p)) cand[g(0)].push_back(&g);
  }

  // slots[x] is the element of the current subgroup sending 0 to x.
  std::vector<std::optional<Permutation>> slots(n);
  slots[0] = Permutation::identity(n);
  std::vector<Permutation> gens;
  std::set<std::vector<Permutation>> seen;

  // Closure of `gens` into `out`; false on a collision or a size that cannot
  // divide n.
  auto close = [&](std::vector<std::optional<Permutation>>& out) {
    std::fill(out.begin(), out.end(), std::nullopt);
    out[0] = Permutation::identity(n);
    std::vector<std::size_t> queue{0};
    for (std::size_t k = 0; k < queue.size(); ++k) {
      const Permutation current = *out[queue[k]];
      for (const auto& g : gens) {
        Permutation next = current * g;
        const auto x = next(0);
        if (out[x]) {
          if (*out[x] != next) return false;
          continue;
        }
        out[x] = std::move(next);
        queue.push_back(x);
      }
    }
    return is_power_of(queue.size(), p);
  };

  auto recurse = [&](auto&& self, const std::vector<std::optional<Permutation>>& current) -> void {
    std::size_t x = 0;
    while (x < n && current[x]) ++x;
    if (x == n) {
      std::vector<Permutation> elems;
      for (const auto& e : current) elems.push_back(*e);
      auto group = RegularGroup::from_permutations(elems);
      if (seen.insert(group.sorted()).second) {
        result.fingerprints.push_back(fingerprint(group));
        result.groups.push_back(std::move(group));
      }
      return;
    }
    std::vector<std::optional<Permutation>> next(n);
    for (const auto* c : cand[x]) {
      if (result.nodes >= budget) {
        result.complete = false;
        return;
      }
      ++result.nodes;
      gens.push_back(*c);
      if (close(next)) self(self, next);
      gens.pop_back();
      if (!result.complete) return;
    }
  };
  recurse(recurse, slots);
  return result;
}

SearchResult regular_subgroup_search(const AffineInvariantCode& code, std::uint64_t budget) {
  if (code.is_trivial()) {
    if (code.length() > 9) throw Error(Errc::TooLarge, "trivial codes are searched only up to 9 points");
    return regular_subgroup_search(symmetric_group(code.length()), code.p(), budget);
  }
  return regular_subgroup_search(enumerate_paut(code), code.p(), budget);
}

RegularGroup centralizer_of_regular(const RegularGroup& group) {
  const std::size_t n = group.order();
  std::vector<Permutation> out;
  out.reserve(n);
  for (std::size_t x = 0; x < n; ++x) {
    std::vector<Permutation::Point> images(n);
    for (std::size_t y = 0; y < n; ++y) images[y] = group.element(y)(x);
    out.emplace_back(std::move(images));
  }
  RegularGroup c = RegularGroup::from_permutations(std::move(out));
  for (const auto& f : c.elements()) {
    for (const auto& g : group.elements()) {
      if (f * g != g * f) throw Error(Errc::InternalInconsistency, "centralizer element fails to commute");
    }
  }
  return c;
}

std::vector<GroupFingerprint> StructureReport::left_types() const { return unique_types(search.fingerprints); }

std::vector<GroupFingerprint> StructureReport::twosided_types() const {
  std::vector<GroupFingerprint> fps;
  for (std::size_t k = 0; k < twosided.size(); ++k) {
    if (twosided[k]) fps.push_back(search.fingerprints[k]);
  }
  return unique_types(fps);
}

StructureReport left_and_twosided_groups(const AffineInvariantCode& code, std::uint64_t budget) {
  StructureReport report{regular_subgroup_search(code, budget), {}};
  for (const auto& g : report.search.groups) {
    const RegularGroup c = centralizer_of_regular(g);
    report.twosided.push_back(std::all_of(c.elements().begin(), c.elements().end(),
                                          [&](const Permutation& s) { return is_code_invariant(s, code); }));
  }
  return report;
}

}  // namespace aic
