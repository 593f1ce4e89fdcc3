#include "aic/code.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "aic/error.hpp"
#include "aic/linalg.hpp"
#include "aic/paut.hpp"

namespace aic {

namespace {

std::uint64_t top_exponent(unsigned p, unsigned m) { return ipow(p, m) - 1; }

void validate(const DefiningSet& d, unsigned p, unsigned m, unsigned r) {
  const std::uint64_t n = top_exponent(p, m);
  auto fail = [&](const std::string& why) {
    throw Error(Errc::InvalidDefiningSet, "D={" + d.format() + "}: " + why);
  };
  if (d.empty() || !d.contains(0)) fail("0 must belong to D");
  if (d.values().back() > n) fail("values must lie in [0, " + std::to_string(n) + "]");
  if (n > 1 && !is_union_of_classes(d, ipow(p, r) % n, n)) fail("not a union of q-cyclotomic classes");
  if (!is_affine_invariant(d, p, m)) fail("not down-closed under the p-adic order");
}

}  // namespace

Codeword permute(const Permutation& sigma, const Codeword& w) {
  Codeword out{std::vector<Elem>(w.values.size())};
  for (std::size_t g = 0; g < w.values.size(); ++g) out.values[sigma(g)] = w.values[g];
  return out;
}

bool is_affine_invariant(const DefiningSet& d, unsigned p, unsigned m) {
  const std::uint64_t n = top_exponent(p, m);
  // Down-closure under the order is equivalent to closure under single-digit
  // decrements, which generate it.
  for (const auto t : d) {
    if (t == 0 || t > n) continue;
    std::uint64_t place = 1;
    for (std::uint64_t rest = t; rest > 0; rest /= p, place *= p) {
      if (rest % p == 0) continue;
      const std::uint64_t s = t - place;
      if (s >= 1 && !d.contains(static_cast<std::uint32_t>(s))) return false;
    }
  }
  return true;
}

bool is_trivial_set(const DefiningSet& d, unsigned p, unsigned m) {
  const std::uint64_t n = top_exponent(p, m);
  if (d == DefiningSet{0}) return true;
  if (d.size() == n && d.values().front() == 0 && d.values().back() == n - 1) return true;
  return d.size() == n + 1 && d.values().front() == 0 && d.values().back() == n;
}

std::vector<EnumeratedSet> enumerate_affine_invariant(unsigned p, unsigned m, unsigned r, std::size_t limit) {
  if (!is_prime(p)) throw Error(Errc::NonPrime, std::to_string(p) + " is not prime");
  if (m == 0 || r == 0) throw Error(Errc::InvalidArgument, "m and r must be >= 1");
  if (m > 16 || ipow(p, m) > (1u << 16)) {
    throw Error(Errc::TooLarge, "enumeration is limited to p^m <= 65536");
  }
  const std::uint64_t n = top_exponent(p, m);

  // Units of choice: q-classes of [1, n) plus the flag value n.
  std::vector<std::vector<std::uint64_t>> units;
  std::vector<std::size_t> unit_of(n + 1, 0);
  for (const auto& cls : cyclotomic_classes(n == 1 ? 1 : ipow(p, r) % n, n)) {
    if (cls.members.front() == 0) continue;
    for (const auto x : cls.members) unit_of[x] = units.size();
    units.push_back(cls.members);
  }
  unit_of[n] = units.size();
  units.push_back({n});

  auto weight = [p](std::uint64_t x) {
    unsigned w = 0;
    for (; x > 0; x /= p) w += x % p;
    return w;
  };
  std::vector<std::size_t> order(units.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return weight(units[a].front()) < weight(units[b].front());
  });
  std::vector<std::size_t> rank(units.size());
  for (std::size_t k = 0; k < order.size(); ++k) rank[order[k]] = k;

  // Cover predecessors of every unit, as positions in `order`.
  std::vector<std::vector<std::size_t>> needs(units.size());
  for (std::size_t k = 0; k < order.size(); ++k) {
    for (const auto t : units[order[k]]) {
      std::uint64_t place = 1;
      for (std::uint64_t rest = t; rest > 0; rest /= p, place *= p) {
        if (rest % p == 0) continue;
        const std::uint64_t s = t - place;
        if (s >= 1) needs[k].push_back(rank[unit_of[s]]);
      }
    }
    std::sort(needs[k].begin(), needs[k].end());
    needs[k].erase(std::unique(needs[k].begin(), needs[k].end()), needs[k].end());
  }

  std::vector<EnumeratedSet> out;
  std::vector<bool> chosen(units.size(), false);
  auto emit = [&] {
    if (out.size() >= limit) throw Error(Errc::TooLarge, "more than " + std::to_string(limit) + " defining sets");
    std::vector<std::uint32_t> values{0};
    for (std::size_t k = 0; k < order.size(); ++k) {
      if (!chosen[k]) continue;
      for (const auto x : units[order[k]]) values.push_back(static_cast<std::uint32_t>(x));
    }
    DefiningSet d(std::move(values));
    const bool trivial = is_trivial_set(d, p, m);
    out.push_back({std::move(d), trivial});
  };
  auto recurse = [&](auto&& self, std::size_t k) -> void {
    if (k == order.size()) {
      emit();
      return;
    }
    chosen[k] = false;
    self(self, k + 1);
    if (std::all_of(needs[k].begin(), needs[k].end(), [&](std::size_t j) { return bool(chosen[j]); })) {
      chosen[k] = true;
      self(self, k + 1);
      chosen[k] = false;
    }
  };
  recurse(recurse, 0);

  std::sort(out.begin(), out.end(), [](const EnumeratedSet& a, const EnumeratedSet& b) {
    if (a.set.size() != b.set.size()) return a.set.size() < b.set.size();
    return a.set < b.set;
  });
  return out;
}

AffineInvariantCode::AffineInvariantCode(Field k, unsigned r, DefiningSet d) {
  if (!k) throw Error(Errc::InvalidArgument, "missing field");
  if (r == 0) throw Error(Errc::InvalidArgument, "alphabet exponent r must be >= 1");
  validate(d, k->p(), k->m(), r);
  const bool trivial = is_trivial_set(d, k->p(), k->m());
  Compositum comp(k, r);
  std::vector<Elem> embedded(k->size());
  for (Elem g = 0; g < k->size(); ++g) embedded[g] = comp.embed_k(g);
  state_ = std::make_shared<State>(std::move(k), r, std::move(d), std::move(comp), trivial, std::move(embedded));
}

Elem AffineInvariantCode::power_sum(const Codeword& w, std::uint64_t i) const {
  const auto& big = *state_->comp.big();
  Elem acc = 0;
  for (std::size_t g = 0; g < w.values.size(); ++g) {
    if (w.values[g] == 0) continue;
    const Elem term = big.mul(state_->comp.embed_alphabet(w.values[g]), big.pow(state_->k_embedded[g], i));
    acc = big.add(acc, term);
  }
  return acc;
}

const std::vector<Elem>& AffineInvariantCode::checks() const {
  std::call_once(state_->checks_once, [this] {
    const auto& s = *state_;
    const auto& big = *s.comp.big();
    const std::size_t n = length();
    s.checks.resize(s.d.size() * n);
    std::size_t k = 0;
    for (const auto i : s.d) {
      for (std::size_t g = 0; g < n; ++g) s.checks[k * n + g] = big.pow(s.k_embedded[g], i);
      ++k;
    }
  });
  return state_->checks;
}

bool AffineInvariantCode::contains(const Codeword& w) const {
  if (w.values.size() != length()) {
    throw Error(Errc::AlphabetMismatch, "word of length " + std::to_string(w.values.size()) + ", expected " +
                                            std::to_string(length()));
  }
  const Elem q = alphabet()->size();
  for (const auto x : w.values) {
    if (x >= q) throw Error(Errc::AlphabetMismatch, "symbol " + std::to_string(x) + " outside F_" + std::to_string(q));
  }
  const std::size_t n = length();
  if (state_->d.size() * n > (std::size_t{1} << 22)) {
    return std::all_of(state_->d.begin(), state_->d.end(), [&](std::uint32_t i) { return power_sum(w, i) == 0; });
  }
  const auto& table = checks();
  const auto& big = *state_->comp.big();
  for (std::size_t k = 0; k < state_->d.size(); ++k) {
    Elem acc = 0;
    for (std::size_t g = 0; g < n; ++g) {
      if (w.values[g] != 0) acc = big.add(acc, big.mul(state_->comp.embed_alphabet(w.values[g]), table[k * n + g]));
    }
    if (acc != 0) return false;
  }
  return true;
}

const std::vector<Codeword>& AffineInvariantCode::basis() const {
  std::call_once(state_->basis_once, [this] {
    const auto& s = *state_;
    const auto& big = *s.comp.big();
    const auto& alpha = *s.comp.alphabet();
    const std::size_t n = length();
    const unsigned r = s.r;
    const unsigned l = big.m();
    const unsigned p = s.k->p();

    // Unknowns: the F_p-coordinates of each symbol, r per point.
    Matrix eqs(s.d.size() * l, n * r);
    std::size_t row = 0;
    for (const auto i : s.d) {
      for (std::size_t g = 0; g < n; ++g) {
        const Elem gi = big.pow(s.k_embedded[g], i);
        for (unsigned j = 0; j < r; ++j) {
          const Elem c = big.mul(s.comp.embed_alphabet(alpha.space().unit(j)), gi);
          for (unsigned k = 0; k < l; ++k) eqs.at(row + k, g * r + j) = big.space().digit(c, k);
        }
      }
      row += l;
    }
    const Matrix sol = nullspace(PrimeField{p}, std::move(eqs));

    Matrix words(sol.rows, n);
    std::vector<unsigned> digits(r);
    for (std::size_t v = 0; v < sol.rows; ++v) {
      for (std::size_t g = 0; g < n; ++g) {
        for (unsigned j = 0; j < r; ++j) digits[j] = sol.at(v, g * r + j);
        words.at(v, g) = alpha.space().from_digits(digits);
      }
    }
    const auto pivots = rref(alpha, words);
    for (std::size_t v = 0; v < pivots.size(); ++v) {
      Codeword w{std::vector<Elem>(n)};
      for (std::size_t g = 0; g < n; ++g) w.values[g] = words.at(v, g);
      s.basis.push_back(std::move(w));
    }
  });
  return state_->basis;
}

const CodeParams& AffineInvariantCode::params() const {
  std::call_once(state_->params_once, [this] { state_->params = compute_params(*this); });
  return state_->params;
}

std::vector<Codeword> code_basis(const AffineInvariantCode& code) { return code.basis(); }
std::size_t dimension(const AffineInvariantCode& code) { return code.dimension(); }
bool contains(const AffineInvariantCode& code, const Codeword& w) { return code.contains(w); }
bool is_trivial(const AffineInvariantCode& code) { return code.is_trivial(); }

DefiningSet compute_defining_set(const std::vector<Codeword>& basis, const Field& k, unsigned r) {
  const Compositum comp(k, r);
  const auto& big = *comp.big();
  const std::uint64_t n = top_exponent(k->p(), k->m());
  std::vector<Elem> embedded(k->size());
  for (Elem g = 0; g < k->size(); ++g) embedded[g] = comp.embed_k(g);
  for (const auto& w : basis) {
    if (w.values.size() != k->size()) throw Error(Errc::AlphabetMismatch, "word length differs from p^m");
  }

  std::vector<std::uint32_t> out;
  for (std::uint64_t i = 0; i <= n; ++i) {
    bool vanishes = true;
    for (const auto& w : basis) {
      Elem acc = 0;
      for (std::size_t g = 0; g < w.values.size(); ++g) {
        if (w.values[g] == 0) continue;
        acc = big.add(acc, big.mul(comp.embed_alphabet(w.values[g]), big.pow(embedded[g], i)));
      }
      if (acc != 0) {
        vanishes = false;
        break;
      }
    }
    if (vanishes) out.push_back(static_cast<std::uint32_t>(i));
  }
  return DefiningSet(std::move(out));
}

}  // namespace aic
