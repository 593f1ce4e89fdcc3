#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <vector>

#include "aic/cyclotomic.hpp"
#include "aic/finite_field.hpp"
#include "aic/permutation.hpp"

namespace aic {

/// One alphabet symbol (a code of F = F_{p^r}) per element code of I.
struct Codeword {
  std::vector<Elem> values;

  auto operator<=>(const Codeword&) const = default;
};

/// (sigma w)_{sigma(g)} = w_g.
Codeword permute(const Permutation& sigma, const Codeword& w);

/// Down-closure under the p-adic order on [1, p^m - 1].
bool is_affine_invariant(const DefiningSet& d, unsigned p, unsigned m);

/// {0}, {0..p^m-2} or {0..p^m-1}.
bool is_trivial_set(const DefiningSet& d, unsigned p, unsigned m);

struct EnumeratedSet {
  DefiningSet set;
  bool trivial = false;
};

/// Every valid defining set for length p^m over F_{p^r}, ordered by size and
/// then lexicographically. Throws TooLarge past 2^16 points or `limit` sets.
std::vector<EnumeratedSet> enumerate_affine_invariant(unsigned p, unsigned m, unsigned r,
                                                      std::size_t limit = 1'000'000);

/// a = a(C), b = b(C). Trivial codes report (1, 1) with the flag set.
struct CodeParams {
  unsigned a = 1;
  unsigned b = 1;
  bool trivial = false;
};

class AffineInvariantCode {
 public:
  /// Throws InvalidDefiningSet unless D is a valid defining set for q = p^r.
  AffineInvariantCode(Field k, unsigned r, DefiningSet d);

  const Field& field() const noexcept { return state_->k; }
  unsigned p() const noexcept { return state_->k->p(); }
  unsigned m() const noexcept { return state_->k->m(); }
  unsigned r() const noexcept { return state_->r; }
  const DefiningSet& defining_set() const noexcept { return state_->d; }
  const Compositum& compositum() const noexcept { return state_->comp; }
  const Field& alphabet() const noexcept { return state_->comp.alphabet(); }
  std::size_t length() const noexcept { return state_->k->size(); }
  bool is_trivial() const noexcept { return state_->trivial; }

  /// Reduced echelon F-basis; computed once.
  const std::vector<Codeword>& basis() const;
  std::size_t dimension() const { return basis().size(); }
  /// Computed once; see compute_params.
  const CodeParams& params() const;

  /// Power sum of w at exponent i, evaluated in the compositum (0^0 = 1).
  Elem power_sum(const Codeword& w, std::uint64_t i) const;
  /// Throws AlphabetMismatch on wrong length or out-of-range symbols.
  bool contains(const Codeword& w) const;

 private:
  struct State;
  std::shared_ptr<State> state_;

  const std::vector<Elem>& checks() const;

  struct State {
    State(Field k_, unsigned r_, DefiningSet d_, Compositum comp_, bool trivial_, std::vector<Elem> embedded)
        : k(std::move(k_)), r(r_), d(std::move(d_)), comp(std::move(comp_)), trivial(trivial_),
          k_embedded(std::move(embedded)) {}

    Field k;
    unsigned r;
    DefiningSet d;
    Compositum comp;
    bool trivial;
    std::vector<Elem> k_embedded;

    mutable std::once_flag basis_once;
    mutable std::vector<Codeword> basis;
    mutable std::once_flag params_once;
    mutable CodeParams params;
    // checks[k * length + g] = g^i in the compositum for the k-th i in D.
    mutable std::once_flag checks_once;
    mutable std::vector<Elem> checks;
  };
};

std::vector<Codeword> code_basis(const AffineInvariantCode& code);
std::size_t dimension(const AffineInvariantCode& code);
bool contains(const AffineInvariantCode& code, const Codeword& w);
bool is_trivial(const AffineInvariantCode& code);

/// {i in [0, p^m - 1] : every word's power sum at i vanishes}.
DefiningSet compute_defining_set(const std::vector<Codeword>& basis, const Field& k, unsigned r);

}  // namespace aic
