#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace aic {

/// An element of F_p^m packed as a base-p integer: digit i is the coefficient
/// of t^i in the power basis. Codes run over [0, p^m).
using Elem = std::uint32_t;

/// Coordinate arithmetic on packed vectors of F_p^m. This is the additive
/// group I; it needs no knowledge of the modulus.
class DigitSpace {
 public:
  DigitSpace(unsigned p, unsigned m);

  unsigned p() const noexcept { return p_; }
  unsigned m() const noexcept { return m_; }
  Elem size() const noexcept { return size_; }

  unsigned digit(Elem x, unsigned i) const noexcept { return (x / pow_[i]) % p_; }
  Elem unit(unsigned i) const noexcept { return pow_[i]; }

  Elem add(Elem x, Elem y) const noexcept;
  Elem sub(Elem x, Elem y) const noexcept { return add(x, neg(y)); }
  Elem neg(Elem x) const noexcept;
  Elem scale(unsigned c, Elem x) const noexcept;

  std::vector<unsigned> digits(Elem x) const;
  Elem from_digits(std::span<const unsigned> digits) const;

 private:
  unsigned p_;
  unsigned m_;
  Elem size_;
  std::array<Elem, 32> pow_{};
};

/// K = F_p[x]/(modulus). Immutable after construction; share via Field.
class FieldSpec {
 public:
  unsigned p() const noexcept { return digits_.p(); }
  unsigned m() const noexcept { return digits_.m(); }
  Elem size() const noexcept { return digits_.size(); }
  /// Ascending coefficients, length m + 1, monic.
  const std::vector<unsigned>& modulus() const noexcept { return modulus_; }
  /// Smallest code of multiplicative order p^m - 1.
  Elem primitive() const noexcept { return primitive_; }
  /// The class of x in the quotient ring.
  Elem root() const noexcept { return root_; }
  const DigitSpace& space() const noexcept { return digits_; }

  Elem add(Elem x, Elem y) const noexcept { return digits_.add(x, y); }
  Elem sub(Elem x, Elem y) const noexcept { return digits_.sub(x, y); }
  Elem neg(Elem x) const noexcept { return digits_.neg(x); }
  Elem mul(Elem x, Elem y) const;
  Elem inv(Elem x) const;  // throws ZeroInverse
  /// 0^0 = 1.
  Elem pow(Elem x, std::uint64_t e) const;
  /// x^(p^j), j taken mod m.
  Elem frobenius(Elem x, long j) const;
  std::uint64_t order(Elem x) const;  // multiplicative order, x != 0
  /// Discrete log base primitive(); x != 0.
  std::uint64_t log(Elem x) const;
  Elem exp(std::uint64_t k) const;

  bool same_field(const FieldSpec& other) const noexcept;
  /// Comma-separated digits, lowest power first.
  std::string format(Elem x) const;
  Elem parse(std::string_view text) const;
  /// `p=2 m=4 modulus=1,1,0,0,1`
  std::string describe() const;

 private:
  friend std::shared_ptr<const FieldSpec> make_field(unsigned, unsigned,
                                                     std::optional<std::vector<unsigned>>);
  FieldSpec(unsigned p, unsigned m, std::vector<unsigned> modulus);

  Elem poly_mul(Elem x, Elem y) const;
  Elem slow_pow(Elem x, std::uint64_t e) const;

  DigitSpace digits_;
  std::vector<unsigned> modulus_;
  Elem primitive_ = 1;
  Elem root_ = 0;
  std::vector<Elem> exp_;
  std::vector<std::uint32_t> log_;
};

using Field = std::shared_ptr<const FieldSpec>;

/// Builds F_{p^m}. Without a modulus, picks the smallest monic irreducible
/// polynomial, ordering candidates by their packed lower coefficients.
/// Throws NonPrime, ReducibleModulus, InvalidArgument, TooLarge.
Field make_field(unsigned p, unsigned m, std::optional<std::vector<unsigned>> modulus = std::nullopt);

/// Parses `p=2 m=4 modulus=1,1,0,0,1` (modulus optional).
Field parse_field_description(std::string_view text);

bool is_prime(std::uint64_t n) noexcept;
std::vector<std::uint64_t> prime_factors(std::uint64_t n);
std::vector<unsigned> divisors(unsigned n);
std::uint64_t ipow(std::uint64_t base, unsigned exp);
/// a b mod n without overflow.
std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t n);
/// Trial division by every monic polynomial of degree <= deg/2.
bool is_irreducible(unsigned p, std::span<const unsigned> poly);

/// A field element bound to its field; mixing fields throws FieldMismatch.
class FieldElement {
 public:
  FieldElement(Field field, Elem code);

  const Field& field() const noexcept { return field_; }
  Elem code() const noexcept { return code_; }
  std::vector<unsigned> coeffs() const { return field_->space().digits(code_); }

  FieldElement operator+(const FieldElement& other) const;
  FieldElement operator-(const FieldElement& other) const;
  FieldElement operator*(const FieldElement& other) const;
  FieldElement inv() const;
  FieldElement pow(std::uint64_t e) const;
  FieldElement frobenius(long j) const;

  bool operator==(const FieldElement& other) const noexcept;

 private:
  void check_same(const FieldElement& other) const;

  Field field_;
  Elem code_;
};

enum class FieldOp { Add, Mul, Inv, Pow };

/// Uniform entry point over the four operations. Pow takes its exponent
/// separately; Inv uses only operands[0].
FieldElement field_arith(FieldOp op, std::span<const FieldElement> operands,
                         std::uint64_t exponent = 0);

/// F_{p^d} inside K.
class Subfield {
 public:
  Subfield(Field field, unsigned d);

  unsigned degree() const noexcept { return d_; }
  const Field& field() const noexcept { return field_; }
  /// Sorted codes of the p^d fixed points of x -> x^(p^d).
  const std::vector<Elem>& elements() const noexcept { return elements_; }
  bool contains(Elem x) const { return field_->frobenius(x, d_) == x; }
  /// Sum of x^(p^(d i)) for i < m/d.
  Elem trace_to(Elem x) const;
  /// A generator of the multiplicative group F_{p^d}^*.
  Elem generator() const noexcept { return generator_; }
  /// F_p-basis 1, g, ..., g^(d-1) for g = generator().
  std::vector<Elem> prime_basis() const;

 private:
  Field field_;
  unsigned d_;
  Elem generator_;
  std::vector<Elem> elements_;
};

/// Throws NotADivisor.
Subfield subfield(const Field& field, unsigned d);

/// primitive^((p^m - 1) / (p^d - 1)), without listing the subfield.
/// Throws NotADivisor.
Elem subfield_generator(const FieldSpec& field, unsigned d);
/// 1, g, ..., g^(d-1) for g = subfield_generator(field, d).
std::vector<Elem> subfield_basis(const FieldSpec& field, unsigned d);

/// L = F_{p^lcm(r,m)} together with fixed embeddings of F = F_{p^r} and K.
/// When lcm(r,m) = m, L is K itself; when r = m, F is K itself.
class Compositum {
 public:
  Compositum(Field k, unsigned r);

  const Field& alphabet() const noexcept { return alphabet_; }
  const Field& k() const noexcept { return k_; }
  const Field& big() const noexcept { return big_; }
  unsigned r() const noexcept { return r_; }

  Elem embed_alphabet(Elem x) const { return alphabet_embed_.at(x); }
  Elem embed_k(Elem x) const { return k_embed_.at(x); }

 private:
  Field k_;
  unsigned r_;
  Field alphabet_;
  Field big_;
  std::vector<Elem> alphabet_embed_;
  std::vector<Elem> k_embed_;
};

/// Embedding of `small` into `big` sending the class of x to the smallest-code
/// root of small's modulus in big. Returned as a table indexed by small's codes.
std::vector<Elem> embed_field(const FieldSpec& small, const FieldSpec& big);

}  // namespace aic
