#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "aic/finite_field.hpp"

namespace aic {

/// An F_p-subspace of F_p^m kept in reduced echelon form (pivot = highest
/// nonzero digit, pivot coefficient 1).
class Subspace {
 public:
  Subspace(unsigned p, unsigned m);
  static Subspace span(unsigned p, unsigned m, std::span<const Elem> vectors);
  static Subspace whole(unsigned p, unsigned m);

  unsigned dim() const noexcept { return static_cast<unsigned>(basis_.size()); }
  const std::vector<Elem>& basis() const noexcept { return basis_; }
  const DigitSpace& space() const noexcept { return space_; }

  /// Residue of x after clearing every pivot digit.
  Elem reduce(Elem x) const;
  bool contains(Elem x) const { return reduce(x) == 0; }
  /// Adds x to the span; returns false if it was already there.
  bool insert(Elem x);

  /// All p^dim members, sorted.
  std::vector<Elem> elements() const;
  Subspace sum(const Subspace& other) const;
  Subspace intersection(const Subspace& other) const;
  bool is_subspace_of(const Subspace& other) const;
  /// Basis of a complement of *this inside `super`: super's echelon basis
  /// vectors, taken in increasing code order, are kept when independent.
  std::vector<Elem> complement_in(const Subspace& super) const;

  bool operator==(const Subspace& other) const noexcept { return basis_ == other.basis_; }

 private:
  DigitSpace space_;
  std::vector<Elem> basis_;  // sorted by pivot
  std::vector<unsigned> pivots_;
};

/// An F_p-linear endomorphism of K = F_p^m. Column j is the image of t^j.
class AdditiveMap {
 public:
  AdditiveMap(unsigned p, unsigned m, std::vector<Elem> columns);

  static AdditiveMap identity(unsigned p, unsigned m);
  static AdditiveMap zero(unsigned p, unsigned m);
  /// Columns from images of the power basis under an additive function.
  static AdditiveMap from_function(const DigitSpace& space, const std::function<Elem(Elem)>& fn);
  /// Row-major digit matrix (entry (i,j) = digit i of the image of t^j).
  static AdditiveMap from_rows(unsigned p, const std::vector<std::vector<unsigned>>& rows);
  /// The unique additive map sending basis[k] to images[k]; basis must be an
  /// F_p-basis of K. Throws SingularMap otherwise.
  static AdditiveMap from_basis_images(unsigned p, unsigned m, std::span<const Elem> basis,
                                       std::span<const Elem> images);

  unsigned p() const noexcept { return p_; }
  unsigned m() const noexcept { return m_; }
  const std::vector<Elem>& columns() const noexcept { return cols_; }
  unsigned entry(unsigned row, unsigned col) const;
  std::vector<std::vector<unsigned>> rows() const;

  Elem operator()(Elem x) const;
  /// Composition: (f * g)(x) = f(g(x)).
  AdditiveMap operator*(const AdditiveMap& other) const;
  AdditiveMap operator+(const AdditiveMap& other) const;
  AdditiveMap operator-(const AdditiveMap& other) const;

  bool is_zero() const noexcept;
  bool is_identity() const noexcept;
  unsigned rank() const;
  bool is_invertible() const { return rank() == m_; }
  AdditiveMap inverse() const;  // throws SingularMap
  Subspace kernel() const;
  Subspace image() const;

  bool operator==(const AdditiveMap& other) const noexcept = default;
  std::size_t hash() const noexcept;

 private:
  unsigned p_;
  unsigned m_;
  std::vector<Elem> cols_;
};

struct AdditiveMapHash {
  std::size_t operator()(const AdditiveMap& f) const noexcept { return f.hash(); }
};

/// y -> gamma * y.
AdditiveMap mul_matrix(const FieldSpec& field, Elem gamma);
/// y -> y^(p^j).
AdditiveMap frobenius_map(const FieldSpec& field, long j);
/// y -> c * f(y).
AdditiveMap scaled(const FieldSpec& field, Elem c, const AdditiveMap& f);

}  // namespace aic
