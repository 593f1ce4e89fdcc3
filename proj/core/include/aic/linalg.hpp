#pragma once

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "aic/error.hpp"
#include "aic/finite_field.hpp"

namespace aic {

template <class F>
concept FieldOps = requires(const F& f, Elem a, Elem b) {
  { f.add(a, b) } -> std::convertible_to<Elem>;
  { f.sub(a, b) } -> std::convertible_to<Elem>;
  { f.mul(a, b) } -> std::convertible_to<Elem>;
  { f.inv(a) } -> std::convertible_to<Elem>;
  { f.neg(a) } -> std::convertible_to<Elem>;
};

/// Arithmetic in F_p on residues, for matrices over the prime field.
struct PrimeField {
  unsigned p;

  Elem add(Elem a, Elem b) const noexcept { return (a + b) % p; }
  Elem sub(Elem a, Elem b) const noexcept { return (a + p - b) % p; }
  Elem neg(Elem a) const noexcept { return (p - a) % p; }
  Elem mul(Elem a, Elem b) const noexcept { return static_cast<Elem>((std::uint64_t{a} * b) % p); }
  Elem inv(Elem a) const {
    if (a % p == 0) throw Error(Errc::ZeroInverse, "inverse of zero mod p");
    Elem r = 1;
    Elem base = a % p;
    unsigned e = p - 2;
    while (e > 0) {
      if (e & 1) r = mul(r, base);
      base = mul(base, base);
      e >>= 1;
    }
    return r;
  }
};

/// Dense row-major matrix of field element codes.
struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Elem> data;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0) {}

  Elem& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  Elem at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
};

/// In-place reduced row echelon form; returns the pivot column of each
/// nonzero row, in row order. Rows past the rank are zero afterwards.
template <FieldOps F>
std::vector<std::size_t> rref(const F& field, Matrix& a) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols && row < a.rows; ++col) {
    std::size_t sel = row;
    while (sel < a.rows && a.at(sel, col) == 0) ++sel;
    if (sel == a.rows) continue;
    if (sel != row) {
      for (std::size_t j = 0; j < a.cols; ++j) std::swap(a.at(sel, j), a.at(row, j));
    }
    const Elem scale = field.inv(a.at(row, col));
    for (std::size_t j = col; j < a.cols; ++j) a.at(row, j) = field.mul(a.at(row, j), scale);
    for (std::size_t i = 0; i < a.rows; ++i) {
      if (i == row) continue;
      const Elem c = a.at(i, col);
      if (c == 0) continue;
      for (std::size_t j = col; j < a.cols; ++j) a.at(i, j) = field.sub(a.at(i, j), field.mul(c, a.at(row, j)));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <FieldOps F>
std::size_t rank(const F& field, Matrix a) {
  return rref(field, a).size();
}

/// Basis of {x : a x = 0}, one vector per row of the result.
template <FieldOps F>
Matrix nullspace(const F& field, Matrix a) {
  const auto pivots = rref(field, a);
  std::vector<bool> is_pivot(a.cols, false);
  for (const auto c : pivots) is_pivot[c] = true;
  Matrix out(a.cols - pivots.size(), a.cols);
  std::size_t k = 0;
  for (std::size_t free = 0; free < a.cols; ++free) {
    if (is_pivot[free]) continue;
    out.at(k, free) = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      out.at(k, pivots[i]) = field.neg(a.at(i, free));
    }
    ++k;
  }
  return out;
}

/// Inverse of a square matrix; throws SingularMap.
template <FieldOps F>
Matrix inverse(const F& field, const Matrix& a) {
  const std::size_t n = a.rows;
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, n + i) = 1;
  }
  const auto pivots = rref(field, aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) throw Error(Errc::SingularMap, "matrix is not invertible");
  Matrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out.at(i, j) = aug.at(i, n + j);
  }
  return out;
}

}  // namespace aic
