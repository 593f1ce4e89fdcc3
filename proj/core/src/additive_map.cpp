#include "aic/additive_map.hpp"

#include <algorithm>

#include "aic/error.hpp"
#include "aic/linalg.hpp"

namespace aic {

namespace {

unsigned top_digit(const DigitSpace& s, Elem x) {
  for (unsigned i = s.m(); i-- > 0;) {
    if (s.digit(x, i) != 0) return i;
  }
  return s.m();
}

Matrix digit_matrix(unsigned m, std::span<const Elem> columns, const DigitSpace& s) {
  Matrix a(m, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    for (unsigned i = 0; i < m; ++i) a.at(i, j) = s.digit(columns[j], i);
  }
  return a;
}

}  // namespace

Subspace::Subspace(unsigned p, unsigned m) : space_(p, m) {}

Subspace Subspace::span(unsigned p, unsigned m, std::span<const Elem> vectors) {
  Subspace s(p, m);
  for (const auto v : vectors) s.insert(v);
  return s;
}

Subspace Subspace::whole(unsigned p, unsigned m) {
  Subspace s(p, m);
  for (unsigned i = 0; i < m; ++i) s.insert(s.space_.unit(i));
  return s;
}

Elem Subspace::reduce(Elem x) const {
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    const unsigned c = space_.digit(x, pivots_[k]);
    if (c != 0) x = space_.sub(x, space_.scale(c, basis_[k]));
  }
  return x;
}

bool Subspace::insert(Elem x) {
  Elem r = reduce(x);
  if (r == 0) return false;
  const unsigned piv = top_digit(space_, r);
  const PrimeField fp{space_.p()};
  r = space_.scale(fp.inv(space_.digit(r, piv)), r);
  for (auto& b : basis_) {
    const unsigned c = space_.digit(b, piv);
    if (c != 0) b = space_.sub(b, space_.scale(c, r));
  }
  const auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), piv) - pivots_.begin();
  pivots_.insert(pivots_.begin() + pos, piv);
  basis_.insert(basis_.begin() + pos, r);
  return true;
}

std::vector<Elem> Subspace::elements() const {
  std::vector<Elem> out{0};
  for (const auto b : basis_) {
    const std::size_t n = out.size();
    for (unsigned c = 1; c < space_.p(); ++c) {
      const Elem cb = space_.scale(c, b);
      for (std::size_t i = 0; i < n; ++i) out.push_back(space_.add(out[i], cb));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Subspace Subspace::sum(const Subspace& other) const {
  Subspace s = *this;
  for (const auto b : other.basis_) s.insert(b);
  return s;
}

Subspace Subspace::intersection(const Subspace& other) const {
  const Subspace& small = dim() <= other.dim() ? *this : other;
  const Subspace& large = dim() <= other.dim() ? other : *this;
  Subspace s(space_.p(), space_.m());
  for (const auto x : small.elements()) {
    if (large.contains(x)) s.insert(x);
  }
  return s;
}

bool Subspace::is_subspace_of(const Subspace& other) const {
  return std::all_of(basis_.begin(), basis_.end(), [&](Elem b) { return other.contains(b); });
}

std::vector<Elem> Subspace::complement_in(const Subspace& super) const {
  Subspace acc = *this;
  std::vector<Elem> candidates = super.basis();
  std::sort(candidates.begin(), candidates.end());
  std::vector<Elem> out;
  for (const auto b : candidates) {
    if (acc.insert(b)) out.push_back(b);
  }
  return out;
}

// ---------------------------------------------------------------------------

AdditiveMap::AdditiveMap(unsigned p, unsigned m, std::vector<Elem> columns)
    : p_(p), m_(m), cols_(std::move(columns)) {
  if (cols_.size() != m_) throw Error(Errc::InvalidArgument, "additive map needs m columns");
  const Elem size = static_cast<Elem>(ipow(p, m));
  for (const auto c : cols_) {
    if (c >= size) throw Error(Errc::InvalidArgument, "column out of range");
  }
}

AdditiveMap AdditiveMap::identity(unsigned p, unsigned m) {
  const DigitSpace s(p, m);
  std::vector<Elem> cols(m);
  for (unsigned j = 0; j < m; ++j) cols[j] = s.unit(j);
  return {p, m, std::move(cols)};
}

AdditiveMap AdditiveMap::zero(unsigned p, unsigned m) { return {p, m, std::vector<Elem>(m, 0)}; }

AdditiveMap AdditiveMap::from_function(const DigitSpace& space, const std::function<Elem(Elem)>& fn) {
  std::vector<Elem> cols(space.m());
  for (unsigned j = 0; j < space.m(); ++j) cols[j] = fn(space.unit(j));
  return {space.p(), space.m(), std::move(cols)};
}

AdditiveMap AdditiveMap::from_rows(unsigned p, const std::vector<std::vector<unsigned>>& rows) {
  const auto m = static_cast<unsigned>(rows.size());
  if (m == 0) throw Error(Errc::InvalidArgument, "empty matrix");
  const DigitSpace s(p, m);
  std::vector<Elem> cols(m, 0);
  for (unsigned i = 0; i < m; ++i) {
    if (rows[i].size() != m) throw Error(Errc::InvalidArgument, "matrix must be square");
    for (unsigned j = 0; j < m; ++j) {
      if (rows[i][j] >= p) throw Error(Errc::InvalidArgument, "matrix entry out of range");
      cols[j] += rows[i][j] * s.unit(i);
    }
  }
  return {p, m, std::move(cols)};
}

AdditiveMap AdditiveMap::from_basis_images(unsigned p, unsigned m, std::span<const Elem> basis,
                                           std::span<const Elem> images) {
  if (basis.size() != m || images.size() != m) throw Error(Errc::InvalidArgument, "need m basis vectors and images");
  const DigitSpace s(p, m);
  const PrimeField fp{p};
  const Matrix binv = aic::inverse(fp, digit_matrix(m, basis, s));
  std::vector<Elem> cols(m, 0);
  for (unsigned j = 0; j < m; ++j) {
    Elem acc = 0;
    for (unsigned k = 0; k < m; ++k) acc = s.add(acc, s.scale(binv.at(k, j), images[k]));
    cols[j] = acc;
  }
  return {p, m, std::move(cols)};
}

unsigned AdditiveMap::entry(unsigned row, unsigned col) const {
  return static_cast<unsigned>((cols_.at(col) / ipow(p_, row)) % p_);
}

std::vector<std::vector<unsigned>> AdditiveMap::rows() const {
  std::vector<std::vector<unsigned>> out(m_, std::vector<unsigned>(m_));
  for (unsigned i = 0; i < m_; ++i) {
    for (unsigned j = 0; j < m_; ++j) out[i][j] = entry(i, j);
  }
  return out;
}

Elem AdditiveMap::operator()(Elem x) const {
  Elem acc = 0;
  if (p_ == 2) {
    for (unsigned j = 0; x != 0; ++j, x >>= 1) {
      if (x & 1) acc ^= cols_[j];
    }
    return acc;
  }
  const DigitSpace s(p_, m_);
  for (unsigned j = 0; x != 0; ++j, x /= p_) {
    const unsigned c = x % p_;
    if (c != 0) acc = s.add(acc, s.scale(c, cols_[j]));
  }
  return acc;
}

AdditiveMap AdditiveMap::operator*(const AdditiveMap& other) const {
  std::vector<Elem> cols(m_);
  for (unsigned j = 0; j < m_; ++j) cols[j] = (*this)(other.cols_[j]);
  return {p_, m_, std::move(cols)};
}

AdditiveMap AdditiveMap::operator+(const AdditiveMap& other) const {
  const DigitSpace s(p_, m_);
  std::vector<Elem> cols(m_);
  for (unsigned j = 0; j < m_; ++j) cols[j] = s.add(cols_[j], other.cols_[j]);
  return {p_, m_, std::move(cols)};
}

AdditiveMap AdditiveMap::operator-(const AdditiveMap& other) const {
  const DigitSpace s(p_, m_);
  std::vector<Elem> cols(m_);
  for (unsigned j = 0; j < m_; ++j) cols[j] = s.sub(cols_[j], other.cols_[j]);
  return {p_, m_, std::move(cols)};
}

bool AdditiveMap::is_zero() const noexcept {
  return std::all_of(cols_.begin(), cols_.end(), [](Elem c) { return c == 0; });
}

bool AdditiveMap::is_identity() const noexcept {
  Elem unit = 1;
  for (unsigned j = 0; j < m_; ++j, unit *= p_) {
    if (cols_[j] != unit) return false;
  }
  return true;
}

unsigned AdditiveMap::rank() const { return image().dim(); }

AdditiveMap AdditiveMap::inverse() const {
  const DigitSpace s(p_, m_);
  const PrimeField fp{p_};
  const Matrix inv = aic::inverse(fp, digit_matrix(m_, cols_, s));
  std::vector<Elem> cols(m_, 0);
  for (unsigned j = 0; j < m_; ++j) {
    for (unsigned i = 0; i < m_; ++i) cols[j] += inv.at(i, j) * s.unit(i);
  }
  return {p_, m_, std::move(cols)};
}

Subspace AdditiveMap::kernel() const {
  const DigitSpace s(p_, m_);
  const PrimeField fp{p_};
  const Matrix null = nullspace(fp, digit_matrix(m_, cols_, s));
  Subspace k(p_, m_);
  for (std::size_t r = 0; r < null.rows; ++r) {
    Elem v = 0;
    for (unsigned j = 0; j < m_; ++j) v += null.at(r, j) * s.unit(j);
    k.insert(v);
  }
  return k;
}

Subspace AdditiveMap::image() const { return Subspace::span(p_, m_, cols_); }

std::size_t AdditiveMap::hash() const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (const auto c : cols_) h = (h ^ c) * 1099511628211ull;
  return h;
}

AdditiveMap mul_matrix(const FieldSpec& field, Elem gamma) {
  return AdditiveMap::from_function(field.space(), [&](Elem y) { return field.mul(gamma, y); });
}

AdditiveMap frobenius_map(const FieldSpec& field, long j) {
  return AdditiveMap::from_function(field.space(), [&](Elem y) { return field.frobenius(y, j); });
}

AdditiveMap scaled(const FieldSpec& field, Elem c, const AdditiveMap& f) {
  std::vector<Elem> cols(f.m());
  for (unsigned j = 0; j < f.m(); ++j) cols[j] = field.mul(c, f.columns()[j]);
  return {f.p(), f.m(), std::move(cols)};
}

}  // namespace aic
