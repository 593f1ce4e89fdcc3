#include "aic/finite_field.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

#include "aic/error.hpp"

namespace aic {

namespace {

constexpr Elem kMaxFieldSize = Elem{1} << 30;
constexpr Elem kMaxTableSize = Elem{1} << 20;

using Poly = std::vector<unsigned>;  // ascending coefficients mod p

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo the monic polynomial b.
Poly poly_rem(Poly a, const Poly& b, unsigned p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  while (a.size() >= b.size()) {
    const unsigned c = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) {
      a[shift + i] = (a[shift + i] + (p - (c * b[i]) % p)) % p;
    }
    trim(a);
  }
  return a;
}

__extension__ using Wide = unsigned __int128;

}  // namespace

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t n) {
  return static_cast<std::uint64_t>((static_cast<Wide>(a) * b) % n);
}

namespace {

std::vector<unsigned> parse_uint_list(std::string_view text, const char* what) {
  std::vector<unsigned> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = text.find(',', pos);
    const std::string_view tok =
        text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    unsigned value = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size()) {
      throw Error(Errc::InvalidArgument, std::string("malformed ") + what + ": '" + std::string(text) + "'");
    }
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::vector<unsigned> divisors(unsigned n) {
  std::vector<unsigned> out;
  for (unsigned d = 1; d <= n; ++d) {
    if (n % d == 0) out.push_back(d);
  }
  return out;
}

std::uint64_t ipow(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

bool is_irreducible(unsigned p, std::span<const unsigned> poly) {
  Poly f(poly.begin(), poly.end());
  trim(f);
  if (f.size() < 2) return false;
  const std::size_t deg = f.size() - 1;
  if (deg == 1) return true;
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    const std::uint64_t count = ipow(p, static_cast<unsigned>(d));
    for (std::uint64_t code = 0; code < count; ++code) {
      Poly g(d + 1, 0);
      std::uint64_t c = code;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = static_cast<unsigned>(c % p);
        c /= p;
      }
      g[d] = 1;
      if (poly_rem(f, g, p).empty()) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------

DigitSpace::DigitSpace(unsigned p, unsigned m) : p_(p), m_(m) {
  if (m >= pow_.size()) throw Error(Errc::TooLarge, "extension degree too large");
  pow_[0] = 1;
  for (unsigned i = 1; i <= m; ++i) pow_[i] = pow_[i - 1] * p;
  size_ = pow_[m];
}

Elem DigitSpace::add(Elem x, Elem y) const noexcept {
  if (p_ == 2) return x ^ y;
  Elem r = 0;
  for (unsigned i = 0; i < m_; ++i) {
    r += ((x % p_ + y % p_) % p_) * pow_[i];
    x /= p_;
    y /= p_;
  }
  return r;
}

Elem DigitSpace::neg(Elem x) const noexcept {
  if (p_ == 2) return x;
  Elem r = 0;
  for (unsigned i = 0; i < m_; ++i) {
    r += ((p_ - x % p_) % p_) * pow_[i];
    x /= p_;
  }
  return r;
}

Elem DigitSpace::scale(unsigned c, Elem x) const noexcept {
  c %= p_;
  if (c == 0) return 0;
  if (c == 1) return x;
  Elem r = 0;
  for (unsigned i = 0; i < m_; ++i) {
    r += ((x % p_) * c % p_) * pow_[i];
    x /= p_;
  }
  return r;
}

std::vector<unsigned> DigitSpace::digits(Elem x) const {
  std::vector<unsigned> out(m_);
  for (unsigned i = 0; i < m_; ++i) {
    out[i] = x % p_;
    x /= p_;
  }
  return out;
}

Elem DigitSpace::from_digits(std::span<const unsigned> digits) const {
  Elem r = 0;
  for (std::size_t i = 0; i < digits.size() && i < m_; ++i) r += (digits[i] % p_) * pow_[i];
  return r;
}

// ---------------------------------------------------------------------------

FieldSpec::FieldSpec(unsigned p, unsigned m, std::vector<unsigned> modulus)
    : digits_(p, m), modulus_(std::move(modulus)) {
  root_ = m >= 2 ? Elem{p} : Elem{(p - modulus_[0] % p) % p};

  const Elem n = size() - 1;
  if (n == 1) {
    primitive_ = 1;
  } else {
    const auto factors = prime_factors(n);
    for (Elem g = 1; g < size(); ++g) {
      bool ok = slow_pow(g, n) == 1;
      for (const auto l : factors) {
        if (!ok) break;
        ok = slow_pow(g, n / l) != 1;
      }
      if (ok) {
        primitive_ = g;
        break;
      }
    }
  }

  if (size() <= kMaxTableSize) {
    exp_.resize(n);
    log_.assign(size(), 0);
    Elem x = 1;
    for (Elem k = 0; k < n; ++k) {
      exp_[k] = x;
      log_[x] = k;
      x = poly_mul(x, primitive_);
    }
  }
}

Elem FieldSpec::poly_mul(Elem x, Elem y) const {
  const unsigned p = this->p();
  const unsigned m = this->m();
  const auto a = digits_.digits(x);
  const auto b = digits_.digits(y);
  Poly prod(2 * m - 1, 0);
  for (unsigned i = 0; i < m; ++i) {
    if (a[i] == 0) continue;
    for (unsigned j = 0; j < m; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  }
  const Poly rem = poly_rem(prod, modulus_, p);
  return digits_.from_digits(rem);
}

Elem FieldSpec::slow_pow(Elem x, std::uint64_t e) const {
  Elem result = 1;
  while (e > 0) {
    if (e & 1) result = poly_mul(result, x);
    x = poly_mul(x, x);
    e >>= 1;
  }
  return result;
}

Elem FieldSpec::mul(Elem x, Elem y) const {
  if (x == 0 || y == 0) return 0;
  if (exp_.empty()) return poly_mul(x, y);
  const std::uint64_t n = size() - 1;
  return exp_[(std::uint64_t{log_[x]} + log_[y]) % n];
}

Elem FieldSpec::inv(Elem x) const {
  if (x == 0) throw Error(Errc::ZeroInverse, "inverse of zero in " + describe());
  const std::uint64_t n = size() - 1;
  if (exp_.empty()) return slow_pow(x, n - 1);
  return exp_[(n - log_[x]) % n];
}

Elem FieldSpec::pow(Elem x, std::uint64_t e) const {
  if (e == 0) return 1;
  if (x == 0) return 0;
  const std::uint64_t n = size() - 1;
  if (exp_.empty()) return slow_pow(x, e % n == 0 ? n : e % n);
  return exp_[mulmod(log_[x], e % n, n)];
}

Elem FieldSpec::frobenius(Elem x, long j) const {
  const long m = static_cast<long>(this->m());
  const unsigned jj = static_cast<unsigned>(((j % m) + m) % m);
  if (x == 0 || jj == 0) return x;
  const std::uint64_t n = size() - 1;
  std::uint64_t e = 1;
  for (unsigned i = 0; i < jj; ++i) e = mulmod(e, p(), n);
  return pow(x, e == 0 ? n : e);
}

std::uint64_t FieldSpec::order(Elem x) const {
  if (x == 0) throw Error(Errc::ZeroInverse, "order of zero");
  std::uint64_t ord = size() - 1;
  for (const auto l : prime_factors(ord)) {
    while (ord % l == 0 && pow(x, ord / l) == 1) ord /= l;
  }
  return ord;
}

std::uint64_t FieldSpec::log(Elem x) const {
  if (x == 0) throw Error(Errc::ZeroInverse, "log of zero");
  if (!log_.empty()) return log_[x];
  Elem y = 1;
  for (std::uint64_t k = 0; k + 1 < size(); ++k) {
    if (y == x) return k;
    y = poly_mul(y, primitive_);
  }
  throw Error(Errc::InternalInconsistency, "discrete log not found");
}

Elem FieldSpec::exp(std::uint64_t k) const {
  const std::uint64_t n = size() - 1;
  if (!exp_.empty()) return exp_[k % n];
  return slow_pow(primitive_, k % n);
}

bool FieldSpec::same_field(const FieldSpec& other) const noexcept {
  return this == &other || (p() == other.p() && m() == other.m() && modulus_ == other.modulus_);
}

std::string FieldSpec::format(Elem x) const {
  std::string out;
  const auto d = digits_.digits(x);
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(d[i]);
  }
  return out;
}

Elem FieldSpec::parse(std::string_view text) const {
  const auto d = parse_uint_list(text, "field element");
  if (d.size() > m()) throw Error(Errc::InvalidArgument, "too many digits in element '" + std::string(text) + "'");
  for (const auto c : d) {
    if (c >= p()) throw Error(Errc::InvalidArgument, "digit out of range in element '" + std::string(text) + "'");
  }
  return digits_.from_digits(d);
}

std::string FieldSpec::describe() const {
  std::string out = "p=" + std::to_string(p()) + " m=" + std::to_string(m()) + " modulus=";
  for (std::size_t i = 0; i < modulus_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(modulus_[i]);
  }
  return out;
}

// ---------------------------------------------------------------------------

Field make_field(unsigned p, unsigned m, std::optional<std::vector<unsigned>> modulus) {
  if (!is_prime(p)) throw Error(Errc::NonPrime, std::to_string(p) + " is not prime");
  if (m == 0) throw Error(Errc::InvalidArgument, "extension degree must be >= 1");
  if (ipow(p, 1) > kMaxFieldSize || m > 30 || ipow(p, m) > kMaxFieldSize) {
    throw Error(Errc::TooLarge, "field of order " + std::to_string(p) + "^" + std::to_string(m));
  }
  std::vector<unsigned> poly;
  if (modulus) {
    poly = std::move(*modulus);
    if (poly.size() != m + 1 || poly.back() != 1) {
      throw Error(Errc::InvalidArgument, "modulus must be monic of degree " + std::to_string(m));
    }
    for (const auto c : poly) {
      if (c >= p) throw Error(Errc::InvalidArgument, "modulus coefficient out of range");
    }
    if (!is_irreducible(p, poly)) throw Error(Errc::ReducibleModulus, "modulus is reducible over F_" + std::to_string(p));
  } else {
    const std::uint64_t count = ipow(p, m);
    for (std::uint64_t code = 0; code < count; ++code) {
      std::vector<unsigned> cand(m + 1, 0);
      std::uint64_t c = code;
      for (unsigned i = 0; i < m; ++i) {
        cand[i] = static_cast<unsigned>(c % p);
        c /= p;
      }
      cand[m] = 1;
      if (is_irreducible(p, cand)) {
        poly = std::move(cand);
        break;
      }
    }
  }
  return Field(new FieldSpec(p, m, std::move(poly)));
}

Field parse_field_description(std::string_view text) {
  std::optional<unsigned> p, m;
  std::optional<std::vector<unsigned>> modulus;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    const auto eq = tok.find('=');
    if (eq == std::string::npos) throw Error(Errc::InvalidArgument, "expected key=value, got '" + tok + "'");
    const std::string key = tok.substr(0, eq);
    const std::string value = tok.substr(eq + 1);
    if (key == "p" || key == "m") {
      const auto v = parse_uint_list(value, key.c_str());
      if (v.size() != 1) throw Error(Errc::InvalidArgument, "bad value for " + key);
      (key == "p" ? p : m) = v[0];
    } else if (key == "modulus") {
      modulus = parse_uint_list(value, "modulus");
    } else {
      throw Error(Errc::InvalidArgument, "unknown key '" + key + "' in field description");
    }
  }
  if (!p || !m) throw Error(Errc::InvalidArgument, "field description needs p and m");
  return make_field(*p, *m, std::move(modulus));
}

// ---------------------------------------------------------------------------

FieldElement::FieldElement(Field field, Elem code) : field_(std::move(field)), code_(code) {
  if (!field_ || code_ >= field_->size()) throw Error(Errc::InvalidArgument, "element code out of range");
}

void FieldElement::check_same(const FieldElement& other) const {
  if (!field_->same_field(*other.field_)) {
    throw Error(Errc::FieldMismatch, field_->describe() + " vs " + other.field_->describe());
  }
}

FieldElement FieldElement::operator+(const FieldElement& other) const {
  check_same(other);
  return {field_, field_->add(code_, other.code_)};
}

FieldElement FieldElement::operator-(const FieldElement& other) const {
  check_same(other);
  return {field_, field_->sub(code_, other.code_)};
}

FieldElement FieldElement::operator*(const FieldElement& other) const {
  check_same(other);
  return {field_, field_->mul(code_, other.code_)};
}

FieldElement FieldElement::inv() const { return {field_, field_->inv(code_)}; }

FieldElement FieldElement::pow(std::uint64_t e) const { return {field_, field_->pow(code_, e)}; }

FieldElement FieldElement::frobenius(long j) const { return {field_, field_->frobenius(code_, j)}; }

bool FieldElement::operator==(const FieldElement& other) const noexcept {
  return code_ == other.code_ && field_->same_field(*other.field_);
}

FieldElement field_arith(FieldOp op, std::span<const FieldElement> operands, std::uint64_t exponent) {
  const std::size_t need = (op == FieldOp::Add || op == FieldOp::Mul) ? 2 : 1;
  if (operands.size() != need) throw Error(Errc::InvalidArgument, "wrong operand count");
  switch (op) {
    case FieldOp::Add: return operands[0] + operands[1];
    case FieldOp::Mul: return operands[0] * operands[1];
    case FieldOp::Inv: return operands[0].inv();
    case FieldOp::Pow: return operands[0].pow(exponent);
  }
  throw Error(Errc::InvalidArgument, "unknown field operation");
}

// ---------------------------------------------------------------------------

Subfield::Subfield(Field field, unsigned d) : field_(std::move(field)), d_(d) {
  const unsigned m = field_->m();
  if (d == 0 || m % d != 0) {
    throw Error(Errc::NotADivisor, std::to_string(d) + " does not divide " + std::to_string(m));
  }
  const std::uint64_t n = field_->size() - 1;
  const std::uint64_t sub_n = ipow(field_->p(), d) - 1;
  generator_ = field_->pow(field_->primitive(), n / sub_n);
  elements_.push_back(0);
  Elem x = 1;
  for (std::uint64_t k = 0; k < sub_n; ++k) {
    elements_.push_back(x);
    x = field_->mul(x, generator_);
  }
  std::sort(elements_.begin(), elements_.end());
}

Elem Subfield::trace_to(Elem x) const {
  Elem sum = 0;
  const unsigned steps = field_->m() / d_;
  for (unsigned i = 0; i < steps; ++i) sum = field_->add(sum, field_->frobenius(x, static_cast<long>(d_ * i)));
  return sum;
}

std::vector<Elem> Subfield::prime_basis() const {
  std::vector<Elem> out;
  Elem x = 1;
  for (unsigned i = 0; i < d_; ++i) {
    out.push_back(x);
    x = field_->mul(x, generator_);
  }
  return out;
}

Subfield subfield(const Field& field, unsigned d) { return Subfield(field, d); }

Elem subfield_generator(const FieldSpec& field, unsigned d) {
  if (d == 0 || field.m() % d != 0) {
    throw Error(Errc::NotADivisor, std::to_string(d) + " does not divide " + std::to_string(field.m()));
  }
  return field.pow(field.primitive(), (field.size() - 1) / (ipow(field.p(), d) - 1));
}

std::vector<Elem> subfield_basis(const FieldSpec& field, unsigned d) {
  const Elem g = subfield_generator(field, d);
  std::vector<Elem> out;
  Elem x = 1;
  for (unsigned i = 0; i < d; ++i) {
    out.push_back(x);
    x = field.mul(x, g);
  }
  return out;
}

// ---------------------------------------------------------------------------

std::vector<Elem> embed_field(const FieldSpec& small, const FieldSpec& big) {
  if (small.p() != big.p() || big.m() % small.m() != 0) {
    throw Error(Errc::FieldMismatch, "cannot embed " + small.describe() + " into " + big.describe());
  }
  const auto& mod = small.modulus();
  Elem root = 0;
  bool found = false;
  for (Elem z = 0; z < big.size() && !found; ++z) {
    Elem acc = 0;
    for (std::size_t i = mod.size(); i-- > 0;) acc = big.add(big.mul(acc, z), mod[i]);
    if (acc == 0) {
      root = z;
      found = true;
    }
  }
  if (!found) throw Error(Errc::InternalInconsistency, "no root of subfield modulus");
  std::vector<Elem> powers(small.m());
  Elem x = 1;
  for (unsigned i = 0; i < small.m(); ++i) {
    powers[i] = x;
    x = big.mul(x, root);
  }
  std::vector<Elem> table(small.size());
  for (Elem c = 0; c < small.size(); ++c) {
    Elem acc = 0;
    for (unsigned i = 0; i < small.m(); ++i) {
      acc = big.add(acc, big.space().scale(small.space().digit(c, i), powers[i]));
    }
    table[c] = acc;
  }
  return table;
}

Compositum::Compositum(Field k, unsigned r) : k_(std::move(k)), r_(r) {
  if (r == 0) throw Error(Errc::InvalidArgument, "alphabet exponent r must be >= 1");
  const unsigned m = k_->m();
  const unsigned l = std::lcm(r, m);
  alphabet_ = r == m ? k_ : make_field(k_->p(), r);
  big_ = l == m ? k_ : make_field(k_->p(), l);

  auto identity = [](Elem size) {
    std::vector<Elem> t(size);
    std::iota(t.begin(), t.end(), Elem{0});
    return t;
  };
  alphabet_embed_ = alphabet_ == big_ ? identity(alphabet_->size()) : embed_field(*alphabet_, *big_);
  k_embed_ = k_ == big_ ? identity(k_->size()) : embed_field(*k_, *big_);
}

}  // namespace aic
