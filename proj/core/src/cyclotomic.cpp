#include "aic/cyclotomic.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "aic/error.hpp"
#include "aic/finite_field.hpp"

namespace aic {

DefiningSet::DefiningSet(std::initializer_list<std::uint32_t> values) : DefiningSet(std::vector(values)) {}

DefiningSet::DefiningSet(std::vector<std::uint32_t> values) : values_(std::move(values)) {
  std::sort(values_.begin(), values_.end());
  values_.erase(std::unique(values_.begin(), values_.end()), values_.end());
}

DefiningSet DefiningSet::range(std::uint32_t lo, std::uint32_t hi) {
  std::vector<std::uint32_t> v;
  for (std::uint32_t i = lo; i <= hi; ++i) v.push_back(i);
  return DefiningSet(std::move(v));
}

DefiningSet DefiningSet::parse(std::string_view text) {
  std::vector<std::uint32_t> v;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view tok = text.substr(pos, comma - pos);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    std::uint32_t value = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size()) {
      throw Error(Errc::InvalidArgument, "malformed defining set '" + std::string(text) + "'");
    }
    v.push_back(value);
    pos = comma + 1;
  }
  return DefiningSet(std::move(v));
}

bool DefiningSet::contains(std::uint32_t i) const { return std::binary_search(values_.begin(), values_.end(), i); }

std::string DefiningSet::format() const {
  std::string out;
  for (std::size_t k = 0; k < values_.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(values_[k]);
  }
  return out;
}

std::uint64_t PadicExpansion::value() const {
  std::uint64_t v = 0;
  for (std::size_t i = digits.size(); i-- > 0;) v = v * base + digits[i];
  return v;
}

PadicExpansion padic_expansion(std::uint64_t x, unsigned p) {
  if (p < 2) throw Error(Errc::InvalidArgument, "base must be >= 2");
  PadicExpansion e{p, {}};
  do {
    e.digits.push_back(static_cast<unsigned>(x % p));
    x /= p;
  } while (x > 0);
  return e;
}

bool preceq(std::uint64_t s, std::uint64_t t, unsigned p) {
  while (s > 0) {
    if (s % p > t % p) return false;
    s /= p;
    t /= p;
  }
  return true;
}

CyclotomicClass cyclotomic_class(std::uint64_t i, std::uint64_t q, std::uint64_t n) {
  if (n == 0 || i >= n) throw Error(Errc::InvalidArgument, "residue out of range");
  if (std::gcd(q, n) != 1) {
    throw Error(Errc::NonCoprimeMultiplier, std::to_string(q) + " is not coprime to " + std::to_string(n));
  }
  CyclotomicClass c{{}, q, n};
  std::uint64_t x = i;
  do {
    c.members.push_back(x);
    x = mulmod(x, q, n);
  } while (x != i);
  std::sort(c.members.begin(), c.members.end());
  return c;
}

std::vector<CyclotomicClass> cyclotomic_classes(std::uint64_t q, std::uint64_t n) {
  std::vector<CyclotomicClass> out;
  std::vector<bool> seen(n, false);
  for (std::uint64_t i = 0; i < n; ++i) {
    if (seen[i]) continue;
    out.push_back(cyclotomic_class(i, q, n));
    for (const auto x : out.back().members) seen[x] = true;
  }
  return out;
}

bool is_union_of_classes(const DefiningSet& d, std::uint64_t q, std::uint64_t n) {
  for (const auto i : d) {
    if (i > n) throw Error(Errc::InvalidArgument, "exponent " + std::to_string(i) + " exceeds " + std::to_string(n));
    if (i == n) continue;
    const auto next = static_cast<std::uint32_t>(mulmod(i, q, n));
    if (!d.contains(next)) return false;
  }
  return true;
}

unsigned minimal_b(const DefiningSet& d, unsigned p, unsigned m) {
  const std::uint64_t n = ipow(p, m) - 1;
  for (const auto div : divisors(m)) {
    if (is_union_of_classes(d, ipow(p, div), n)) return div;
  }
  return m;
}

}  // namespace aic
