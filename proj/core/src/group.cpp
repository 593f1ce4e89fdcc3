#include "aic/group.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "aic/error.hpp"
#include "aic/finite_field.hpp"

namespace aic {

CayleyTable::CayleyTable(std::size_t order, std::vector<std::uint32_t> table)
    : n_(order), table_(std::move(table)), inverse_(order, 0) {
  if (n_ == 0 || table_.size() != n_ * n_) throw Error(Errc::InvalidArgument, "table size must be order^2");
  for (const auto x : table_) {
    if (x >= n_) throw Error(Errc::InvalidArgument, "table entry out of range");
  }
  bool found = false;
  for (std::uint32_t e = 0; e < n_ && !found; ++e) {
    bool ok = true;
    for (std::uint32_t i = 0; i < n_ && ok; ++i) ok = mul(e, i) == i && mul(i, e) == i;
    if (ok) {
      identity_ = e;
      found = true;
    }
  }
  if (!found) throw Error(Errc::InvalidArgument, "table has no identity");
  for (std::uint32_t i = 0; i < n_; ++i) {
    bool ok = false;
    for (std::uint32_t j = 0; j < n_; ++j) {
      if (mul(i, j) == identity_ && mul(j, i) == identity_) {
        inverse_[i] = j;
        ok = true;
        break;
      }
    }
    has_inverses_ = has_inverses_ && ok;
  }
}

std::uint64_t CayleyTable::element_order(std::uint32_t i) const {
  std::uint64_t k = 1;
  for (std::uint32_t x = i; x != identity_; x = mul(x, i)) {
    if (++k > n_) throw Error(Errc::InvalidArgument, "element of infinite order in table");
  }
  return k;
}

bool CayleyTable::is_abelian() const noexcept {
  for (std::uint32_t i = 0; i < n_; ++i) {
    for (std::uint32_t j = i + 1; j < n_; ++j) {
      if (mul(i, j) != mul(j, i)) return false;
    }
  }
  return true;
}

bool CayleyTable::is_associative() const {
  for (std::uint32_t i = 0; i < n_; ++i) {
    for (std::uint32_t j = 0; j < n_; ++j) {
      const auto ij = mul(i, j);
      for (std::uint32_t k = 0; k < n_; ++k) {
        if (mul(ij, k) != mul(i, mul(j, k))) return false;
      }
    }
  }
  return true;
}

std::vector<std::uint32_t> CayleyTable::generated(const std::vector<std::uint32_t>& gens) const {
  std::vector<bool> in(n_, false);
  std::vector<std::uint32_t> out{identity_};
  in[identity_] = true;
  for (std::size_t k = 0; k < out.size(); ++k) {
    for (const auto g : gens) {
      const auto x = mul(out[k], g);
      if (!in[x]) {
        in[x] = true;
        out.push_back(x);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

CayleyTable direct_product(const CayleyTable& left, const CayleyTable& right) {
  const std::size_t a = left.order();
  const std::size_t b = right.order();
  const std::size_t n = a * b;
  if (n > 4096) throw Error(Errc::TooLarge, "direct product of order " + std::to_string(n));
  std::vector<std::uint32_t> t(n * n);
  for (std::uint32_t x = 0; x < n; ++x) {
    for (std::uint32_t y = 0; y < n; ++y) {
      t[x * n + y] = static_cast<std::uint32_t>(left.mul(x / b, y / b) * b + right.mul(x % b, y % b));
    }
  }
  return CayleyTable(n, std::move(t));
}

std::vector<std::uint64_t> abelian_invariants(const std::map<std::uint64_t, std::uint64_t>& histogram,
                                              std::uint64_t order) {
  // Per prime, the number of cyclic factors of order >= p^j is the jump in
  // log_p #{x : x^(p^j) = 1}.
  std::vector<std::vector<std::uint64_t>> primary;  // per prime: factor orders, descending
  for (const auto p : prime_factors(order)) {
    std::vector<unsigned> logs{0};
    for (std::uint64_t pj = p;; pj *= p) {
      std::uint64_t count = 0;
      for (const auto& [o, c] : histogram) {
        if (pj % o == 0) count += c;
      }
      unsigned s = 0;
      for (std::uint64_t c = count; c > 1; c /= p) ++s;
      if (s == logs.back()) break;
      logs.push_back(s);
    }
    std::vector<std::uint64_t> factors;
    for (std::size_t j = logs.size() - 1; j >= 1; --j) {
      const unsigned at_least_j = logs[j] - logs[j - 1];
      const unsigned at_least_next = j + 1 < logs.size() ? logs[j + 1] - logs[j] : 0;
      for (unsigned k = 0; k < at_least_j - at_least_next; ++k) factors.push_back(ipow(p, static_cast<unsigned>(j)));
    }
    std::sort(factors.rbegin(), factors.rend());
    primary.push_back(std::move(factors));
  }
  std::size_t len = 0;
  for (const auto& f : primary) len = std::max(len, f.size());
  std::vector<std::uint64_t> out(len, 1);
  for (const auto& f : primary) {
    for (std::size_t k = 0; k < f.size(); ++k) out[len - 1 - k] *= f[k];
  }
  return out;
}

GroupFingerprint fingerprint(const CayleyTable& table) {
  const std::size_t n = table.order();
  if (n > 4096) throw Error(Errc::TooLarge, "fingerprint limited to order 4096");
  GroupFingerprint fp;
  fp.order = n;
  fp.abelian = table.is_abelian();
  fp.exponent = 1;
  for (std::uint32_t i = 0; i < n; ++i) {
    const auto o = table.element_order(i);
    ++fp.order_histogram[o];
    fp.exponent = std::lcm(fp.exponent, o);
  }

  std::vector<bool> is_commutator(n, false);
  std::uint64_t center = 0;
  for (std::uint32_t i = 0; i < n; ++i) {
    bool central = true;
    for (std::uint32_t j = 0; j < n; ++j) {
      const auto ij = table.mul(i, j);
      const auto ji = table.mul(j, i);
      if (ij != ji) central = false;
      is_commutator[table.mul(ij, table.inverse(ji))] = true;
    }
    center += central;
  }
  fp.center_order = center;
  std::vector<std::uint32_t> gens;
  for (std::uint32_t x = 0; x < n; ++x) {
    if (is_commutator[x]) gens.push_back(x);
  }
  fp.derived_order = table.generated(gens).size();
  if (fp.abelian) fp.abelian_invariants = abelian_invariants(fp.order_histogram, n);
  return fp;
}

std::string GroupFingerprint::summary() const {
  if (abelian_invariants) {
    if (abelian_invariants->empty()) return "C1";
    std::string out;
    std::size_t k = 0;
    const auto& inv = *abelian_invariants;
    while (k < inv.size()) {
      std::size_t j = k;
      while (j < inv.size() && inv[j] == inv[k]) ++j;
      if (!out.empty()) out += " × ";
      out += "C" + std::to_string(inv[k]);
      if (j - k > 1) out += "^" + std::to_string(j - k);
      k = j;
    }
    return out;
  }
  std::string out = "order " + std::to_string(order) + " nonabelian, exponent " + std::to_string(exponent) +
                    ", center " + std::to_string(center_order) + ", orders {";
  bool first = true;
  for (const auto& [o, c] : order_histogram) {
    if (!first) out += ", ";
    first = false;
    out += std::to_string(o) + ":" + std::to_string(c);
  }
  return out + "}";
}

RegularGroup RegularGroup::from_permutations(std::vector<Permutation> perms) {
  if (perms.empty()) throw Error(Errc::NotRegular, "empty group");
  const std::size_t n = perms.front().size();
  if (perms.size() != n) {
    throw Error(Errc::NotRegular, std::to_string(perms.size()) + " elements on " + std::to_string(n) + " points");
  }
  std::vector<Permutation> elems(n);
  std::vector<bool> hit(n, false);
  for (auto& g : perms) {
    if (g.size() != n) throw Error(Errc::NotRegular, "mixed permutation degrees");
    const auto x = g(0);
    if (hit[x]) throw Error(Errc::NotRegular, "two elements send 0 to " + std::to_string(x));
    hit[x] = true;
    elems[x] = std::move(g);
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (elems[x] * elems[y] != elems[elems[x](y)]) throw Error(Errc::NotRegular, "set is not closed");
    }
  }
  return RegularGroup(std::move(elems));
}

CayleyTable RegularGroup::table() const {
  const std::size_t n = elems_.size();
  std::vector<std::uint32_t> t(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) t[x * n + y] = elems_[x](y);
  }
  return CayleyTable(n, std::move(t));
}

bool RegularGroup::is_abelian() const {
  const std::size_t n = elems_.size();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x + 1; y < n; ++y) {
      if (elems_[x](y) != elems_[y](x)) return false;
    }
  }
  return true;
}

std::vector<Permutation> RegularGroup::sorted() const {
  auto out = elems_;
  std::sort(out.begin(), out.end());
  return out;
}

GroupFingerprint fingerprint(const RegularGroup& group) { return fingerprint(group.table()); }

}  // namespace aic
