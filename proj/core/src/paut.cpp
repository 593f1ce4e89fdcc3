#include "aic/paut.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_set>

#include "aic/error.hpp"

namespace aic {

namespace {

void require_divisor(unsigned d, unsigned m) {
  if (d == 0 || m % d != 0) {
    throw Error(Errc::NotADivisor, std::to_string(d) + " does not divide " + std::to_string(m));
  }
}

}  // namespace

bool is_d_linear(const FieldSpec& field, const AdditiveMap& f, unsigned d) {
  require_divisor(d, field.m());
  const AdditiveMap g = mul_matrix(field, subfield_generator(field, d));
  return f * g == g * f;
}

std::optional<unsigned> semilinear_tag(const FieldSpec& field, const AdditiveMap& f, unsigned a, unsigned b) {
  require_divisor(a, field.m());
  require_divisor(b, a);
  if (!f.is_invertible()) throw Error(Errc::SingularMap, "map is not invertible");
  const Elem gamma = subfield_generator(field, a);
  for (unsigned j = 0; j < a / b; ++j) {
    const Elem image = field.frobenius(gamma, static_cast<long>(b) * j);
    bool ok = true;
    for (unsigned k = 0; k < field.m() && ok; ++k) {
      const Elem x = field.space().unit(k);
      ok = f(field.mul(gamma, x)) == field.mul(image, f(x));
    }
    if (ok) return j;
  }
  return std::nullopt;
}

SemilinearElement SemilinearElement::compose(const SemilinearElement& other) const {
  return {map * other.map, (tau + other.tau) % (a / b), a, b};
}

SemilinearElement SemilinearElement::inverse() const {
  return {map.inverse(), (a / b - tau) % (a / b), a, b};
}

SemilinearElement make_semilinear(const FieldSpec& field, AdditiveMap map, unsigned a, unsigned b) {
  if (!map.is_invertible()) throw Error(Errc::NotInGroup, "map is singular");
  const auto tag = semilinear_tag(field, map, a, b);
  if (!tag) throw Error(Errc::NotInGroup, "map is not semilinear over F_p^" + std::to_string(a));
  return {std::move(map), *tag, a, b};
}

Elem AffineElement::apply(Elem z) const { return DigitSpace(map.p(), map.m()).add(map(z), translation); }

AffineElement AffineElement::compose(const AffineElement& other) const {
  return {apply(other.translation), map * other.map, tau + other.tau};
}

Permutation AffineElement::to_permutation() const {
  const DigitSpace s(map.p(), map.m());
  std::vector<Permutation::Point> images(s.size());
  for (Elem z = 0; z < s.size(); ++z) images[z] = static_cast<Permutation::Point>(s.add(map(z), translation));
  return Permutation(std::move(images));
}

AffineElement translation(const FieldSpec& field, Elem y) {
  return {y, AdditiveMap::identity(field.p(), field.m()), 0};
}

AffineElement affine(Elem y, const SemilinearElement& part) { return {y, part.map, part.tau}; }

std::vector<AdditiveMap> gl_generators(const FieldSpec& field, unsigned d) {
  require_divisor(d, field.m());
  const unsigned m = field.m();
  const unsigned n = m / d;
  if (n == 1) return {mul_matrix(field, field.primitive())};

  const Elem omega = subfield_generator(field, d);
  const auto scalars = subfield_basis(field, d);

  // 1, t, ..., t^(n-1) is a basis of K over F_{p^d}.
  std::vector<Elem> e(n);
  e[0] = 1;
  for (unsigned k = 1; k < n; ++k) e[k] = field.mul(e[k - 1], field.root());

  auto extend = [&](const std::vector<Elem>& images) {
    std::vector<Elem> basis;
    std::vector<Elem> targets;
    for (const auto s : scalars) {
      for (unsigned k = 0; k < n; ++k) {
        basis.push_back(field.mul(s, e[k]));
        targets.push_back(field.mul(s, images[k]));
      }
    }
    return AdditiveMap::from_basis_images(field.p(), m, basis, targets);
  };

  std::vector<Elem> cycle(n);
  for (unsigned k = 0; k < n; ++k) cycle[k] = e[(k + 1) % n];
  std::vector<Elem> transvection = e;
  transvection[0] = field.add(e[0], e[1]);
  std::vector<Elem> diagonal = e;
  diagonal[0] = field.mul(omega, e[0]);
  return {extend(cycle), extend(transvection), extend(diagonal)};
}

std::vector<AdditiveMap> closure(const std::vector<AdditiveMap>& gens, std::size_t limit) {
  if (gens.empty()) return {};
  const AdditiveMap id = AdditiveMap::identity(gens.front().p(), gens.front().m());
  std::unordered_set<AdditiveMap, AdditiveMapHash> seen{id};
  std::vector<AdditiveMap> out{id};
  for (std::size_t k = 0; k < out.size(); ++k) {
    for (const auto& g : gens) {
      AdditiveMap next = out[k] * g;
      if (seen.insert(next).second) {
        if (out.size() >= limit) throw Error(Errc::TooLarge, "closure exceeds " + std::to_string(limit) + " elements");
        out.push_back(std::move(next));
      }
    }
  }
  return out;
}

std::vector<AdditiveMap> semilinear_group(const FieldSpec& field, unsigned a, unsigned b) {
  require_divisor(a, field.m());
  require_divisor(b, a);
  auto gens = gl_generators(field, a);
  if (a != b) gens.push_back(frobenius_map(field, b));
  return closure(gens);
}

bool is_code_invariant(const Permutation& sigma, const AffineInvariantCode& code) {
  if (sigma.size() != code.length()) throw Error(Errc::InvalidArgument, "permutation degree differs from length");
  return std::all_of(code.basis().begin(), code.basis().end(),
                     [&](const Codeword& w) { return code.contains(permute(sigma, w)); });
}

bool is_code_invariant(const AffineElement& sigma, const AffineInvariantCode& code) {
  return is_code_invariant(sigma.to_permutation(), code);
}

CodeParams compute_params(const AffineInvariantCode& code) {
  if (code.is_trivial()) return {1, 1, true};
  const auto& field = *code.field();
  const unsigned m = field.m();
  unsigned a = m;
  for (const auto d : divisors(m)) {
    const auto gens = gl_generators(field, d);
    if (std::all_of(gens.begin(), gens.end(), [&](const AdditiveMap& g) {
          return is_code_invariant(AffineElement{0, g, 0}, code);
        })) {
      a = d;
      break;
    }
  }
  const unsigned b = minimal_b(code.defining_set(), field.p(), m);
  if (code.r() % b != 0 || a % b != 0 || m % a != 0) {
    throw Error(Errc::InternalInconsistency, "a=" + std::to_string(a) + " b=" + std::to_string(b) +
                                                 " violate b | r, b | a | m");
  }
  return {a, b, false};
}

BigInt gl_order(unsigned n, std::uint64_t q) {
  BigInt qn = 1;
  for (unsigned i = 0; i < n; ++i) qn *= q;
  BigInt order = 1;
  BigInt qi = 1;
  for (unsigned i = 0; i < n; ++i) {
    order *= qn - qi;
    qi *= q;
  }
  return order;
}

BigInt paut_order(const AffineInvariantCode& code) {
  if (code.is_trivial()) throw Error(Errc::TrivialCode, "PAut of a trivial code is the full symmetric group");
  const auto& params = code.params();
  BigInt order = code.length();
  order *= gl_order(code.m() / params.a, ipow(code.p(), params.a));
  order *= params.a / params.b;
  return order;
}

Subspace sum_images(const FieldSpec& field, const std::vector<AdditiveMap>& gens, unsigned a) {
  require_divisor(a, field.m());
  for (const auto& g : gens) {
    if (!g.is_invertible() || !is_d_linear(field, g, a)) {
      throw Error(Errc::NotAPGroup, "generators must lie in GL(K over F_p^" + std::to_string(a) + ")");
    }
  }
  const auto group = gens.empty() ? std::vector<AdditiveMap>{AdditiveMap::identity(field.p(), field.m())}
                                  : closure(gens);
  std::uint64_t size = group.size();
  while (size % field.p() == 0) size /= field.p();
  if (size != 1) throw Error(Errc::NotAPGroup, "group of order " + std::to_string(group.size()));

  const auto scalars = subfield_basis(field, a);
  const AdditiveMap id = AdditiveMap::identity(field.p(), field.m());
  Subspace span(field.p(), field.m());
  for (const auto& rho : group) {
    const Subspace image = (rho - id).image();
    for (const auto v : image.basis()) {
      for (const auto s : scalars) span.insert(field.mul(s, v));
    }
  }
  return span;
}

bool sum_images_proper(const FieldSpec& field, const std::vector<AdditiveMap>& gens, unsigned a) {
  return sum_images(field, gens, a).dim() < field.m();
}

}  // namespace aic
