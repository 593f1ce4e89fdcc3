#include "aic/structures.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <string>
#include <tuple>

#include "aic/error.hpp"
#include "aic/paut.hpp"

namespace aic {

namespace {

void require_divisor(unsigned d, unsigned m) {
  if (d == 0 || m % d != 0) {
    throw Error(Errc::NotADivisor, std::to_string(d) + " does not divide " + std::to_string(m));
  }
}

/// The F_{p^a}-span of x, added into `span`.
void insert_scalar_multiples(Subspace& span, const FieldSpec& k, const std::vector<Elem>& scalars, Elem x) {
  for (const auto s : scalars) span.insert(k.mul(s, x));
}

/// Smallest code x in `domain` with f(x) = target.
Elem smallest_preimage(const AdditiveMap& f, const std::vector<Elem>& domain, Elem target) {
  for (const auto x : domain) {
    if (f(x) == target) return x;
  }
  throw Error(Errc::InternalInconsistency, "no preimage for " + std::to_string(target));
}

std::vector<Elem> all_codes(const FieldSpec& k) {
  std::vector<Elem> out(k.size());
  for (Elem x = 0; x < k.size(); ++x) out[x] = x;
  return out;
}

}  // namespace

AlphaMap trivial_alpha(const Field& field, unsigned a, unsigned b) {
  require_divisor(a, field->m());
  require_divisor(b, a);
  return {field, a, b,
          std::vector<AdditiveMap>(field->size(), AdditiveMap::identity(field->p(), field->m()))};
}

bool check_iyb(const AlphaMap& alpha) {
  const auto& k = *alpha.field;
  if (alpha.values.size() != k.size()) return false;
  for (Elem y = 0; y < k.size(); ++y) {
    const auto& ay = alpha(y);
    for (Elem x = 0; x < k.size(); ++x) {
      if (alpha(k.add(x, y)) != alpha(ay(x)) * ay) return false;
    }
  }
  return true;
}

RegularGroup build_regular_group(const AlphaMap& alpha) {
  if (!check_iyb(alpha)) throw Error(Errc::NotACocycle, "alpha violates the cocycle condition");
  const auto& k = *alpha.field;
  std::vector<Permutation> perms;
  perms.reserve(k.size());
  for (Elem y = 0; y < k.size(); ++y) {
    const AdditiveMap lambda = alpha(y).inverse();
    std::vector<Permutation::Point> images(k.size());
    for (Elem z = 0; z < k.size(); ++z) images[z] = static_cast<Permutation::Point>(k.add(y, lambda(z)));
    perms.emplace_back(std::move(images));
  }
  try {
    return RegularGroup::from_permutations(std::move(perms));
  } catch (const Error& e) {
    throw Error(Errc::NotACocycle, e.what());
  }
}

AlphaMap reconstruct_alpha(const Field& field, const RegularGroup& group, unsigned a, unsigned b) {
  const auto& k = *field;
  if (group.order() != k.size()) throw Error(Errc::NotACocycle, "group order differs from |I|");
  AlphaMap alpha{field, a, b, {}};
  alpha.values.reserve(k.size());
  for (Elem x = 0; x < k.size(); ++x) {
    const auto& g = group.element(x);
    auto shift = [&](Elem z) { return k.sub(g(z), x); };
    const AdditiveMap lambda = AdditiveMap::from_function(k.space(), shift);
    for (Elem z = 0; z < k.size(); ++z) {
      if (lambda(z) != shift(z)) throw Error(Errc::NotACocycle, "element " + std::to_string(x) + " is not affine");
    }
    if (!lambda.is_invertible()) throw Error(Errc::NotACocycle, "element " + std::to_string(x) + " is singular");
    AdditiveMap value = lambda.inverse();
    if (!semilinear_tag(k, value, a, b)) {
      throw Error(Errc::NotInGroup, "alpha(" + k.format(x) + ") lies outside the semilinear group");
    }
    alpha.values.push_back(std::move(value));
  }
  return alpha;
}

bool is_twosided_alpha(const AlphaMap& alpha, unsigned a) {
  if (!check_iyb(alpha)) throw Error(Errc::NotACocycle, "alpha violates the cocycle condition");
  const auto& k = *alpha.field;
  require_divisor(a, k.m());
  for (const auto& v : alpha.values) {
    if (!is_d_linear(k, v, a)) return false;
  }
  const Elem gamma = subfield_generator(k, a);
  std::vector<AdditiveMap> lambda;
  lambda.reserve(k.size());
  for (const auto& v : alpha.values) lambda.push_back(v.inverse());
  auto beta = [&](Elem x, Elem y) { return k.sub(lambda[x](y), y); };
  for (Elem x = 0; x < k.size(); ++x) {
    for (Elem y = 0; y < k.size(); ++y) {
      const Elem bxy = beta(x, y);
      if (beta(k.mul(gamma, x), y) != k.mul(gamma, bxy)) return false;
      if (beta(x, k.mul(gamma, y)) != k.mul(gamma, bxy)) return false;
    }
  }
  // Additivity in x.
  for (Elem x1 = 0; x1 < k.size(); ++x1) {
    for (Elem x2 = x1; x2 < k.size(); ++x2) {
      if (lambda[k.add(x1, x2)] + AdditiveMap::identity(k.p(), k.m()) != lambda[x1] + lambda[x2]) return false;
    }
  }
  return true;
}

AdditiveMap trace_form(const FieldSpec& field, unsigned a, Elem c) {
  require_divisor(a, field.m());
  const unsigned steps = field.m() / a;
  return AdditiveMap::from_function(field.space(), [&](Elem x) {
    const Elem cx = field.mul(c, x);
    Elem sum = 0;
    for (unsigned i = 0; i < steps; ++i) sum = field.add(sum, field.frobenius(cx, static_cast<long>(a * i)));
    return sum;
  });
}

bool is_scalar_linear(const FieldSpec& field, const AdditiveMap& chi, unsigned a) {
  const Elem gamma = subfield_generator(field, a);
  for (unsigned k = 0; k < field.m(); ++k) {
    const Elem x = field.space().unit(k);
    if (chi(field.mul(gamma, x)) != field.mul(gamma, chi(x))) return false;
  }
  return true;
}

ChiF make_chi_f(const Field& field, AdditiveMap chi, AdditiveMap f, unsigned a) {
  const auto& k = *field;
  require_divisor(a, k.m());
  if (a == k.m()) throw Error(Errc::DegenerateA, "no chi, f exist when a = m");
  auto violation = [](const std::string& clause) { throw Error(Errc::CondViolation, clause); };
  if (chi.p() != k.p() || chi.m() != k.m() || f.p() != k.p() || f.m() != k.m()) violation("maps must act on K");
  for (const auto c : chi.columns()) {
    if (k.frobenius(c, a) != c) violation("chi must take values in F_p^" + std::to_string(a));
  }
  if (chi.is_zero()) violation("chi != 0");
  if (f.is_zero()) violation("f != 0");
  if (!(f * f).is_zero()) violation("f^2 = 0");
  if (!(chi * f).is_zero()) violation("chi f = 0");
  if (!is_d_linear(k, f, a)) violation("f must be F_p^" + std::to_string(a) + "-linear");
  return {field, a, std::move(chi), std::move(f)};
}

AlphaMap chi_f_alpha(const ChiF& cf, unsigned b) {
  const auto& k = *cf.field;
  AlphaMap alpha{cf.field, cf.a, b, {}};
  alpha.values.reserve(k.size());
  const AdditiveMap id = AdditiveMap::identity(k.p(), k.m());
  for (Elem x = 0; x < k.size(); ++x) alpha.values.push_back(id + scaled(k, cf.chi(x), cf.f));
  return alpha;
}

ChiFClass classify_chi_f(const ChiF& cf) {
  const auto& k = *cf.field;
  const Subspace ker_chi = cf.chi.kernel();
  const Subspace ker_f = cf.f.kernel();
  const bool abelian = is_scalar_linear(k, cf.chi, cf.a) && ker_chi.is_subspace_of(ker_f);
  ChiFClass out{abelian, abelian ? Subspace::whole(k.p(), k.m()) : ker_chi.intersection(ker_f),
                k.p() == 2 ? std::uint64_t{4} : std::uint64_t{k.p()}};

  const RegularGroup group = build_regular_group(chi_f_alpha(cf));
  const auto fp = fingerprint(group);
  Subspace center(k.p(), k.m());
  std::size_t central = 0;
  for (Elem x = 0; x < k.size(); ++x) {
    bool ok = true;
    for (Elem y = 0; y < k.size() && ok; ++y) ok = group.element(x)(y) == group.element(y)(x);
    if (ok) {
      center.insert(x);
      ++central;
    }
  }
  if (fp.abelian != out.abelian || fp.exponent != out.exponent || !(center == out.center) ||
      central != out.center.elements().size()) {
    throw Error(Errc::InternalInconsistency, "chi, f classification disagrees with the group table");
  }
  return out;
}

Decomposition decompose_chi_f(const ChiF& cf) {
  const auto& k = *cf.field;
  const unsigned p = k.p();
  const unsigned m = k.m();
  const Subspace ker_chi = cf.chi.kernel();
  const Subspace ker_f = cf.f.kernel();
  const Subspace both = ker_chi.intersection(ker_f);
  const Subspace v = cf.f.image();

  const auto z_basis = v.complement_in(both);
  const auto u_basis = both.complement_in(ker_f);

  Subspace image_of_ker_chi(p, m);
  for (const auto x : ker_chi.basis()) image_of_ker_chi.insert(cf.f(x));
  const auto h_basis = image_of_ker_chi.complement_in(v);

  const auto ker_chi_elems = ker_chi.elements();
  const auto everything = all_codes(k);
  std::vector<Elem> v_basis;
  std::vector<Elem> g_images;
  std::vector<Elem> w_basis;
  std::vector<Elem> wp_basis;
  for (const auto y : image_of_ker_chi.basis()) {
    v_basis.push_back(y);
    g_images.push_back(smallest_preimage(cf.f, ker_chi_elems, y));
    w_basis.push_back(g_images.back());
  }
  for (const auto y : h_basis) {
    v_basis.push_back(y);
    g_images.push_back(smallest_preimage(cf.f, everything, y));
    wp_basis.push_back(g_images.back());
  }
  for (const auto y : v.complement_in(Subspace::whole(p, m))) {
    v_basis.push_back(y);
    g_images.push_back(0);
  }
  const AdditiveMap g = AdditiveMap::from_basis_images(p, m, v_basis, g_images);

  Decomposition out{Subspace::span(p, m, z_basis),
                    v,
                    Subspace::span(p, m, w_basis),
                    Subspace::span(p, m, wp_basis),
                    Subspace::span(p, m, u_basis),
                    g,
                    {},
                    false};

  // Coordinates along K = Z + V + W + W' + U.
  std::vector<Elem> basis;
  std::vector<std::size_t> block_end;
  for (const Subspace* s : {&out.z, &out.v, &out.w, &out.wp, &out.u}) {
    basis.insert(basis.end(), s->basis().begin(), s->basis().end());
    block_end.push_back(basis.size());
  }
  if (basis.size() != m || Subspace::span(p, m, basis).dim() != m) {
    throw Error(Errc::InternalInconsistency, "decomposition pieces do not span K");
  }
  std::vector<Elem> units(m);
  for (unsigned i = 0; i < m; ++i) units[i] = k.space().unit(i);
  const AdditiveMap coords = AdditiveMap::from_basis_images(p, m, basis, units);
  auto components = [&](Elem x) {
    const Elem c = coords(x);
    std::array<Elem, 5> parts{};
    std::size_t block = 0;
    for (unsigned i = 0; i < m; ++i) {
      while (i >= block_end[block]) ++block;
      parts[block] = k.add(parts[block], k.space().scale(k.space().digit(c, i), basis[i]));
    }
    return parts;
  };

  using Image = std::tuple<Elem, Elem, Elem, Elem>;  // z, v, w, c
  auto phi = [&](Elem x) -> Image {
    const auto [z, vv, w, wp, u] = components(x);
    return {z, vv, cf.f(k.add(w, wp)), cf.chi(u)};
  };
  auto mu = [&](Elem w) { return cf.chi(g(w)); };
  auto target_mul = [&](const Image& s, const Image& t) -> Image {
    const auto& [z1, v1, w1, c1] = s;
    const auto& [z2, v2, w2, c2] = t;
    const Elem shifted = k.sub(v2, k.mul(c1, w2));
    return {k.add(z1, z2), k.sub(k.add(v1, shifted), k.mul(mu(w1), w2)), k.add(w1, w2), k.add(c1, c2)};
  };
  auto source_mul = [&](Elem x1, Elem x2) { return k.sub(k.add(x1, x2), k.mul(cf.chi(x1), cf.f(x2))); };

  std::vector<Image> images(k.size());
  std::set<Image> distinct;
  for (Elem x = 0; x < k.size(); ++x) {
    images[x] = phi(x);
    distinct.insert(images[x]);
  }
  bool ok = distinct.size() == k.size();
  for (Elem x1 = 0; x1 < k.size() && ok; ++x1) {
    for (Elem x2 = 0; x2 < k.size() && ok; ++x2) {
      ok = images[source_mul(x1, x2)] == target_mul(images[x1], images[x2]);
    }
  }
  out.verified = ok;

  if (out.z.dim() > 0) out.target.factors.push_back(DescriptorAtom::cyclic(std::vector<std::uint64_t>(out.z.dim(), p)));
  DescriptorAtom vmu;
  vmu.kind = DescriptorAtom::Kind::Vmu;
  vmu.field = k.describe();
  vmu.v_basis = v.basis();
  for (const auto y : vmu.v_basis) vmu.mu.push_back(mu(y));
  Subspace chi_u(p, m);
  for (const auto x : u_basis) chi_u.insert(cf.chi(x));
  vmu.u_basis = chi_u.basis();
  out.target.factors.push_back(std::move(vmu));
  return out;
}

EstrResult estr_descriptor(const ChiF& cf) {
  const auto& k = *cf.field;
  if (!is_scalar_linear(k, cf.chi, cf.a)) {
    throw Error(Errc::ChiNotLinear, "chi is not F_p^" + std::to_string(cf.a) + "-linear");
  }
  const unsigned p = k.p();
  const unsigned m = k.m();
  const unsigned a = cf.a;
  const std::uint64_t q = ipow(p, a);
  const Subspace ker_chi = cf.chi.kernel();
  const Subspace ker_f = cf.f.kernel();

  EstrResult out;
  out.u = cf.f.rank() / a;
  auto elementary = [&](unsigned copies) {
    if (copies > 0) out.descriptor.factors.push_back(DescriptorAtom::cyclic(std::vector<std::uint64_t>(copies, p)));
  };
  if (ker_chi == ker_f) {
    if (p != 2) {
      out.which = 'a';
      elementary(m);
    } else {
      out.which = 'b';
      std::vector<std::uint64_t> orders(m - 2 * a, 2);
      orders.insert(orders.end(), a, 4);
      out.descriptor.factors.push_back(DescriptorAtom::cyclic(std::move(orders)));
    }
  } else if (!ker_f.is_subspace_of(ker_chi)) {
    out.which = 'c';
    elementary(a * (m / a - 2 * out.u - 1));
    out.descriptor.factors.push_back(DescriptorAtom::vxv(q, out.u, DescriptorAtom::Acting::Additive));
  } else {
    out.which = 'd';
    elementary(a * (m / a - 2 * out.u));
    out.descriptor.factors.push_back(DescriptorAtom::vxv(q, out.u - 1, DescriptorAtom::Acting::Fa));
  }
  out.expected = fingerprint(build_descriptor_group(out.descriptor));
  out.concrete = fingerprint(build_regular_group(chi_f_alpha(cf)));
  return out;
}

namespace {

struct LinearFrame {
  std::vector<Elem> kernel_basis;  // F_{p^a}-basis of ker chi
  Elem outside = 0;                // spans a complement of ker chi
  std::vector<Elem> scalars;       // F_p-basis of F_{p^a}
};

LinearFrame frame_for(const FieldSpec& k, unsigned a, const AdditiveMap& chi, unsigned u) {
  require_divisor(a, k.m());
  if (chi.is_zero() || !is_scalar_linear(k, chi, a)) {
    throw Error(Errc::InvalidArgument, "chi must be a nonzero F_p^" + std::to_string(a) + "-linear form");
  }
  for (const auto c : chi.columns()) {
    if (k.frobenius(c, a) != c) throw Error(Errc::InvalidArgument, "chi must take values in F_p^" + std::to_string(a));
  }
  if (u == 0 || 2 * u > k.m() / a - 1) {
    throw Error(Errc::InvalidArgument, "need 1 <= 2u <= m/a - 1, got u=" + std::to_string(u));
  }
  LinearFrame fr;
  fr.scalars = subfield_basis(k, a);
  const Subspace ker = chi.kernel();
  Subspace span(k.p(), k.m());
  for (Elem x = 1; x < k.size(); ++x) {
    if (fr.outside == 0 && chi(x) != 0) fr.outside = x;
    if (ker.contains(x) && !span.contains(x)) {
      fr.kernel_basis.push_back(x);
      insert_scalar_multiples(span, k, fr.scalars, x);
    }
  }
  return fr;
}

ChiF from_frame(const Field& field, unsigned a, const AdditiveMap& chi, const LinearFrame& fr,
                const std::vector<Elem>& kernel_images, Elem outside_image) {
  const auto& k = *field;
  std::vector<Elem> basis;
  std::vector<Elem> images;
  for (const auto s : fr.scalars) {
    for (std::size_t i = 0; i < fr.kernel_basis.size(); ++i) {
      basis.push_back(k.mul(s, fr.kernel_basis[i]));
      images.push_back(k.mul(s, kernel_images[i]));
    }
    basis.push_back(k.mul(s, fr.outside));
    images.push_back(k.mul(s, outside_image));
  }
  return make_chi_f(field, chi, AdditiveMap::from_basis_images(k.p(), k.m(), basis, images), a);
}

}  // namespace

ChiF construct_f1(const Field& field, unsigned a, const AdditiveMap& chi, unsigned u) {
  const LinearFrame fr = frame_for(*field, a, chi, u);
  std::vector<Elem> images(fr.kernel_basis.size(), 0);
  for (unsigned i = 0; i < u; ++i) images[u + i] = fr.kernel_basis[i];
  return from_frame(field, a, chi, fr, images, 0);
}

ChiF construct_f2(const Field& field, unsigned a, const AdditiveMap& chi, unsigned u) {
  const LinearFrame fr = frame_for(*field, a, chi, u);
  std::vector<Elem> images(fr.kernel_basis.size(), 0);
  for (unsigned i = 0; i + 1 < u; ++i) images[u + i] = fr.kernel_basis[i];
  return from_frame(field, a, chi, fr, images, fr.kernel_basis[u - 1]);
}

NonabelianWitness nonabelian_exists(const AffineInvariantCode& code) {
  if (code.is_trivial()) throw Error(Errc::TrivialCode, "structures of trivial codes are not classified");
  const unsigned a = code.params().a;
  const unsigned m = code.m();
  NonabelianWitness out;
  out.exists = 2 * a < m;
  if (out.exists) {
    const auto& field = code.field();
    out.witness = construct_f1(field, a, trace_form(*field, a, 1), 1);
    out.structure = estr_descriptor(*out.witness);
  }
  return out;
}

}  // namespace aic
