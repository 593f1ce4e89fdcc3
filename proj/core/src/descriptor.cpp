#include "aic/descriptor.hpp"

#include <functional>
#include <numeric>
#include <unordered_map>

#include "aic/error.hpp"

namespace aic {

namespace {

[[noreturn]] void malformed(const std::string& why) { throw Error(Errc::MalformedDescriptor, why); }

struct PrimePower {
  unsigned p;
  unsigned a;
};

PrimePower split_prime_power(std::uint64_t q) {
  if (q < 2) malformed("field size " + std::to_string(q) + " is not a prime power");
  const auto primes = prime_factors(q);
  if (primes.size() != 1) malformed("field size " + std::to_string(q) + " is not a prime power");
  unsigned a = 0;
  for (std::uint64_t x = q; x > 1; x /= primes.front()) ++a;
  return {static_cast<unsigned>(primes.front()), a};
}

CayleyTable table_from(std::uint64_t n, const std::function<std::uint32_t(std::uint32_t, std::uint32_t)>& mul) {
  if (n > 4096) throw Error(Errc::TooLarge, "group of order " + std::to_string(n));
  std::vector<std::uint32_t> t(n * n);
  for (std::uint32_t x = 0; x < n; ++x) {
    for (std::uint32_t y = 0; y < n; ++y) t[x * n + y] = mul(x, y);
  }
  try {
    return CayleyTable(n, std::move(t));
  } catch (const Error& e) {
    malformed(e.what());
  }
}

/// F_q^dim with coordinate-wise field arithmetic; vectors indexed base q.
struct VectorSpace {
  Field field;
  unsigned dim;

  std::uint64_t size() const { return ipow(field->size(), dim); }
  std::vector<Elem> unpack(std::uint64_t x) const {
    std::vector<Elem> v(dim);
    for (unsigned i = 0; i < dim; ++i, x /= field->size()) v[i] = static_cast<Elem>(x % field->size());
    return v;
  }
  std::uint64_t pack(const std::vector<Elem>& v) const {
    std::uint64_t x = 0;
    for (unsigned i = dim; i-- > 0;) x = x * field->size() + v[i];
    return x;
  }
  /// x - c y
  std::uint64_t sub_scaled(std::uint64_t x, Elem c, std::uint64_t y) const {
    auto vx = unpack(x);
    const auto vy = unpack(y);
    for (unsigned i = 0; i < dim; ++i) vx[i] = field->sub(vx[i], field->mul(c, vy[i]));
    return pack(vx);
  }
  std::uint64_t add(std::uint64_t x, std::uint64_t y) const {
    auto vx = unpack(x);
    const auto vy = unpack(y);
    for (unsigned i = 0; i < dim; ++i) vx[i] = field->add(vx[i], vy[i]);
    return pack(vx);
  }
};

CayleyTable cyclic_table(const std::vector<std::uint64_t>& orders) {
  std::vector<std::uint32_t> one{0};
  CayleyTable out(1, one);
  for (const auto k : orders) {
    if (k == 0) malformed("cyclic factor of order 0");
    out = direct_product(out, table_from(k, [k](std::uint32_t x, std::uint32_t y) {
                           return static_cast<std::uint32_t>((x + y) % k);
                         }));
  }
  return out;
}

/// Fa(q) = F_q x F_q with (x1,y1)(x2,y2) = (x1 + x2 - y1 y2, y1 + y2); the
/// index is x + q y.
CayleyTable fa_table(std::uint64_t q) {
  const auto [p, a] = split_prime_power(q);
  const Field f = make_field(p, a);
  return table_from(q * q, [&](std::uint32_t s, std::uint32_t t) {
    const Elem x1 = s % q, y1 = s / q, x2 = t % q, y2 = t / q;
    const Elem x = f->sub(f->add(x1, x2), f->mul(y1, y2));
    return static_cast<std::uint32_t>(x + q * f->add(y1, y2));
  });
}

/// (V x V) semidirect the acting group; index = v1 + |V| (v2 + |V|^2 h).
CayleyTable vxv_table(const DescriptorAtom& atom) {
  const auto [p, a] = split_prime_power(atom.q);
  const Field f = make_field(p, a);
  const VectorSpace v{f, atom.dim};
  const std::uint64_t vs = v.size();
  const std::uint64_t q = atom.q;
  const bool fa = atom.acting == DescriptorAtom::Acting::Fa;
  const std::uint64_t hs = fa ? q * q : q;
  return table_from(vs * vs * hs, [&](std::uint32_t s, std::uint32_t t) {
    const std::uint64_t u1 = s % vs, w1 = (s / vs) % vs, h1 = s / (vs * vs);
    const std::uint64_t u2 = t % vs, w2 = (t / vs) % vs, h2 = t / (vs * vs);
    const Elem y1 = static_cast<Elem>(fa ? h1 / q : h1);
    const std::uint64_t u = v.add(u1, v.sub_scaled(u2, y1, w2));
    const std::uint64_t w = v.add(w1, w2);
    std::uint64_t h;
    if (fa) {
      const Elem x1 = h1 % q, x2 = h2 % q, y2 = static_cast<Elem>(h2 / q);
      h = f->sub(f->add(x1, x2), f->mul(y1, y2)) + q * f->add(y1, y2);
    } else {
      h = f->add(static_cast<Elem>(h1), static_cast<Elem>(h2));
    }
    return static_cast<std::uint32_t>(u + vs * (w + vs * h));
  });
}

/// F_p-span of a basis inside K, with an index for every member.
struct Span {
  std::vector<Elem> members;
  std::unordered_map<Elem, std::uint32_t> index;
  std::vector<std::vector<unsigned>> coords;
};

Span enumerate_span(const FieldSpec& k, const std::vector<Elem>& basis) {
  Span s;
  const std::uint64_t size = ipow(k.p(), static_cast<unsigned>(basis.size()));
  for (std::uint64_t c = 0; c < size; ++c) {
    Elem x = 0;
    std::vector<unsigned> coords(basis.size());
    std::uint64_t rest = c;
    for (std::size_t i = 0; i < basis.size(); ++i, rest /= k.p()) {
      coords[i] = static_cast<unsigned>(rest % k.p());
      x = k.add(x, k.space().scale(coords[i], basis[i]));
    }
    if (!s.index.emplace(x, static_cast<std::uint32_t>(c)).second) malformed("basis is not independent");
    s.members.push_back(x);
    s.coords.push_back(std::move(coords));
  }
  return s;
}

CayleyTable vmu_table(const DescriptorAtom& atom) {
  Field k;
  try {
    k = parse_field_description(atom.field);
  } catch (const Error& e) {
    malformed(std::string("bad field: ") + e.what());
  }
  if (atom.mu.size() != atom.v_basis.size()) malformed("mu needs one value per basis vector of V");
  for (const auto x : atom.v_basis) {
    if (x >= k->size()) malformed("V basis vector outside the field");
  }
  const Span v = enumerate_span(*k, atom.v_basis);
  const Span u = enumerate_span(*k, atom.u_basis);
  std::vector<Elem> mu_of(v.members.size());
  for (std::size_t i = 0; i < v.members.size(); ++i) {
    Elem acc = 0;
    for (std::size_t j = 0; j < atom.mu.size(); ++j) acc = k->add(acc, k->space().scale(v.coords[i][j], atom.mu[j]));
    mu_of[i] = acc;
  }
  const std::uint64_t vs = v.members.size();
  const std::uint64_t us = u.members.size();
  auto idx = [&](Elem x) {
    const auto it = v.index.find(x);
    if (it == v.index.end()) malformed("product leaves V");
    return std::uint64_t{it->second};
  };
  return table_from(vs * vs * us, [&](std::uint32_t s, std::uint32_t t) {
    const Elem v1 = v.members[s % vs], w1 = v.members[(s / vs) % vs], c1 = u.members[s / (vs * vs)];
    const Elem v2 = v.members[t % vs], w2 = v.members[(t / vs) % vs], c2 = u.members[t / (vs * vs)];
    const Elem v2s = k->sub(v2, k->mul(c1, w2));
    const Elem vv = k->sub(k->add(v1, v2s), k->mul(mu_of[(s / vs) % vs], w2));
    const Elem ww = k->add(w1, w2);
    const auto uit = u.index.find(k->add(c1, c2));
    if (uit == u.index.end()) malformed("U is not closed");
    return static_cast<std::uint32_t>(idx(vv) + vs * (idx(ww) + vs * uit->second));
  });
}

std::string power(std::string base, std::uint64_t k) {
  return k == 1 ? base : base + "^" + std::to_string(k);
}

}  // namespace

DescriptorAtom DescriptorAtom::cyclic(std::vector<std::uint64_t> orders) {
  DescriptorAtom a;
  a.kind = Kind::Cyclic;
  a.orders = std::move(orders);
  return a;
}

DescriptorAtom DescriptorAtom::vxv(std::uint64_t q, unsigned dim, Acting acting) {
  DescriptorAtom a;
  a.kind = Kind::VxV;
  a.q = q;
  a.dim = dim;
  a.acting = acting;
  return a;
}

DescriptorAtom DescriptorAtom::fa(std::uint64_t q) {
  DescriptorAtom a;
  a.kind = Kind::Fa;
  a.q = q;
  return a;
}

std::uint64_t DescriptorAtom::order() const {
  switch (kind) {
    case Kind::Cyclic:
      return std::accumulate(orders.begin(), orders.end(), std::uint64_t{1}, std::multiplies<>{});
    case Kind::VxV:
      return ipow(q, 2 * dim) * (acting == Acting::Fa ? q * q : q);
    case Kind::Fa:
      return q * q;
    case Kind::Vmu: {
      const unsigned p = parse_field_description(field)->p();
      return ipow(p, static_cast<unsigned>(2 * v_basis.size() + u_basis.size()));
    }
  }
  return 0;
}

std::string DescriptorAtom::render() const {
  switch (kind) {
    case Kind::Cyclic: {
      std::string out;
      std::size_t k = 0;
      while (k < orders.size()) {
        std::size_t j = k;
        while (j < orders.size() && orders[j] == orders[k]) ++j;
        if (!out.empty()) out += " × ";
        out += power("C" + std::to_string(orders[k]), j - k);
        k = j;
      }
      return out.empty() ? "C1" : out;
    }
    case Kind::VxV: {
      const std::string acting_name = (acting == Acting::Fa ? "𝓕" : "F") + std::to_string(q);
      if (dim == 0) return acting_name;
      const std::string v = power("F" + std::to_string(q), dim);
      return "(" + v + "×" + v + ")⋊" + acting_name;
    }
    case Kind::Fa:
      return "𝓕" + std::to_string(q);
    case Kind::Vmu:
      return "V_μ(" + std::to_string(v_basis.size()) + ")⋊U(" + std::to_string(u_basis.size()) + ")";
  }
  return {};
}

std::uint64_t GroupDescriptor::order() const {
  std::uint64_t n = 1;
  for (const auto& f : factors) n *= f.order();
  return n;
}

std::string GroupDescriptor::render() const {
  if (factors.empty()) return "C1";
  std::string out;
  for (const auto& f : factors) {
    if (!out.empty()) out += " × ";
    const bool wrap = factors.size() > 1 && f.kind != DescriptorAtom::Kind::Cyclic && f.render().find("⋊") != std::string::npos;
    out += wrap ? "(" + f.render() + ")" : f.render();
  }
  return out;
}

CayleyTable build_descriptor_group(const GroupDescriptor& d) {
  if (d.order() > 4096) throw Error(Errc::TooLarge, "descriptor of order " + std::to_string(d.order()));
  CayleyTable out = cyclic_table({});
  for (const auto& atom : d.factors) {
    switch (atom.kind) {
      case DescriptorAtom::Kind::Cyclic:
        out = direct_product(out, cyclic_table(atom.orders));
        break;
      case DescriptorAtom::Kind::VxV:
        out = direct_product(out, vxv_table(atom));
        break;
      case DescriptorAtom::Kind::Fa:
        out = direct_product(out, fa_table(atom.q));
        break;
      case DescriptorAtom::Kind::Vmu:
        out = direct_product(out, vmu_table(atom));
        break;
    }
  }
  if (out.order() <= 256 && (!out.has_inverses() || !out.is_associative())) {
    malformed("expanded table is not a group");
  }
  return out;
}

nlohmann::json to_json(const GroupDescriptor& d) {
  nlohmann::json product = nlohmann::json::array();
  for (const auto& a : d.factors) {
    switch (a.kind) {
      case DescriptorAtom::Kind::Cyclic:
        product.push_back({{"cyclic", a.orders}});
        break;
      case DescriptorAtom::Kind::VxV:
        product.push_back({{"semidirect",
                            {{"base", "VxV"},
                             {"dim", a.dim},
                             {"q", a.q},
                             {"acting", a.acting == DescriptorAtom::Acting::Fa ? "Fa" : "additive"},
                             {"action", "shear"}}}});
        break;
      case DescriptorAtom::Kind::Fa:
        product.push_back({{"Fa", {{"q", a.q}}}});
        break;
      case DescriptorAtom::Kind::Vmu:
        product.push_back({{"vmu", {{"field", a.field}, {"V", a.v_basis}, {"mu", a.mu}, {"U", a.u_basis}}}});
        break;
    }
  }
  return {{"product", product}};
}

GroupDescriptor descriptor_from_json(const nlohmann::json& j) {
  GroupDescriptor d;
  try {
    if (!j.is_object() || !j.contains("product") || !j.at("product").is_array()) malformed("expected {\"product\": [...]}");
    for (const auto& item : j.at("product")) {
      if (!item.is_object() || item.size() != 1) malformed("each factor must be a single-key object");
      const std::string key = item.begin().key();
      const nlohmann::json& body = item.begin().value();
      if (key == "cyclic") {
        d.factors.push_back(DescriptorAtom::cyclic(body.get<std::vector<std::uint64_t>>()));
      } else if (key == "semidirect") {
        if (body.value("base", "") != "VxV") malformed("unknown semidirect base");
        const auto acting = body.value("acting", "additive");
        if (acting != "additive" && acting != "Fa") malformed("unknown acting group '" + acting + "'");
        if (body.value("action", "shear") != "shear") malformed("unknown action");
        d.factors.push_back(DescriptorAtom::vxv(body.at("q").get<std::uint64_t>(), body.at("dim").get<unsigned>(),
                                                acting == "Fa" ? DescriptorAtom::Acting::Fa
                                                               : DescriptorAtom::Acting::Additive));
      } else if (key == "Fa") {
        d.factors.push_back(DescriptorAtom::fa(body.at("q").get<std::uint64_t>()));
      } else if (key == "vmu") {
        DescriptorAtom a;
        a.kind = DescriptorAtom::Kind::Vmu;
        a.field = body.at("field").get<std::string>();
        a.v_basis = body.at("V").get<std::vector<Elem>>();
        a.mu = body.at("mu").get<std::vector<Elem>>();
        a.u_basis = body.at("U").get<std::vector<Elem>>();
        d.factors.push_back(std::move(a));
      } else {
        malformed("unknown factor '" + key + "'");
      }
    }
  } catch (const nlohmann::json::exception& e) {
    malformed(e.what());
  }
  for (const auto& a : d.factors) {
    if (a.kind == DescriptorAtom::Kind::VxV || a.kind == DescriptorAtom::Kind::Fa) split_prime_power(a.q);
  }
  return d;
}

}  // namespace aic
