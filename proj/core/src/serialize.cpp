#include "aic/serialize.hpp"

#include <string>

#include "aic/error.hpp"

namespace aic {

namespace {

template <class Fn>
auto guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::InvalidArgument, e.what());
  }
}

}  // namespace

nlohmann::json to_json(const AffineInvariantCode& code) {
  const auto& k = *code.field();
  nlohmann::json j{{"p", k.p()}, {"m", k.m()}, {"r", code.r()}, {"D", code.defining_set().values()}};
  if (k.modulus() != make_field(k.p(), k.m())->modulus()) j["modulus"] = k.modulus();
  return j;
}

AffineInvariantCode code_from_json(const nlohmann::json& j) {
  return guarded([&] {
    const unsigned p = j.at("p").get<unsigned>();
    const unsigned m = j.at("m").get<unsigned>();
    const unsigned r = j.value("r", 1u);
    std::optional<std::vector<unsigned>> modulus;
    if (j.contains("modulus")) modulus = j.at("modulus").get<std::vector<unsigned>>();
    return AffineInvariantCode(make_field(p, m, modulus), r, DefiningSet(j.at("D").get<std::vector<std::uint32_t>>()));
  });
}

nlohmann::json to_json(const AdditiveMap& f) { return f.rows(); }

AdditiveMap additive_map_from_json(unsigned p, const nlohmann::json& j) {
  return guarded([&] { return AdditiveMap::from_rows(p, j.get<std::vector<std::vector<unsigned>>>()); });
}

nlohmann::json to_json(const FieldSpec& field, const AffineElement& g) {
  return {{"t", field.format(g.translation)}, {"M", to_json(g.map)}, {"tau", g.tau}};
}

AffineElement affine_from_json(const FieldSpec& field, const nlohmann::json& j) {
  return guarded([&] {
    return AffineElement{field.parse(j.at("t").get<std::string>()), additive_map_from_json(field.p(), j.at("M")),
                         j.value("tau", 0u)};
  });
}

nlohmann::json to_json(const ChiF& cf) { return {{"a", cf.a}, {"chi", to_json(cf.chi)}, {"f", to_json(cf.f)}}; }

ChiF chi_f_from_json(const Field& field, const nlohmann::json& j) {
  return guarded([&] {
    return make_chi_f(field, additive_map_from_json(field->p(), j.at("chi")),
                      additive_map_from_json(field->p(), j.at("f")), j.at("a").get<unsigned>());
  });
}

nlohmann::json to_json(const GroupFingerprint& fp) {
  nlohmann::json hist = nlohmann::json::object();
  for (const auto& [o, c] : fp.order_histogram) hist[std::to_string(o)] = c;
  nlohmann::json j{{"order", fp.order},
                   {"abelian", fp.abelian},
                   {"exponent", fp.exponent},
                   {"center_order", fp.center_order},
                   {"derived_order", fp.derived_order},
                   {"order_histogram", hist},
                   {"summary", fp.summary()}};
  j["abelian_invariants"] = fp.abelian_invariants ? nlohmann::json(*fp.abelian_invariants) : nlohmann::json(nullptr);
  return j;
}

nlohmann::json to_json(const Subspace& s, const FieldSpec& field) {
  nlohmann::json basis = nlohmann::json::array();
  for (const auto x : s.basis()) basis.push_back(field.format(x));
  return {{"dim", s.dim()}, {"basis", basis}};
}

}  // namespace aic
