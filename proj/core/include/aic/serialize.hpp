#pragma once

#include <nlohmann/json.hpp>

#include "aic/additive_map.hpp"
#include "aic/code.hpp"
#include "aic/group.hpp"
#include "aic/paut.hpp"
#include "aic/structures.hpp"

namespace aic {

/// `{"p":2,"m":3,"r":1,"D":[0,1,2,4]}`, plus "modulus" when it is not the
/// default one.
nlohmann::json to_json(const AffineInvariantCode& code);
/// Throws InvalidArgument on a malformed object, plus the usual code errors.
AffineInvariantCode code_from_json(const nlohmann::json& j);

/// Row-major digit matrix.
nlohmann::json to_json(const AdditiveMap& f);
AdditiveMap additive_map_from_json(unsigned p, const nlohmann::json& j);

/// `{"t": "<element>", "M": [[...]], "tau": j}`
nlohmann::json to_json(const FieldSpec& field, const AffineElement& g);
AffineElement affine_from_json(const FieldSpec& field, const nlohmann::json& j);

/// `{"a": a, "chi": [[...]], "f": [[...]]}`
nlohmann::json to_json(const ChiF& cf);
ChiF chi_f_from_json(const Field& field, const nlohmann::json& j);

nlohmann::json to_json(const GroupFingerprint& fp);
nlohmann::json to_json(const Subspace& s, const FieldSpec& field);

}  // namespace aic
