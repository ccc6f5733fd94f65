#pragma once

#include "json.hpp"

#include "symbalg/charcoeffs.hpp"
#include "symbalg/valuation.hpp"

namespace symbalg {

using nlohmann::json;

// FieldSpec: {"ell": int, "k": int, "modulus": [int,...]?}
json to_json(const FieldSpec& f);
FieldPtr field_from_json(const json& j);

// Context: {"p": int, "m": int, "variant": "as"|"rou", "base": FieldSpec}
json to_json(const AlgebraCtx& ctx);
CtxPtr ctx_from_json(const json& j);

// CoeffPoly: [{"exp": [...2m ints...], "scalar": [...k ints...]}]
json to_json(const CoeffPoly& p);
CoeffPoly poly_from_json(const json& j, const FieldPtr& base, unsigned nvars);

// Element: {"terms": [{"mono": [...], "coeff": CoeffPoly}]}
json to_json(const Element& e);
Element element_from_json(const json& j, const CtxPtr& ctx);

// Subspace: {"gens": [Element,...]}
json to_json(const Subspace& V);
Subspace subspace_from_json(const json& j, const CtxPtr& ctx);

// CheckReport: {"passed": bool, "r": int, "witness": {...}?}
json to_json(const CheckReport& r);

// Certificate: {"v": int, "w": int, "k": int, "target": [...], "trace": CoeffPoly}
json to_json(const RefutationCertificate& c);

}  // namespace symbalg
