#include "symbalg/json_io.hpp"

namespace symbalg {

json to_json(const FieldSpec& f) {
  json j{{"ell", f.ell}, {"k", f.k}};
  if (f.k > 1) j["modulus"] = f.modulus;
  return j;
}

FieldPtr field_from_json(const json& j) {
  std::uint64_t ell = j.at("ell").get<std::uint64_t>();
  unsigned k = j.value("k", 1u);
  std::vector<std::uint64_t> modulus;
  if (j.contains("modulus")) modulus = j.at("modulus").get<std::vector<std::uint64_t>>();
  return make_field(ell, k, std::move(modulus));
}

json to_json(const AlgebraCtx& ctx) {
  return json{{"p", ctx.p},
              {"m", ctx.m},
              {"variant", ctx.variant == Variant::ArtinSchreier ? "as" : "rou"},
              {"base", to_json(*ctx.base)}};
}

CtxPtr ctx_from_json(const json& j) {
  std::string v = j.at("variant").get<std::string>();
  if (v != "as" && v != "rou") throw InvalidInput("variant must be \"as\" or \"rou\"");
  return make_ctx(j.at("p").get<std::uint64_t>(), j.at("m").get<unsigned>(),
                  v == "as" ? Variant::ArtinSchreier : Variant::RootOfUnity,
                  field_from_json(j.at("base")));
}

json to_json(const CoeffPoly& p) {
  json arr = json::array();
  for (const auto& [e, c] : p.terms())
    arr.push_back(json{{"exp", e}, {"scalar", c.coeffs()}});
  return arr;
}

CoeffPoly poly_from_json(const json& j, const FieldPtr& base, unsigned nvars) {
  CoeffPoly p = CoeffPoly::zero(base, nvars);
  for (const auto& t : j) {
    ExpVec e = t.at("exp").get<ExpVec>();
    Fq c = Fq::from_coeffs(base, t.at("scalar").get<std::vector<std::uint64_t>>());
    p.add_term(e, c);
  }
  return p;
}

json to_json(const Element& e) {
  json arr = json::array();
  for (const auto& [m, c] : e.terms())
    arr.push_back(json{{"mono", m}, {"coeff", to_json(c)}});
  return json{{"terms", arr}};
}

Element element_from_json(const json& j, const CtxPtr& ctx) {
  Element e = Element::zero(ctx);
  for (const auto& t : j.at("terms"))
    e.add_term(t.at("mono").get<BasisMono>(),
               poly_from_json(t.at("coeff"), ctx->base, ctx->nvars()));
  return e;
}

json to_json(const Subspace& V) {
  json arr = json::array();
  for (const auto& g : V.gens) arr.push_back(to_json(g));
  return json{{"gens", arr}};
}

Subspace subspace_from_json(const json& j, const CtxPtr& ctx) {
  std::vector<Element> gens;
  for (const auto& g : j.at("gens")) gens.push_back(element_from_json(g, ctx));
  return Subspace(ctx, std::move(gens));
}

json to_json(const CheckReport& r) {
  json j{{"passed", r.passed}, {"r", r.degree_checked}};
  if (r.witness)
    j["witness"] = json{{"multidegree", r.witness->multidegree},
                        {"trace", to_json(r.witness->trace_poly)}};
  return j;
}

json to_json(const RefutationCertificate& c) {
  return json{{"v", c.v_index},
              {"w", c.w_index},
              {"k", c.k},
              {"target", c.target},
              {"trace", to_json(c.trace_poly)}};
}

}  // namespace symbalg
