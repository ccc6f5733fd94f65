#include "symbalg/gallery.hpp"

#include <functional>

namespace symbalg {
namespace gallery {

Subspace max_space(const CtxPtr& ctx) {
  if (ctx->variant != Variant::RootOfUnity)
    throw VariantMismatch(
        "max_space is defined for the root-of-unity variant; no Artin-Schreier "
        "analogue is constructed");
  const int p = static_cast<int>(ctx->p);
  const unsigned n = ctx->nvars();
  std::vector<Element> gens;
  // Block k contributes z_1^{a_1}...z_{k-1}^{a_{k-1}} z_k over all exponent
  // choices in [0,p-1]; z_1,...,z_{2m} = x_1,y_1,...,x_m,y_m.
  for (unsigned k = 1; k <= n; ++k) {
    BasisMono mono(n, 0);
    mono[k - 1] = 1;
    std::function<void(unsigned)> rec = [&](unsigned slot) {
      if (slot + 1 == k) {
        gens.push_back(Element::basis(ctx, mono));
        return;
      }
      for (int a = 0; a < p; ++a) {
        mono[slot] = a;
        rec(slot + 1);
      }
      mono[slot] = 0;
    };
    rec(0);
  }
  return Subspace(ctx, std::move(gens));
}

Subspace example_p3(const CtxPtr& ctx) {
  if (ctx->variant != Variant::ArtinSchreier || ctx->p != 3 || ctx->m != 1)
    throw InvalidInput("example_p3 requires the Artin-Schreier variant with p = 3, m = 1");
  auto omega = sqrt(Fq::from_int(ctx->base, -1));
  if (!omega) throw MissingRoot("base field has no square root of -1");
  std::vector<Element> gens;
  for (int i = 0; i < 3; ++i) gens.push_back(Element::basis(ctx, {i, 1}));  // x^i y
  Element x2 = Element::basis(ctx, {2, 0});
  Element wx = Element::basis(ctx, {1, 0}).scaled(*omega);
  gens.push_back(x2 - wx);  // x^2 - w x
  return Subspace(ctx, std::move(gens));
}

}  // namespace gallery
}  // namespace symbalg
