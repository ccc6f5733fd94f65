#pragma once

#include <random>

#include "symbalg/algebra.hpp"

namespace symbalg::testsupport {

inline Element random_element(const CtxPtr& ctx, std::mt19937_64& rng, int max_terms = 3,
                              int max_exp = 2, bool laurent = true) {
  std::uniform_int_distribution<int> nterms(1, max_terms);
  std::uniform_int_distribution<int> mono(0, static_cast<int>(ctx->p) - 1);
  std::uniform_int_distribution<int> exp(laurent ? -max_exp : 0, max_exp);
  std::uniform_int_distribution<std::uint64_t> sc(0, ctx->base->order() - 1);
  Element e = Element::zero(ctx);
  int n = nterms(rng);
  for (int t = 0; t < n; ++t) {
    BasisMono bm(ctx->nvars());
    ExpVec ev(ctx->nvars());
    for (auto& v : bm) v = mono(rng);
    for (auto& v : ev) v = exp(rng);
    e.add_term(bm, CoeffPoly::monomial(ctx->base, ev, Fq::from_index(ctx->base, sc(rng))));
  }
  return e;
}

inline Element random_nonzero_element(const CtxPtr& ctx, std::mt19937_64& rng,
                                      int max_terms = 3, int max_exp = 2,
                                      bool laurent = true) {
  while (true) {
    Element e = random_element(ctx, rng, max_terms, max_exp, laurent);
    if (!e.is_zero()) return e;
  }
}

}  // namespace symbalg::testsupport
